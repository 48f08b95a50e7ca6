"""Screw systems: Gibson-Hunt classification, principal pitches and reciprocals.

``d`` is always the affine dimension of S ∩ {omega = 0}; the projective
dimension used in the classical tables is ``d - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import UnclassifiableRank
from .linalg import (ATOL, TAU, Mat, Scalar, nullspace, pencil_det, rank, real_roots)
from .pinv import GramPencil, ScrewJacobian, gram_pencil
from .se3 import INF, Finite, Infinity, PitchParam, Twist, finite_h, pitch, q_matrix

COINCIDENT_TOL = 1e-8


class ScrewSystem:
    """Column span of a full-column-rank basis with 1 <= m <= 5 twists."""

    __slots__ = ("basis", "_pencil")

    def __init__(self, basis):
        if isinstance(basis, (list, tuple)) and basis and isinstance(basis[0], Twist):
            basis = ScrewJacobian.from_twists(basis)
        elif not isinstance(basis, ScrewJacobian):
            basis = ScrewJacobian(basis)
        if not basis.full_column_rank:
            raise UnclassifiableRank(f"basis of {basis.m} twists has rank {basis.rank}")
        if basis.m > 5:
            raise UnclassifiableRank("a 6-system is all of se(3)")
        self.basis = basis
        self._pencil = None

    @property
    def m(self) -> int:
        return self.basis.m

    @property
    def matrix(self) -> Mat:
        return self.basis.matrix

    @property
    def is_float(self) -> bool:
        return self.basis.is_float

    def pencil(self) -> GramPencil:
        if self._pencil is None:
            self._pencil = gram_pencil(self.basis)
        return self._pencil

    def __repr__(self) -> str:
        return f"ScrewSystem({self.matrix!r})"


@dataclass(frozen=True)
class GHClass:
    dimension: int
    label: str
    moduli: tuple = ()
    dim_inf: int = 0
    inner: Optional["GHClass"] = None
    warnings: tuple = field(default=(), compare=False)

    @property
    def tag(self) -> str:
        if self.inner is not None:
            return f"Reciprocal({self.dimension}, {self.inner.tag})"
        return self.label

    def matches(self, other: "GHClass", tol: float = COINCIDENT_TOL) -> bool:
        """Same class and the same multiset of moduli (within ``tol``)."""
        if self.tag != other.tag or len(self.moduli) != len(other.moduli):
            return False
        a, b = sorted(self.moduli), sorted(other.moduli)
        return all(abs(float(x) - float(y)) <= tol * max(1.0, abs(float(x))) for x, y in zip(a, b))


@dataclass(frozen=True)
class ReciprocalBasis:
    basis: Mat
    h: Finite


def dim_at_infinity(S: ScrewSystem) -> int:
    omega = S.matrix.submatrix(range(3), range(S.m))
    return S.m - rank(omega)


def _pencil_tol(pencil: GramPencil) -> float:
    if not (pencil.g0.is_float or pencil.ginf.is_float):
        return 0
    return max(TAU * max(float(pencil.g0.max_abs()), float(pencil.ginf.max_abs())), ATOL)


def type_two_pitch(S: ScrewSystem) -> Optional[PitchParam]:
    """The pitch h with S inside q_h, if any (Infinity when S has no rotations)."""
    pencil = S.pencil()
    tol = _pencil_tol(pencil)
    G0, Gi = pencil.g0, pencil.ginf
    if Gi.is_zero(tol):
        return INF
    m = S.m
    i, j = max(((i, j) for i in range(m) for j in range(m)), key=lambda ij: abs(Gi[ij]))
    h = -G0[i, j] / Gi[i, j]
    if (G0 + Gi * h).is_zero(tol):
        return Finite(h)
    return None


def _distinct_count(values: Sequence[Scalar]) -> int:
    vals = sorted(values)
    count = 1 if vals else 0
    for a, b in zip(vals, vals[1:]):
        if isinstance(a, Fraction) and isinstance(b, Fraction):
            same = a == b
        else:
            same = abs(float(a) - float(b)) <= COINCIDENT_TOL * max(1.0, abs(float(a)))
        if not same:
            count += 1
    return count


def _definite_pencil_roots(pencil: GramPencil) -> list[float]:
    # G_inf = -2 W^T W is negative definite when d = 0, so the roots are the
    # eigenvalues of the symmetric-definite problem G0 x = h (-G_inf) x
    A = pencil.g0.to_numpy()
    B = -pencil.ginf.to_numpy()
    L = np.linalg.cholesky(B)
    Li = np.linalg.inv(L)
    return sorted(float(x) for x in np.linalg.eigvalsh(Li @ A @ Li.T))


def principal_pitches(S: ScrewSystem) -> list[Scalar]:
    """Roots of det(J^T Q_h J) with multiplicity (empty for a vanishing pencil)."""
    pencil = S.pencil()
    if pencil.detpoly.is_zero:
        return []
    if S.is_float and dim_at_infinity(S) == 0:
        return _definite_pencil_roots(pencil)
    return real_roots(pencil.detpoly)


def reduced_pencil(pencil: GramPencil) -> GramPencil:
    """Restrict the pencil to a complement of its common kernel.

    The common kernel of G0 and G_inf is the radical of every G(h); dropping it
    leaves a pencil whose determinant is not identically zero when the
    original vanished only because of that radical.
    """
    m = pencil.g0.rows
    radical = nullspace(pencil.g0.vstack(pencil.ginf))
    chosen: list[int] = []
    current = radical
    for i in range(m):
        e = Mat.column([1 if k == i else 0 for k in range(m)])
        trial = current.hstack(e) if current.cols else e
        if rank(trial) > (rank(current) if current.cols else 0):
            chosen.append(i)
            current = trial
    C = Mat.identity(m, pencil.g0.is_float).select_columns(chosen)
    g0 = C.T @ pencil.g0 @ C
    gi = C.T @ pencil.ginf @ C
    return GramPencil(g0, gi, pencil_det(g0, gi))


def classify(S: ScrewSystem) -> GHClass:
    m = S.m
    if m in (4, 5):
        return classify_via_reciprocal(S)
    d = dim_at_infinity(S)
    if m == 1:
        p = pitch(S.basis.twists[0])
        if isinstance(p, Infinity):
            return GHClass(1, "H-infinite", (), d)
        return GHClass(1, "H-finite", (p.h,), d)

    t2 = type_two_pitch(S)
    if t2 is not None:
        moduli = () if isinstance(t2, Infinity) else (t2.h,)
        return GHClass(m, "II" + "ABCD"[d], moduli, d)

    pencil = S.pencil()
    warnings: list[str] = []
    if m == 2:
        if d == 0:
            return GHClass(2, "IA", tuple(principal_pitches(S)), d)
        if d == 1:
            return GHClass(2, "IB", tuple(principal_pitches(S)), d)
        raise UnclassifiableRank(f"type I 2-system with d = {d}")

    # m == 3
    if d == 0:
        roots = principal_pitches(S)
        distinct = _distinct_count(roots)
        if distinct == 3:
            return GHClass(3, "IA1", tuple(roots), d)
        if distinct == 1:
            warnings.append("all three principal pitches coincide")
        return GHClass(3, "IA2", tuple(roots), d, warnings=tuple(warnings))
    if d == 1:
        if not pencil.detpoly.is_zero:
            roots = real_roots(pencil.detpoly)
            if len(roots) != 1:
                warnings.append(f"IB0 pencil has {len(roots)} roots, expected 1")
            return GHClass(3, "IB0", tuple(roots), d, warnings=tuple(warnings))
        reduced = reduced_pencil(pencil)
        if reduced.detpoly.is_zero:
            warnings.append("reduced pencil still vanishes")
            return GHClass(3, "IB3", (), d, warnings=tuple(warnings))
        return GHClass(3, "IB3", tuple(real_roots(reduced.detpoly)), d)
    if d == 2:
        return GHClass(3, "IC", (), d)
    raise UnclassifiableRank(f"type I 3-system with d = {d}")


def reciprocal_system(S: ScrewSystem, h) -> ReciprocalBasis:
    """Canonical basis of S^{⊥h} = ker(J^T Q_h)."""
    hv = finite_h(h)
    M = S.matrix.T @ q_matrix(Finite(hv))
    return ReciprocalBasis(nullspace(M), Finite(hv))


def classify_via_reciprocal(S: ScrewSystem) -> GHClass:
    if S.m not in (4, 5):
        raise ValueError("classification through the reciprocal needs m = 4 or 5")
    R = ScrewSystem(reciprocal_system(S, Finite(0)).basis)
    inner = classify(R)
    return GHClass(S.m, "Reciprocal", inner.moduli, dim_at_infinity(S), inner=inner,
                   warnings=inner.warnings)


def no_pinv_for_all_h(S: ScrewSystem) -> bool:
    """True when det(J^T Q_h J) vanishes identically."""
    return S.pencil().detpoly.is_zero
