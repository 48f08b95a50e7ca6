"""Lines in involution: Sylvester's determinant test and its certificates."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import Dependent, NotInInvolution, NotLines
from .linalg import Mat, det, nullspace, rank, zero_tol
from .pinv import ScrewJacobian
from .se3 import Finite, Twist, Wrench, dot, pairing, q_matrix, twist_to_wrench
from .systems import ScrewSystem, classify, reciprocal_system


class TransversalCount(enum.Enum):
    Zero = "Zero"
    One = "One"
    Two = "Two"
    Infinite = "Infinite"
    NotApplicable = "NotApplicable"


class GeometricCase(enum.Enum):
    ConcurrentPencil = "ConcurrentPencil"
    ParallelPlanar = "ParallelPlanar"
    IAZeroPitch = "IA-zero-pitch"
    IB0Zero = "IB0-zero"
    IB3 = "IB3"
    IIAZero = "IIA-zero"
    IIBZero = "IIB-zero"
    IICZero = "IIC-zero"
    InfinitelyManyTransversals = "InfinitelyManyTransversals"
    CommonTransversal = "CommonTransversal"


class LineSet:
    """m <= 6 zero-pitch twists with nonzero direction."""

    __slots__ = ("lines", "jacobian", "independent")

    def __init__(self, lines: Sequence):
        lines = [s if isinstance(s, Twist) else Twist.from_vector(s) for s in lines]
        if not 1 <= len(lines) <= 6:
            raise ValueError("a line set has between 1 and 6 lines")
        for k, s in enumerate(lines):
            ww = dot(s.omega, s.omega)
            wv = dot(s.omega, s.vel)
            if s.omega[0].__class__ is float:
                bad = ww <= 1e-24 or abs(wv) > 1e-9 * max(1.0, ww, dot(s.vel, s.vel))
            else:
                bad = ww == 0 or wv != 0
            if bad:
                raise NotLines(f"entry {k} is not a line (needs omega != 0 and omega.v = 0)")
        self.lines = tuple(lines)
        self.jacobian = ScrewJacobian.from_twists(lines)
        self.independent = self.jacobian.full_column_rank

    @property
    def m(self) -> int:
        return len(self.lines)

    @property
    def matrix(self) -> Mat:
        return self.jacobian.matrix


@dataclass(frozen=True)
class InvolutionReport:
    in_involution: bool
    certificate: Optional[tuple[Twist, Wrench]]
    geometric_case: Optional[GeometricCase]
    transversal_count: TransversalCount
    warnings: tuple = ()


def _klein_gram(L: LineSet) -> Mat:
    J = L.matrix
    return J.T @ q_matrix(Finite(0)) @ J


def _require_independent(L: LineSet) -> None:
    if not L.independent:
        raise Dependent(f"{L.m} lines span only a {L.jacobian.rank}-system")


def _certificate(L: LineSet, kernel: Mat) -> tuple[Twist, Wrench]:
    # prefer a kernel vector whose twist is a finite line
    J = L.matrix
    best = None
    for j in range(kernel.cols):
        z = Twist.from_vector(J.apply(kernel.col(j)))
        if best is None:
            best = z
        if any(z.omega):
            best = z
            break
    return best, twist_to_wrench(best, Finite(0))


def is_in_involution(L: LineSet) -> InvolutionReport:
    _require_independent(L)
    G0 = _klein_gram(L)
    kernel = nullspace(G0)
    involved = kernel.cols > 0
    warnings: list[str] = []
    if G0.is_float:
        sv = np.linalg.svd(G0.to_numpy(), compute_uv=False)
        ratio = sv[-1] / max(sv[0], 1e-300)
        if 1e-12 < ratio < 1e-6:
            warnings.append(f"Klein Gram matrix is nearly singular (ratio {ratio:.2e})")
    cert = _certificate(L, kernel) if involved else None
    case = None
    if involved:
        case, extra = _geometry(L)
        warnings += extra
        if cert is not None and not any(cert[0].omega):
            warnings.append("certificate is a line at infinity")
    if L.m == 4:
        count = transversal_count(L)
    elif L.m == 5:
        count = _five_line_transversals(L)
    else:
        count = TransversalCount.NotApplicable
    return InvolutionReport(involved, cert, case, count, tuple(warnings))


def sylvester_factor_identity(L: LineSet) -> tuple:
    """Return det(J^T Q_0 J) and the pairing product it factors into (m = 2, 3)."""
    s = L.lines
    if L.m == 2:
        product = -pairing(s[0], s[1], Finite(0)) ** 2
    elif L.m == 3:
        product = (2 * pairing(s[0], s[1], Finite(0)) * pairing(s[1], s[2], Finite(0))
                   * pairing(s[2], s[0], Finite(0)))
    else:
        raise ValueError("the factorisation identities cover m = 2 and m = 3")
    return det(_klein_gram(L)), product


_THREE_LINE_CASES = {
    "IA1": GeometricCase.IAZeroPitch,
    "IA2": GeometricCase.IAZeroPitch,
    "IB0": GeometricCase.IB0Zero,
    "IB3": GeometricCase.IB3,
    "IIA": GeometricCase.IIAZero,
    "IIB": GeometricCase.IIBZero,
    "IIC": GeometricCase.IICZero,
}


def _has_zero(moduli, fl: bool) -> bool:
    return any((abs(float(x)) <= 1e-8) if fl or isinstance(x, float) else x == 0 for x in moduli)


def _geometry(L: LineSet) -> tuple[GeometricCase, list[str]]:
    if L.m == 4:
        return GeometricCase.InfinitelyManyTransversals, []
    if L.m == 5:
        return GeometricCase.CommonTransversal, []
    if L.m not in (2, 3):
        raise NotInInvolution(f"no geometric case for {L.m} lines")
    gh = classify(ScrewSystem(L.jacobian))
    warnings = []
    if L.m == 2:
        table = {"IIA": GeometricCase.ConcurrentPencil, "IIB": GeometricCase.ParallelPlanar}
    else:
        table = _THREE_LINE_CASES
    if gh.label not in table:
        raise NotInInvolution(f"span of the lines is {gh.tag}, which holds no lines in involution")
    if gh.label != "IB3" and not _has_zero(gh.moduli, L.matrix.is_float):
        warnings.append(f"{gh.tag} span has no zero modulus: {gh.moduli}")
    return table[gh.label], warnings


def classify_involution_geometry(L: LineSet) -> GeometricCase:
    _require_independent(L)
    if nullspace(_klein_gram(L)).cols == 0:
        raise NotInInvolution("the Klein Gram matrix is nonsingular")
    return _geometry(L)[0]


def _count_zero_pitch_lines(R: Mat) -> TransversalCount:
    """Number of finite lines (up to scale) in the 2-system spanned by R's columns."""
    G = R.T @ q_matrix(Finite(0)) @ R
    omega = R.submatrix(range(3), range(2))
    tol = zero_tol(G)
    om_rank = rank(omega)
    if om_rank == 0:
        return TransversalCount.Zero
    if G.is_zero(tol):
        return TransversalCount.Infinite
    a, b, c = G[0, 0], G[0, 1], G[1, 1]
    disc = b * b - a * c
    if G.is_float:
        scale = max(abs(b * b), abs(a * c), 1e-300)
        disc = 0.0 if abs(disc) <= 1e-10 * scale else disc
    count = 0 if disc < 0 else (1 if disc == 0 else 2)
    if om_rank == 1 and count:
        n = nullspace(omega).col(0)
        q = a * n[0] * n[0] + 2 * b * n[0] * n[1] + c * n[1] * n[1]
        if abs(q) <= tol:
            count -= 1
    return [TransversalCount.Zero, TransversalCount.One, TransversalCount.Two][count]


def transversal_count(L: LineSet) -> TransversalCount:
    if L.m != 4:
        raise ValueError("transversal counting is defined for four lines")
    _require_independent(L)
    R = reciprocal_system(ScrewSystem(L.jacobian), Finite(0)).basis
    return _count_zero_pitch_lines(R)


def _five_line_transversals(L: LineSet) -> TransversalCount:
    r = Twist.from_vector(reciprocal_system(ScrewSystem(L.jacobian), Finite(0)).basis.col(0))
    ww, wv = dot(r.omega, r.omega), dot(r.omega, r.vel)
    if r.omega[0].__class__ is float:
        is_line = ww > 1e-24 and abs(wv) <= 1e-9 * max(1.0, ww)
    else:
        is_line = ww != 0 and wv == 0
    return TransversalCount.One if is_line else TransversalCount.Zero
