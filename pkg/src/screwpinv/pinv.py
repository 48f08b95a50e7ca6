"""Gram pencils and hyperbolic (h-) pseudoinverses of screw Jacobians."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import NoPseudoinverse, RankDeficient, Singular
from .linalg import Mat, PolyH, Scalar, det, inverse, is_floaty, nullspace, pencil_det, rank
from .se3 import (Finite, PitchParam, RigidDisplacement, Twist, adjoint_matrix, finite_h,
                  q_inverse, q_matrix)

# relative threshold on |det G(h)| against the Hadamard bound in float mode
DET_TOL = 1e-10


class ScrewJacobian:
    """A 6 x m matrix whose columns are twists, 1 <= m <= 6."""

    __slots__ = ("matrix", "rank")

    def __init__(self, matrix: Mat):
        if not isinstance(matrix, Mat):
            matrix = Mat(matrix)
        if matrix.rows != 6:
            raise ValueError(f"a screw Jacobian has 6 rows, got {matrix.rows}")
        if not 1 <= matrix.cols <= 6:
            raise ValueError(f"need 1..6 columns, got {matrix.cols}")
        for j in range(matrix.cols):
            if not any(matrix.col(j)):
                raise ValueError(f"column {j} is the zero twist")
        self.matrix = matrix
        self.rank = rank(matrix)

    @classmethod
    def from_twists(cls, twists: Sequence[Twist]) -> "ScrewJacobian":
        return cls(Mat.from_columns([s.vector for s in twists]))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "ScrewJacobian":
        return cls(Mat.from_columns(columns))

    @property
    def m(self) -> int:
        return self.matrix.cols

    @property
    def is_float(self) -> bool:
        return self.matrix.is_float

    @property
    def full_column_rank(self) -> bool:
        return self.rank == self.m

    @property
    def twists(self) -> list[Twist]:
        return [Twist.from_vector(c) for c in self.matrix.columns()]

    def transformed(self, g: RigidDisplacement) -> "ScrewJacobian":
        return ScrewJacobian(adjoint_matrix(g) @ self.matrix)

    def rebased(self, B: Mat) -> "ScrewJacobian":
        """Jacobian J B for an m x k change of basis B."""
        return ScrewJacobian(self.matrix @ B)

    def to_float(self) -> "ScrewJacobian":
        return ScrewJacobian(self.matrix.to_float())

    def __repr__(self) -> str:
        return f"ScrewJacobian(m={self.m}, rank={self.rank}, {self.matrix!r})"


@dataclass(frozen=True)
class GramPencil:
    g0: Mat
    ginf: Mat
    detpoly: PolyH

    def gram(self, h) -> Mat:
        return self.g0 + self.ginf * h


class Method(enum.Enum):
    FullColumnRankGram = "FullColumnRankGram"
    RankSixMoorePenrose = "RankSixMoorePenrose"


@dataclass(frozen=True)
class PseudoinverseResult:
    matrix: Mat
    h: PitchParam
    method: Method


def generalized_adjoint(J: ScrewJacobian, h) -> Mat:
    """J^{*h} = J^T Q_h."""
    return J.matrix.T @ q_matrix(Finite(finite_h(h)))


def gram_pencil(J: ScrewJacobian) -> GramPencil:
    # with W, V the rotational and translational rows: G0 = W^T V + V^T W, G_inf = -2 W^T W
    m = J.m
    W = J.matrix.submatrix(range(3), range(m))
    V = J.matrix.submatrix(range(3, 6), range(m))
    WtV = W.T @ V
    g0 = WtV + WtV.T
    ginf = (W.T @ W) * -2
    return GramPencil(g0, ginf, pencil_det(g0, ginf))


def gram_matrix(J: ScrewJacobian, h) -> Mat:
    return J.matrix.T @ q_matrix(Finite(finite_h(h))) @ J.matrix


def pencil_vanishes_at(pencil: GramPencil, h: Scalar) -> bool:
    """Whether det G(h) = 0: exactly, or against the Hadamard bound in float mode."""
    value = pencil.detpoly(h)
    if not (pencil.g0.is_float or pencil.ginf.is_float or is_floaty(h)):
        return value == 0
    G = pencil.gram(h)
    bound = 1.0
    for c in G.columns():
        bound *= math.sqrt(sum(float(x) ** 2 for x in c))
    return abs(float(value)) <= DET_TOL * max(bound, 1e-300)


def exists_h_pinv(J: ScrewJacobian, h) -> bool:
    h = finite_h(h)
    if J.rank == 6:
        return True
    if J.full_column_rank:
        return not pencil_vanishes_at(gram_pencil(J), h)
    return rank(gram_matrix(J, h)) == J.rank


def gram_kernel_certificate(J: ScrewJacobian, h) -> list[Twist]:
    """Twists J lam for a basis of ker(J^T Q_h J); they lie in S and its h-reciprocal."""
    K = nullspace(gram_matrix(J, h))
    return [Twist.from_vector(J.matrix.apply(K.col(j))) for j in range(K.cols)]


def moore_penrose(A: Mat) -> Mat:
    """Moore-Penrose pseudoinverse for a matrix of full column or full row rank."""
    r = rank(A)
    if r == A.cols:
        return inverse(A.T @ A) @ A.T
    if r == A.rows:
        return A.T @ inverse(A @ A.T)
    raise RankDeficient("closed-form Moore-Penrose needs full column or row rank")


def h_pseudoinverse(J: ScrewJacobian, h) -> PseudoinverseResult:
    hv = finite_h(h)
    if J.rank == 6:
        return PseudoinverseResult(moore_penrose(J.matrix), Finite(hv), Method.RankSixMoorePenrose)
    if not exists_h_pinv(J, hv):
        raise NoPseudoinverse(f"J^T Q_h J is singular at h = {hv}")
    if not J.full_column_rank:
        raise RankDeficient(f"rank {J.rank} < m = {J.m}; only extremal-rank cases have closed forms")
    adj = generalized_adjoint(J, hv)
    try:
        G_inv = inverse(adj @ J.matrix)
    except Singular as exc:
        raise NoPseudoinverse(str(exc)) from exc
    return PseudoinverseResult(G_inv @ adj, Finite(hv), Method.FullColumnRankGram)


def twist_adjoint(A: Mat, h) -> Mat:
    """*h-adjoint Q_h^{-1} A^T Q_h of a linear map on twists."""
    return q_inverse(h) @ A.T @ q_matrix(Finite(finite_h(h)))


def verify_axioms(J: ScrewJacobian, P, h=None) -> tuple[bool, bool, bool, bool]:
    """Check (hP1)-(hP4).  ``P`` is a PseudoinverseResult or a bare m x 6 matrix."""
    if isinstance(P, PseudoinverseResult):
        h = P.h if h is None else h
        P = P.matrix
    if h is None:
        raise ValueError("h is required when P is a bare matrix")
    Jm = J.matrix
    JP = Jm @ P
    PJ = P @ Jm
    return (
        (JP @ Jm).equals(Jm),
        (PJ @ P).equals(P),
        twist_adjoint(JP, h).equals(JP),
        PJ.T.equals(PJ),  # joint space carries the identity metric
    )


def wrench_pseudoinverse(W: Mat, h) -> Mat:
    """(W^T Q_h^{-1} W)^{-1} W^T Q_h^{-1} for a 6 x k matrix of wrench columns."""
    if W.rows != 6:
        raise ValueError("wrench columns must have 6 entries")
    if rank(W) != W.cols:
        raise RankDeficient("wrench columns are dependent")
    Qi = q_inverse(h)
    adj = W.T @ Qi
    M = adj @ W
    if M.is_float:
        bound = 1.0
        for c in M.columns():
            bound *= math.sqrt(sum(float(x) ** 2 for x in c))
        if abs(float(det(M))) <= DET_TOL * max(bound, 1e-300):
            raise NoPseudoinverse("W^T Q_h^{-1} W is singular")
    try:
        return inverse(M) @ adj
    except Singular as exc:
        raise NoPseudoinverse("W^T Q_h^{-1} W is singular") from exc
