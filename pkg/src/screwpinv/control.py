"""Projection operators for shared and hybrid robot control."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import NotComplementary, NotDual, Singular, ZeroDirection
from .linalg import Mat, column_space, inverse, is_floaty, nullspace, rank, zero_tol
from .pinv import ScrewJacobian, h_pseudoinverse, wrench_pseudoinverse
from .se3 import Finite, PitchParam, Twist, cross, finite_h, q_matrix
from .systems import ScrewSystem, reciprocal_system


@dataclass(frozen=True)
class Projector:
    matrix: Mat
    h: Optional[PitchParam]
    image_basis: ScrewJacobian
    kernel_basis: Mat

    def apply(self, s: Twist) -> Twist:
        return Twist.from_vector(self.matrix.apply(s.vector))


@dataclass(frozen=True)
class CostEvaluation:
    value: object
    gradient: tuple
    argument: tuple


@dataclass(frozen=True)
class HybridSplit:
    motion_projector: Projector
    force_projector: Mat


def projector_h(J: ScrewJacobian, h) -> Projector:
    """P_h = J J^{+h}, whose kernel is the h-reciprocal of the column space."""
    hv = finite_h(h)
    P = J.matrix @ h_pseudoinverse(J, hv).matrix
    if J.rank == 6:
        kernel = Mat.zeros(6, 0, P.is_float)
    else:
        kernel = reciprocal_system(ScrewSystem(J), Finite(hv)).basis
    return Projector(P, Finite(hv), J, kernel)


def _twist_vec(s) -> tuple:
    return s.vector if isinstance(s, Twist) else tuple(s)


def _residual(J: ScrewJacobian, s, x: Sequence) -> tuple:
    Jx = J.matrix.apply(tuple(x))
    return tuple(a - b for a, b in zip(_twist_vec(s), Jx))


def cost_phi(J: ScrewJacobian, s, x: Sequence, h) -> CostEvaluation:
    """Phi_h(x) = (s - Jx)^T Q_h (s - Jx) and its gradient in x."""
    Q = q_matrix(Finite(finite_h(h)))
    r = _residual(J, s, x)
    Qr = Q.apply(r)
    value = sum(a * b for a, b in zip(r, Qr))
    grad = tuple(-2 * g for g in J.matrix.T.apply(Qr))
    return CostEvaluation(value, grad, tuple(x))


def _damping(Lambda, m: int) -> Mat:
    if isinstance(Lambda, Mat):
        if Lambda.shape != (m, m) or not Lambda.is_symmetric():
            raise ValueError(f"damping must be a symmetric {m}x{m} matrix")
        return Lambda
    return Mat.identity(m, is_floaty(Lambda)) * Lambda


def cost_psi(J: ScrewJacobian, s, x: Sequence, h, Lambda) -> CostEvaluation:
    """Damped cost Phi_h(x) + x^T Lambda x."""
    L = _damping(Lambda, J.m)
    phi = cost_phi(J, s, x, h)
    Lx = L.apply(tuple(x))
    value = phi.value + sum(a * b for a, b in zip(x, Lx))
    grad = tuple(g + 2 * d for g, d in zip(phi.gradient, Lx))
    return CostEvaluation(value, grad, tuple(x))


def damped_solution(J: ScrewJacobian, s, Lambda, h) -> tuple[tuple, Mat]:
    """Minimiser of the damped cost and the modified projector J (G + Lambda)^{-1} J^T Q_h.

    ``Lambda`` is a symmetric m x m matrix or a scalar eps standing for eps I.
    """
    L = _damping(Lambda, J.m)
    adj = J.matrix.T @ q_matrix(Finite(finite_h(h)))
    M = inverse(adj @ J.matrix + L) @ adj
    return M.apply(_twist_vec(s)), J.matrix @ M


def oblique_projector(J: ScrewJacobian, Z: Mat) -> Projector:
    """Projector onto span(J) along span(Z), built from the annihilator of Z."""
    if Z.rows != 6 or Z.cols + J.m != 6 or rank(J.matrix.hstack(Z)) != 6:
        raise NotComplementary("span(J) and span(Z) must be complementary in se(3)")
    K = nullspace(Z.T)
    try:
        P = J.matrix @ inverse(K.T @ J.matrix) @ K.T
    except Singular as exc:
        raise NotComplementary("K^T J is singular") from exc
    return Projector(P, None, J, Z)


def hybrid_split(S_basis: ScrewJacobian, W: Mat, h) -> HybridSplit:
    """Motion projector onto S and wrench projector W W^{+h} onto the dual space."""
    pairings = W.T @ S_basis.matrix
    if not pairings.is_zero(zero_tol(pairings)):
        raise NotDual("some wrench does work on a motion twist")
    motion = projector_h(S_basis, h)
    force = W @ wrench_pseudoinverse(W, h)
    return HybridSplit(motion, force)


def point_direction_system(x: Sequence, q: Sequence) -> ScrewJacobian:
    """Twists moving the point x along the line spanned by q (a 4-system)."""
    if not any(q):
        raise ZeroDirection("direction must be nonzero")
    cols = []
    for i in range(3):
        e = [0, 0, 0]
        e[i] = 1
        cols.append(tuple(e) + tuple(-c for c in cross(e, x)))
    cols.append((0, 0, 0) + tuple(q))
    return ScrewJacobian.from_columns(cols)


def point_direction_task(J: ScrewJacobian, x: Sequence, q: Sequence, h) -> Mat:
    """Basis of the joint rates J^{+h}(S) for the point-direction 4-system S."""
    S = point_direction_system(x, q)
    return column_space(h_pseudoinverse(J, h).matrix @ S.matrix)
