"""Twists, wrenches and the pencil of adjoint-invariant forms on se(3).

Twists are written ``(omega; v)`` in Plücker coordinates.  The invariant form of
pitch ``h`` is represented by the matrix

    Q_h = [[-2h I, I], [I, 0]],      Q_inf = [[-2 I, 0], [0, 0]]

so that ``s^T Q_h s = -2h w.w + 2 w.v``.  This unhalved scaling reproduces the
Gram determinants and the dual matrix ``Q_h^{-1} = [[0, I], [I, 2h I]]``
quoted for the worked examples; pseudoinverses and projectors do not depend on
it because the scale cancels.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import ZeroTwist
from .linalg import Mat, Scalar, det, inverse, is_floaty, to_scalar


def _vec3(values: Sequence) -> tuple:
    if len(values) != 3:
        raise ValueError(f"expected a 3-vector, got {len(values)} entries")
    fl = any(is_floaty(x) for x in values)
    return tuple(to_scalar(x, fl) for x in values)


def dot(a: Sequence, b: Sequence):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross(a: Sequence, b: Sequence) -> tuple:
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def skew(t: Sequence) -> Mat:
    """Matrix T with T x = t × x."""
    return Mat([[0, -t[2], t[1]], [t[2], 0, -t[0]], [-t[1], t[0], 0]])


@dataclass(frozen=True)
class Twist:
    omega: tuple
    vel: tuple

    def __post_init__(self):
        om, v = list(self.omega), list(self.vel)
        fl = any(is_floaty(x) for x in om + v)
        object.__setattr__(self, "omega", tuple(to_scalar(x, fl) for x in _vec3(om)))
        object.__setattr__(self, "vel", tuple(to_scalar(x, fl) for x in _vec3(v)))

    @classmethod
    def from_vector(cls, vec: Sequence) -> "Twist":
        if len(vec) != 6:
            raise ValueError(f"a twist has 6 coordinates, got {len(vec)}")
        return cls(tuple(vec[:3]), tuple(vec[3:]))

    @property
    def vector(self) -> tuple:
        return self.omega + self.vel

    def column(self) -> Mat:
        return Mat.column(self.vector)

    def is_zero(self) -> bool:
        return not any(self.vector)

    def __add__(self, other: "Twist") -> "Twist":
        return Twist.from_vector([a + b for a, b in zip(self.vector, other.vector)])

    def __sub__(self, other: "Twist") -> "Twist":
        return Twist.from_vector([a - b for a, b in zip(self.vector, other.vector)])

    def __mul__(self, c) -> "Twist":
        return Twist.from_vector([c * a for a in self.vector])

    __rmul__ = __mul__


@dataclass(frozen=True)
class Wrench:
    """A covector on twists, (moment; force): W^T s = moment.omega + force.v."""

    moment: tuple
    force: tuple

    def __post_init__(self):
        m, f = list(self.moment), list(self.force)
        fl = any(is_floaty(x) for x in m + f)
        object.__setattr__(self, "moment", tuple(to_scalar(x, fl) for x in _vec3(m)))
        object.__setattr__(self, "force", tuple(to_scalar(x, fl) for x in _vec3(f)))

    @classmethod
    def from_vector(cls, vec: Sequence) -> "Wrench":
        if len(vec) != 6:
            raise ValueError(f"a wrench has 6 coordinates, got {len(vec)}")
        return cls(tuple(vec[:3]), tuple(vec[3:]))

    @property
    def vector(self) -> tuple:
        return self.moment + self.force

    def act(self, s: Twist):
        return dot(self.moment, s.omega) + dot(self.force, s.vel)


@dataclass(frozen=True)
class Finite:
    h: Scalar

    def __post_init__(self):
        object.__setattr__(self, "h", to_scalar(self.h, is_floaty(self.h)))

    def __str__(self) -> str:
        return str(self.h)


class Infinity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"


INF = Infinity()
PitchParam = Union[Finite, Infinity]


def as_pitch(value) -> PitchParam:
    """Accept a PitchParam, a number, or text such as ``"3/4"`` or ``"inf"``."""
    if isinstance(value, (Finite, Infinity)):
        return value
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ("inf", "infinity", "∞"):
            return INF
        try:
            return Finite(Fraction(text))
        except ValueError:
            return Finite(float(text))
    return Finite(value)


def finite_h(p) -> Scalar:
    """The finite pitch value of ``p``; raises for infinity."""
    p = as_pitch(p)
    if isinstance(p, Infinity):
        raise ValueError("h = inf is not allowed here: Q_inf is degenerate")
    return p.h


def q_matrix(p, float_mode: bool = False) -> Mat:
    p = as_pitch(p)
    fl = float_mode or (isinstance(p, Finite) and is_floaty(p.h))
    if isinstance(p, Infinity):
        a, b = 1, 0
    else:
        a, b = p.h, 1
    return q_alpha_beta(a, b, fl)


def q_alpha_beta(alpha, beta, float_mode: bool = False) -> Mat:
    """alpha * Q_inf + beta * Q_0."""
    rows = [[0] * 6 for _ in range(6)]
    for i in range(3):
        rows[i][i] = -2 * alpha
        rows[i][i + 3] = beta
        rows[i + 3][i] = beta
    return Mat(rows, (6, 6), float_mode or is_floaty(alpha) or is_floaty(beta))


def q_inverse(p, float_mode: bool = False) -> Mat:
    """Q_h^{-1} = [[0, I], [I, 2h I]], the invariant form on wrenches."""
    h = finite_h(p)
    rows = [[0] * 6 for _ in range(6)]
    for i in range(3):
        rows[i][i + 3] = 1
        rows[i + 3][i] = 1
        rows[i + 3][i + 3] = 2 * h
    return Mat(rows, (6, 6), float_mode or is_floaty(h))


def pairing(s1: Twist, s2: Twist, p):
    p = as_pitch(p)
    ww = dot(s1.omega, s2.omega)
    if isinstance(p, Infinity):
        return -2 * ww
    return -2 * p.h * ww + dot(s1.omega, s2.vel) + dot(s1.vel, s2.omega)


def pitch(s: Twist) -> PitchParam:
    if s.is_zero():
        raise ZeroTwist("the zero twist has no pitch")
    ww = dot(s.omega, s.omega)
    if ww == 0:
        return INF
    return Finite(dot(s.omega, s.vel) / ww)


def bracket(s1: Twist, s2: Twist) -> Twist:
    return Twist(cross(s1.omega, s2.omega),
                 tuple(a + b for a, b in zip(cross(s1.omega, s2.vel), cross(s1.vel, s2.omega))))


def evaluate_field(s: Twist, x: Sequence) -> tuple:
    """Velocity ω × x + v of the point x under the twist."""
    return tuple(a + b for a, b in zip(cross(s.omega, x), s.vel))


def line_through(point: Sequence, direction: Sequence) -> Twist:
    """Zero-pitch twist of the line through ``point`` along ``direction``."""
    return Twist(tuple(direction), cross(point, direction))


def twist_to_wrench(s: Twist, p) -> Wrench:
    return Wrench.from_vector(q_matrix(p).apply(s.vector))


def wrench_to_twist(w: Wrench, p) -> Twist:
    return Twist.from_vector(q_inverse(p).apply(w.vector))


@dataclass(frozen=True)
class RigidDisplacement:
    R: Mat
    t: tuple

    def __post_init__(self):
        if self.R.shape != (3, 3):
            raise ValueError("rotation must be 3x3")
        object.__setattr__(self, "t", _vec3(list(self.t)))
        RtR = self.R.T @ self.R
        if not RtR.equals(Mat.identity(3, RtR.is_float)) or not _close(det(self.R), 1, self.R.is_float):
            raise ValueError("R is not a rotation (need R^T R = I, det R = 1)")

    @classmethod
    def identity(cls) -> "RigidDisplacement":
        return cls(Mat.identity(3), (0, 0, 0))

    @classmethod
    def translation(cls, t: Sequence) -> "RigidDisplacement":
        return cls(Mat.identity(3), tuple(t))

    def inverse(self) -> "RigidDisplacement":
        Rt = self.R.T
        return RigidDisplacement(Rt, tuple(-x for x in Rt.apply(self.t)))

    def apply_point(self, x: Sequence) -> tuple:
        return tuple(a + b for a, b in zip(self.R.apply(x), self.t))


def _close(a, b, fl: bool) -> bool:
    return abs(a - b) <= 1e-9 if fl else a == b


def adjoint_matrix(g: RigidDisplacement) -> Mat:
    """6x6 matrix [[R, 0], [T R, R]] of Ad(g)."""
    R = g.R
    TR = skew(g.t) @ R
    return Mat.block([[R, Mat.zeros(3, 3, R.is_float)], [TR, R]])


def adjoint_action(g: RigidDisplacement, s: Twist) -> Twist:
    om = g.R.apply(s.omega)
    v = tuple(a + b for a, b in zip(cross(g.t, om), g.R.apply(s.vel)))
    return Twist(om, v)


def cayley_rotation(a: Sequence) -> Mat:
    """Rational rotation (I - A)^{-1}(I + A) for the skew matrix A of ``a``."""
    A = skew(a)
    I = Mat.identity(3, A.is_float)
    return inverse(I - A) @ (I + A)


def random_displacement(rng: random.Random, exact: bool = True, spread: int = 3) -> RigidDisplacement:
    """Random rigid displacement; exact mode uses rational Cayley rotations."""
    if exact:
        a = [Fraction(rng.randint(-spread * 4, spread * 4), rng.randint(1, 4)) for _ in range(3)]
        t = [Fraction(rng.randint(-spread * 4, spread * 4), rng.randint(1, 4)) for _ in range(3)]
    else:
        a = [rng.uniform(-spread, spread) for _ in range(3)]
        t = [rng.uniform(-spread, spread) for _ in range(3)]
    return RigidDisplacement(cayley_rotation(a), tuple(t))
