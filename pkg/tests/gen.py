"""Seeded random generators shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction as F

from screwpinv.linalg import Mat, rank
from screwpinv.pinv import ScrewJacobian
from screwpinv.se3 import Twist, line_through


def rational(rng: random.Random, bound: int = 5) -> F:
    """Integer or half-integer in [-bound, bound]."""
    return F(rng.randint(-2 * bound, 2 * bound), rng.choice((1, 2)))


def integer(rng: random.Random, bound: int = 5) -> F:
    return F(rng.randint(-bound, bound))


def jacobian(rng: random.Random, m: int, bound: int = 5, full_rank: bool = True) -> ScrewJacobian:
    while True:
        cols = [[integer(rng, bound) for _ in range(6)] for _ in range(m)]
        if not all(any(c) for c in cols):
            continue
        M = Mat.from_columns(cols)
        if not full_rank or rank(M) == m:
            return ScrewJacobian(M)


def pitch_value(rng: random.Random) -> F:
    return F(rng.randint(-6, 6), rng.randint(1, 3))


def invertible(rng: random.Random, m: int, bound: int = 2) -> Mat:
    while True:
        B = Mat([[integer(rng, bound) for _ in range(m)] for _ in range(m)])
        if rank(B) == m:
            return B


def line(rng: random.Random, bound: int = 4) -> Twist:
    while True:
        d = [integer(rng, bound) for _ in range(3)]
        if any(d):
            return line_through([integer(rng, bound) for _ in range(3)], d)


def twist(rng: random.Random, bound: int = 5) -> Twist:
    while True:
        s = Twist.from_vector([integer(rng, bound) for _ in range(6)])
        if not s.is_zero():
            return s


def float_jacobian(rng: random.Random, m: int) -> ScrewJacobian:
    while True:
        M = Mat([[rng.uniform(-2, 2) for _ in range(m)] for _ in range(6)])
        if rank(M) == m:
            return ScrewJacobian(M)

