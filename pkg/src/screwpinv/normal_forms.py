"""Normal-form bases of the Gibson-Hunt classes and the worked example data.

Every basis is returned as a list of 6-tuples ``(w1, w2, w3, v1, v2, v3)``.
"""

from __future__ import annotations

from fractions import Fraction as F

from .pinv import ScrewJacobian
from .systems import ScrewSystem


def _sys(rows) -> ScrewSystem:
    return ScrewSystem(ScrewJacobian.from_columns(rows))


def one_system(h=None) -> list[tuple]:
    """(1,0,0;h,0,0), or the pure translation when ``h`` is None."""
    if h is None:
        return [(0, 0, 0, 1, 0, 0)]
    return [(1, 0, 0, h, 0, 0)]


TWO_SYSTEMS = {
    "IA": lambda ha, hb: [(1, 0, 0, ha, 0, 0), (0, 1, 0, 0, hb, 0)],
    "IB": lambda p: [(1, 0, 0, 0, 0, 0), (0, 0, 0, 1, p, 0)],
    "IIA": lambda h: [(1, 0, 0, h, 0, 0), (0, 1, 0, 0, h, 0)],
    "IIB": lambda h: [(1, 0, 0, h, 0, 0), (0, 0, 0, 0, 1, 0)],
    "IIC": lambda: [(0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0)],
}

THREE_SYSTEMS = {
    "IA1": lambda ha, hb, hc: [(1, 0, 0, ha, 0, 0), (0, 1, 0, 0, hb, 0), (0, 0, 1, 0, 0, hc)],
    "IA2": lambda ha, hb: [(1, 0, 0, ha, 0, 0), (0, 1, 0, 0, hb, 0), (0, 0, 1, 0, 0, hb)],
    "IB0": lambda h, p: [(1, 0, 0, h, 0, 0), (0, 1, 0, 0, h, 0), (0, 0, 0, 1, 0, p)],
    "IB3": lambda ha, hb: [(1, 0, 0, ha, 0, 0), (0, 1, 0, 0, hb, 0), (0, 0, 0, 0, 0, 1)],
    "IC": lambda p: [(1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 1, 0, p)],
    "IIA": lambda h: [(1, 0, 0, h, 0, 0), (0, 1, 0, 0, h, 0), (0, 0, 1, 0, 0, h)],
    "IIB": lambda h: [(1, 0, 0, h, 0, 0), (0, 1, 0, 0, h, 0), (0, 0, 0, 0, 0, 1)],
    "IIC": lambda h: [(1, 0, 0, h, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)],
    "IID": lambda: [(0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)],
}


def two_system(label: str, *params) -> ScrewSystem:
    return _sys(TWO_SYSTEMS[label](*params))


def three_system(label: str, *params) -> ScrewSystem:
    return _sys(THREE_SYSTEMS[label](*params))


# Systems with no h-pseudoinverse for any h, with their 0-reciprocal bases.
# ``printed`` is the reciprocal basis exactly as tabulated in the source;
# ``reciprocal`` is the corrected basis where the two differ.
NO_PINV_FAMILIES = {
    "1:H-infinite": dict(
        basis=lambda p: [(0, 0, 0, 1, 0, 0)],
        printed=lambda p: [(0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), (0, 0, 0, 1, 0, 0),
                           (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)],
    ),
    "2:IIB": dict(
        basis=lambda p: [(1, 0, 0, p, 0, 0), (0, 0, 0, 0, 1, 0)],
        printed=lambda p: [(1, 0, 0, -p, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0),
                           (0, 0, 0, 0, 0, 1)],
        # (0,1,0;0,0,0) pairs to 1 with (0,0,0;0,1,0); the translation along y
        # is the vector that belongs in the reciprocal
        reciprocal=lambda p: [(1, 0, 0, -p, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 1, 0, 0, 0),
                              (0, 0, 0, 0, 0, 1)],
    ),
    "2:IIC": dict(
        basis=lambda p: [(0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0)],
        printed=lambda p: [(0, 0, 1, 0, 0, 0), (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0),
                           (0, 0, 0, 0, 0, 1)],
    ),
    "3:IB3": dict(
        # the table reuses p and q for the two pitches; q = p + 1 keeps them distinct
        basis=lambda p: [(1, 0, 0, p, 0, 0), (0, 1, 0, 0, p + 1, 0), (0, 0, 0, 0, 0, 1)],
        printed=lambda p: [(1, 0, 0, -p, 0, 0), (0, 1, 0, 0, -(p + 1), 0), (0, 0, 0, 0, 0, 1)],
    ),
    "3:IC": dict(
        basis=lambda p: [(1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 1, 0, p)],
        # printed as "(0,0,0;0,10)": read as (0,0,0;0,1,0)
        printed=lambda p: [(-p, 0, 1, 0, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)],
    ),
    "3:IIB": dict(
        basis=lambda p: [(1, 0, 0, p, 0, 0), (0, 1, 0, 0, p, 0), (0, 0, 0, 0, 0, 1)],
        printed=lambda p: [(1, 0, 0, -p, 0, 0), (0, 1, 0, 0, -p, 0), (0, 0, 0, 0, 0, 1)],
    ),
    "3:IIC": dict(
        basis=lambda p: [(1, 0, 0, p, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)],
        printed=lambda p: [(1, 0, 0, -p, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)],
    ),
}


def no_pinv_reciprocal(name: str, p) -> list[tuple]:
    fam = NO_PINV_FAMILIES[name]
    return fam.get("reciprocal", fam["printed"])(p)


# worked examples

def example1_columns() -> list[tuple]:
    return [(1, 0, 0, 0, -1, F(1, 2)), (0, 0, 1, 0, 0, 0), (0, 0, 1, -2, 1, 0)]


def example1_pinv_printed(h) -> list[list]:
    """J^{+h} of the first worked example exactly as printed (h != 0)."""
    h = F(h)
    c = (16 * h * h + 16 * h + 3) / (32 * h)
    return [
        [1, F(-1, 2), 0, 0, 0, 0],
        [3 / (16 * h), -c, 1, F(1, 2), 0, -3 / (8 * h)],
        [1 / (16 * h), c, 0, F(-1, 2), 0, -1 / (8 * h)],
    ]


# (row, col) of printed entries that violate the pseudoinverse axioms, with the
# value the axioms force
EXAMPLE1_DISCREPANCIES = {
    (2, 1): ("(16h^2+16h+3)/(32h)", "(16h^2+16h-1)/(32h)"),
}


def example1_pinv(h) -> list[list]:
    """Printed J^{+h} with the discrepant entries replaced by their forced values."""
    P = example1_pinv_printed(h)
    h = F(h)
    P[2][1] = (16 * h * h + 16 * h - 1) / (32 * h)
    return P


def example2_columns(l=1) -> list[tuple]:
    return [(0, 0, 1, 0, 0, 0), (1, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, -l)]


def example2_projector(h) -> list[list]:
    h = F(h)
    P = [[0] * 6 for _ in range(6)]
    P[0][0] = 1
    P[0][3] = -1 / (2 * h)
    P[2][2] = 1
    P[5][5] = 1
    return P


def example2_kernel(h) -> list[tuple]:
    return [(0, 1, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0), (1, 0, 0, 2 * F(h), 0, 0)]


EXAMPLE4_TWIST = (0, F(3, 5), F(4, 5), 1, F(-4, 5), F(3, 5))


def example4_rates(h) -> tuple:
    h = F(h)
    return (-48 * h / (160 * h),
            (-48 * h * h + 160 * h - 45) / (160 * h),
            (48 * h * h - 32 * h - 15) / (160 * h))


def example4_error(h) -> F:
    h = F(h)
    return -9 * (80 * h * h + 64 * h - 25) / (800 * h)
