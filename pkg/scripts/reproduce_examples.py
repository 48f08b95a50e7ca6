"""Recompute the worked examples and the no-pseudoinverse families, printing a short report."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from screwpinv import (ScrewJacobian, ScrewSystem, classify, cost_phi, gram_pencil,
                       h_pseudoinverse, is_in_involution, LineSet, no_pinv_for_all_h,
                       projector_h, verify_axioms)
from screwpinv.errors import NoPseudoinverse
from screwpinv.linalg import Mat, fmt_scalar
from screwpinv.normal_forms import (EXAMPLE1_DISCREPANCIES, EXAMPLE4_TWIST, NO_PINV_FAMILIES,
                                    example1_columns, example1_pinv, example2_columns,
                                    example2_projector, example4_error, example4_rates,
                                    no_pinv_reciprocal)
from screwpinv.se3 import Finite, Twist, pairing


def show(M: Mat) -> str:
    return "\n".join("    " + "  ".join(f"{fmt_scalar(x):>14}" for x in r) for r in M.tolist())


def first_example() -> None:
    J = ScrewJacobian.from_columns(example1_columns())
    print("first example")
    print(f"  det(J^T Q_h J) = {gram_pencil(J).detpoly}")
    try:
        h_pseudoinverse(J, 0)
    except NoPseudoinverse as exc:
        print(f"  h = 0: {exc}")
    print(f"  class of the column span: {classify(ScrewSystem(J)).tag}")
    print(f"  lines in involution: {is_in_involution(LineSet(J.twists)).geometric_case.value}")
    for h in (1, -1, Fraction(1, 2), 3):
        res = h_pseudoinverse(J, h)
        print(f"  J^+h at h = {h}: axioms {verify_axioms(J, res)}, "
              f"matches corrected closed form: {res.matrix == Mat(example1_pinv(h))}")
    for (i, j), (printed, forced) in EXAMPLE1_DISCREPANCIES.items():
        print(f"  entry ({i + 1},{j + 1}): tabulated {printed}, axioms force {forced}")
    print("  J^+h at h = 1:")
    print(show(h_pseudoinverse(J, 1).matrix))


def second_example() -> None:
    J = ScrewJacobian.from_columns(example2_columns())
    print("second example")
    for h in (1, 2):
        P = projector_h(J, h)
        print(f"  P_h at h = {h} matches closed form: {P.matrix == Mat(example2_projector(h))}")
    print(show(projector_h(J, 1).matrix))


def fourth_example() -> None:
    J = ScrewJacobian.from_columns(example1_columns())
    print("fourth example")
    for h in (1, -1, Fraction(1, 2)):
        v = h_pseudoinverse(J, h).matrix.apply(EXAMPLE4_TWIST)
        phi = cost_phi(J, EXAMPLE4_TWIST, v, h).value
        print(f"  h = {h}: v = {[fmt_scalar(x) for x in v]} ({v == example4_rates(h)}), "
              f"Phi = {phi} (closed form {example4_error(h)})")
    Jf = J.to_float()
    s = tuple(float(x) for x in EXAMPLE4_TWIST)
    for h in sorted(float(r) for r in np.roots([80, 64, -25])):
        v = h_pseudoinverse(Jf, h).matrix.apply(s)
        print(f"  h = {h:.6f}: Phi = {cost_phi(Jf, s, v, h).value:.3e}")


def no_pinv_families() -> None:
    print("systems with no h-pseudoinverse")
    for name, fam in NO_PINV_FAMILIES.items():
        for p in (1, 2):
            basis = fam["basis"](p)
            S = ScrewSystem(ScrewJacobian.from_columns(basis))
            recip = no_pinv_reciprocal(name, p)
            ok = all(pairing(Twist.from_vector(a), Twist.from_vector(b), Finite(0)) == 0
                     for a in basis for b in recip)
            note = " (corrected reciprocal)" if "reciprocal" in fam else ""
            print(f"  {name:14} p={p}: detpoly identically zero: {no_pinv_for_all_h(S)}, "
                  f"reciprocal pairs to zero: {ok}{note}")


if __name__ == "__main__":
    first_example()
    second_example()
    fourth_example()
    no_pinv_families()
