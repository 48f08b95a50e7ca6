"""Regenerate the golden JSON files under fixtures/.

Expected values are written from the closed forms and normal-form parameters,
not from the library's own output, so the fixtures act as independent goldens.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from screwpinv.cli import serialize
from screwpinv.normal_forms import (EXAMPLE1_DISCREPANCIES, EXAMPLE4_TWIST, NO_PINV_FAMILIES,
                                    THREE_SYSTEMS, TWO_SYSTEMS, example1_columns, example1_pinv,
                                    example1_pinv_printed, example2_columns, example2_kernel,
                                    example2_projector, example4_error, example4_rates)

OUT = Path(__file__).resolve().parent.parent / "fixtures"
VALUES = (Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(2))
H_SAMPLES = (1, -1, Fraction(1, 2), 3)


def document(columns) -> dict:
    """JacobianDocument with the given twist columns."""
    rows = [[c[i] for c in columns] for i in range(6)]
    return {"jacobian": serialize(rows), "mode": "rational"}


def expected_moduli(dim: int, label: str, params: tuple) -> list:
    if label in ("IA", "IA1", "IB3"):
        return list(params)
    if label == "IA2":
        return [params[0], params[1], params[1]]
    if label in ("IIA", "IIB", "IIC", "IB0", "H-finite") and params:
        return [params[0]]
    return []


def instances(argc: int) -> list[tuple]:
    # cyclic windows over VALUES keep multi-parameter moduli distinct
    if argc == 0:
        return [()]
    return [tuple(VALUES[(i + k) % 4] for k in range(argc)) for i in range(4)]


def normal_form_cases() -> list[dict]:
    cases = []
    for h in VALUES:
        cases.append(dict(dimension=1, label="H-finite", params=[h], columns=[(1, 0, 0, h, 0, 0)],
                          moduli=[h]))
    cases.append(dict(dimension=1, label="H-infinite", params=[], columns=[(0, 0, 0, 1, 0, 0)],
                      moduli=[]))
    for dim, table in ((2, TWO_SYSTEMS), (3, THREE_SYSTEMS)):
        for label, make in table.items():
            for params in instances(make.__code__.co_argcount):
                cases.append(dict(dimension=dim, label=label, params=list(params),
                                  columns=make(*params),
                                  moduli=expected_moduli(dim, label, params)))
    for c in cases:
        c["document"] = document(c.pop("columns"))
    return serialize(cases)


def write(name: str, data) -> None:
    path = OUT / name
    path.write_text(json.dumps(data, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {path}")


def main() -> None:
    OUT.mkdir(exist_ok=True)
    write("example1.json", serialize({
        "document": document(example1_columns()),
        "detpoly_coefficients": [0, 8],
        "principal_pitches": [0],
        "class": "IB0",
        "pinv_printed": {str(h): example1_pinv_printed(h) for h in H_SAMPLES},
        "pinv_corrected": {str(h): example1_pinv(h) for h in H_SAMPLES},
        "discrepancies": [
            {"row": r, "col": c, "printed": p, "forced_by_axioms": f,
             "note": "printed entry violates hP3; the corrected value satisfies all four axioms"}
            for (r, c), (p, f) in EXAMPLE1_DISCREPANCIES.items()
        ],
    }))
    write("example2.json", serialize({
        "document": document(example2_columns()),
        "projector": {str(h): example2_projector(h) for h in (1, 2)},
        "kernel": {str(h): example2_kernel(h) for h in (1, 2)},
    }))
    write("example4.json", serialize({
        "document": document(example1_columns()),
        "twist": EXAMPLE4_TWIST,
        "rates": {str(h): example4_rates(h) for h in (1, -1, Fraction(1, 2))},
        "phi": {str(h): example4_error(h) for h in (1, -1, Fraction(1, 2))},
        "phi_scale_factor": 1,
    }))
    write("normal_forms.json", normal_form_cases())
    families = []
    for name, fam in NO_PINV_FAMILIES.items():
        for p in (1, 2):
            entry = {"family": name, "p": p, "document": document(fam["basis"](p)),
                     "printed_reciprocal": fam["printed"](p)}
            if "reciprocal" in fam:
                entry["corrected_reciprocal"] = fam["reciprocal"](p)
                entry["note"] = "printed reciprocal contains a vector that is not 0-reciprocal"
            families.append(entry)
    write("no_pinv_families.json", serialize(families))


if __name__ == "__main__":
    main()
