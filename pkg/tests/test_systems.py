import json
import random
from fractions import Fraction as F
from pathlib import Path

import pytest

import gen
from screwpinv.cli import parse_document
from screwpinv.errors import UnclassifiableRank
from screwpinv.linalg import Mat
from screwpinv.normal_forms import (NO_PINV_FAMILIES, example1_columns, three_system,
                                    two_system)
from screwpinv.pinv import ScrewJacobian, exists_h_pinv
from screwpinv.se3 import INF, Finite, Twist, q_matrix
from screwpinv.systems import (ScrewSystem, classify, dim_at_infinity, no_pinv_for_all_h,
                               principal_pitches, reciprocal_system, type_two_pitch)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def system(cols):
    return ScrewSystem(ScrewJacobian.from_columns(cols))


def test_rejects_dependent_and_six_systems():
    with pytest.raises(UnclassifiableRank):
        system([(1, 0, 0, 0, 0, 0), (2, 0, 0, 0, 0, 0)])
    with pytest.raises(UnclassifiableRank):
        ScrewSystem(ScrewJacobian(Mat.identity(6)))


def test_first_example_is_ib0():
    c = classify(system(example1_columns()))
    assert (c.label, c.moduli) == ("IB0", (0,))
    assert not no_pinv_for_all_h(system(example1_columns()))


def test_one_systems():
    assert classify(system([(1, 0, 0, 2, 0, 0)])).moduli == (2,)
    assert classify(system([(0, 0, 0, 1, 0, 0)])).label == "H-infinite"


def test_principal_pitches_of_ia():
    S = two_system("IA", F(-1), F(2))
    assert principal_pitches(S) == [-1, 2]
    S3 = three_system("IA1", 0, F(1, 2), 2)
    assert principal_pitches(S3) == [0, F(1, 2), 2]


def test_type_two_detection():
    assert type_two_pitch(two_system("IIA", 3)) == Finite(3)
    assert type_two_pitch(two_system("IIC")) is INF
    assert type_two_pitch(two_system("IA", 0, 1)) is None


def test_dim_at_infinity_counts_translations():
    assert dim_at_infinity(three_system("IID")) == 3
    assert dim_at_infinity(three_system("IC", 1)) == 2


def test_normal_form_fixtures_classify():
    for case in json.loads((FIXTURES / "normal_forms.json").read_text()):
        S = ScrewSystem(ScrewJacobian(parse_document(json.dumps(case["document"])).jacobian))
        c = classify(S)
        assert c.label == case["label"]
        assert sorted(c.moduli) == sorted(F(x) for x in case["moduli"])


def test_float_classification_matches_exact():
    for case in json.loads((FIXTURES / "normal_forms.json").read_text()):
        doc = parse_document(json.dumps(case["document"]), "float")
        c = classify(ScrewSystem(ScrewJacobian(doc.jacobian)))
        assert c.label == case["label"], case
        want = sorted(float(F(x)) for x in case["moduli"])
        assert len(c.moduli) == len(want)
        assert all(abs(a - b) < 1e-8 for a, b in zip(sorted(c.moduli), want))


def test_four_and_five_systems_via_reciprocal():
    S4 = system([(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 0, 1)])
    c = classify(S4)
    assert c.tag.startswith("Reciprocal(4,")
    assert c.inner.dimension == 2
    S5 = system([tuple(1 if i == j else 0 for i in range(6)) for j in range(5)])
    assert classify(S5).inner.dimension == 1


@pytest.mark.parametrize("name", sorted(NO_PINV_FAMILIES))
def test_no_pinv_families(name):
    for p in (1, 2):
        S = system(NO_PINV_FAMILIES[name]["basis"](p))
        assert no_pinv_for_all_h(S)


def test_reciprocal_is_reciprocal():
    rng = random.Random(11)
    for m in (1, 2, 3, 4, 5):
        J = gen.jacobian(rng, m)
        h = gen.pitch_value(rng)
        R = reciprocal_system(ScrewSystem(J), h).basis
        assert R.cols == 6 - m
        assert (J.matrix.T @ q_matrix(Finite(h)) @ R).is_zero()


def test_existence_passes_to_reciprocal():
    rng = random.Random(5)
    for _ in range(40):
        m = rng.randint(1, 5)
        J = gen.jacobian(rng, m, bound=2)
        h = F(rng.randint(-2, 2))
        R = reciprocal_system(ScrewSystem(J), h).basis
        assert exists_h_pinv(J, h) == exists_h_pinv(ScrewJacobian(R), h)


def test_system_accepts_twists():
    S = ScrewSystem([Twist((1, 0, 0), (0, 0, 0))])
    assert S.m == 1
