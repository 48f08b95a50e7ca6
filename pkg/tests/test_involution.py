import random

import numpy as np
import pytest

import gen
from screwpinv.errors import Dependent, NotInInvolution, NotLines
from screwpinv.involution import (GeometricCase, LineSet, TransversalCount,
                                  classify_involution_geometry, is_in_involution,
                                  sylvester_factor_identity, transversal_count)
from screwpinv.normal_forms import example1_columns
from screwpinv.se3 import Finite, line_through, pairing

X = (1, 0, 0, 0, 0, 0)
Y = (0, 1, 0, 0, 0, 0)
Z = (0, 0, 1, 0, 0, 0)

THREE_LINE_CASES = {
    GeometricCase.IIAZero: [X, Y, Z],
    GeometricCase.IIBZero: [X, Y, (-1, 1, 0, 0, 0, 1)],
    GeometricCase.IB0Zero: [X, Y, (1, 1, 0, -1, 1, 0)],
    GeometricCase.IAZeroPitch: [X, Y, (0, 0, 1, 1, -1, 0)],
    GeometricCase.IB3: [X, (1, 0, 0, 0, 0, -1), (0, 1, 0, -1, 0, 0)],
    GeometricCase.IICZero: [X, (1, 0, 0, 0, 0, -1), (1, 0, 0, 0, 1, 0)],
}


def test_rejects_non_lines():
    with pytest.raises(NotLines):
        LineSet([(1, 0, 0, 1, 0, 0)])
    with pytest.raises(NotLines):
        LineSet([(0, 0, 0, 1, 0, 0)])


def test_rejects_dependent_lines():
    with pytest.raises(Dependent):
        is_in_involution(LineSet([X, (2, 0, 0, 0, 0, 0)]))


@pytest.mark.parametrize("case", list(THREE_LINE_CASES), ids=lambda c: c.value)
def test_three_line_cases(case):
    L = LineSet(THREE_LINE_CASES[case])
    report = is_in_involution(L)
    assert report.in_involution
    assert report.geometric_case is case
    assert classify_involution_geometry(L) is case
    z, w = report.certificate
    for s in L.lines:
        assert w.act(s) == 0 == pairing(s, z, Finite(0))


def test_two_line_cases():
    assert is_in_involution(LineSet([X, Y])).geometric_case is GeometricCase.ConcurrentPencil
    parallel = [X, (1, 0, 0, 0, 0, -1)]
    assert is_in_involution(LineSet(parallel)).geometric_case is GeometricCase.ParallelPlanar
    skew = [X, line_through((0, 0, 1), (0, 1, 0))]
    report = is_in_involution(LineSet(skew))
    assert not report.in_involution and report.certificate is None
    with pytest.raises(NotInInvolution):
        classify_involution_geometry(LineSet(skew))


def test_first_example_lines():
    report = is_in_involution(LineSet(example1_columns()))
    assert report.in_involution and report.geometric_case is GeometricCase.IB0Zero


def test_sylvester_identities_small():
    rng = random.Random(2)
    for _ in range(50):
        for m in (2, 3):
            lines = [gen.line(rng) for _ in range(m)]
            try:
                L = LineSet(lines)
            except NotLines:
                continue
            g, prod = sylvester_factor_identity(L)
            assert g == prod


def test_four_generic_lines_have_two_transversals():
    L = LineSet([X, line_through((0, 0, 1), (0, 1, 0)), line_through((1, 0, 2), (1, 1, 0)),
                 line_through((0, 1, 3), (1, 0, 1))])
    assert transversal_count(L) is TransversalCount.Two


def _line_points(s, ts):
    w = np.array([float(x) for x in s.omega])
    v = np.array([float(x) for x in s.vel])
    foot = np.cross(w, v) / w.dot(w)
    return [foot + t * w for t in ts]


def _regulus_oracle(lines):
    """Count transversals via the quadric through the first three lines.

    Returns None when the configuration is too degenerate for the oracle.
    """
    pts = [p for s in lines[:3] for p in _line_points(s, (-1.0, 0.3, 1.7, 2.9))]
    rows = [[x * x, y * y, z * z, x * y, y * z, x * z, x, y, z, 1.0] for x, y, z in pts]
    _, sv, vt = np.linalg.svd(np.array(rows))
    if sv[-1] > 1e-9 * sv[0] or sv[-2] < 1e-6 * sv[0]:
        return None
    c = vt[-1]

    def quad(p):
        x, y, z = p
        return c @ np.array([x * x, y * y, z * z, x * y, y * z, x * z, x, y, z, 1.0])

    # restriction of the quadric to line 4 is a quadratic in t
    vals = [quad(p) for p in _line_points(lines[3], (-1.0, 0.0, 1.0))]
    a = (vals[0] + vals[2]) / 2 - vals[1]
    b = (vals[2] - vals[0]) / 2
    k = vals[1]
    scale = max(abs(a), abs(b), abs(k))
    if abs(a) < 1e-6 * scale:
        return None
    disc = b * b - 4 * a * k
    if abs(disc) < 1e-6 * scale * scale:
        return None
    return TransversalCount.Two if disc > 0 else TransversalCount.Zero


def test_four_line_counts_match_regulus_oracle():
    rng = random.Random(9)
    seen = set()
    for _ in range(150):
        L = LineSet([gen.line(rng, 3) for _ in range(4)])
        if not L.independent:
            continue
        pairs = [(i, j) for i in range(3) for j in range(i + 1, 3)]
        if any(pairing(L.lines[i], L.lines[j], Finite(0)) == 0 for i, j in pairs):
            continue
        want = _regulus_oracle(L.lines)
        if want is None:
            continue
        assert transversal_count(L) is want
        seen.add(want)
    assert seen == {TransversalCount.Two, TransversalCount.Zero}


def test_four_lines_with_common_point_have_infinitely_many():
    L = LineSet([X, Y, Z, (1, 1, 1, 0, 0, 0)])
    with pytest.raises(Dependent):
        transversal_count(L)
    L = LineSet([X, Y, Z, (1, 0, 0, 0, 1, 0)])
    assert transversal_count(L) is TransversalCount.Infinite


def test_four_lines_without_real_transversal():
    # three rulings of the saddle y = xz, and a line that misses it
    rulings = [line_through((0, 0, t), (1, t, 0)) for t in (0, 1, -1)]
    miss = line_through((0, 2, 0), (1, 0, -1))
    hit = line_through((0, 2, 0), (1, 0, 1))
    assert transversal_count(LineSet(rulings + [miss])) is TransversalCount.Zero
    assert transversal_count(LineSet(rulings + [hit])) is TransversalCount.Two


def test_five_lines_meeting_an_axis():
    lines = [line_through((a, 0, 0), d) for a, d in
             [(0, (0, 1, 0)), (1, (0, 0, 1)), (2, (1, 1, 0)), (-1, (0, 1, 1)), (3, (1, 2, 3))]]
    report = is_in_involution(LineSet(lines))
    assert report.in_involution
    assert report.geometric_case is GeometricCase.CommonTransversal
    assert report.transversal_count is TransversalCount.One
    z, _ = report.certificate
    assert z.omega[1] == z.omega[2] == 0 and z.vel == (0, 0, 0)


def test_five_generic_lines():
    lines = [line_through(p, d) for p, d in
             [((0, 0, 0), (1, 0, 0)), ((0, 0, 1), (0, 1, 0)), ((1, 0, 2), (1, 1, 0)),
              ((0, 1, 3), (1, 0, 1)), ((2, -1, 0), (0, 1, 2))]]
    report = is_in_involution(LineSet(lines))
    assert not report.in_involution
    assert report.transversal_count is TransversalCount.Zero
