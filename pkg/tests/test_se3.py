import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import gen
from screwpinv.errors import ZeroTwist
from screwpinv.linalg import Mat, inverse
from screwpinv.se3 import (INF, Finite, RigidDisplacement, Twist, Wrench, adjoint_action,
                           adjoint_matrix, as_pitch, bracket, cayley_rotation, evaluate_field,
                           line_through, pairing, pitch, q_alpha_beta, q_inverse, q_matrix,
                           random_displacement, twist_to_wrench, wrench_to_twist)

seeds = st.integers(0, 10**6)


def test_form_matrices():
    h = F(3, 4)
    Q = q_matrix(Finite(h))
    assert Q[0, 0] == -2 * h and Q[0, 3] == 1 and Q[3, 3] == 0
    assert q_matrix(INF) == q_alpha_beta(1, 0)
    assert q_matrix(Finite(h)) == q_alpha_beta(h, 1)
    assert q_matrix(Finite(h)) @ q_inverse(h) == Mat.identity(6)


def test_as_pitch_parsing():
    assert as_pitch("inf") is INF
    assert as_pitch("3/4") == Finite(F(3, 4))
    assert as_pitch("0.25") == Finite(F(1, 4))
    assert as_pitch(2) == Finite(2)


def test_pitch_of_screw():
    assert pitch(Twist((1, 0, 0), (F(1, 2), 0, 0))) == Finite(F(1, 2))
    assert pitch(Twist((0, 0, 0), (1, 0, 0))) is INF
    with pytest.raises(ZeroTwist):
        pitch(Twist((0, 0, 0), (0, 0, 0)))


def test_line_through_is_zero_pitch():
    s = line_through((1, 2, 3), (0, 0, 1))
    assert pitch(s) == Finite(0)
    assert evaluate_field(s, (1, 2, 3)) == (0, 0, 0)


def test_wrench_twist_duality():
    s = Twist((1, 2, 3), (4, 5, 6))
    w = twist_to_wrench(s, Finite(2))
    assert wrench_to_twist(w, Finite(2)) == s
    assert Wrench((1, 0, 0), (0, 1, 0)).act(s) == 1 + 5


def test_rigid_displacement_validation():
    with pytest.raises(ValueError):
        RigidDisplacement(Mat([[2, 0, 0], [0, 1, 0], [0, 0, 1]]), (0, 0, 0))
    g = RigidDisplacement(cayley_rotation((1, F(1, 2), 2)), (1, 2, 3))
    assert adjoint_matrix(g) @ adjoint_matrix(g.inverse()) == Mat.identity(6)


@given(seeds)
@settings(max_examples=60, deadline=None)
def test_pairings_are_adjoint_invariant(seed):
    rng = random.Random(seed)
    g = random_displacement(rng)
    s1, s2 = gen.twist(rng), gen.twist(rng)
    for p in (Finite(0), Finite(gen.pitch_value(rng)), INF):
        assert pairing(s1, s2, p) == pairing(adjoint_action(g, s1), adjoint_action(g, s2), p)
    assert pitch(s1) == pitch(adjoint_action(g, s1))


@given(seeds)
@settings(max_examples=60, deadline=None)
def test_adjoint_inverse_transpose_identity(seed):
    # Ad(g)^T Q_h Ad(g) = Q_h for every pitch
    rng = random.Random(seed)
    g = random_displacement(rng)
    A = adjoint_matrix(g)
    h = gen.pitch_value(rng)
    assert A.T @ q_matrix(Finite(h)) @ A == q_matrix(Finite(h))
    assert inverse(A) == adjoint_matrix(g.inverse())


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_bracket_is_equivariant(seed):
    rng = random.Random(seed)
    g = random_displacement(rng)
    s1, s2 = gen.twist(rng), gen.twist(rng)
    assert adjoint_action(g, bracket(s1, s2)) == bracket(adjoint_action(g, s1), adjoint_action(g, s2))
