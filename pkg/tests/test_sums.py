import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from tnv.diagrams import all_tuples
from tnv.errors import InputError, ResourceCapError
from tnv.profile import profile_from_tuple, second_difference_pairing
from tnv.sums import (
    BoundarySequence,
    ak_coefficients,
    ak_identity_lhs,
    alpha_by_profiles,
    balanced_sum,
    brill_segre_check,
    consistent_brill_segre_input,
    edge_class_counts,
    maya_pairing,
    piene_degree,
    random_sequence,
    second_diff_sum,
    weighted_balanced_sum,
)

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=50)


def test_boundary_enforced():
    with pytest.raises(InputError):
        BoundarySequence((1, 2, 0))
    with pytest.raises(InputError):
        BoundarySequence((0, 2, 3))
    assert BoundarySequence((0, 2, 3), free_top=True).n == 1


def test_hand_case():
    a = BoundarySequence((0, Fraction(3, 7), Fraction(-5, 2), 0))
    assert balanced_sum(a, 1) == 0
    assert balanced_sum(BoundarySequence((0,) * 6), 2) == 0


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_balanced_and_ak_identity(data):
    n = data.draw(st.integers(1, 6))
    p = data.draw(st.integers(1, n))
    a = BoundarySequence.from_interior(data.draw(st.lists(rationals, min_size=n, max_size=n)))
    assert balanced_sum(a, p) == 0
    assert ak_identity_lhs(a, p) == 0


def test_float_mode():
    a = BoundarySequence.from_interior([0.1, -2.7, 3.3, 1e-3], exact=False)
    for p in range(1, 5):
        assert a.is_zero(balanced_sum(a, p))


def test_alpha_example_and_endpoint():
    assert ak_coefficients(4, 2) == [6, 12, 8, 4]
    assert alpha_by_profiles(4, 2) == [6, 12, 8, 4]
    for n in range(1, 8):
        for p in range(1, n + 1):
            assert comb(n, p) * p == comb(n, p - 1) * (n + 1 - p)


@pytest.mark.parametrize("n", range(1, 9))
def test_alpha_by_profiles(n):
    for p in range(1, n + 1):
        assert alpha_by_profiles(n, p) == ak_coefficients(n, p)


@pytest.mark.parametrize("n", range(1, 8))
def test_edge_class_counts(n):
    for p in range(1, n + 1):
        assert set(edge_class_counts(n, p)) == {(comb(n, p), comb(n, p - 1))}


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_maya_pairing_matches_profile(data):
    n = data.draw(st.integers(1, 7))
    p = data.draw(st.integers(1, n))
    a = [0] + data.draw(st.lists(st.integers(-20, 20), min_size=n, max_size=n)) + [0]
    for sigma in all_tuples(n, p):
        assert maya_pairing(sigma, p, a) == second_difference_pairing(profile_from_tuple(sigma, p, n), a)


@pytest.mark.parametrize("n,p", [(2, 1), (3, 2), (4, 2), (5, 2), (5, 3), (6, 3)])
def test_weighted_two_ways(n, p):
    rng = random.Random(n * 10 + p)
    for _ in range(10):
        a = random_sequence(n, rng)
        assert weighted_balanced_sum(a, p) == (0, 0)


def test_column_rectangle_single_chain():
    rng = random.Random(3)
    a = random_sequence(3, rng)
    weighted, chain = weighted_balanced_sum(a, 3)
    assert weighted == chain == balanced_sum(a, 3) == 0


def test_chain_form_cap_keeps_weighted():
    a = random_sequence(8, random.Random(1))
    with pytest.raises(ResourceCapError) as info:
        weighted_balanced_sum(a, 4)
    assert info.value.partial == 0
    assert weighted_balanced_sum(a, 4, chains=False) == (0, None)


def test_free_top():
    a = BoundarySequence((0, 1, 1, 1, 1), free_top=True)
    assert second_diff_sum(a, 2) == 0
    rng = random.Random(5)
    for n in range(1, 8):
        for p in range(1, n + 1):
            assert second_diff_sum(random_sequence(n, rng, free_top=True), p) == 0


def test_free_top_with_zero_top_is_balanced():
    rng = random.Random(8)
    a = random_sequence(5, rng)
    top = BoundarySequence(a.values, free_top=True)
    # both reduce to the pairings plus C(n+1,p) a_p
    assert second_diff_sum(top, 2) == balanced_sum(a, 2) == 0


def test_rational_normal_curve_degrees():
    for n in range(1, 8):
        res = brill_segre_check(0, n, [0] * n, n)
        assert res.residual == 0
        assert list(res.piene) == [p * (n - p + 1) for p in range(1, n + 1)]


def test_elliptic_linear_degrees():
    res = brill_segre_check(1, 5, [0] * 4, 4)
    assert list(res.piene) == [5 * p for p in range(1, 5)]
    assert res.generalized_residual == 0
    assert not res.consistent


def test_single_component():
    g, d = 2, 3
    res = brill_segre_check(g, d, [2 * g - 2 + 2 * d], 1)
    assert res.residual == 0 and res.top == 0


def test_random_consistent_inputs():
    rng = random.Random(11)
    for n in range(1, 8):
        for _ in range(20):
            g, d, sig = consistent_brill_segre_input(n, rng)
            res = brill_segre_check(g, d, sig, n)
            assert res.consistent and res.residual == 0
            assert piene_degree(1, g, d, sig) == d


def test_brill_segre_rejects_wrong_length():
    with pytest.raises(InputError):
        brill_segre_check(0, 3, [0, 0], 3)
