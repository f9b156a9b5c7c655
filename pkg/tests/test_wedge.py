import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tnv.diagrams import all_tuples, graded_level
from tnv.errors import DegenerateCurveError, InputError, VerificationError
from tnv.tableaux import f_hook
from tnv.diagrams import maya_to_young
from tnv.wedge import (
    FormalWedge,
    PolyCurve,
    StationaryProfile,
    associated_degree,
    associated_orders,
    candidate_sets_V,
    canonical_monomial,
    d_convexity,
    d_of,
    d_p,
    d_via_profile,
    derivative_syt,
    derive_formal,
    echelon,
    leibniz_derive,
    map_degree,
    normal_form,
    pluecker,
    stationary_indices,
    vanishing_order,
    verify_d_against_pluecker,
)


def test_canonical_monomial_signs():
    assert canonical_monomial((2, 0, 1)) == (1, (0, 1, 2))
    assert canonical_monomial((1, 0)) == (-1, (0, 1))
    assert canonical_monomial((1, 1)) == (0, None)


def test_third_derivative_of_plane_wedge():
    w = derivative_syt(2, 3)
    assert w.terms == {(0, 4): 1, (1, 3): 2}
    assert FormalWedge.identity(2).derive(3) == w


def test_derive_drops_zero_terms():
    assert derive_formal(FormalWedge()) == FormalWedge()
    assert FormalWedge({(0, 1): 3, (1, 0): 3}) == FormalWedge()


@pytest.mark.parametrize("p", range(1, 5))
def test_ball_rule_matches_leibniz(p):
    ball = leib = FormalWedge.identity(p)
    for i in range(1, 9):
        ball, leib = derive_formal(ball), leibniz_derive(leib)
        assert ball == leib == derivative_syt(p, i)
        for sigma, coef in ball.terms.items():
            assert coef == f_hook(maya_to_young(sigma, p, max(sigma)))


def test_derivative_syt_rejects():
    with pytest.raises(InputError):
        derivative_syt(0, 2)


def test_rational_normal_pluecker():
    coords = pluecker(PolyCurve.rational_normal(2), 2)
    as_lists = {k: [int(c) for c in reversed(v.all_coeffs())] for k, v in coords.items()}
    assert as_lists == {(0, 1): [1], (0, 2): [0, 2], (1, 2): [0, 0, 1]}


@pytest.mark.parametrize("n", range(1, 7))
def test_rational_normal_degrees(n):
    curve = PolyCurve.rational_normal(n)
    for p in range(1, n + 1):
        assert associated_degree(curve, p) == p * (n - p + 1)


def test_full_wronskian_is_constant():
    coords = pluecker(PolyCurve.rational_normal(4), 5)
    (only,) = coords.values()
    assert only.degree() == 0 and only.as_expr() == 1 * 2 * 6 * 24


def test_vanishing_orders():
    assert vanishing_order([0, 0, 3]) == 2
    assert vanishing_order([1, -2, 1], 1) == 2
    assert vanishing_order([0]) == math.inf


def test_echelon_pivots():
    rows, piv = echelon([[0, 2, 4], [0, 1, 2], [1, 0, 0]])
    assert piv == [0, 1]
    assert rows[1] == [0, 1, 2]


def _sample_curve():
    # orders 0, 2, 4, 6 at the origin
    return PolyCurve.from_coefficients([[1], [0, 0, 1], [0, 0, 0, 0, 1, 1], [0, 0, 0, 0, 0, 0, 1]])


def test_stationary_profile():
    prof = stationary_indices(_sample_curve())
    assert prof.delta == (0, 2, 4, 6)
    assert prof.v == (2, 2, 2)
    assert stationary_indices(PolyCurve.rational_normal(3), 1).delta == (0, 1, 2, 3)


def test_short_truncation_is_retried():
    curve = PolyCurve.from_coefficients([[1], [0] * 9 + [1]])
    assert stationary_indices(curve, truncation=2).delta == (0, 9)


def test_degenerate_curve():
    curve = PolyCurve.from_coefficients([[1, 1], [2, 2], [0, 1]])
    with pytest.raises(DegenerateCurveError) as info:
        stationary_indices(curve)
    assert info.value.rank == 2 and info.value.exhausted


def test_normal_form_leading_terms():
    curve = PolyCurve.from_coefficients([[1, 1, 1], [2, 0, 3], [0, 5, 1, 7]])
    z0 = Fraction(1, 2)
    nf = normal_form(curve, z0)
    prof = stationary_indices(curve, z0)
    for comp, order in zip(nf.components, prof.delta):
        assert vanishing_order(comp, z0) == order


@pytest.mark.parametrize("z0", [0, Fraction(1, 3), -2])
def test_d_matches_pluecker_orders(z0):
    curve = _sample_curve()
    for p in range(1, 5):
        rep = verify_d_against_pluecker(curve, p, z0)
        assert rep.ok, rep.rows


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=4), st.data())
def test_d_decomposes_through_profiles(gaps, data):
    delta = [0]
    for g in gaps:
        delta.append(delta[-1] + g)
    prof = StationaryProfile(tuple(delta))
    n = prof.n
    p = data.draw(st.integers(1, n))
    for sigma in all_tuples(n, p):
        assert d_of(sigma, prof) == d_via_profile(sigma, prof)
    assert d_convexity(prof) == [v - 1 for v in prof.v]


def test_stationary_profile_validation():
    with pytest.raises(InputError):
        StationaryProfile((0, 0, 1))


def test_bounds_first_steps():
    prof = StationaryProfile((0, 2, 3, 7, 8, 11))
    n, p = 5, 3
    sets = candidate_sets_V(n, p, prof, 3)
    assert sets[0][1] == d_p(prof, p)
    assert sets[0][0] == frozenset({(0, 1, 2)})
    # the next cheapest tuple moves the top ball one box
    assert sets[1][1] == prof.v[p - 1]
    assert sets[2][1] == min(prof.v[p - 2], prof.v[p])


def test_bounds_hold_for_associated_curves():
    curve = _sample_curve()
    prof = stationary_indices(curve)
    for p in range(1, 4):
        i_max = min(curve.n - p + 1, p)
        bounds = candidate_sets_V(curve.n, p, prof, i_max)
        orders = associated_orders(curve, p)
        running = 0
        for idx, (_, b) in enumerate(bounds):
            running += b
            assert orders[idx] <= running


def test_curve_json_round_trip():
    curve = PolyCurve.from_json('[["1/2", 0, 1], [0, 1]]')
    assert PolyCurve.from_json(curve.to_json()) == curve
    assert curve.to_json() == '[["1/2", "0", "1"], ["0", "1"]]'
    with pytest.raises(InputError):
        PolyCurve.from_coefficients([[0], [0]])


def test_map_degree_removes_common_factor():
    curve = PolyCurve.from_coefficients([[0, 1], [0, 0, 1], [0, 0, 0, 1]])
    assert map_degree(curve.components) == 2
