import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tnv.errors import InputError, ResourceCapError
from tnv.expcurve import (
    PRESETS,
    FrequencySet,
    convex_hull,
    fujimoto_closed_form,
    fujimoto_sharpness,
    minkowski_identity_check,
    minkowski_sum,
    numerical_order_slope,
    peculiar_middle,
    perimeter,
    perimeter_cauchy,
    perimeter_i,
    perimeter_sequence,
    perimeters_i,
    random_frequency_set,
    subset_sums,
    symmetry_check,
    vertex_set,
    vertex_set_i,
)

R2, R5 = math.sqrt(2), math.sqrt(5)
SIX = FrequencySet(PRESETS["paper-n5"])


def F(*pts):
    return [(Fraction(a), Fraction(b)) for a, b in pts]


def test_hull_of_six_points():
    hull = convex_hull(SIX.points)
    assert set(hull.vertices) == set(F((0, 0), (1, 0), (2, 1), (1, 2), (0, 1)))
    assert hull.kind == "polygon"


def test_degenerate_hulls():
    assert convex_hull([(3, 3)]).kind == "point"
    seg = convex_hull([(0, 0), (1, 0), (3, 0), (2, 0)])
    assert seg.vertices == ((0, 0), (3, 0))
    assert perimeter(seg) == 6
    assert perimeter(convex_hull([(1, 1)])) == 0
    with pytest.raises(InputError):
        convex_hull([])


def test_six_point_perimeters():
    L = perimeter_sequence(SIX)
    assert L[0] == L[6] == 0
    assert L[1] == pytest.approx(2 + 3 * R2, abs=1e-12)
    assert L[2] == pytest.approx(4 + R2 + 2 * R5, abs=1e-12)
    assert L[3] == pytest.approx(8 + 2 * R2, abs=1e-12)
    assert L[4] == pytest.approx(L[2], abs=1e-12)
    Li = perimeters_i(SIX, 2)
    assert Li[1] == pytest.approx(10 + 5 * R2, abs=1e-12)
    assert Li[2] == pytest.approx(8 + 4 * R2 + 4 * R5, abs=1e-12)


def test_vertex_set_edges():
    assert vertex_set(SIX, 1) == set(SIX.points)
    assert len(vertex_set(SIX, 6)) == 1
    assert vertex_set_i(SIX, 2, 1) == vertex_set(SIX, 2)
    assert len(vertex_set_i(SIX, 2, 15)) == 1
    with pytest.raises(InputError):
        vertex_set_i(SIX, 2, 16)
    with pytest.raises(ResourceCapError):
        vertex_set_i(SIX, 2, 7, cap=1000)


def test_multiset_and_set_give_same_hull():
    counts = vertex_set_i(SIX, 2, 3, multiset=True)
    assert sum(counts.values()) == math.comb(15, 3)
    assert convex_hull(counts) == convex_hull(vertex_set_i(SIX, 2, 3))


def test_sweep_matches_enumeration():
    rng = random.Random(2)
    for _ in range(15):
        pts = random_frequency_set(rng.randint(1, 4), rng, spread=rng.choice([1, 3]))
        for p in range(1, pts.n + 2):
            for over in ("tuples", "values"):
                fast = perimeters_i(pts, p, over)
                for i, value in enumerate(fast, start=1):
                    if math.comb(len(fast), i) > 20000:
                        continue
                    slow = perimeter(convex_hull(vertex_set_i(pts, p, i, over=over)))
                    assert abs(slow - value) <= 1e-9


def test_subset_sums_match_enumeration():
    rng = random.Random(4)
    pts = random_frequency_set(4, rng)
    from tnv.expcurve import _sigma_sums

    sums = _sigma_sums(pts, 2)
    for i in range(1, 5):
        assert subset_sums(sums, i) == vertex_set_i(pts, 2, i)


def test_cauchy_formula_agrees():
    rng = random.Random(6)
    for _ in range(10):
        pts = random_frequency_set(rng.randint(1, 5), rng)
        for p in range(1, pts.n + 1):
            V = vertex_set(pts, p)
            assert perimeter_cauchy(V, 8192) == pytest.approx(perimeter(convex_hull(V)), rel=1e-5)
    assert perimeter_cauchy([(0, 0), (3, 0)]) == pytest.approx(6, rel=1e-6)


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.tuples(st.integers(-9, 9), st.integers(-9, 9)), min_size=1, max_size=8),
    st.lists(st.tuples(st.integers(-9, 9), st.integers(-9, 9)), min_size=1, max_size=8),
)
def test_minkowski_additivity(a, b):
    left = perimeter(convex_hull(minkowski_sum(a, b)))
    assert left == pytest.approx(perimeter(convex_hull(a)) + perimeter(convex_hull(b)), abs=1e-9)


def test_six_point_minkowski_and_symmetry():
    rep = minkowski_identity_check(SIX, 2)
    assert rep.sets_equal and rep.ok
    assert rep.right == pytest.approx(10 + 5 * R2, abs=1e-9)
    assert all(ok for *_, ok in symmetry_check(SIX))


def test_minkowski_random():
    rng = random.Random(7)
    for _ in range(20):
        pts = random_frequency_set(rng.randint(2, 6), rng)
        for p in range(1, pts.n + 1):
            assert minkowski_identity_check(pts, p).ok


def test_six_point_middle():
    rep = peculiar_middle(SIX, 2, 3)
    assert rep.middle == pytest.approx(8 + 7 * R2 + 2 * R5, abs=1e-9)
    assert rep.upper == pytest.approx(8 + 4 * R2 + 4 * R5, abs=1e-9)
    assert rep.ok
    assert len(rep.argmax) == 2


def test_middle_small_i():
    L = perimeter_sequence(SIX)
    assert peculiar_middle(SIX, 3, 1).middle == pytest.approx(L[3])
    two = peculiar_middle(SIX, 3, 2)
    assert two.middle == pytest.approx(L[2] + L[4], abs=1e-9)
    assert two.middle == pytest.approx(two.upper, abs=1e-9)


def test_concavity_random():
    rng = random.Random(8)
    for _ in range(50):
        L = perimeter_sequence(random_frequency_set(rng.randint(1, 6), rng))
        assert all(L[k - 1] - 2 * L[k] + L[k + 1] <= 1e-9 for k in range(1, len(L) - 1))


def test_fujimoto():
    rep = fujimoto_sharpness(3, 2, 2)
    assert rep.middle == rep.upper == 12
    for n in range(1, 7):
        for p in range(1, n + 1):
            assert fujimoto_sharpness(n, p, 1).upper == 2 * p * (n - p + 1)
            q = p * (n - p + 1)
            assert fujimoto_closed_form(n, p, q) == 2 * q


def test_tuple_reading_differs_on_collinear_points():
    # the collinear set has coincident pair sums (0+3 = 1+2)
    pts = FrequencySet.collinear(3)
    assert perimeter_i(pts, 2, 4) == 8
    assert perimeter_i(pts, 2, 4, over="tuples") == 12


def test_slope_segment_case():
    pts = FrequencySet(((-1, 0), (1, 0)))
    assert numerical_order_slope(pts, 1) == pytest.approx(4 / (2 * math.pi), rel=1e-3)
    assert numerical_order_slope(pts, 2) == pytest.approx(0, abs=1e-9)


def test_slope_six_points():
    L = perimeter_sequence(SIX)
    assert numerical_order_slope(SIX, 2) == pytest.approx(L[2] / (2 * math.pi), rel=0.02)


def test_slope_of_higher_associated_curves():
    # the growth of the i-th associated curve follows the distinct-point reading
    pts = FrequencySet.collinear(3)
    for i, want in enumerate(perimeters_i(pts, 2), start=1):
        if i > 4:
            break
        got = numerical_order_slope(pts, 2, i=i) * 2 * math.pi
        assert got == pytest.approx(want, rel=1e-3)


def test_slope_arguments():
    with pytest.raises(InputError):
        numerical_order_slope(SIX, 2, 100, 50)
    with pytest.raises(InputError):
        numerical_order_slope(SIX, 2, samples=100)


def test_csv_parsing():
    pts = FrequencySet.from_csv("# six\n0,0\n1/2,1\n\n0.25,-3\n")
    assert pts.points == tuple(F((0, 0), ("1/2", 1), ("1/4", -3)))
    assert FrequencySet.from_csv(pts.to_csv()) == pts
    with pytest.raises(InputError):
        FrequencySet.from_csv("0,0\n0,0\n")
    with pytest.raises(InputError):
        FrequencySet.from_csv("1,2,3\n0,0\n")
