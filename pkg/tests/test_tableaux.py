import warnings
from fractions import Fraction

import pytest

from tnv.diagrams import YoungDiagram, bounded_partitions, diagrams_in_rectangle, rectangle
from tnv.errors import InputError, ResourceCapError
from tnv.tableaux import (
    StandardTableau,
    chain_visits_bruteforce,
    chains_through,
    edge_sum,
    edge_sum_closed_form,
    enumerate_syt,
    f_hook,
    f_recursive,
    tableau_profile_closed_form,
    tableau_profile_sum,
)


def test_small_counts():
    assert f_hook(YoungDiagram((3, 3, 1))) == 21
    assert f_hook(YoungDiagram((4, 3))) == 14
    assert f_hook(YoungDiagram((3, 3))) == 5
    assert f_hook(YoungDiagram(())) == 1


@pytest.mark.parametrize("size", range(0, 10))
def test_three_counts_agree(size):
    for parts in bounded_partitions(size, size, size):
        lam = YoungDiagram(parts)
        tableaux = enumerate_syt(lam)
        assert all(t.is_standard() for t in tableaux)
        assert f_hook(lam) == f_recursive(lam) == len(tableaux)


def test_enumeration_cap():
    with pytest.raises(ResourceCapError):
        enumerate_syt(YoungDiagram((5, 5, 5)), cap=14)


def test_tableau_checks_and_diagonals():
    t = StandardTableau(((1, 2, 4), (3, 5)))
    assert t.is_standard()
    assert t.shape == YoungDiagram((3, 2))
    assert t.diagonal_sums(2) == {2: 1 + 5, 3: 2, 4: 4, 1: 3}
    assert StandardTableau(((1, 3), (2, 4), (5,))).is_standard()
    assert not StandardTableau(((2, 1),)).is_standard()


@pytest.mark.parametrize("p,n", [(1, 3), (2, 4), (2, 5), (3, 5), (3, 6), (4, 7)])
def test_chain_counts(p, n):
    chains, visits = chain_visits_bruteforce(p, n)
    q = p * (n - p + 1)
    assert chains == f_hook(rectangle(p, n))
    for lam in diagrams_in_rectangle(p, n):
        assert visits[lam] == chains_through(lam, p, n)
    assert sum(visits.values()) == (q + 1) * chains


def test_chain_cap():
    with pytest.raises(ResourceCapError):
        chain_visits_bruteforce(4, 8)


def test_small_edge_sums():
    assert [edge_sum(j, "empty", 2, 4) for j in range(5)] == [21] * 5
    assert [edge_sum(j, "ball", 2, 4) for j in range(5)] == [14] * 5


@pytest.mark.parametrize("n", range(1, 8))
def test_edge_sums_do_not_depend_on_j(n):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        for p in range(1, n + 1):
            for side in ("empty", "ball"):
                want = edge_sum_closed_form(side, p, n)
                assert all(edge_sum(j, side, p, n) == want for j in range(n + 1))


def test_edge_sum_arguments():
    with pytest.raises(InputError):
        edge_sum(0, "middle", 2, 4)
    with pytest.raises(InputError):
        edge_sum(6, "ball", 2, 4)


def test_rectangle_profile_sums():
    assert [tableau_profile_sum(k, 2, 4) for k in range(1, 5)] == [14, 28, 42, 21]
    assert tableau_profile_closed_form(2, 2, 4) == Fraction(28)


@pytest.mark.parametrize("p,n", [(1, 4), (2, 5), (3, 5), (3, 6), (2, 7)])
def test_rectangle_profile_closed_form(p, n):
    for k in range(1, n + 1):
        assert tableau_profile_sum(k, p, n) == tableau_profile_closed_form(k, p, n)


def test_profile_sum_cap_carries_closed_form():
    with pytest.raises(ResourceCapError) as info:
        tableau_profile_sum(3, 4, 8)
    assert info.value.partial == tableau_profile_closed_form(3, 4, 8)


def test_env_cap(monkeypatch):
    monkeypatch.setenv("TNV_MAX_CELLS", "3")
    with pytest.raises(ResourceCapError):
        enumerate_syt(YoungDiagram((2, 2)))
