"""Both kernel backends must give identical answers."""

from math import comb

import pytest

from tnv import _kernels
from tnv._kernels import _pure
from tnv.diagrams import all_tuples


def test_active_backend_is_named():
    assert _kernels.BACKEND in ("cython", "python")
    assert "python" in _kernels.backends()


def test_ball_profile_example(kernel):
    counts = kernel.ball_profile((0, 1, 4, 7, 9, 10, 12), 13)
    assert counts[0] == 0
    assert sum(counts) == 0 + 0 + 2 + 4 + 5 + 5 + 6


@pytest.mark.parametrize("n", range(1, 8))
def test_ball_profile_parity(kernel, n):
    for p in range(1, n + 1):
        for sigma in all_tuples(n, p):
            assert list(kernel.ball_profile(sigma, n)) == _pure.ball_profile(sigma, n)


def test_syt_stats_rectangle(kernel):
    count, sums = kernel.syt_diagonal_stats((3, 3), 2)
    assert count == 5
    assert sums == {1: 14, 2: 28, 3: 42, 4: 21}


@pytest.mark.parametrize("parts", [(1,), (2, 1), (3, 2, 2), (4, 3, 1), (2, 2, 2, 1), (5, 1, 1)])
def test_syt_stats_parity(kernel, parts):
    for anchor in (len(parts), len(parts) + 2):
        assert kernel.syt_diagonal_stats(parts, anchor) == _pure.syt_diagonal_stats(parts, anchor)


def test_syt_stats_empty(kernel):
    assert kernel.syt_diagonal_stats((), 3) == (1, {})


@pytest.mark.parametrize("rows,cols", [(1, 1), (1, 4), (2, 2), (2, 3), (3, 3), (2, 5)])
def test_chain_visits_parity(kernel, rows, cols):
    chains, visits = kernel.chain_shape_visits(rows, cols)
    pure_chains, pure_visits = _pure.chain_shape_visits(rows, cols)
    assert chains == pure_chains
    assert list(visits) == pure_visits
    assert len(visits) == comb(rows + cols, rows)
    # every chain visits exactly area + 1 shapes
    assert sum(visits) == chains * (rows * cols + 1)
