"""Standard Young tableaux: three ways to count them, chains in the finite
Young lattice of the p x (n-p+1) rectangle, and the edge/profile sums built
from the products f_lambda * f_complement.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from tnv import _kernels
from tnv.diagrams import (
    YoungDiagram,
    all_tuples,
    complement,
    maya_to_young,
    rectangle,
)
from tnv.errors import InputError, ResourceCapError, cap_from_env

__all__ = [
    "StandardTableau",
    "f_hook",
    "f_recursive",
    "enumerate_syt",
    "chains_through",
    "chain_visits_bruteforce",
    "edge_sum",
    "edge_sum_closed_form",
    "tableau_profile_sum",
    "tableau_profile_closed_form",
    "SYT_CAP",
    "CHAIN_CAP",
]

SYT_CAP = 14
CHAIN_CAP = 16


def _diagram(lam) -> YoungDiagram:
    return lam if isinstance(lam, YoungDiagram) else YoungDiagram(tuple(lam))


@dataclass(frozen=True)
class StandardTableau:
    """Filling stored row by row; ``rows[r][c]`` is the label of cell (r+1, c+1)."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(tuple(len(r) for r in self.rows))

    @property
    def entries(self) -> dict[tuple[int, int], int]:
        return {
            (r, c): label
            for r, row in enumerate(self.rows, start=1)
            for c, label in enumerate(row, start=1)
        }

    def is_standard(self) -> bool:
        labels = sorted(x for row in self.rows for x in row)
        if labels != list(range(1, len(labels) + 1)):
            return False
        for r, row in enumerate(self.rows):
            if any(a >= b for a, b in zip(row, row[1:])):
                return False
            if r and any(self.rows[r - 1][c] >= x for c, x in enumerate(row)):
                return False
        return True

    def diagonal_sums(self, p: int) -> dict[int, int]:
        """n_T(k): total of the labels on diagonal k = p - r + c."""
        out: dict[int, int] = {}
        for (r, c), label in self.entries.items():
            k = p - r + c
            out[k] = out.get(k, 0) + label
        return out


def f_hook(lam) -> int:
    lam = _diagram(lam)
    hooks = prod(lam.hook_length(r, c) for r, c in lam.cells())
    return factorial(lam.size) // hooks


@lru_cache(maxsize=None)
def _f_rec(parts: tuple[int, ...]) -> int:
    if not parts:
        return 1
    lam = YoungDiagram(parts)
    return sum(_f_rec(lam.remove_corner(row).parts) for row in lam.corners())


def f_recursive(lam) -> int:
    """Corner-removal recurrence, memoized on the normalized part tuple."""
    return _f_rec(_diagram(lam).parts)


def enumerate_syt(lam, cap: int | None = None) -> list[StandardTableau]:
    """Every standard filling of lambda, by backtracking over label placements."""
    lam = _diagram(lam)
    cap = cap_from_env(SYT_CAP) if cap is None else cap
    if lam.size > cap:
        raise ResourceCapError(f"|lambda| = {lam.size} exceeds the enumeration cap {cap}")
    parts = lam.parts
    rows: list[list[int]] = [[] for _ in parts]
    out: list[StandardTableau] = []

    def place(label):
        if label > lam.size:
            out.append(StandardTableau(tuple(tuple(r) for r in rows)))
            return
        for r, length in enumerate(parts):
            c = len(rows[r])
            if c < length and (r == 0 or len(rows[r - 1]) > c):
                rows[r].append(label)
                place(label + 1)
                rows[r].pop()

    place(1)
    return out


def chains_through(lam, p: int, n: int) -> int:
    """Maximal chains from the empty diagram to the rectangle passing through lambda."""
    lam = _diagram(lam)
    return f_hook(lam) * f_hook(complement(lam, p, n))


def _rank_tuple(sigma) -> int:
    return sum(comb(entry, k + 1) for k, entry in enumerate(sigma))


def chain_visits_bruteforce(p: int, n: int, cap: int | None = None) -> tuple[int, dict[YoungDiagram, int]]:
    """Walk every maximal chain of the box one at a time.

    Returns the number of chains and, per diagram, how many of them pass
    through it.  Independent of the hook-length products.
    """
    rows, cols = p, n - p + 1
    cap = cap_from_env(CHAIN_CAP) if cap is None else cap
    if rows * cols > cap:
        raise ResourceCapError(f"rectangle area {rows * cols} exceeds the chain cap {cap}")
    chains, visits = _kernels.chain_shape_visits(rows, cols)
    by_shape = {
        maya_to_young(sigma, p, n): visits[_rank_tuple(sigma)] for sigma in all_tuples(n, p)
    }
    return chains, by_shape


_SIDES = ("empty", "ball")


def edge_sum_closed_form(side: str, p: int, n: int) -> Fraction:
    """(n-p+1)(q+1)/(n+1) f_rect on the empty side, p(q+1)/(n+1) f_rect on the ball side."""
    if side not in _SIDES:
        raise InputError(f"side must be one of {_SIDES}")
    q = p * (n - p + 1)
    factor = (n - p + 1) if side == "empty" else p
    return Fraction(factor * (q + 1), n + 1) * f_hook(rectangle(p, n))


def edge_sum(j: int, side: str, p: int, n: int, check: bool = True) -> int:
    """Sum of f_lambda(sigma) * f_complement over sigma with j absent ("empty") or present ("ball").

    With ``check`` a mismatch against the closed form is reported as a warning
    rather than an error.
    """
    if side not in _SIDES:
        raise InputError(f"side must be one of {_SIDES}")
    if not 1 <= p <= n:
        raise InputError(f"need 1 <= p <= n, got n={n}, p={p}")
    if not 0 <= j <= n:
        raise InputError(f"j must lie in 0..{n}")
    want_ball = side == "ball"
    total = 0
    for sigma in all_tuples(n, p):
        if (j in sigma) == want_ball:
            total += chains_through(maya_to_young(sigma, p, n), p, n)
    if check:
        expected = edge_sum_closed_form(side, p, n)
        if total != expected:
            warnings.warn(
                f"edge sum ({side}, j={j}, p={p}, n={n}) = {total} differs from closed form {expected}",
                stacklevel=2,
            )
    return total


def tableau_profile_closed_form(k: int, p: int, n: int) -> Fraction:
    q = p * (n - p + 1)
    f = f_hook(rectangle(p, n))
    if k <= n - p + 1:
        return Fraction(p * (q + 1), n + 1) * f * k
    return Fraction((n - p + 1) * (q + 1), n + 1) * f * (n + 1 - k)


def tableau_profile_sum(k: int, p: int, n: int, cap: int | None = None) -> int:
    """Sum over all SYT of the rectangle of the labels on diagonal k.

    Enumerates tableaux and checks the closed form.  Raises
    :class:`ResourceCapError`, carrying the unverified closed form as
    ``partial``, when the rectangle is too large to enumerate.
    """
    if not 1 <= p <= n:
        raise InputError(f"need 1 <= p <= n, got n={n}, p={p}")
    if not 1 <= k <= n:
        raise InputError(f"k must lie in 1..{n}")
    closed = tableau_profile_closed_form(k, p, n)
    cap = cap_from_env(CHAIN_CAP) if cap is None else cap
    rect = rectangle(p, n)
    if rect.size > cap:
        raise ResourceCapError(
            f"rectangle area {rect.size} exceeds the enumeration cap {cap}", partial=closed
        )
    _, sums = _kernels.syt_diagonal_stats(rect.parts, p)
    value = sums.get(k, 0)
    if value != closed:
        warnings.warn(
            f"tableau profile sum at k={k} (p={p}, n={n}) = {value} differs from closed form {closed}",
            stacklevel=2,
        )
    return value
