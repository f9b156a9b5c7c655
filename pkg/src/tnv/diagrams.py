"""Index tuples, Maya diagrams and Young diagrams inside a p x (n-p+1) box.

An index tuple ``sigma`` is a strictly increasing tuple of p integers in
``0..n`` (0-based, as in every formula of the theory).  Its Maya diagram is a
row of n+1 boxes with a ball in box ``i`` for every ``i`` in ``sigma``; its
Young diagram is ``lambda_i = sigma[p-1-i] - (p-1-i)``.

Index tuples are plain Python tuples.  Young diagrams are :class:`YoungDiagram`
values whose trailing zero parts are dropped, so ``(3, 1, 0)`` and ``(3, 1)``
compare equal; the enclosing rectangle is always passed explicitly as
``(p, n)``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from tnv.errors import InputError, VerificationError

__all__ = [
    "YoungDiagram",
    "validate_tuple",
    "level",
    "all_tuples",
    "maya_string",
    "parse_maya",
    "maya_to_young",
    "young_to_maya",
    "bounded_partitions",
    "partition_count",
    "graded_level",
    "level_count_bound",
    "weighted_level_sum",
    "complement",
    "rectangle",
    "diagrams_in_rectangle",
]


@dataclass(frozen=True, order=True)
class YoungDiagram:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts):
            raise InputError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InputError(f"parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        # rows past the last nonzero part are empty
        if isinstance(i, int) and i >= len(self.parts):
            return 0
        return self.parts[i]

    def cells(self) -> Iterator[tuple[int, int]]:
        """1-based (row, column) pairs of every cell."""
        for r, length in enumerate(self.parts, start=1):
            for c in range(1, length + 1):
                yield r, c

    def conjugate(self) -> "YoungDiagram":
        if not self.parts:
            return self
        return YoungDiagram(
            tuple(sum(1 for x in self.parts if x > c) for c in range(self.parts[0]))
        )

    def hook_length(self, r: int, c: int) -> int:
        """Hook length of the 1-based cell (r, c)."""
        arm = self.parts[r - 1] - c
        leg = sum(1 for x in self.parts[r:] if x >= c)
        return arm + leg + 1

    def fits(self, p: int, n: int) -> bool:
        width = n - p + 1
        return len(self.parts) <= p and all(x <= width for x in self.parts)

    def corners(self) -> list[int]:
        """Rows (0-based) whose last cell can be removed."""
        parts = self.parts
        return [
            i for i, x in enumerate(parts)
            if x > 0 and (i + 1 == len(parts) or parts[i + 1] < x)
        ]

    def remove_corner(self, row: int) -> "YoungDiagram":
        parts = list(self.parts)
        parts[row] -= 1
        return YoungDiagram(tuple(parts))

    def addable_rows(self, max_rows=None, max_cols=None) -> list[int]:
        """Rows (0-based) where a cell can be appended, optionally within a box."""
        parts = self.parts
        rows = []
        for i in range(len(parts) + 1):
            cur = parts[i] if i < len(parts) else 0
            above = parts[i - 1] if i > 0 else None
            if above is not None and cur >= above:
                continue
            if max_rows is not None and i >= max_rows:
                continue
            if max_cols is not None and cur >= max_cols:
                continue
            rows.append(i)
        return rows

    def add_cell(self, row: int) -> "YoungDiagram":
        parts = list(self.parts)
        if row == len(parts):
            parts.append(0)
        parts[row] += 1
        return YoungDiagram(tuple(parts))

    def bracket(self) -> str:
        """Exponent notation, e.g. ``[3^2,1]``."""
        groups = [(k, len(list(g))) for k, g in itertools.groupby(self.parts)]
        return "[" + ",".join(f"{k}^{m}" if m > 1 else str(k) for k, m in groups) + "]"

    def to_json(self) -> str:
        return json.dumps(list(self.parts))

    @classmethod
    def from_json(cls, text: str) -> "YoungDiagram":
        return cls(tuple(json.loads(text)))


def _as_diagram(lam) -> YoungDiagram:
    return lam if isinstance(lam, YoungDiagram) else YoungDiagram(tuple(lam))


def validate_tuple(sigma: Sequence[int], p: int | None = None, n: int | None = None) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if p is not None and len(sigma) != p:
        raise InputError(f"expected {p} entries, got {sigma}")
    if sigma and sigma[0] < 0:
        raise InputError(f"negative entry in {sigma}")
    if any(a >= b for a, b in zip(sigma, sigma[1:])):
        raise InputError(f"entries must be strictly increasing: {sigma}")
    if n is not None and sigma and sigma[-1] > n:
        raise InputError(f"entry exceeds bound {n}: {sigma}")
    return sigma


def level(sigma: Sequence[int]) -> int:
    p = len(sigma)
    return sum(sigma) - p * (p - 1) // 2


def all_tuples(n: int, p: int) -> Iterator[tuple[int, ...]]:
    """Every element of binom([n+1], p), lexicographically."""
    return itertools.combinations(range(n + 1), p)


def maya_string(sigma: Sequence[int], n: int) -> str:
    """Render as n+1 characters: ``o`` for a ball, ``.`` for an empty box."""
    sigma = validate_tuple(sigma, n=n)
    balls = set(sigma)
    return "".join("o" if i in balls else "." for i in range(n + 1))


def parse_maya(text: str) -> tuple[int, ...]:
    if set(text) - {"o", "."}:
        raise InputError(f"Maya diagram may only contain 'o' and '.': {text!r}")
    return tuple(i for i, ch in enumerate(text) if ch == "o")


def maya_to_young(sigma: Sequence[int], p: int, n: int) -> YoungDiagram:
    sigma = validate_tuple(sigma, p, n)
    return YoungDiagram(tuple(sigma[p - 1 - i] - (p - 1 - i) for i in range(p)))


def young_to_maya(lam, p: int, n: int) -> tuple[int, ...]:
    lam = _as_diagram(lam)
    if not lam.fits(p, n):
        raise InputError(f"{lam.parts} does not fit in the {p} x {n - p + 1} rectangle")
    return tuple(lam[p - 1 - k] + k for k in range(p))


def bounded_partitions(s: int, max_parts: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Partitions of s with at most ``max_parts`` parts, each at most ``max_part``.

    Yielded in reverse lexicographic order of the part sequence.
    """
    if s == 0:
        yield ()
        return
    if max_parts <= 0 or max_part <= 0 or s > max_parts * max_part:
        return
    for first in range(min(s, max_part), 0, -1):
        if first * max_parts < s:
            break
        for rest in bounded_partitions(s - first, max_parts - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_count(s: int) -> int:
    """Unrestricted partition function p(s), by the coin-change recurrence."""
    if s < 0:
        return 0
    table = [1] + [0] * s
    for part in range(1, s + 1):
        for total in range(part, s + 1):
            table[total] += table[total - part]
    return table[s]


def _check_rank(n: int, p: int):
    if not 1 <= p <= n + 1:
        raise InputError(f"need 1 <= p <= n+1, got n={n}, p={p}")


@lru_cache(maxsize=4096)
def _graded_level_cached(n: int, p: int, s: int) -> tuple[tuple[int, ...], ...]:
    width = n - p + 1
    found = [young_to_maya(YoungDiagram(parts), p, n) for parts in bounded_partitions(s, p, width)]
    return tuple(sorted(found))


def graded_level(n: int, p: int, s: int, permissive: bool = False) -> list[tuple[int, ...]]:
    """All index tuples of level s, sorted lexicographically.

    Built from the bounded partitions of s, so the cost is proportional to the
    output rather than to C(n+1, p).
    """
    _check_rank(n, p)
    q = p * (n - p + 1)
    if not 0 <= s <= q:
        if permissive and s >= 0:
            return []
        raise InputError(f"level {s} outside 0..{q}")
    return list(_graded_level_cached(n, p, s))


def level_count_bound(n: int, p: int, s: int) -> tuple[int, int, bool]:
    """(level size, p(s), whether they agree); checks the iff s <= min(n-p+1, p)."""
    if s < 0:
        raise InputError("level must be non-negative")
    count = len(graded_level(n, p, s, permissive=True))
    value = partition_count(s)
    equal = count == value
    if count > value:
        raise VerificationError(f"level {s} has {count} > p({s}) = {value} elements")
    if equal != (s <= min(n - p + 1, p)):
        raise VerificationError(f"equality case mismatch at n={n}, p={p}, s={s}")
    return count, value, equal


def weighted_level_sum(n: int, p: int) -> int:
    """Sum of s * (size of level s), checked against p(n-p+1)/2 * C(n+1, p)."""
    if not 1 <= p <= n:
        raise InputError(f"need 1 <= p <= n, got n={n}, p={p}")
    q = p * (n - p + 1)
    total = sum(s * len(graded_level(n, p, s)) for s in range(1, q + 1))
    if 2 * total != q * comb(n + 1, p):
        raise VerificationError(f"weighted level sum {total} != {q}/2 * C({n + 1},{p})")
    return total


def complement(lam, p: int, n: int) -> YoungDiagram:
    lam = _as_diagram(lam)
    if not lam.fits(p, n):
        raise InputError(f"{lam.parts} does not fit in the {p} x {n - p + 1} rectangle")
    width = n - p + 1
    return YoungDiagram(tuple(width - lam[p - 1 - i] for i in range(p)))


def rectangle(p: int, n: int) -> YoungDiagram:
    return YoungDiagram((n - p + 1,) * p)


def diagrams_in_rectangle(p: int, n: int) -> Iterator[YoungDiagram]:
    """Every diagram in the box, by increasing size."""
    q = p * (n - p + 1)
    for s in range(q + 1):
        for parts in bounded_partitions(s, p, n - p + 1):
            yield YoungDiagram(parts)
