"""Diagonal profiles n_lambda(k) and the weighted sums phi_p(lambda).

Drawn in Russian convention with its peak at x = p, the cell in 1-based row r
and column c of lambda is crossed by exactly one vertical line x = k, namely
``k = p - r + c``.  :func:`profile_geometric` counts cells that way.
:func:`profile_balls` gets the same numbers from the Maya diagram by
ball placement.  The two are computed independently and must agree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from tnv import _kernels
from tnv.diagrams import YoungDiagram, maya_to_young, validate_tuple
from tnv.errors import InputError

__all__ = [
    "Profile",
    "profile_geometric",
    "profile_balls",
    "profile_of_cells",
    "phi",
    "hooks",
    "hook_profiles",
    "second_difference_pairing",
    "profile_from_tuple",
]


@dataclass(frozen=True)
class Profile:
    """Sparse map k -> n_lambda(k), anchored at p; zero entries are not stored."""

    anchor: int
    values: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "values", {k: v for k, v in sorted(self.values.items()) if v})

    def __getitem__(self, k: int) -> int:
        return self.values.get(k, 0)

    def __eq__(self, other):
        if isinstance(other, Profile):
            return self.anchor == other.anchor and self.values == other.values
        return NotImplemented

    def __hash__(self):
        return hash((self.anchor, tuple(self.values.items())))

    def __add__(self, other: "Profile") -> "Profile":
        if self.anchor != other.anchor:
            raise InputError("profiles with different anchors")
        merged = dict(self.values)
        for k, v in other.values.items():
            merged[k] = merged.get(k, 0) + v
        return Profile(self.anchor, merged)

    @property
    def total(self) -> int:
        return sum(self.values.values())

    def support(self) -> tuple[int, ...]:
        return tuple(self.values)

    def dense(self, n: int) -> list[int]:
        """Values for k = 1..n as a list."""
        return [self[k] for k in range(1, n + 1)]

    def to_json(self) -> str:
        return json.dumps({str(k): v for k, v in self.values.items()})


def _fitted(lam, p: int, n: int) -> YoungDiagram:
    lam = lam if isinstance(lam, YoungDiagram) else YoungDiagram(tuple(lam))
    if not lam.fits(p, n):
        raise InputError(f"{lam.parts} does not fit in the {p} x {n - p + 1} rectangle")
    return lam


def profile_of_cells(cells: Iterable[tuple[int, int]], p: int) -> Profile:
    counts: dict[int, int] = {}
    for r, c in cells:
        k = p - r + c
        counts[k] = counts.get(k, 0) + 1
    return Profile(p, counts)


def profile_geometric(lam, p: int, n: int) -> Profile:
    return profile_of_cells(_fitted(lam, p, n).cells(), p)


def profile_balls(sigma: Sequence[int], p: int, n: int) -> Profile:
    sigma = validate_tuple(sigma, p, n)
    counts = _kernels.ball_profile(sigma, n)
    return Profile(p, {k: counts[k] for k in range(1, n + 1)})


def phi(lam, p: int, n: int, v: Sequence) -> int:
    """Dot product of the profile with stationary indices v_1..v_n."""
    if len(v) != n:
        raise InputError(f"need {n} stationary indices, got {len(v)}")
    prof = profile_geometric(lam, p, n)
    return sum(count * v[k - 1] for k, count in prof.values.items())


def hooks(lam) -> list[list[tuple[int, int]]]:
    """Split lambda into its diagonal hooks, each as a list of 1-based cells."""
    lam = lam if isinstance(lam, YoungDiagram) else YoungDiagram(tuple(lam))
    out = []
    d = 1
    while d <= len(lam) and lam[d - 1] >= d:
        arm = [(d, c) for c in range(d, lam[d - 1] + 1)]
        leg = [(r, d) for r in range(d + 1, len(lam) + 1) if lam[r - 1] >= d]
        out.append(arm + leg)
        d += 1
    return out


def hook_profiles(lam, p: int, n: int) -> list[Profile]:
    return [profile_of_cells(h, p) for h in hooks(_fitted(lam, p, n))]


def second_difference_pairing(prof: Profile, a: Sequence) -> object:
    """sum_k n(k) (a[k-1] - 2 a[k] + a[k+1]) for a sequence a_0..a_{n+1}."""
    total = 0
    for k, count in prof.values.items():
        total += count * (a[k - 1] - 2 * a[k] + a[k + 1])
    return total


def profile_from_tuple(sigma: Sequence[int], p: int, n: int) -> Profile:
    """Geometric profile of the Young diagram of sigma."""
    return profile_geometric(maya_to_young(sigma, p, n), p, n)
