"""Balanced sums of profile-weighted second differences.

For a sequence a_0..a_{n+1} with zero ends, summing
``sum_k n_lambda(k) (a_{k-1} - 2 a_k + a_{k+1}) + a_p`` over every diagram in
the p x (n-p+1) box gives zero, both plainly and weighted by the number of
maximal chains through each diagram.  Everything here is evaluated literally,
in exact rationals unless a sequence is built in float mode.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from tnv.diagrams import all_tuples, graded_level, maya_to_young
from tnv.errors import InputError, ResourceCapError, VerificationError
from tnv.profile import Profile, profile_from_tuple, second_difference_pairing
from tnv.tableaux import chain_visits_bruteforce, chains_through

__all__ = [
    "FLOAT_TOL",
    "BoundarySequence",
    "random_sequence",
    "balanced_sum",
    "ak_coefficients",
    "alpha_by_profiles",
    "ak_identity_lhs",
    "edge_class_counts",
    "maya_pairing",
    "weighted_balanced_sum",
    "second_diff_sum",
    "BrillSegre",
    "brill_segre_check",
    "piene_degree",
    "consistent_brill_segre_input",
]

FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class BoundarySequence:
    """a_0..a_{n+1} with a_0 = 0 and, unless ``free_top``, a_{n+1} = 0."""

    values: tuple
    free_top: bool = False
    exact: bool = True

    def __post_init__(self):
        if len(self.values) < 3:
            raise InputError("need at least a_0, a_1, a_2")
        conv = Fraction if self.exact else float
        vals = tuple(conv(x) for x in self.values)
        if vals[0] != 0:
            raise InputError("a_0 must be 0")
        if not self.free_top and vals[-1] != 0:
            raise InputError("a_{n+1} must be 0")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_interior(cls, interior: Sequence, exact: bool = True) -> "BoundarySequence":
        return cls((0, *interior, 0), exact=exact)

    @property
    def n(self) -> int:
        return len(self.values) - 2

    def __getitem__(self, k):
        return self.values[k]

    def __len__(self):
        return len(self.values)

    def is_zero(self, value) -> bool:
        return value == 0 if self.exact else abs(value) <= FLOAT_TOL


def random_sequence(n: int, rng: random.Random, free_top: bool = False) -> BoundarySequence:
    """Random rationals with numerators in [-100, 100] and denominators in [1, 100]."""
    count = n + 1 if free_top else n
    interior = [Fraction(rng.randint(-100, 100), rng.randint(1, 100)) for _ in range(count)]
    tail = () if free_top else (0,)
    return BoundarySequence((0, *interior, *tail), free_top=free_top)


def _check_p(a: BoundarySequence, p: int):
    if not 1 <= p <= a.n:
        raise InputError(f"need 1 <= p <= n = {a.n}, got {p}")


@lru_cache(maxsize=256)
def _level_profiles(n: int, p: int, s: int):
    return tuple((sigma, profile_from_tuple(sigma, p, n)) for sigma in graded_level(n, p, s))


def _profiles(n: int, p: int, levels=None):
    q = p * (n - p + 1)
    for s in levels if levels is not None else range(q + 1):
        yield from _level_profiles(n, p, s)


def balanced_sum(a: BoundarySequence, p: int):
    """Double sum over levels s and tuples sigma of the pairing plus a_p."""
    _check_p(a, p)
    total = 0
    for _, prof in _profiles(a.n, p):
        total += second_difference_pairing(prof, a.values) + a[p]
    return total


def ak_coefficients(n: int, p: int) -> list[int]:
    """alpha_1..alpha_n: C(n,p) k up to p, C(n,p-1)(n+1-k) from p on."""
    return [comb(n, p) * k if k <= p else comb(n, p - 1) * (n + 1 - k) for k in range(1, n + 1)]


def alpha_by_profiles(n: int, p: int) -> list[int]:
    """The same coefficients read off by adding up every profile in the box."""
    acc = Profile(p, {})
    for _, prof in _profiles(n, p):
        acc = acc + prof
    return acc.dense(n)


def ak_identity_lhs(a: BoundarySequence, p: int):
    """sum_k alpha_k (a_{k-1} - 2 a_k + a_{k+1}) + C(n+1,p) a_p; zero when the identity holds."""
    _check_p(a, p)
    n = a.n
    lhs = 0
    for k, alpha in enumerate(ak_coefficients(n, p), start=1):
        lhs += alpha * (a[k - 1] - 2 * a[k] + a[k + 1])
    return lhs + comb(n + 1, p) * a[p]


def edge_class_counts(n: int, p: int) -> list[tuple[int, int]]:
    """Per box j, the number of tuples leaving it empty and the number with a ball in it.

    These are the path counts across each edge class; they come out as
    C(n,p) and C(n,p-1) for every j.
    """
    out = []
    for j in range(n + 1):
        empty = sum(1 for s in all_tuples(n, p) if j not in s)
        out.append((empty, comb(n + 1, p) - empty))
    return out


def maya_pairing(sigma: Sequence[int], p: int, a: Sequence):
    """Pairing read from the Maya diagram: empty low boxes and occupied high boxes."""
    held = set(sigma)
    n = len(a) - 2
    total = 0
    for j in range(p):
        if j not in held:
            total += a[j] - a[j + 1]
    for k in range(p, n + 1):
        if k in held:
            total += a[k + 1] - a[k]
    return total


@lru_cache(maxsize=64)
def _visits(p: int, n: int, cap):
    return chain_visits_bruteforce(p, n, cap)[1]


def weighted_balanced_sum(a: BoundarySequence, p: int, chain_cap: int | None = None, chains: bool = True):
    """Chain-weighted balanced sum, evaluated two ways.

    Returns ``(weighted, chain_form)``.  The first weights each diagram by
    f_lambda * f_complement.  The second walks every maximal chain of the box
    and adds the summand once per diagram visited.  When the box is too big
    to walk, the chain form alone raises :class:`ResourceCapError` with the
    weighted value as ``partial``.  With ``chains=False`` the walk is skipped
    and the second entry is None.
    """
    _check_p(a, p)
    n = a.n
    summands = {}
    weighted = 0
    for sigma, prof in _profiles(n, p):
        lam = maya_to_young(sigma, p, n)
        term = second_difference_pairing(prof, a.values) + a[p]
        summands[lam] = term
        weighted += chains_through(lam, p, n) * term
    if not chains:
        return weighted, None
    try:
        visits = _visits(p, n, chain_cap)
    except ResourceCapError as exc:
        raise ResourceCapError(str(exc), partial=weighted) from None
    chain_form = sum(count * summands[lam] for lam, count in visits.items())
    return weighted, chain_form


def second_diff_sum(a: BoundarySequence, p: int):
    """LHS - RHS of the free-top identity.

    LHS sums the pairing over levels s >= 1.  RHS is
    -C(n+1,p) a_p + C(n,p-1) a_{n+1}.
    """
    _check_p(a, p)
    n = a.n
    lhs = 0
    for _, prof in _profiles(n, p, range(1, p * (n - p + 1) + 1)):
        lhs += second_difference_pairing(prof, a.values)
    rhs = -comb(n + 1, p) * a[p] + comb(n, p - 1) * a[n + 1]
    return lhs - rhs


@dataclass(frozen=True)
class BrillSegre:
    residual: int  # sum (n-k+1) sigma_k - [n(n+1)(g-1) + (n+1) deg]
    nu: tuple[int, ...]  # nu_0..nu_{n+1} from the recursion
    piene: tuple[int, ...]  # nu_1..nu_n from the closed degree formula

    @property
    def top(self) -> int:
        return self.nu[-1]

    @property
    def generalized_residual(self) -> int:
        """residual + nu_{n+1}; vanishes for every input."""
        return self.residual + self.top

    @property
    def consistent(self) -> bool:
        return all(x >= 0 for x in self.nu[1:-1]) and self.top == 0


def piene_degree(p: int, g: int, degx: int, sigma: Sequence[int]) -> int:
    """p(deg + (p-1)(g-1)) - sum_{k<p} (p-k) sigma_k, with sigma indexed from 1."""
    return p * (degx + (p - 1) * (g - 1)) - sum((p - k) * sigma[k - 1] for k in range(1, p))


def brill_segre_check(g: int, degx: int, sigma: Sequence[int], n: int) -> BrillSegre:
    """Rebuild nu from nu_{k+1} = 2 nu_k - nu_{k-1} + 2g - 2 - sigma_k and test the degree formulas.

    ``residual`` is zero exactly when the reconstructed nu_{n+1} vanishes,
    which is the case for a genuine curve.
    """
    sigma = [int(x) for x in sigma]
    if len(sigma) != n:
        raise InputError(f"need sigma_1..sigma_{n}, got {len(sigma)} values")
    if n < 1 or g < 0 or degx < 1:
        raise InputError("need n >= 1, g >= 0, deg >= 1")
    nu = [0, degx]
    for k in range(1, n + 1):
        nu.append(2 * nu[k] - nu[k - 1] + 2 * g - 2 - sigma[k - 1])
    lhs = sum((n - k + 1) * sigma[k - 1] for k in range(1, n + 1))
    rhs = n * (n + 1) * (g - 1) + (n + 1) * degx
    piene = tuple(piene_degree(p, g, degx, sigma) for p in range(1, n + 1))
    if piene != tuple(nu[1 : n + 1]):
        raise VerificationError("closed degree formula disagrees with the recursion")
    return BrillSegre(lhs - rhs, tuple(nu), piene)


def consistent_brill_segre_input(n: int, rng: random.Random, max_tries: int = 1000):
    """Random (g, deg, sigma) with every nu_k >= 0 and nu_{n+1} = 0.

    sigma_1..sigma_{n-1} are drawn freely; sigma_n is whatever closes the
    recursion.  Draws that would need a negative sigma_n or nu_k are rejected.
    """
    for _ in range(max_tries):
        g = rng.randint(0, 6)
        degx = rng.randint(n, n + 4 * (g + 2) + 10)
        sigma = [rng.randint(0, 3) for _ in range(n - 1)]
        nu = [0, degx]
        for k in range(1, n):
            nu.append(2 * nu[k] - nu[k - 1] + 2 * g - 2 - sigma[k - 1])
        last = 2 * nu[n] - nu[n - 1] + 2 * g - 2
        if last >= 0 and all(x >= 0 for x in nu):
            return g, degx, sigma + [last]
    raise InputError("could not draw a consistent input")
