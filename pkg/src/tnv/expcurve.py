"""Convex geometry of exponential curves.

An exponential curve is fixed by n+1 distinct planar frequencies (a_i, b_i).
Its p-th associated curve grows like L_p r / (2 pi), where L_p is the
perimeter of the hull of all p-fold frequency sums.  The hulls of sums of i
distinct such p-fold sums give L_i^(p).

Perimeter convention: a segment counts twice its length and a point counts
zero, which is what the support-function (Cauchy) formula gives.
"""

from __future__ import annotations

import csv
import io
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from tnv.diagrams import all_tuples, graded_level
from tnv.errors import DegenerateCurveError, InputError, ResourceCapError, VerificationError, cap_from_env
from tnv.profile import profile_from_tuple

__all__ = [
    "TOL",
    "VERTEX_SET_CAP",
    "PRESETS",
    "FrequencySet",
    "ConvexPolygon",
    "vertex_set",
    "vertex_set_i",
    "subset_sums",
    "convex_hull",
    "perimeter",
    "perimeter_cauchy",
    "perimeter_sequence",
    "perimeter_i",
    "perimeters_i",
    "minkowski_sum",
    "minkowski_identity_check",
    "symmetry_check",
    "peculiar_middle",
    "fujimoto_sharpness",
    "fujimoto_closed_form",
    "numerical_order_slope",
    "random_frequency_set",
]

TOL = 1e-9
VERTEX_SET_CAP = 5_000_000

Point = tuple


@dataclass(frozen=True)
class FrequencySet:
    """n+1 distinct frequencies, stored exactly as Fractions."""

    points: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        pts = tuple((Fraction(a), Fraction(b)) for a, b in self.points)
        if len(pts) < 2:
            raise InputError("need at least two frequencies (n >= 1)")
        if len(set(pts)) != len(pts):
            raise InputError("frequencies must be pairwise distinct")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_csv(cls, text: str) -> "FrequencySet":
        """Lines ``a,b``; decimals or num/den rationals; blank lines and # comments ignored."""
        rows = []
        for row in csv.reader(io.StringIO(text)):
            if not row or not "".join(row).strip() or row[0].lstrip().startswith("#"):
                continue
            if len(row) != 2:
                raise InputError(f"expected 'a,b', got {row!r}")
            try:
                rows.append((Fraction(row[0].strip()), Fraction(row[1].strip())))
            except ValueError as exc:
                raise InputError(str(exc)) from None
        return cls(tuple(rows))

    @classmethod
    def collinear(cls, n: int) -> "FrequencySet":
        """Frequencies 0, 1, ..., n on the real axis."""
        return cls(tuple((k, 0) for k in range(n + 1)))

    def to_csv(self) -> str:
        return "".join(f"{a},{b}\n" for a, b in self.points)

    @property
    def n(self) -> int:
        return len(self.points) - 1

    @property
    def integral(self) -> bool:
        return all(x.denominator == 1 for pt in self.points for x in pt)

    def array(self) -> np.ndarray:
        return np.array([[float(a), float(b)] for a, b in self.points])


PRESETS = {
    "paper-n5": ((0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1)),
}


def random_frequency_set(n: int, rng, spread: int = 6) -> FrequencySet:
    """n+1 distinct integer points in [-spread, spread]^2."""
    chosen: set = set()
    while len(chosen) < n + 1:
        chosen.add((rng.randint(-spread, spread), rng.randint(-spread, spread)))
    return FrequencySet(tuple(sorted(chosen)))


def _add(u, v):
    return (u[0] + v[0], u[1] + v[1])


def _sigma_sums(points: FrequencySet, p: int) -> list[Point]:
    """Multiset of p-fold sums, one per index tuple, in lexicographic tuple order."""
    n = points.n
    if not 0 <= p <= n + 1:
        raise InputError(f"need 0 <= p <= n+1 = {n + 1}")
    out = []
    for sigma in all_tuples(n, p) if p else [()]:
        acc = (Fraction(0), Fraction(0))
        for k in sigma:
            acc = _add(acc, points.points[k])
        out.append(acc)
    return out


def vertex_set(points: FrequencySet, p: int) -> set[Point]:
    """V_p; V_0 is the origin and V_{n+1} the single total."""
    return set(_sigma_sums(points, p))


def subset_sums(values: Sequence[Point], i: int) -> set[Point]:
    """All sums of exactly i entries at distinct positions, by a layered subset-sum sweep."""
    layers: list[set] = [{(Fraction(0), Fraction(0))}] + [set() for _ in range(i)]
    for v in values:
        for c in range(i, 0, -1):
            if layers[c - 1]:
                layers[c] |= {_add(x, v) for x in layers[c - 1]}
    return layers[i]


def _summands(points: FrequencySet, p: int, over: str) -> list[Point]:
    if over == "tuples":
        return _sigma_sums(points, p)
    if over == "values":
        return sorted(set(_sigma_sums(points, p)))
    raise InputError("over must be 'tuples' or 'values'")


def vertex_set_i(points: FrequencySet, p: int, i: int, multiset: bool = False, cap: int | None = None,
                 over: str = "tuples"):
    """V_i^(p) by enumerating every i-subset of the p-fold sums.

    With ``over="tuples"`` the summands are indexed by distinct p-subsets, so
    a point of V_p reached by two tuples may be used twice; ``over="values"``
    takes distinct points of V_p.  The two agree whenever the p-fold sums are
    pairwise distinct.  Returns a set, or a Counter of all sums with
    ``multiset``.  Refuses when there are more than ``cap`` subsets.
    """
    sums = _summands(points, p, over)
    total = len(sums)
    if not 1 <= i <= total:
        raise InputError(f"i must lie in 1..{total}")
    cap = cap_from_env(VERTEX_SET_CAP) if cap is None else cap
    if comb(total, i) > cap:
        raise ResourceCapError(f"C({total},{i}) subsets exceeds the cap {cap}")
    out = Counter()
    zero = (Fraction(0), Fraction(0))
    for chosen in combinations(sums, i):
        acc = zero
        for pt in chosen:
            acc = _add(acc, pt)
        out[acc] += 1
    return out if multiset else set(out)


@dataclass(frozen=True)
class ConvexPolygon:
    """Counterclockwise hull vertices; one vertex is a point, two a segment."""

    vertices: tuple[Point, ...]

    def __len__(self):
        return len(self.vertices)

    @property
    def kind(self) -> str:
        return {1: "point", 2: "segment"}.get(len(self.vertices), "polygon")


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[Point]) -> ConvexPolygon:
    """Andrew's monotone chain; collinear boundary points are dropped."""
    pts = sorted(set(tuple(p) for p in points))
    if not pts:
        raise InputError("hull of an empty set")
    if len(pts) <= 2:
        return ConvexPolygon(tuple(pts))

    def half(seq):
        chain: list = []
        for pt in seq:
            while len(chain) >= 2 and _cross(chain[-2], chain[-1], pt) <= 0:
                chain.pop()
            chain.append(pt)
        return chain

    lower, upper = half(pts), half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull = hull[:1]
    return ConvexPolygon(tuple(hull))


def perimeter(poly: ConvexPolygon) -> float:
    v = [(float(x), float(y)) for x, y in poly.vertices]
    if len(v) == 1:
        return 0.0
    if len(v) == 2:
        return 2 * math.dist(v[0], v[1])
    return math.fsum(math.dist(v[k], v[(k + 1) % len(v)]) for k in range(len(v)))


def perimeter_cauchy(points: Iterable[Point], samples: int = 4096) -> float:
    """Integral of the support function over the circle, by the trapezoid rule."""
    arr = np.array([[float(x), float(y)] for x, y in points])
    theta = np.linspace(0.0, 2 * np.pi, samples, endpoint=False)
    dirs = np.stack([np.cos(theta), np.sin(theta)], axis=1)
    support = (dirs @ arr.T).max(axis=1)
    return float(support.sum() * (2 * np.pi / samples))


def perimeter_sequence(points: FrequencySet) -> list[float]:
    """L_0..L_{n+1}; checks the ends vanish and the second differences are non-positive."""
    n = points.n
    L = [perimeter(convex_hull(vertex_set(points, k))) for k in range(n + 2)]
    if L[0] != 0 or L[-1] != 0:
        raise VerificationError("end perimeters must vanish")
    for k in range(1, n + 1):
        if L[k - 1] - 2 * L[k] + L[k + 1] > TOL:
            raise VerificationError(f"perimeter sequence not concave at k={k}")
    return L


def _sweep_hull_vertices(values: np.ndarray) -> list[np.ndarray]:
    """Candidate vertices of the hull of i-fold distinct sums, for every i at once.

    Between two consecutive directions perpendicular to a pairwise difference
    the order of the projections is fixed, so one direction per arc yields
    every extreme point.  Entry i-1 of the result holds the candidates for i.
    """
    N = len(values)
    fvals = values.astype(float)
    diffs = (fvals[None, :, :] - fvals[:, None, :])[np.triu_indices(N, 1)]
    diffs = diffs[np.any(diffs != 0, axis=1)]
    if len(diffs):
        base = np.arctan2(diffs[:, 1], diffs[:, 0])
        crit = np.mod(np.concatenate([base + np.pi / 2, base - np.pi / 2]), 2 * np.pi)
        crit = np.unique(np.round(crit, 12))
        nxt = np.append(crit[1:], crit[0] + 2 * np.pi)
        theta = (crit + nxt) / 2
    else:
        theta = np.array([0.0])
    dirs = np.stack([np.cos(theta), np.sin(theta)], axis=1)
    order = np.argsort(-(dirs @ fvals.T), axis=1, kind="stable")
    cums = np.cumsum(values[order], axis=1)  # shape (directions, N, 2)
    return [cums[:, i - 1, :] for i in range(1, N + 1)]


def _exact_values(points: FrequencySet, p: int, over: str) -> np.ndarray:
    sums = _summands(points, p, over)
    if points.integral:
        return np.array([[int(a), int(b)] for a, b in sums], dtype=np.int64)
    return np.array([[float(a), float(b)] for a, b in sums])


def perimeters_i(points: FrequencySet, p: int, over: str = "values") -> list[float]:
    """L_i^(p) for every admissible i, all from one direction sweep.

    The default takes sums of distinct points of V_p: those are the
    frequencies of the i-th associated curve of E^(p) even when several index
    tuples share a sum.  ``over="tuples"`` follows the tuple-indexed set.
    """
    values = _exact_values(points, p, over)
    cands = _sweep_hull_vertices(values)
    return [perimeter(convex_hull(map(tuple, c.tolist()))) for c in cands]


def perimeter_i(points: FrequencySet, p: int, i: int, over: str = "values") -> float:
    total = len(_summands(points, p, over))
    if not 1 <= i <= total:
        raise InputError(f"i must lie in 1..{total} for these frequencies")
    return perimeters_i(points, p, over)[i - 1]


def minkowski_sum(a: Iterable[Point], b: Iterable[Point]) -> set[Point]:
    b = list(b)
    return {_add(x, y) for x in a for y in b}


@dataclass
class MinkowskiReport:
    p: int
    sets_equal: bool
    left: float  # L_{p-1} + L_{p+1}
    right: float  # L_2^(p)

    @property
    def ok(self) -> bool:
        return self.sets_equal and abs(self.left - self.right) <= TOL


def minkowski_identity_check(points: FrequencySet, p: int) -> MinkowskiReport:
    """V_{p-1} + V_{p+1} against V_2^(p): exact set equality plus the perimeter identity."""
    n = points.n
    if not 1 <= p <= n:
        raise InputError(f"need 1 <= p <= n = {n}")
    if comb(n + 1, p) < 2:
        raise InputError("V_2^(p) needs at least two index tuples")
    lhs = minkowski_sum(vertex_set(points, p - 1), vertex_set(points, p + 1))
    rhs = subset_sums(_sigma_sums(points, p), 2)
    L_lo = perimeter(convex_hull(vertex_set(points, p - 1)))
    L_hi = perimeter(convex_hull(vertex_set(points, p + 1)))
    return MinkowskiReport(p, lhs == rhs, L_lo + L_hi, perimeter(convex_hull(rhs)))


def symmetry_check(points: FrequencySet) -> list[tuple[int, float, float, bool]]:
    """(p, L_p, L_{n-p+1}, equal) for p = 0..n+1."""
    L = perimeter_sequence(points)
    n = points.n
    return [(p, L[p], L[n - p + 1], abs(L[p] - L[n - p + 1]) <= TOL) for p in range(n + 2)]


@dataclass
class PeculiarReport:
    p: int
    i: int
    lower: float  # L_p
    middle: float
    upper: float  # L_i^(p)
    argmax: list = field(default_factory=list)  # maximizing tuple per level s = 1..i-1

    @property
    def left_ok(self) -> bool:
        return self.lower <= self.middle + TOL

    @property
    def right_ok(self) -> bool:
        return self.middle <= self.upper + TOL

    @property
    def ok(self) -> bool:
        return self.left_ok and self.right_ok


def _middle(L: Sequence[float], n: int, p: int, i: int):
    total = i * L[p]
    picks = []
    for s in range(1, i):
        best, arg = None, None
        for sigma in graded_level(n, p, s):
            prof = profile_from_tuple(sigma, p, n)
            val = math.fsum(c * (L[k - 1] - 2 * L[k] + L[k + 1]) for k, c in prof.values.items())
            if best is None or val > best:
                best, arg = val, sigma
        total += best
        picks.append(arg)
    return total, picks


def peculiar_middle(points: FrequencySet, p: int, i: int, L: Sequence[float] | None = None,
                    upper: float | None = None) -> PeculiarReport:
    """Middle term of the chain L_p <= middle <= L_i^(p), with both ends."""
    n = points.n
    if not 1 <= p <= n:
        raise InputError(f"need 1 <= p <= n = {n}")
    q = p * (n - p + 1)
    if not 1 <= i <= q:
        raise InputError(f"i must lie in 1..{q}")
    L = perimeter_sequence(points) if L is None else L
    middle, picks = _middle(L, n, p, i)
    if upper is None:
        upper = perimeter_i(points, p, i)
    return PeculiarReport(p, i, L[p], middle, upper, picks)


def fujimoto_closed_form(n: int, p: int, i: int) -> int:
    return 2 * i * (n * p - p * p + p - i + 1)


def fujimoto_sharpness(n: int, p: int, i: int) -> PeculiarReport:
    """Peculiar chain for the collinear frequencies 0..n, where the right side is tight."""
    return peculiar_middle(FrequencySet.collinear(n), p, i)


def _log_vandermonde(ws: Sequence[complex]) -> float:
    total = 0.0
    for a, b in combinations(ws, 2):
        gap = abs(b - a)
        if gap == 0:
            return -math.inf
        total += math.log(gap)
    return total


SLOPE_TERM_CAP = 20_000


def _order_terms(points: FrequencySet, p: int, i: int):
    """(log coefficient, frequency sum) for each exponential in |E^(p)_i|^2.

    Tuples with equal frequency sums are merged: X^(p) then lies in the span
    of one vector per distinct sum, and those vectors are mutually orthogonal.
    """
    n = points.n
    ws = [complex(float(a), -float(b)) for a, b in points.points]
    weight: dict[Point, float] = {}
    for sigma in all_tuples(n, p):
        lc = _log_vandermonde([ws[k] for k in sigma])
        if not math.isfinite(lc) or lc < -300:
            raise DegenerateCurveError(
                f"Pluecker coefficient for {sigma} vanishes; perturb the frequencies slightly",
                rank=0,
                exhausted=False,
            )
        total = (sum(points.points[k][0] for k in sigma), sum(points.points[k][1] for k in sigma))
        weight[total] = weight.get(total, 0.0) + math.exp(2 * lc)
    values = sorted(weight)
    if not 1 <= i <= len(values):
        raise InputError(f"i must lie in 1..{len(values)} for these frequencies")
    if comb(len(values), i) > SLOPE_TERM_CAP:
        raise ResourceCapError(f"C({len(values)},{i}) exponentials exceeds {SLOPE_TERM_CAP}")
    logc, sums = [], []
    for chosen in combinations(values, i):
        vz = [complex(float(a), -float(b)) for a, b in chosen]
        logc.append(2 * _log_vandermonde(vz) + sum(math.log(weight[v]) for v in chosen))
        sums.append([float(sum(v[0] for v in chosen)), float(sum(v[1] for v in chosen))])
    return np.array(logc), np.array(sums)


def numerical_order_slope(points: FrequencySet, p: int, r1: float = 50.0, r2: float = 100.0,
                          samples: int = 4096, i: int = 1) -> float:
    """Slope of m(r) = (1/4 pi) int log |E^(p)_i(r e^{i theta})|^2 d theta between r1 and r2.

    For i = 1, |E^(p)(z)|^2 = sum_sigma |c_sigma|^2 exp(2 Re(w_sigma z)) with
    w = a - i b and c_sigma the Vandermonde product over sigma.  Larger i
    takes the i-th associated curve of E^(p).  The theta integral uses the
    trapezoid rule and log-sum-exp.
    """
    n = points.n
    if not 1 <= p <= n + 1:
        raise InputError(f"need 1 <= p <= n+1 = {n + 1}")
    if not 0 < r1 < r2:
        raise InputError("need 0 < r1 < r2")
    if samples < 256:
        raise InputError("use at least 256 samples")
    logc, AB = _order_terms(points, p, i)
    theta = np.linspace(0.0, 2 * np.pi, samples, endpoint=False)
    proj = np.cos(theta)[:, None] * AB[None, :, 0] + np.sin(theta)[:, None] * AB[None, :, 1]

    def m(r):
        expo = logc[None, :] + 2 * r * proj
        top = expo.max(axis=1)
        lse = top + np.log(np.exp(expo - top[:, None]).sum(axis=1))
        return 0.5 * float(lse.mean())

    return (m(r2) - m(r1)) / (r2 - r1)
