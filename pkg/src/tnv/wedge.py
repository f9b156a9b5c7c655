"""Formal wedge calculus and exact Pluecker coordinates of polynomial curves.

A wedge monomial x^(i_0) ^ ... ^ x^(i_{p-1}) is keyed by its index tuple.
Differentiating moves one ball of the Maya diagram one box to the right
(:func:`derive_formal`).  Repeating that i times from (0, ..., p-1) produces
every level-i tuple with coefficient f_lambda (:func:`derivative_syt`).

Curves are (n+1)-tuples of polynomials with rational coefficients.  All
arithmetic is exact (sympy ``Poly`` over QQ, ``fractions.Fraction`` for
echelon forms).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from sympy import QQ, Poly, Rational, symbols

from tnv.diagrams import YoungDiagram, all_tuples, bounded_partitions, graded_level, maya_to_young
from tnv.errors import DegenerateCurveError, InputError
from tnv.profile import phi
from tnv.tableaux import f_hook

__all__ = [
    "Z",
    "FormalWedge",
    "canonical_monomial",
    "derive_formal",
    "leibniz_derive",
    "derivative_syt",
    "PolyCurve",
    "StationaryProfile",
    "pluecker",
    "vanishing_order",
    "taylor_coefficients",
    "echelon",
    "normal_form",
    "stationary_indices",
    "d_of",
    "d_p",
    "d_convexity",
    "candidate_sets_V",
    "associated_orders",
    "verify_d_against_pluecker",
    "map_degree",
    "associated_degree",
]

Z = symbols("z")

# doubling stops here even if the curve still looks degenerate
TRUNCATION_HARD_CAP = 4096


# --------------------------------------------------------------------------
# formal wedges


def canonical_monomial(indices: Sequence[int]) -> tuple[int, tuple[int, ...] | None]:
    """Sort a wedge monomial; returns (sign, sorted tuple) or (0, None) on a repeat."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, None
    sign = 1
    # insertion sort, counting transpositions
    for a in range(1, len(idx)):
        b = a
        while b > 0 and idx[b - 1] > idx[b]:
            idx[b - 1], idx[b] = idx[b], idx[b - 1]
            sign = -sign
            b -= 1
    return sign, tuple(idx)


class FormalWedge:
    """Integer combination of wedge monomials, stored in canonical order."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None):
        clean: dict[tuple[int, ...], int] = {}
        for key, coef in (terms or {}).items():
            sign, canon = canonical_monomial(key)
            if sign == 0 or coef == 0:
                continue
            clean[canon] = clean.get(canon, 0) + sign * coef
        self.terms = {k: v for k, v in sorted(clean.items()) if v}

    @classmethod
    def identity(cls, p: int) -> "FormalWedge":
        return cls({tuple(range(p)): 1})

    def __eq__(self, other):
        if isinstance(other, FormalWedge):
            return self.terms == other.terms
        return NotImplemented

    def __add__(self, other: "FormalWedge") -> "FormalWedge":
        merged = dict(self.terms)
        for k, v in other.terms.items():
            merged[k] = merged.get(k, 0) + v
        return FormalWedge(merged)

    def __repr__(self):
        body = " + ".join(f"{v}*{k}" for k, v in self.terms.items()) or "0"
        return f"FormalWedge({body})"

    def __len__(self):
        return len(self.terms)

    def coefficient(self, sigma: Sequence[int]) -> int:
        return self.terms.get(tuple(sigma), 0)

    def derive(self, times: int = 1) -> "FormalWedge":
        w = self
        for _ in range(times):
            w = derive_formal(w)
        return w


def derive_formal(w: FormalWedge) -> FormalWedge:
    """Ball-shift rule: move any ball whose right neighbour box is empty."""
    out: dict[tuple[int, ...], int] = {}
    for sigma, coef in w.terms.items():
        p = len(sigma)
        for k in range(p):
            if k == p - 1 or sigma[k + 1] - sigma[k] >= 2:
                moved = sigma[:k] + (sigma[k] + 1,) + sigma[k + 1:]
                out[moved] = out.get(moved, 0) + coef
    return FormalWedge(out)


def leibniz_derive(w: FormalWedge) -> FormalWedge:
    """Product rule on every factor, then exterior-algebra normalization.

    Makes no use of the ball-shift shortcut; terms with a repeated factor are
    annihilated by :class:`FormalWedge` itself.
    """
    out: dict[tuple[int, ...], int] = {}
    for sigma, coef in w.terms.items():
        for k in range(len(sigma)):
            raw = list(sigma)
            raw[k] += 1
            sign, canon = canonical_monomial(raw)
            if sign:
                out[canon] = out.get(canon, 0) + sign * coef
    return FormalWedge(out)


def derivative_syt(p: int, i: int) -> FormalWedge:
    """i-th derivative of x ^ x' ^ ... ^ x^(p-1), written down directly.

    The level-i tuples are the partitions of i into at most p parts; each one
    carries the number of standard tableaux of its shape.
    """
    if p < 1 or i < 0:
        raise InputError("need p >= 1 and i >= 0")
    terms = {}
    for parts in bounded_partitions(i, p, i):
        lam = YoungDiagram(parts)
        sigma = tuple(lam[p - 1 - k] + k for k in range(p))
        terms[sigma] = f_hook(lam)
    return FormalWedge(terms)


# --------------------------------------------------------------------------
# polynomial curves


def _to_rational(value) -> Rational:
    if isinstance(value, str):
        value = Fraction(value)
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    return Rational(value)


def _poly(coeffs_ascending: Iterable) -> Poly:
    coeffs = [_to_rational(c) for c in coeffs_ascending] or [Rational(0)]
    return Poly(list(reversed(coeffs)), Z, domain=QQ)


def _fraction(c) -> Fraction:
    c = Rational(c)
    return Fraction(int(c.p), int(c.q))


@dataclass(frozen=True)
class PolyCurve:
    """Curve z -> (x_0(z), ..., x_n(z)) with exact rational polynomial components."""

    components: tuple[Poly, ...]

    def __post_init__(self):
        comps = tuple(c if isinstance(c, Poly) else _poly(c) for c in self.components)
        if not comps:
            raise InputError("a curve needs at least one component")
        if all(c.is_zero for c in comps):
            raise InputError("all components are zero")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_coefficients(cls, rows: Sequence[Sequence]) -> "PolyCurve":
        return cls(tuple(_poly(r) for r in rows))

    @classmethod
    def from_json(cls, text: str) -> "PolyCurve":
        """JSON array of ascending coefficient arrays; rationals may be "num/den" strings."""
        return cls.from_coefficients(json.loads(text))

    @classmethod
    def rational_normal(cls, n: int) -> "PolyCurve":
        return cls.from_coefficients([[0] * k + [1] for k in range(n + 1)])

    def to_json(self) -> str:
        return json.dumps([coefficient_strings(c) for c in self.components])

    @property
    def n(self) -> int:
        return len(self.components) - 1

    @property
    def max_degree(self) -> int:
        return max(c.degree() for c in self.components if not c.is_zero)

    def derivative_rows(self, count: int) -> list[list[Poly]]:
        rows = [list(self.components)]
        for _ in range(count - 1):
            rows.append([c.diff(Z) for c in rows[-1]])
        return rows


def coefficient_strings(poly: Poly) -> list[str]:
    return [str(_fraction(c)) for c in reversed(poly.all_coeffs())]


@dataclass(frozen=True)
class StationaryProfile:
    """Vanishing orders delta_0 < ... < delta_n of a normal form at z0."""

    delta: tuple[int, ...]
    z0: Fraction = Fraction(0)

    def __post_init__(self):
        delta = tuple(int(d) for d in self.delta)
        if not delta or delta[0] < 0 or any(a >= b for a, b in zip(delta, delta[1:])):
            raise InputError(f"orders must be non-negative and strictly increasing: {delta}")
        object.__setattr__(self, "delta", delta)

    @property
    def n(self) -> int:
        return len(self.delta) - 1

    @property
    def v(self) -> tuple[int, ...]:
        """Stationary indices v_1..v_n."""
        return tuple(b - a for a, b in zip(self.delta, self.delta[1:]))


def pluecker(curve: PolyCurve, p: int) -> dict[tuple[int, ...], Poly]:
    """All p x p minors of the first p derivative rows (the Wronskian when p = n+1).

    Minors are built bottom-up by expanding along the last row, sharing every
    sub-minor between index tuples.
    """
    n = curve.n
    if not 1 <= p <= n + 1:
        raise InputError(f"need 1 <= p <= n+1, got p={p}, n={n}")
    rows = curve.derivative_rows(p)
    minors: dict[tuple[int, ...], Poly] = {(): Poly(1, Z, domain=QQ)}
    for r in range(1, p + 1):
        row = rows[r - 1]
        nxt = {}
        for cols in combinations(range(n + 1), r):
            total = Poly(0, Z, domain=QQ)
            for t, j in enumerate(cols):
                entry = row[j]
                if entry.is_zero:
                    continue
                sub = minors[cols[:t] + cols[t + 1:]]
                if sub.is_zero:
                    continue
                term = entry * sub
                total = total + term if (r - 1 + t) % 2 == 0 else total - term
            nxt[cols] = total
        minors = nxt
    return minors


def taylor_coefficients(poly: Poly, z0, width: int | None = None) -> list[Fraction]:
    """Coefficients of poly expanded around z0, ascending, padded or cut to ``width``."""
    shifted = poly.shift(_to_rational(z0))
    coeffs = [_fraction(c) for c in reversed(shifted.all_coeffs())]
    if width is None:
        return coeffs
    return (coeffs + [Fraction(0)] * width)[:width]


def vanishing_order(poly, z0=0) -> int | float:
    """Order of vanishing at z0; ``math.inf`` for the zero polynomial."""
    if not isinstance(poly, Poly):
        poly = _poly(poly)
    if poly.is_zero:
        return math.inf
    for j, c in enumerate(taylor_coefficients(poly, z0)):
        if c != 0:
            return j
    return math.inf


def echelon(matrix: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Row echelon form with unit pivots, by exact Gaussian elimination.

    Returns the nonzero rows (ordered by pivot column) and the pivot columns.
    """
    rows = [list(map(Fraction, r)) for r in matrix]
    if not rows:
        return [], []
    width = len(rows[0])
    pivots: list[int] = []
    top = 0
    for col in range(width):
        pick = next((i for i in range(top, len(rows)) if rows[i][col] != 0), None)
        if pick is None:
            continue
        rows[top], rows[pick] = rows[pick], rows[top]
        lead = rows[top][col]
        rows[top] = [x / lead for x in rows[top]]
        for i in range(top + 1, len(rows)):
            factor = rows[i][col]
            if factor:
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[top])]
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows[:top], pivots


def _taylor_matrix(polys: Sequence[Poly], z0, width: int) -> list[list[Fraction]]:
    return [taylor_coefficients(f, z0, width) for f in polys]


def _full_echelon(curve: PolyCurve, z0, truncation: int | None):
    n = curve.n
    full = curve.max_degree + 1
    width = truncation if truncation is not None else curve.max_degree + n + 2
    if width < 1:
        raise InputError("truncation must be positive")
    while True:
        rows, pivots = echelon(_taylor_matrix(curve.components, z0, width))
        if len(pivots) == n + 1:
            return rows, pivots
        exhausted = width >= full
        if exhausted or width >= TRUNCATION_HARD_CAP:
            kind = "degenerate curve" if exhausted else "truncation insufficient"
            raise DegenerateCurveError(
                f"{kind}: found {len(pivots)} of {n + 1} pivots within {width} Taylor terms",
                rank=len(pivots),
                exhausted=exhausted,
            )
        width = min(2 * width, TRUNCATION_HARD_CAP)


def stationary_indices(curve: PolyCurve, z0=0, truncation: int | None = None) -> StationaryProfile:
    """Pivot columns of the echelon form of the Taylor matrix at z0.

    The default truncation is max degree + n + 2; an explicit one that is too
    short is doubled until the whole expansion is covered.
    """
    _, pivots = _full_echelon(curve, z0, truncation)
    return StationaryProfile(tuple(pivots), Fraction(_fraction(_to_rational(z0))))


def normal_form(curve: PolyCurve, z0=0) -> PolyCurve:
    """Change of coordinates making x_i = (z - z0)^delta_i + higher terms."""
    rows, _ = _full_echelon(curve, z0, curve.max_degree + 1)
    shift = _to_rational(z0)
    comps = []
    for row in rows:
        local = _poly(row)  # polynomial in (z - z0)
        comps.append(local.shift(-shift))
    return PolyCurve(tuple(comps))


def d_of(sigma: Sequence[int], delta: StationaryProfile | Sequence[int]) -> int:
    """Vanishing order predicted for the Pluecker coordinate sigma."""
    orders = delta.delta if isinstance(delta, StationaryProfile) else tuple(delta)
    if sigma and sigma[-1] >= len(orders):
        raise InputError(f"{tuple(sigma)} exceeds n = {len(orders) - 1}")
    return sum(orders[i] - k for k, i in enumerate(sigma))


def d_p(delta: StationaryProfile | Sequence[int], p: int) -> int:
    return d_of(tuple(range(p)), delta)


def d_via_profile(sigma: Sequence[int], delta: StationaryProfile) -> int:
    """d_p + phi_p(lambda(sigma)); must equal :func:`d_of`."""
    p, n = len(sigma), delta.n
    return d_p(delta, p) + phi(maya_to_young(sigma, p, n), p, n, delta.v)


def d_convexity(delta: StationaryProfile) -> list[int]:
    """Second differences d_{p-1} - 2 d_p + d_{p+1} for p = 1..n, each checked to be v_p - 1."""
    from tnv.errors import VerificationError

    n = delta.n
    seq = [0] + [d_p(delta, p) for p in range(1, n + 2)]
    diffs = [seq[p - 1] - 2 * seq[p] + seq[p + 1] for p in range(1, n + 1)]
    for p, value in enumerate(diffs, start=1):
        if value != delta.v[p - 1] - 1:
            raise VerificationError(f"second difference at p={p} is {value}, expected v_p - 1")
    return diffs


def candidate_sets_V(n: int, p: int, delta: StationaryProfile, i_max: int):
    """Candidate sets V(0..i_max) and the bounds they give on v_i of the p-th associated curve.

    V(i) is every tuple of level <= i whose d-value is not the minimum of an
    earlier V(j); all tied minimizers are removed together.  Returns a list
    of ``(frozenset V(i), bound_i)`` with bound_0 = d_p and
    ``bound_i = min_{V(i)} d - sum_{k<i} bound_k``.  An empty V(i) gives a
    ``None`` bound.
    """
    q = p * (n - p + 1)
    if not 1 <= i_max <= q:
        raise InputError(f"i_max must lie in 1..{q}")
    if delta.n != n:
        raise InputError("stationary profile has the wrong length")
    pool: list[tuple[tuple[int, ...], int]] = []
    removed: set[int] = set()
    out = []
    running = 0
    for i in range(i_max + 1):
        pool.extend((s, d_of(s, delta)) for s in graded_level(n, p, i))
        current = frozenset(s for s, d in pool if d not in removed)
        if not current:
            out.append((current, None))
            continue
        low = min(d for s, d in pool if s in current)
        bound = low - running
        running += bound
        removed.add(low)
        out.append((current, bound))
    return out


def associated_orders(curve: PolyCurve, p: int, z0=0) -> list[int]:
    """Echelon pivot orders of the p-th associated curve itself, in P^(C(n+1,p)-1)."""
    coords = pluecker(curve, p)
    polys = [coords[s] for s in sorted(coords)]
    width = max((f.degree() for f in polys if not f.is_zero), default=0) + 1
    _, pivots = echelon(_taylor_matrix(polys, z0, width))
    return pivots


@dataclass
class DReport:
    p: int
    delta: tuple[int, ...]
    rows: dict[tuple[int, ...], tuple[int | float, int]]

    @property
    def ok(self) -> bool:
        return all(order == d for order, d in self.rows.values())


def verify_d_against_pluecker(curve: PolyCurve, p: int, z0=0) -> DReport:
    """Compare actual vanishing orders of the normal-form Pluecker coordinates with d(sigma)."""
    prof = stationary_indices(curve, z0)
    nf = normal_form(curve, z0)
    coords = pluecker(nf, p)
    rows = {s: (vanishing_order(coords[s], z0), d_of(s, prof)) for s in all_tuples(curve.n, p)}
    return DReport(p, prof.delta, rows)


def map_degree(polys: Iterable[Poly]) -> int:
    """Degree of the map P^1 -> P^N given by polynomials, after removing their gcd."""
    polys = [f for f in polys if not f.is_zero]
    if not polys:
        raise InputError("all coordinates vanish")
    common = polys[0]
    for f in polys[1:]:
        common = common.gcd(f)
    return max(f.degree() for f in polys) - common.degree()


def associated_degree(curve: PolyCurve, p: int) -> int:
    return map_degree(pluecker(curve, p).values())
