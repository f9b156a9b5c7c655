"""Batteries of checks behind ``tnv run``; each one fills a VerificationReport."""

from __future__ import annotations

import math
import random
from fractions import Fraction
from math import comb, sqrt

from tnv import diagrams as dg
from tnv import expcurve as ec
from tnv import sums as sm
from tnv import tableaux as tb
from tnv import wedge as wd
from tnv.errors import InputError, VerificationError, cap_from_env
from tnv.profile import profile_balls, profile_from_tuple
from tnv.report import VerificationReport

SUITES = ("diagrams", "tableaux", "sums", "wedge", "expcurve")
SLOPE_REL_TOL = 0.02

# closed forms for the six-point preset, keyed by quantity name
_R2, _R5 = sqrt(2), sqrt(5)
PAPER_N5_VALUES = {
    "L_1": 2 + 3 * _R2,
    "L_2": 4 + _R2 + 2 * _R5,
    "L_3": 8 + 2 * _R2,
    "L_2^(2)": 10 + 5 * _R2,
    "L_3^(2)": 8 + 4 * _R2 + 4 * _R5,
    "middle(p=2,i=3)": 8 + 7 * _R2 + 2 * _R5,
}


def _ranks(params, default_n):
    n = int(params.get("n") or default_n)
    if n < 1:
        raise InputError("n must be at least 1")
    p = params.get("p")
    ps = [int(p)] if p else list(range(1, n + 1))
    for q in ps:
        if not 1 <= q <= n:
            raise InputError(f"need 1 <= p <= n, got p={q}, n={n}")
    return n, ps


def _guard(report, inputs, fn):
    """Run fn; a VerificationError becomes a failing case instead of a crash."""
    try:
        return fn()
    except VerificationError as exc:
        report.add(inputs, str(exc), None, None, passed=False)
        return None


def run_diagrams(params, report):
    n_max, _ = _ranks(params, 6)
    for n in range(1, n_max + 1):
        for p in range(1, n + 1):
            q = p * (n - p + 1)
            trips = all(dg.young_to_maya(dg.maya_to_young(s, p, n), p, n) == s for s in dg.all_tuples(n, p))
            report.add({"check": "maya-round-trip", "n": n, "p": p}, trips, True, 0, passed=trips)
            brute = {}
            for s in dg.all_tuples(n, p):
                brute.setdefault(dg.level(s), set()).add(s)
            levels_ok = all(set(dg.graded_level(n, p, s)) == brute.get(s, set()) for s in range(q + 1))
            report.add({"check": "graded-level", "n": n, "p": p}, levels_ok, True, 0, passed=levels_ok)
            for s in range(q + 1):
                got = _guard(report, {"check": "level-bound", "n": n, "p": p, "s": s},
                             lambda: dg.level_count_bound(n, p, s))
                if got is not None:
                    report.add({"check": "level-bound", "n": n, "p": p, "s": s}, list(got), None, 0)
            total = _guard(report, {"check": "gauss-sum", "n": n, "p": p}, lambda: dg.weighted_level_sum(n, p))
            if total is not None:
                expected = Fraction(q * comb(n + 1, p), 2)
                report.add({"check": "gauss-sum", "n": n, "p": p}, total, expected, total - expected)
            mismatches = sum(
                profile_balls(s, p, n) != profile_from_tuple(s, p, n) for s in dg.all_tuples(n, p)
            )
            report.add({"check": "profile-oracles", "n": n, "p": p}, mismatches, 0, mismatches)


def run_tableaux(params, report):
    n = int(params.get("n") or 4)
    p = int(params.get("p") or 2)
    if not 1 <= p <= n:
        raise InputError(f"need 1 <= p <= n, got p={p}, n={n}")
    for side in ("empty", "ball"):
        expected = tb.edge_sum_closed_form(side, p, n)
        for j in range(n + 1):
            value = tb.edge_sum(j, side, p, n, check=False)
            report.add({"check": "edge-sum", "n": n, "p": p, "side": side, "j": j}, value, expected, value - expected)
    for k in range(1, n + 1):
        expected = tb.tableau_profile_closed_form(k, p, n)
        value = tb.tableau_profile_sum(k, p, n)
        report.add({"check": "tableau-profile", "n": n, "p": p, "k": k}, value, expected, value - expected)
    size_cap = min(tb.SYT_CAP, 10)
    for size in range(size_cap + 1):
        for parts in dg.bounded_partitions(size, size, size):
            lam = dg.YoungDiagram(parts)
            values = [tb.f_hook(lam), tb.f_recursive(lam), len(tb.enumerate_syt(lam))]
            report.add({"check": "syt-count", "shape": list(parts)}, values, values[0], max(values) - min(values))


def run_sums(params, report):
    n, ps = _ranks(params, 6)
    trials = int(params.get("trials") or 100)
    rng = random.Random(report.seed)
    for p in ps:
        alpha = sm.alpha_by_profiles(n, p)
        want = sm.ak_coefficients(n, p)
        report.add({"check": "alpha", "n": n, "p": p}, alpha, want, sum(abs(a - b) for a, b in zip(alpha, want)))
        counts = sm.edge_class_counts(n, p)
        bad = sum(c != (comb(n, p), comb(n, p - 1)) for c in counts)
        report.add({"check": "edge-class-counts", "n": n, "p": p}, counts[0], [comb(n, p), comb(n, p - 1)], bad)
        walk = p * (n - p + 1) <= cap_from_env(tb.CHAIN_CAP)
        for t in range(trials):
            a = sm.random_sequence(n, rng)
            base = {"n": n, "p": p, "trial": t}
            r = sm.balanced_sum(a, p)
            report.add({"check": "balanced", **base}, r, 0, r)
            r = sm.ak_identity_lhs(a, p)
            report.add({"check": "ak-identity", **base}, r, 0, r)
            weighted, chain = sm.weighted_balanced_sum(a, p, chains=walk)
            report.add({"check": "weighted", **base}, weighted, 0, weighted)
            if walk:
                report.add({"check": "chain-form", **base}, chain, weighted, chain - weighted)
            free = sm.random_sequence(n, rng, free_top=True)
            r = sm.second_diff_sum(free, p)
            report.add({"check": "free-top", **base}, r, 0, r)
    for t in range(trials):
        g, degx, sig = sm.consistent_brill_segre_input(n, rng)
        res = sm.brill_segre_check(g, degx, sig, n)
        report.add({"check": "brill-segre", "n": n, "trial": t, "g": g, "deg": degx, "sigma": sig},
                   res.residual, 0, res.residual)


def run_wedge(params, report):
    n, _ = _ranks(params, 4)
    i_max = int(params.get("i") or 8)
    for p in range(1, min(n + 1, 4) + 1):
        ball = wl = wd.FormalWedge.identity(p)
        for i in range(1, i_max + 1):
            ball, wl = wd.derive_formal(ball), wd.leibniz_derive(wl)
            direct = wd.derivative_syt(p, i)
            ok = ball == wl == direct
            report.add({"check": "derivative", "p": p, "i": i}, len(direct), len(direct), 0 if ok else 1, passed=ok)
    for m in range(1, n + 1):
        curve = wd.PolyCurve.rational_normal(m)
        for p in range(1, m + 1):
            deg = wd.associated_degree(curve, p)
            want = p * (m - p + 1)
            report.add({"check": "rnc-degree", "n": m, "p": p}, deg, want, deg - want)
    curve = params.get("curve")
    if curve is None:
        # stationary orders (0, 1, 3, ..) at the origin
        curve = wd.PolyCurve.from_coefficients(
            [[0] * (k * (k + 1) // 2) + [1, k + 1] for k in range(n + 1)]
        )
    z0 = Fraction(params.get("z0") or 0)
    prof = wd.stationary_indices(curve, z0)
    conv = _guard(report, {"check": "d-convexity"}, lambda: wd.d_convexity(prof))
    if conv is not None:
        report.add({"check": "d-convexity", "delta": list(prof.delta)}, conv, [v - 1 for v in prof.v], 0)
    for p in range(1, curve.n + 1):
        rep = wd.verify_d_against_pluecker(curve, p, z0)
        worst = 0 if rep.ok else 1
        report.add({"check": "d-vs-pluecker", "p": p, "delta": list(prof.delta)},
                   {",".join(map(str, s)): o for s, (o, _) in rep.rows.items()},
                   {",".join(map(str, s)): d for s, (_, d) in rep.rows.items()}, worst)
        q = p * (curve.n - p + 1)
        i_max = min(curve.n - p + 1, p, q)
        bounds = wd.candidate_sets_V(curve.n, p, prof, i_max)
        orders = wd.associated_orders(curve, p, z0)
        running, violations = 0, 0
        for idx, (_, b) in enumerate(bounds):
            if b is None or idx >= len(orders):
                continue
            running += b
            violations += orders[idx] > running
        report.add({"check": "v-bounds", "p": p}, orders[: len(bounds)], [b for _, b in bounds], violations)


def _points(params):
    if params.get("points") is not None:
        return params["points"], None
    preset = params.get("preset") or "paper-n5"
    if preset not in ec.PRESETS:
        raise InputError(f"unknown preset {preset!r}; known: {sorted(ec.PRESETS)}")
    return ec.FrequencySet(ec.PRESETS[preset]), preset


def run_expcurve(params, report):
    pts, preset = _points(params)
    n = pts.n
    L = ec.perimeter_sequence(pts)
    inputs = {"preset": preset} if preset else {"points": [list(map(str, pt)) for pt in pts.points]}
    for k in range(n + 2):
        want = PAPER_N5_VALUES.get(f"L_{k}") if preset == "paper-n5" else None
        report.add({**inputs, "check": "perimeter", "k": k}, L[k], want,
                   0 if want is None else L[k] - want, ec.TOL)
    for p, lo, hi, ok in ec.symmetry_check(pts):
        report.add({**inputs, "check": "symmetry", "p": p}, lo, hi, lo - hi, ec.TOL)
    for p in range(1, n + 1):
        Li = ec.perimeters_i(pts, p)
        if comb(n + 1, p) >= 2:
            mk = ec.minkowski_identity_check(pts, p)
            report.add({**inputs, "check": "minkowski", "p": p}, mk.left, mk.right, mk.left - mk.right,
                       ec.TOL, passed=mk.ok)
        for i in range(1, p * (n - p + 1) + 1):
            rep = ec.peculiar_middle(pts, p, i, L=L, upper=Li[i - 1])
            gap = max(0.0, rep.lower - rep.middle, rep.middle - rep.upper)
            report.add({**inputs, "check": "peculiar", "p": p, "i": i},
                       [rep.lower, rep.middle, rep.upper], None, gap, ec.TOL)
            key = f"L_{i}^({p})"
            if preset == "paper-n5" and key in PAPER_N5_VALUES:
                want = PAPER_N5_VALUES[key]
                report.add({**inputs, "check": "perimeter-i", "p": p, "i": i}, Li[i - 1], want,
                           Li[i - 1] - want, ec.TOL)
            mkey = f"middle(p={p},i={i})"
            if preset == "paper-n5" and mkey in PAPER_N5_VALUES:
                want = PAPER_N5_VALUES[mkey]
                report.add({**inputs, "check": "middle", "p": p, "i": i}, rep.middle, want,
                           rep.middle - want, ec.TOL)
        slope = ec.numerical_order_slope(pts, p)
        target = L[p] / (2 * math.pi)
        rel = abs(slope - target) / target if target else abs(slope)
        report.add({**inputs, "check": "slope", "p": p}, slope, target, rel, SLOPE_REL_TOL)
    for m in range(1, int(params.get("n") or 6) + 1):
        for p in range(1, m + 1):
            for i in range(1, p * (m - p + 1) + 1):
                rep = ec.fujimoto_sharpness(m, p, i)
                want = ec.fujimoto_closed_form(m, p, i)
                err = max(abs(rep.middle - want), abs(rep.upper - want))
                report.add({"check": "sharpness", "n": m, "p": p, "i": i}, [rep.middle, rep.upper], want, err)


RUNNERS = {
    "diagrams": run_diagrams,
    "tableaux": run_tableaux,
    "sums": run_sums,
    "wedge": run_wedge,
    "expcurve": run_expcurve,
}
