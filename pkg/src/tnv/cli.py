"""Command-line front end.

Exit codes: 0 all checks pass, 1 a check failed, 2 unknown suite or bad
input, 3 an enumeration cap was hit (a partial report is still written).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from tnv import __version__
from tnv import expcurve as ec
from tnv import wedge as wd
from tnv.errors import DegenerateCurveError, InputError, ResourceCapError
from tnv.report import VerificationReport, emit_table, to_plain
from tnv.suites import RUNNERS, SLOPE_REL_TOL, SUITES

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UnknownSuite(InputError):
    pass


def run_suite(name: str, params: dict, output_path=None, fmt: str = "json") -> VerificationReport:
    """Run one battery (or all of them) and write the report.

    Resource-cap errors propagate with the partial report attached as
    ``exc.partial``.
    """
    names = SUITES if name == "all" else (name,)
    if any(s not in RUNNERS for s in names):
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    report = VerificationReport(name, seed=int(params.get("seed") or 0))
    try:
        for s in names:
            RUNNERS[s](params, report)
    except ResourceCapError as exc:
        report.partial = True
        _write(report, output_path, fmt)
        exc.partial = report
        raise
    _write(report, output_path, fmt)
    return report


def _write(report: VerificationReport, output_path, fmt: str):
    if output_path is None:
        return
    path = Path(output_path)
    path.write_text(report.to_json())
    if fmt in ("csv", "markdown"):
        suffix = ".csv" if fmt == "csv" else ".md"
        path.with_suffix(suffix).write_text(emit_table(report, fmt))


def _render(report: VerificationReport, fmt: str) -> str:
    return report.to_json() if fmt == "json" else emit_table(report, fmt)


def _read_points(args):
    if args.points:
        text = sys.stdin.read() if args.points == "-" else Path(args.points).read_text()
        return ec.FrequencySet.from_csv(text)
    return None


def _read_curve(spec):
    if spec is None:
        return None
    text = spec if spec.lstrip().startswith("[") else Path(spec).read_text()
    try:
        return wd.PolyCurve.from_json(text)
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise InputError(f"cannot read curve: {exc}") from None


def _params(args) -> dict:
    out = {}
    for key in ("n", "p", "i", "trials", "seed", "preset", "z0"):
        value = getattr(args, key, None)
        if value is not None:
            out[key] = value
    if getattr(args, "points", None):
        out["points"] = _read_points(args)
    if getattr(args, "curve", None):
        out["curve"] = _read_curve(args.curve)
    return out


def _emit(text: str, out):
    if out:
        Path(out).write_text(text)
    sys.stdout.write(text)


def cmd_run(args) -> int:
    report = run_suite(args.suite, _params(args), args.out, args.format)
    sys.stdout.write(_render(report, args.format))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_tableaux(args) -> int:
    params = {"n": args.n or 4, "p": args.p or 2}
    report = run_suite("tableaux", params, None, args.format)
    if args.only:
        keep = {"edge": "edge-sum", "profile": "tableau-profile", "f": "syt-count"}[args.only]
        report.cases = [c for c in report.cases if c["inputs"].get("check") == keep]
    _write(report, args.out, args.format)
    sys.stdout.write(_render(report, args.format))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_sums_verify(args) -> int:
    report = run_suite("sums", _params(args), None)
    worst: dict[str, list] = {}
    for case in report.cases:
        name = case["inputs"]["check"]
        mag = abs(float(Fraction(case["residual"]))) if isinstance(case["residual"], str) else abs(case["residual"])
        entry = worst.setdefault(name, [0.0, 0, True])
        entry[0] = max(entry[0], mag)
        entry[1] += 1
        entry[2] = entry[2] and case["pass"]
    body = {
        "schemaVersion": 1,
        "n": args.n,
        "p": args.p,
        "seed": report.seed,
        "toolVersion": __version__,
        "identities": [
            {"identity": k, "max_abs_residual": v[0], "trials": v[1], "pass": v[2]} for k, v in sorted(worst.items())
        ],
    }
    _emit(json.dumps(body, sort_keys=True, indent=2) + "\n", args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


def _quantity(name, value, bound, ok):
    return {"quantity": name, "value": to_plain(value), "bound": to_plain(bound), "pass": bool(ok)}


def cmd_expcurve(args) -> int:
    pts = _read_points(args)
    if pts is None:
        preset = args.preset or "paper-n5"
        if preset not in ec.PRESETS:
            raise InputError(f"unknown preset {preset!r}")
        pts = ec.FrequencySet(ec.PRESETS[preset])
    n = pts.n
    rows = []
    if args.action == "perimeters":
        L = ec.perimeter_sequence(pts)
        rows += [_quantity(f"L_{k}", L[k], None, True) for k in range(n + 2)]
        for p in range(1, n + 1):
            for i, v in enumerate(ec.perimeters_i(pts, p), start=1):
                rows.append(_quantity(f"L_{i}^({p})", v, None, True))
    elif args.action == "minkowski":
        for p in range(1, n + 1):
            if math.comb(n + 1, p) < 2:
                continue
            rep = ec.minkowski_identity_check(pts, p)
            rows.append(_quantity(f"L_{p - 1}+L_{p + 1}", rep.left, rep.right, rep.ok))
        for p, lo, hi, ok in ec.symmetry_check(pts):
            rows.append(_quantity(f"L_{p}", lo, hi, ok))
    elif args.action == "peculiar":
        if args.p is None or args.i is None:
            raise InputError("peculiar needs --p and --i")
        rep = ec.peculiar_middle(pts, args.p, args.i)
        rows.append(_quantity(f"L_{args.p}", rep.lower, rep.middle, rep.left_ok))
        rows.append(_quantity("middle", rep.middle, rep.upper, rep.right_ok))
        rows.append({"quantity": "argmax", "value": [list(s) for s in rep.argmax], "bound": None, "pass": True})
    elif args.action == "sharpness":
        top = args.n or 6
        for m in range(1, top + 1):
            for p in range(1, m + 1):
                for i in range(1, p * (m - p + 1) + 1):
                    rep = ec.fujimoto_sharpness(m, p, i)
                    want = ec.fujimoto_closed_form(m, p, i)
                    ok = rep.middle == want == rep.upper
                    rows.append(_quantity(f"n={m},p={p},i={i}", [rep.middle, rep.upper], want, ok))
    elif args.action == "slope":
        ps = [args.p] if args.p else list(range(1, n + 1))
        L = ec.perimeter_sequence(pts)
        for p in ps:
            slope = ec.numerical_order_slope(pts, p, args.r1, args.r2, args.samples)
            target = L[p] / (2 * math.pi)
            ok = abs(slope - target) <= SLOPE_REL_TOL * abs(target) if target else abs(slope) <= 1e-6
            rows.append(_quantity(f"slope_{p}", slope, target, ok))
    _emit(json.dumps(rows, indent=2) + "\n", args.out)
    return EXIT_OK if all(r["pass"] for r in rows) else EXIT_FAIL


def cmd_wedge(args) -> int:
    if args.action == "derive":
        w = wd.derivative_syt(args.p or 2, args.i if args.i is not None else 1)
        body = {",".join(map(str, s)): c for s, c in w.terms.items()}
    else:
        curve = _read_curve(args.curve)
        if curve is None:
            raise InputError(f"wedge {args.action} needs --curve")
        z0 = Fraction(args.z0 or "0")
        if args.action == "pluecker":
            coords = wd.pluecker(curve, args.p or 2)
            body = {",".join(map(str, s)): wd.coefficient_strings(f) for s, f in sorted(coords.items())}
        else:
            prof = wd.stationary_indices(curve, z0)
            body = {"delta": list(prof.delta), "v": list(prof.v), "z0": str(z0)}
    _emit(json.dumps(body, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def _common(sp, *names):
    opts = {
        "n": dict(type=int),
        "p": dict(type=int),
        "i": dict(type=int),
        "trials": dict(type=int),
        "seed": dict(type=int, default=0),
        "points": dict(help="CSV file of 'a,b' lines, or - for stdin"),
        "preset": dict(help=f"named point set: {', '.join(sorted(ec.PRESETS))}"),
        "curve": dict(help="JSON file (or inline JSON) of ascending coefficient arrays"),
        "z0": dict(help="expansion point, decimal or num/den"),
        "out": dict(help="write the output here as well"),
        "format": dict(choices=("json", "csv", "markdown"), default="json"),
    }
    for name in names:
        sp.add_argument(f"--{name}", **opts[name])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tnv", description="Exact checks for diagram, tableau and convex-hull identities.")
    parser.add_argument("--version", action="version", version=f"tnv {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a verification suite")
    run.add_argument("suite", help=f"one of {', '.join(SUITES)}, all")
    _common(run, "n", "p", "i", "trials", "seed", "points", "preset", "curve", "z0", "out", "format")
    run.set_defaults(func=cmd_run)

    tab = sub.add_parser("tableaux", help="edge sums, tableau profile sums and SYT counts")
    _common(tab, "n", "p", "out", "format")
    tab.add_argument("--only", choices=("edge", "profile", "f"))
    tab.set_defaults(func=cmd_tableaux)

    sums = sub.add_parser("sums", help="balanced sum identities")
    sums_sub = sums.add_subparsers(dest="action", required=True)
    ver = sums_sub.add_parser("verify", help="random exact trials of every identity")
    _common(ver, "n", "p", "trials", "seed", "out")
    ver.set_defaults(func=cmd_sums_verify)

    exp = sub.add_parser("expcurve", help="exponential-curve perimeters")
    exp_sub = exp.add_subparsers(dest="action", required=True)
    for action in ("perimeters", "minkowski", "peculiar", "sharpness", "slope"):
        sp = exp_sub.add_parser(action)
        _common(sp, "n", "p", "i", "points", "preset", "out")
        if action == "slope":
            sp.add_argument("--r1", type=float, default=50.0)
            sp.add_argument("--r2", type=float, default=100.0)
            sp.add_argument("--samples", type=int, default=4096)
        sp.set_defaults(func=cmd_expcurve)

    wedge = sub.add_parser("wedge", help="wedge derivatives and Pluecker coordinates")
    wedge_sub = wedge.add_subparsers(dest="action", required=True)
    for action in ("pluecker", "stationary", "derive"):
        sp = wedge_sub.add_parser(action)
        _common(sp, "p", "i", "curve", "z0", "out")
        sp.set_defaults(func=cmd_wedge)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownSuite as exc:
        print(f"tnv: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapError as exc:
        print(f"tnv: resource cap: {exc}", file=sys.stderr)
        if isinstance(exc.partial, VerificationReport):
            sys.stdout.write(_render(exc.partial, getattr(args, "format", "json")))
        return EXIT_CAP
    except (InputError, DegenerateCurveError, FileNotFoundError) as exc:
        print(f"tnv: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
