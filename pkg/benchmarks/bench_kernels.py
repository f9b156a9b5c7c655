"""Time the compiled and pure-Python integer kernels side by side.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both backends must agree on every workload; the script exits non-zero if
they do not.
"""

import argparse
import sys
import timeit

from tnv._kernels import backends

WORKLOADS = {
    "syt_diagonal_stats (3,3,3,2)": ("syt_diagonal_stats", ((3, 3, 3, 2), 4)),
    "syt_diagonal_stats (4,4,3)": ("syt_diagonal_stats", ((4, 4, 3), 3)),
    "chain_shape_visits 3x4": ("chain_shape_visits", (3, 4)),
    "chain_shape_visits 4x4": ("chain_shape_visits", (4, 4)),
    "ball_profile 20 balls (x2000)": ("ball_profile_many", None),
}

_TUPLES = [tuple(range(k, k + 20)) for k in range(2000)]


def _call(mod, fn, args):
    if fn == "ball_profile_many":
        return [mod.ball_profile(t, 2100) for t in _TUPLES]
    return getattr(mod, fn)(*args)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    found = backends()
    names = sorted(found)
    print(f"{'workload':34}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    status = 0
    for label, (fn, fargs) in WORKLOADS.items():
        results = {n: _call(found[n], fn, fargs) for n in names}
        if any(r != results[names[0]] for r in results.values()):
            print(f"{label}: backends disagree", file=sys.stderr)
            status = 1
        times = {n: min(timeit.repeat(lambda n=n: _call(found[n], fn, fargs), number=1, repeat=args.repeat))
                 for n in names}
        row = f"{label:34}" + "".join(f"{times[n]:>11.4f}s" for n in names)
        if "cython" in times and "python" in times:
            row += f"{times['python'] / times['cython']:>11.1f}x"
        print(row)
    if len(names) == 1:
        print("compiled extension not built; only the pure-Python backend was timed")
    return status


if __name__ == "__main__":
    sys.exit(main())
