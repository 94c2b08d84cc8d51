#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernel against the pure-Python fallback.

Both backends walk all n! inversion sequences and tally joint statistic
counts; this script times each on the same inputs and reports the speedup.

    python benchmarks/bench_kernel.py --sizes 7 8 9 --repeat 3
"""

import argparse
import time

from invbargraph import _kernel_py

try:
    from invbargraph import _speedups
except ImportError:
    _speedups = None


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[7, 8, 9])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _speedups is None:
        print("compiled kernel not available; timing the pure backend only")

    header = f"{'kernel':<16} {'n':>3} {'python':>10} {'cython':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, py_fn, cy_fn in (
        ("area_sper", _kernel_py.area_sper_counts,
         _speedups.area_sper_counts if _speedups else None),
        ("lda", _kernel_py.lda_counts,
         _speedups.lda_counts if _speedups else None),
    ):
        for n in args.sizes:
            py_time, py_result = best_of(args.repeat, py_fn, n)
            if cy_fn is None:
                print(f"{name:<16} {n:>3} {py_time:>9.4f}s {'-':>10} {'-':>8}")
                continue
            cy_time, cy_result = best_of(args.repeat, cy_fn, n)
            if py_result != cy_result:
                print(f"{name:<16} {n:>3} BACKENDS DISAGREE")
                return 1
            print(f"{name:<16} {n:>3} {py_time:>9.4f}s {cy_time:>9.4f}s "
                  f"{py_time / cy_time:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
