#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--quick]

Times the four hot kernels over every 7-vertex isomorphism class (or the
6-vertex classes with --quick) plus an end-to-end enumeration, and prints a
speedup table.  Both backends produce identical outputs; the suite asserts
that, this script only measures.
"""

import argparse
import time

from chromastab import generate, kernels
from chromastab.kernels import pure


def bench(fn, reps=1):
    best = None
    for _ in range(reps):
        t0 = time.perf_counter()
        out = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def kernel_tasks(level, kern):
    def chromatic():
        return sum(kern.chromatic_number(len(r), r) for _k, r in level)

    def stability():
        total = 0
        for _k, rows in level:
            n = len(rows)
            chi = kern.chromatic_number(n, rows)
            vs, ivs = kern.stability_values(n, rows, chi)
            total += vs + ivs
        return total

    def min_class():
        total = 0
        for _k, rows in level:
            n = len(rows)
            chi = kern.chromatic_number(n, rows)
            total += kern.min_color_class_size(n, rows, chi)
        return total

    def canon():
        total = 0
        for _k, rows in level:
            _perm, order, _gens, _orbits = kern.canon_raw(len(rows), rows)
            total += order
        return total

    return {
        "chromatic_number": chromatic,
        "stability_values": stability,
        "min_color_class": min_class,
        "canonical_labeling": canon,
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="6-vertex corpus instead of 7")
    args = ap.parse_args()

    n = 6 if args.quick else 7
    if not kernels.have_compiled():
        raise SystemExit("compiled extension not built; nothing to compare")
    compiled = kernels.set_backend("compiled")
    level = generate.levels_up_to(n, jobs=1)
    print(f"corpus: all {len(level)} isomorphism classes on {n} vertices")
    print(f"{'kernel':<22}{'pure':>12}{'compiled':>12}{'speedup':>10}")

    for name, fast_fn in kernel_tasks(level, compiled).items():
        t_fast, out_fast = bench(fast_fn, reps=3)
        t_pure, out_pure = bench(kernel_tasks(level, pure)[name])
        assert out_fast == out_pure, name
        print(f"{name:<22}{t_pure:>11.3f}s{t_fast:>11.3f}s{t_pure / t_fast:>9.1f}x")

    # end-to-end: isomorph-free enumeration one order up
    generate._LEVEL_CACHE.clear()
    kernels.set_backend("compiled")
    t_fast, _ = bench(lambda: len(generate.levels_up_to(n, jobs=1)))
    generate._LEVEL_CACHE.clear()
    kernels.set_backend("pure")
    t_pure, _ = bench(lambda: len(generate.levels_up_to(n, jobs=1)))
    kernels.set_backend("auto")
    print(f"{'enumerate to n=' + str(n):<22}{t_pure:>11.3f}s{t_fast:>11.3f}s{t_pure / t_fast:>9.1f}x")


if __name__ == "__main__":
    main()
