"""Compare the pure-Python and compiled simplex kernels on realistic workloads.

Run:  python benchmarks/bench_kernels.py [--quick]

Workloads mirror the two LP shapes the toolkit actually solves: row-light
weighted-cover instances (classification fast path) and row-heavy core
feasibility systems (the balancedness double check), plus an end-to-end
classification pass.
"""

import argparse
import time
from fractions import Fraction

from capax.capacity import random_convex_mixture, random_monotone
from capax.classify import classify_full, core_lp_feasible, is_totally_balanced
from capax.ground import GroundSet
from capax.lp import backend_names, linear_program
from capax.lp import _backend
from capax.lp.solver import solve
from capax.rng import SplitMix64


def time_workload(label, fn, repeats):
    results = {}
    for backend in backend_names():
        _backend.DEFAULT_BACKEND = backend
        start = time.perf_counter()
        for _ in range(repeats):
            fn()
        results[backend] = time.perf_counter() - start
    width = max(len(b) for b in results)
    print(f"\n{label} (x{repeats})")
    for backend, elapsed in sorted(results.items()):
        print(f"  {backend:<{width}}  {elapsed:8.3f}s")
    if len(results) == 2:
        print(f"  speedup compiled vs pure: x{results['pure'] / results['compiled']:.2f}")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller repeat counts")
    args = parser.parse_args()
    scale = 1 if args.quick else 3

    if "compiled" not in backend_names():
        print("note: compiled kernel not built; only the pure backend will run")

    saved = _backend.DEFAULT_BACKEND
    g5 = GroundSet(5)

    caps_cover = [random_convex_mixture(g5, seed, 8) for seed in range(4)]

    def cover_heavy():
        for nu in caps_cover:
            is_totally_balanced(nu)

    caps_core = [random_monotone(g5, seed, 16) for seed in range(6)]

    def core_feasibility():
        for nu in caps_core:
            core_lp_feasible(nu)

    caps_classify = [random_monotone(g5, 100 + seed, 12) for seed in range(4)]

    def classify_pass():
        for nu in caps_classify:
            classify_full(nu)

    # dense phase-1-heavy instances where pivoting dominates end to end
    rng = SplitMix64(7)
    dense = []
    for _ in range(8):
        n = 5
        rows = [([Fraction(1)] * n, "=", Fraction(1))]
        for mask in range(1, 2**n - 1):
            coeffs = [Fraction(1) if mask >> i & 1 else Fraction(0) for i in range(n)]
            rows.append((coeffs, ">=", Fraction(1 + rng.next_below(16), 32)))
        dense.append(linear_program("min", [Fraction(0)] * n, rows))

    def solve_dense():
        for lp in dense:
            solve(lp)

    try:
        time_workload("weighted-cover LPs, n=5 (totally-balanced scan)", cover_heavy, 2 * scale)
        time_workload("core feasibility systems, n=5 (31 rows, phase 1)", core_feasibility, 4 * scale)
        time_workload("full classification, n=5 random capacities", classify_pass, 4 * scale)
        time_workload("solver only: dense 31-row rational systems", solve_dense, 4 * scale)
    finally:
        _backend.DEFAULT_BACKEND = saved


if __name__ == "__main__":
    main()
