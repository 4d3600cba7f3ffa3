#!/usr/bin/env python3
"""Throughput comparison of the numba and numpy kernel backends.

Runs each hot kernel on a representative workload under both backends and
prints a table with the speedup. The numba backend is warmed up first so
JIT compilation does not pollute the timings.

    python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time

import numpy as np

from cyclicgv.kernels import get_backend


def timed(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def workloads(quick: bool):
    scan_n = 2**18 if quick else 2**22
    trials = 2**16 if quick else 2**20
    pool = 2**14 if quick else 2**17
    queries = 256 if quick else 1024
    rng = np.random.default_rng(0)
    return [
        ("auto_min_counts (n=23)",
         "auto_min_counts",
         (np.arange(scan_n, dtype=np.uint64), 23)),
        ("strict_min_counts (n=31)",
         "strict_min_counts",
         (rng.integers(0, 2**31, size=scan_n // 4, dtype=np.uint64), 31)),
        ("min_cyc_counts (n=61)",
         "min_cyc_counts",
         (np.uint64(0x123456789ABCDEF),
          rng.integers(0, 2**61, size=pool, dtype=np.uint64), 61)),
        ("min_cyc_counts_to_set (n=13)",
         "min_cyc_counts_to_set",
         (rng.integers(0, 2**13, size=queries, dtype=np.uint64),
          rng.integers(0, 2**13, size=2048, dtype=np.uint64), 13)),
        ("closest_pair_counts (n=13)",
         "closest_pair_counts",
         (np.unique(rng.integers(0, 2**13, size=400, dtype=np.uint64)), 13)),
        ("canonical_rotations (n=23)",
         "canonical_rotations",
         (np.arange(scan_n, dtype=np.uint64), 23)),
        ("philox_words (n=61)",
         "philox_words",
         (np.uint64(7), np.uint64(0), trials, 61)),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true",
                        help="smaller workloads for a fast sanity run")
    args = parser.parse_args()

    numpy_b = get_backend("numpy")
    numba_b = get_backend("numba")

    print("warming up numba JIT...")
    for _, fname, fargs in workloads(quick=True):
        getattr(numba_b, fname)(*fargs)

    rows = []
    for label, fname, fargs in workloads(args.quick):
        t_np, r_np = timed(getattr(numpy_b, fname), *fargs)
        t_nb, r_nb = timed(getattr(numba_b, fname), *fargs)
        if isinstance(r_np, np.ndarray):
            assert np.array_equal(r_np, r_nb), f"backend mismatch in {fname}"
        else:
            assert tuple(r_np) == tuple(r_nb), f"backend mismatch in {fname}"
        rows.append((label, t_np, t_nb, t_np / t_nb))

    width = max(len(r[0]) for r in rows)
    print(f"\n{'kernel':<{width}}  {'numpy':>10}  {'numba':>10}  {'speedup':>8}")
    print("-" * (width + 34))
    for label, t_np, t_nb, speedup in rows:
        print(f"{label:<{width}}  {t_np:>9.4f}s  {t_nb:>9.4f}s  {speedup:>7.1f}x")


if __name__ == "__main__":
    main()
