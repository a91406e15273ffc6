#!/usr/bin/env python3
"""Benchmark the point-count kernel backends (numba JIT vs pure numpy).

Counts F_p-points of a fixture curve for every prime p <= N and reports
wall-clock times for both paths.  The numba path is compiled once before
timing so the comparison reflects steady-state throughput.

Usage: python benchmarks/bench_kernels.py [N ...]
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import numpy as np

from zetaval import kernels

CURVE = (0, -1, 1, 0, 0)


def _time(fn, *args) -> tuple[float, np.ndarray]:
    t0 = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - t0, out


def main(limits: list[int]) -> int:
    print(f"curve: a = {CURVE}")
    print(f"numba available: {kernels.HAVE_NUMBA}")
    if kernels.HAVE_NUMBA:
        kernels.count_points_numba(CURVE, kernels.sieve(50))  # compile outside timing
    header = f"{'N':>10} {'primes':>8} {'numpy [s]':>12} {'numba [s]':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for limit in limits:
        primes = kernels.sieve(limit)
        t_np, a = _time(kernels.count_points_numpy, CURVE, primes)
        if kernels.HAVE_NUMBA:
            t_nb, b = _time(kernels.count_points_numba, CURVE, primes)
            if not np.array_equal(a, b):
                print("BACKEND MISMATCH", file=sys.stderr)
                return 1
            print(f"{limit:>10} {len(primes):>8} {t_np:>12.4f} {t_nb:>12.4f} {t_np / t_nb:>8.1f}x")
        else:
            print(f"{limit:>10} {len(primes):>8} {t_np:>12.4f} {'-':>12} {'-':>9}")
    return 0


if __name__ == "__main__":
    args = [int(a) for a in sys.argv[1:]] or [1_000, 10_000, 30_000]
    sys.exit(main(args))
