"""Benchmark the numba kernels against their pure-numpy fallbacks.

Runs the 2^n product-space kernels (product-state expansion, popcount
table, popcount-indexed gather/scatter) at full-oracle scale and reports
best-of-N wall times for both paths.

    python benchmarks/bench_kernels.py [--n 20] [--repeats 5]
"""

import argparse
import math
import time

import numpy as np

from spincat import _kernels


def best_of(fn, *args, repeats=5):
    fn(*args)  # warm-up; compiles the jit path on first call
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=20, help="atom count (default 20)")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    n = args.n

    if _kernels.njit is None:
        print("numba not importable; only the numpy path is available")
        return

    theta, phi = 1.1, -0.4
    g = np.full(n, math.cos(theta / 2), dtype=np.complex128)
    e = np.full(n, np.exp(-1j * phi) * math.sin(theta / 2), dtype=np.complex128)
    pops = _kernels.popcounts_numpy(n)
    amps = _kernels.product_amplitudes_numpy(g, e)
    table = np.arange(n + 1, dtype=np.complex128)

    cases = [
        ("popcounts", (n,), _kernels.popcounts_numpy, _kernels.popcounts_jit),
        (
            "product_amplitudes",
            (g, e),
            _kernels.product_amplitudes_numpy,
            _kernels.product_amplitudes_jit,
        ),
        ("gather", (table, pops), _kernels.gather_numpy, _kernels.gather_jit),
        (
            "popcount_sums",
            (amps, pops, n + 1),
            _kernels.popcount_sums_numpy,
            _kernels.popcount_sums_jit,
        ),
    ]

    print(f"n = {n}  (2^n = {1 << n} amplitudes), best of {args.repeats}")
    print(f"{'kernel':<20} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for name, call_args, np_fn, jit_fn in cases:
        t_np = best_of(np_fn, *call_args, repeats=args.repeats)
        t_jit = best_of(jit_fn, *call_args, repeats=args.repeats)
        print(f"{name:<20} {t_np * 1e3:>8.2f}ms {t_jit * 1e3:>8.2f}ms {t_np / t_jit:>7.2f}x")


if __name__ == "__main__":
    main()
