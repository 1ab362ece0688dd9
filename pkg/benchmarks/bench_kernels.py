"""Benchmark the numba kernels against the pure-numpy fallback.

Run from the repository root:

    python3 benchmarks/bench_kernels.py

The active backend for library callers is chosen by LOCALBIAS_BACKEND;
this script times both implementations in one process and prints a
speedup table.
"""

import time

import numpy as np

from localbias._kernels import (HAVE_NUMBA, _bias_counts_np, _cayley_scan_np,
                                _fwht_np, _stability_counts_np)

if HAVE_NUMBA:
    from localbias._kernels import (_bias_counts_nb, _cayley_scan_nb,
                                    _fwht_nb, _stability_counts_nb)


def timeit(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def row(name, numpy_s, numba_s):
    if numba_s is None:
        print(f"{name:<34} {numpy_s * 1e3:>10.2f} ms {'-':>12} {'-':>8}")
    else:
        print(f"{name:<34} {numpy_s * 1e3:>10.2f} ms {numba_s * 1e3:>9.2f} ms "
              f"{numpy_s / numba_s:>7.1f}x")


def main():
    rng = np.random.Generator(np.random.Philox(1))
    print(f"numba available: {HAVE_NUMBA}")
    print(f"{'kernel':<34} {'numpy':>13} {'numba':>12} {'speedup':>8}")

    n = 20
    table = rng.choice(np.array([-1, 1], dtype=np.int8), size=1 << n)
    if HAVE_NUMBA:
        _bias_counts_nb(table, n)  # compile outside the timed region
        _stability_counts_nb(table, n)
    row(f"bias_counts (n={n})",
        timeit(_bias_counts_np, table, n),
        timeit(_bias_counts_nb, table, n) if HAVE_NUMBA else None)
    row(f"stability_counts (n={n})",
        timeit(_stability_counts_np, table, n),
        timeit(_stability_counts_nb, table, n) if HAVE_NUMBA else None)

    rows = rng.integers(-1, 2, size=(2000, 1024)).astype(np.int64)
    if HAVE_NUMBA:
        _fwht_nb(rows.copy())
    row("fwht_rows (2000 x 1024)",
        timeit(lambda: _fwht_np(rows.copy())),
        timeit(lambda: _fwht_nb(rows.copy())) if HAVE_NUMBA else None)

    period, target = 22, 2
    offsets = np.array([2, 3, -2, -3], dtype=np.int64)
    if HAVE_NUMBA:
        _cayley_scan_nb(period, offsets, target)
    row(f"cayley_scan (period={period})",
        timeit(_cayley_scan_np, period, offsets, target, repeat=3),
        timeit(_cayley_scan_nb, period, offsets, target, repeat=3)
        if HAVE_NUMBA else None)


if __name__ == "__main__":
    main()
