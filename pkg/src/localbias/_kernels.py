"""Hot numeric kernels with a numba fast path and a pure-numpy fallback.

Set LOCALBIAS_BACKEND=numpy to force the fallback path (useful for
debugging and for the benchmark in benchmarks/bench_kernels.py).
Everything here works on plain integer arrays; all exact-rational logic
lives in the calling modules.
"""

import os

import numpy as np

BACKEND = os.environ.get("LOCALBIAS_BACKEND", "numba").strip().lower()
if BACKEND not in ("numba", "numpy"):
    raise ValueError(f"LOCALBIAS_BACKEND must be 'numba' or 'numpy', got {BACKEND!r}")

HAVE_NUMBA = False
if BACKEND == "numba":
    try:
        from numba import njit

        HAVE_NUMBA = True
    except ImportError:
        pass


# ---------------------------------------------------------------------------
# pure-numpy implementations

def _bias_counts_np(table, n):
    idx = np.arange(table.shape[0])
    counts = np.zeros(table.shape[0], dtype=np.int64)
    for i in range(n):
        counts += table[idx ^ (1 << i)] > 0
    return counts


def _stability_counts_np(table, n):
    idx = np.arange(table.shape[0])
    counts = np.zeros(table.shape[0], dtype=np.int64)
    for i in range(n):
        counts += table[idx ^ (1 << i)] == table
    return counts


def _fwht_np(rows):
    # in-place Walsh-Hadamard butterfly on the last axis (length power of 2)
    h = 1
    size = rows.shape[-1]
    while h < size:
        for j in range(0, size, 2 * h):
            a = rows[..., j:j + h].copy()
            b = rows[..., j + h:j + 2 * h]
            rows[..., j:j + h] = a + b
            rows[..., j + h:j + 2 * h] = a - b
        h *= 2
    return rows


def _cayley_scan_np(period, offsets, target, chunk=1 << 20):
    npat = 1 << period
    cols = np.arange(period)
    hits = []
    for lo in range(0, npat, chunk):
        patterns = np.arange(lo, min(lo + chunk, npat), dtype=np.int64)
        bits = ((patterns[:, None] >> cols) & 1).astype(np.int8)
        counts = np.zeros(bits.shape, dtype=np.int16)
        for off in offsets:
            counts += bits[:, (cols + off) % period]
        ok = np.all(counts == target, axis=1)
        hits.append(patterns[ok])
    return np.concatenate(hits)


# ---------------------------------------------------------------------------
# numba fast path

if HAVE_NUMBA:

    @njit(cache=True)
    def _bias_counts_nb(table, n):
        size = table.shape[0]
        counts = np.zeros(size, dtype=np.int64)
        for v in range(size):
            c = 0
            for i in range(n):
                if table[v ^ (1 << i)] > 0:
                    c += 1
            counts[v] = c
        return counts

    @njit(cache=True)
    def _stability_counts_nb(table, n):
        size = table.shape[0]
        counts = np.zeros(size, dtype=np.int64)
        for v in range(size):
            c = 0
            for i in range(n):
                if table[v ^ (1 << i)] == table[v]:
                    c += 1
            counts[v] = c
        return counts

    @njit(cache=True)
    def _fwht_nb(rows):
        nrows, size = rows.shape
        for r in range(nrows):
            h = 1
            while h < size:
                for j in range(0, size, 2 * h):
                    for k in range(j, j + h):
                        x = rows[r, k]
                        y = rows[r, k + h]
                        rows[r, k] = x + y
                        rows[r, k + h] = x - y
                h *= 2
        return rows

    @njit(cache=True)
    def _cayley_scan_nb(period, offsets, target):
        npat = 1 << period
        noff = offsets.shape[0]
        out = np.empty(npat, dtype=np.int64)
        found = 0
        for m in range(npat):
            good = True
            for r in range(period):
                c = 0
                for t in range(noff):
                    if (m >> ((r + offsets[t]) % period)) & 1:
                        c += 1
                if c != target:
                    good = False
                    break
            if good:
                out[found] = m
                found += 1
        return out[:found]


# ---------------------------------------------------------------------------
# dispatch

def bias_counts(table, n):
    """Per-vertex count of +1-valued hypercube neighbors."""
    if HAVE_NUMBA:
        return _bias_counts_nb(table, n)
    return _bias_counts_np(table, n)


def stability_counts(table, n):
    """Per-vertex count of neighbors sharing the vertex's own sign."""
    if HAVE_NUMBA:
        return _stability_counts_nb(table, n)
    return _stability_counts_np(table, n)


def fwht_rows(rows):
    """In-place integer Walsh-Hadamard transform of each row."""
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    if rows.ndim == 1:
        if HAVE_NUMBA:
            return _fwht_nb(rows.reshape(1, -1))[0]
        return _fwht_np(rows)
    if HAVE_NUMBA:
        return _fwht_nb(rows)
    return _fwht_np(rows)


def cayley_scan(period, offsets, target):
    """All period-length sign patterns (as bitmasks, bit r set = +1 at residue r)
    in which every residue sees exactly `target` +1 values among the given
    circular offsets."""
    offsets = np.asarray(offsets, dtype=np.int64)
    if HAVE_NUMBA:
        return _cayley_scan_nb(period, offsets, target)
    return _cayley_scan_np(period, offsets, target)
