"""Builders for locally biased and locally stable cube functions: the
perfect-code construction, disjoint translate unions, tensor lifts,
products, the g_n / h / h_k families and the stable-function builders.

Every builder checks its preconditions by running the relevant verifier
rather than trusting the caller.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .codes import (BinaryCode, hamming_code, is_perfect_radius1,
                    min_distance, rearrange_parity_right, xor_translate)
from .cube import CubeFunction, is_locally_biased, is_locally_stable

#: truth tables above this dimension are refused (2^24 entries)
MAX_DIMENSION = 24


def _check_dimension(n: int):
    if n > MAX_DIMENSION:
        raise ValueError(f"dimension {n} exceeds the configured maximum {MAX_DIMENSION}")


def biased_from_code(code: BinaryCode) -> CubeFunction:
    """Cylinder over a distance-3 perfect code: +1 exactly when the first
    n-1 coordinates form a codeword. Locally 1/n-biased on n = code.n + 1
    dimensions."""
    if len(code) >= 2 and min_distance(code) != 3:
        raise ValueError("code must have minimum distance 3")
    if not is_perfect_radius1(code):
        raise ValueError("code must be a perfect radius-1 code")
    n = code.n + 1
    _check_dimension(n)
    table = np.full(1 << n, -1, dtype=np.int8)
    for w in code.words:
        table[w] = 1
        table[w | (1 << (n - 1))] = 1
    return CubeFunction(n, table)


def translate_codes(k: int, m: int) -> list:
    """m pairwise disjoint perfect codes: the rearranged Hamming code H_k
    translated by masks t = 0..m-1 placed in the parity coordinates."""
    n = 1 << k
    if not 0 <= m <= n:
        raise ValueError(f"m must be in 0..{n}, got {m}")
    base = rearrange_parity_right(hamming_code(k), k)
    shift = n - 1 - k  # parity bits sit in the k highest coordinates
    return [xor_translate(base, t << shift) for t in range(m)]


def biased_m_over_n(k: int, m: int) -> CubeFunction:
    """Union of m disjoint-support 1/n-biased functions on n = 2^k
    dimensions; locally m/n-biased. m = 0 gives the constant -1."""
    n = 1 << k
    if not 0 <= m <= n:
        raise ValueError(f"m must be in 0..{n}, got {m}")
    _check_dimension(n)
    table = np.full(1 << n, -1, dtype=np.int8)
    for code in translate_codes(k, m):
        for w in code.words:
            table[w] = 1
            table[w | (1 << (n - 1))] = 1
    f = CubeFunction(n, table)
    if is_locally_biased(f) != Fraction(m, n):
        raise AssertionError("translate union failed to produce an m/n-biased function")
    return f


def tensor_lift(f: CubeFunction, c: int) -> CubeFunction:
    """Replace coordinate i of f by the product of coordinates i, i+n, ...,
    i+(c-1)n. Preserves local bias exactly."""
    if c < 1:
        raise ValueError(f"lift factor must be >= 1, got {c}")
    n = f.n
    _check_dimension(c * n)
    if c == 1:
        return f
    v = np.arange(1 << (c * n), dtype=np.int64)
    y = np.zeros_like(v)
    mask = (1 << n) - 1
    for j in range(c):
        y ^= (v >> (j * n)) & mask
    return CubeFunction(c * n, f.table[y])


def product(f1: CubeFunction, f2: CubeFunction) -> CubeFunction:
    """Pointwise product on disjoint coordinate blocks (f1 on the low n1
    coordinates, f2 on the next n2). Both inputs must be locally
    1/2-biased; so is the output."""
    half = Fraction(1, 2)
    if is_locally_biased(f1) != half or is_locally_biased(f2) != half:
        raise ValueError("product requires two locally 1/2-biased functions")
    n = f1.n + f2.n
    _check_dimension(n)
    v = np.arange(1 << n, dtype=np.int64)
    mask = (1 << f1.n) - 1
    table = f1.table[v & mask] * f2.table[v >> f1.n]
    return CubeFunction(n, table)


def parity_g(n: int) -> CubeFunction:
    """g_n = x_1 * ... * x_{n/2}, locally 1/2-biased on even n."""
    if n < 2 or n % 2:
        raise ValueError(f"parity_g needs an even dimension >= 2, got {n}")
    _check_dimension(n)
    v = np.arange(1 << n, dtype=np.int64)
    low = v & ((1 << (n // 2)) - 1)
    table = np.where(_parity_bits(low) == 0, 1, -1).astype(np.int8)
    return CubeFunction(n, table)


def _parity_bits(v: np.ndarray) -> np.ndarray:
    out = v.copy()
    shift = 1
    while shift < 64:
        out ^= out >> shift
        shift *= 2
    return out & 1


def base_h() -> CubeFunction:
    """h(x) = (x1 x2 + x2 x3 - x3 x4 + x1 x4) / 2 on 4 dimensions; all
    values are +-1 and h is locally 1/2-biased."""
    table = np.empty(16, dtype=np.int8)
    for v in range(16):
        x = [1 if not (v >> i) & 1 else -1 for i in range(4)]
        val = (x[0] * x[1] + x[1] * x[2] - x[2] * x[3] + x[0] * x[3]) // 2
        table[v] = val
    return CubeFunction(4, table)


def h_k(k: int) -> CubeFunction:
    """The interleaved lift of h: coordinate i of h reads the product of
    x_{i+4j}, j = 0..k-1. Locally 1/2-biased on 4k dimensions with exactly
    4 Walsh coefficients."""
    if k < 1:
        raise ValueError(f"h_k requires k >= 1, got {k}")
    n = 4 * k
    _check_dimension(n)
    h = base_h()
    if k == 1:
        return h
    v = np.arange(1 << n, dtype=np.int64)
    y = np.zeros_like(v)
    for i in range(4):
        acc = np.zeros_like(v)
        for j in range(k):
            acc ^= (v >> (i + 4 * j)) & 1
        y |= acc << i
    return CubeFunction(n, h.table[y])


def half_biased_from_signature(n: int, signature) -> CubeFunction:
    """Tensor product of h_{i} factors (per the multiset signature) on
    consecutive blocks, completed by g_{n-m} on the remaining coordinates.
    Distinct signatures yield non-isomorphic 1/2-biased functions."""
    if n < 2 or n % 2:
        raise ValueError(f"needs an even dimension >= 2, got {n}")
    sig = sorted(int(i) for i in signature)
    if any(i < 1 for i in sig):
        raise ValueError("signature entries must be positive integers")
    m = 4 * sum(sig)
    if m > n:
        raise ValueError(f"signature {sig} needs {m} coordinates but n = {n}")
    _check_dimension(n)
    factors = [h_k(i) for i in sig]
    if n > m:
        factors.append(parity_g(n - m))
    out = factors[0]
    for f in factors[1:]:
        out = product(out, f)
    return out


def stable_parity(n: int, m: int) -> CubeFunction:
    """Parity on the last n-m coordinates; locally (m/n)-stable. m = n
    gives the constant +1."""
    if not 0 <= m <= n:
        raise ValueError(f"m must be in 0..{n}, got {m}")
    _check_dimension(n)
    v = np.arange(1 << n, dtype=np.int64)
    table = np.where(_parity_bits(v >> m) == 0, 1, -1).astype(np.int8)
    return CubeFunction(n, table)


def stable_from_biased(f: CubeFunction) -> CubeFunction:
    """f'(x, x_{n+1}) = f(x) * x_{n+1}: lifts a locally 1/2-biased function
    on even n to a locally (n/2)/(n+1)-stable one, preserving
    non-isomorphism."""
    if is_locally_biased(f) != Fraction(1, 2):
        raise ValueError("stable_from_biased requires a locally 1/2-biased input")
    n = f.n + 1
    _check_dimension(n)
    v = np.arange(1 << n, dtype=np.int64)
    last = np.where((v >> f.n) & 1, -1, 1).astype(np.int8)
    table = f.table[v & ((1 << f.n) - 1)] * last
    return CubeFunction(n, table)


def stable_extend(f: CubeFunction, n2: int) -> CubeFunction:
    """Extend a locally stable function to n2 >= n dimensions by ignoring
    the new coordinates; (n-m)/n-stable becomes (n2-m)/n2-stable."""
    if is_locally_stable(f) is None:
        raise ValueError("stable_extend requires a locally stable input")
    if n2 < f.n:
        raise ValueError(f"target dimension {n2} below input dimension {f.n}")
    _check_dimension(n2)
    if n2 == f.n:
        return f
    v = np.arange(1 << n2, dtype=np.int64)
    return CubeFunction(n2, f.table[v & ((1 << f.n) - 1)])
