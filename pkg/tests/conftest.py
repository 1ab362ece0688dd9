import itertools
from fractions import Fraction

import numpy as np
import pytest

from localbias.cube import CubeFunction


def brute_bias_counts(f: CubeFunction):
    """Independent neighbor count: explicit loops, no kernels."""
    out = []
    for v in range(1 << f.n):
        out.append(sum(1 for i in range(f.n) if f.table[v ^ (1 << i)] > 0))
    return out


def brute_stability_counts(f: CubeFunction):
    out = []
    for v in range(1 << f.n):
        out.append(sum(1 for i in range(f.n)
                       if f.table[v ^ (1 << i)] == f.table[v]))
    return out


def brute_bias_p(f: CubeFunction):
    counts = brute_bias_counts(f)
    if len(set(counts)) == 1:
        return Fraction(counts[0], f.n)
    return None


def brute_stability_p(f: CubeFunction):
    counts = brute_stability_counts(f)
    if len(set(counts)) == 1:
        return Fraction(counts[0], f.n)
    return None


def brute_walsh_coeff(f: CubeFunction, mask: int) -> int:
    total = 0
    for v in range(1 << f.n):
        chi = (-1) ** bin(v & mask).count("1")
        total += int(f.table[v]) * chi
    return total


def brute_scenery_distribution(f: CubeFunction, length: int):
    """Path summation over all starts and all step-choice sequences."""
    n = f.n
    probs = {}
    denom = (1 << n) * n ** length
    for start in range(1 << n):
        for steps in itertools.product(range(n), repeat=length):
            v = start
            word = [int(f.table[v])]
            for c in steps:
                v ^= 1 << c
                word.append(int(f.table[v]))
            key = tuple(word)
            probs[key] = probs.get(key, Fraction(0)) + Fraction(1, denom)
    return probs


def brute_partitions(j: int) -> int:
    """Count partitions by explicit enumeration of non-increasing parts."""
    def rec(remaining, largest):
        if remaining == 0:
            return 1
        return sum(rec(remaining - part, part)
                   for part in range(min(remaining, largest), 0, -1))
    return rec(j, j)


def random_cube_function(rng: np.random.Generator, n: int) -> CubeFunction:
    table = rng.choice(np.array([-1, 1], dtype=np.int8), size=1 << n)
    return CubeFunction(n, table)


def random_automorphism(rng: np.random.Generator, n: int):
    from localbias.cube import CubeAutomorphism
    perm = tuple(int(i) + 1 for i in rng.permutation(n))
    flips = int(rng.integers(1 << n))
    return CubeAutomorphism(perm, flips)


@pytest.fixture
def rng():
    return np.random.Generator(np.random.Philox(12345))
