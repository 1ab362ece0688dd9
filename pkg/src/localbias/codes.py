"""Binary Hamming codes, perfectness checks and xor translates.

Codewords are integer bitmasks with coordinate i stored at bit (i-1),
matching the vertex encoding in localbias.cube.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class BinaryCode:
    """A set of n-bit codewords."""

    n: int
    words: frozenset

    def __post_init__(self):
        words = frozenset(int(w) for w in self.words)
        for w in words:
            if not 0 <= w < (1 << self.n):
                raise ValueError(f"codeword {w} out of range for length {self.n}")
        object.__setattr__(self, "words", words)

    def __len__(self):
        return len(self.words)

    def sorted_words(self) -> list:
        return sorted(self.words)


def parity_positions(k: int) -> list:
    """1-based positions of the parity bits of the Hamming code H_k."""
    return [1 << i for i in range(k)]


def data_positions(k: int) -> list:
    """1-based positions of the data bits of H_k, ascending."""
    n = (1 << k) - 1
    powers = set(parity_positions(k))
    return [i for i in range(1, n + 1) if i not in powers]


def hamming_code(k: int) -> BinaryCode:
    """The Hamming code H_k on n = 2^k - 1 bits.

    Data bits range over all bit-strings; parity bit x_i (i a power of two)
    is the xor of all data bits x_j with i AND j != 0.
    """
    if k < 2:
        raise ValueError(f"hamming_code requires k >= 2, got {k}")
    n = (1 << k) - 1
    data = data_positions(k)
    parity = parity_positions(k)
    words = set()
    for assign in range(1 << len(data)):
        word = 0
        for bit, pos in enumerate(data):
            if (assign >> bit) & 1:
                word |= 1 << (pos - 1)
        for i in parity:
            x = 0
            for bit, pos in enumerate(data):
                if (i & pos) and ((assign >> bit) & 1):
                    x ^= 1
            if x:
                word |= 1 << (i - 1)
        words.add(word)
    return BinaryCode(n, frozenset(words))


@np.vectorize
def _popcount(x):
    return bin(int(x)).count("1")


def min_distance(code: BinaryCode) -> int:
    """Minimum pairwise Hamming distance."""
    if len(code) < 2:
        raise ValueError("min_distance needs at least 2 codewords")
    words = np.array(code.sorted_words(), dtype=np.int64)
    best = code.n
    for i in range(len(words) - 1):
        d = _popcount(words[i + 1:] ^ words[i]).min()
        best = min(best, int(d))
    return best


def is_perfect_radius1(code: BinaryCode) -> bool:
    """True iff the radius-1 Hamming balls around the codewords partition
    the whole n-cube."""
    n = code.n
    if len(code) * (n + 1) != (1 << n):
        return False
    covered = np.zeros(1 << n, dtype=bool)
    for w in code.words:
        ball = [w] + [w ^ (1 << i) for i in range(n)]
        if covered[ball].any():
            return False
        covered[ball] = True
    return bool(covered.all())


def xor_translate(code: BinaryCode, t: int) -> BinaryCode:
    """Translate every codeword by xor with t; preserves distances and
    perfectness."""
    if not 0 <= t < (1 << code.n):
        raise ValueError(f"translate mask {t} out of range")
    return BinaryCode(code.n, frozenset(w ^ t for w in code.words))


def rearrange_parity_right(code: BinaryCode, k: int) -> BinaryCode:
    """Permute coordinates so the k parity bits occupy the rightmost
    (highest-numbered) slots.

    The permutation is fixed: data positions in increasing order become
    coordinates 1..(n-k), parity positions in increasing order become
    coordinates (n-k+1)..n.
    """
    n = (1 << k) - 1
    if code.n != n:
        raise ValueError(f"expected a length-{n} code for k={k}, got length {code.n}")
    order = data_positions(k) + parity_positions(k)
    new_words = set()
    for w in code.words:
        out = 0
        for new_pos, old_pos in enumerate(order, start=1):
            if (w >> (old_pos - 1)) & 1:
                out |= 1 << (new_pos - 1)
        new_words.add(out)
    return BinaryCode(n, frozenset(new_words))
