"""Random-walk sceneries on the hypercube and their exact word
distributions.

The walk is the simple random walk (one uniformly chosen coordinate
flipped per step) started from the uniform distribution; all distribution
arithmetic is exact, with denominators dividing 2^n * n^L. Sampling uses
the counter-based Philox generator with 64-bit seeds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

DEFAULT_SEED = 20260823
MAX_N = 12
MAX_LEN = 12

from .cube import CubeFunction


@dataclass(frozen=True)
class Walk:
    """A path on the hypercube; consecutive vertices differ in one bit."""

    n: int
    vertices: np.ndarray

    def __post_init__(self):
        vertices = np.asarray(self.vertices, dtype=np.int64)
        if vertices.ndim != 1 or vertices.shape[0] < 1:
            raise ValueError("walk needs at least one vertex")
        if np.any(vertices < 0) or np.any(vertices >= (1 << self.n)):
            raise ValueError("vertex id out of range")
        steps = vertices[1:] ^ vertices[:-1]
        if steps.size and (np.any(steps == 0)
                           or not np.all((steps & (steps - 1)) == 0)):
            raise ValueError("consecutive vertices must differ in exactly one bit")
        vertices.setflags(write=False)
        object.__setattr__(self, "vertices", vertices)

    def __len__(self):
        return self.vertices.shape[0]


@dataclass(frozen=True)
class SceneryDistribution:
    """Exact law over sign words of a fixed length; zero-probability words
    are omitted."""

    length: int
    probs: dict

    def __post_init__(self):
        total = Fraction(0)
        for word, pr in self.probs.items():
            if len(word) != self.length:
                raise ValueError(f"word {word} has wrong length")
            if any(s not in (-1, 1) for s in word):
                raise ValueError("words are tuples over -1/+1")
            if pr < 0:
                raise ValueError("negative probability")
            total += pr
        if total != 1:
            raise ValueError(f"probabilities sum to {total}, not 1")

    def prob(self, word) -> Fraction:
        return self.probs.get(tuple(word), Fraction(0))

    def sorted_words(self) -> list:
        # lexicographic with +1 before -1, matching the printed '+' < '-'
        return sorted(self.probs, key=lambda w: tuple(0 if s > 0 else 1 for s in w))


def random_walk(n: int, length: int, seed: int = DEFAULT_SEED,
                start: Optional[int] = None) -> Walk:
    """Simple random walk with `length` steps; uniform start if none given.
    Deterministic given (n, length, seed, start)."""
    if length < 0:
        raise ValueError("length must be >= 0")
    rng = np.random.Generator(np.random.Philox(seed))
    v = int(rng.integers(1 << n)) if start is None else int(start)
    if not 0 <= v < (1 << n):
        raise ValueError("start vertex out of range")
    flips = rng.integers(n, size=length)
    vertices = np.empty(length + 1, dtype=np.int64)
    vertices[0] = v
    for i, c in enumerate(flips):
        v ^= 1 << int(c)
        vertices[i + 1] = v
    return Walk(n, vertices)


def scenery(f: CubeFunction, walk: Walk) -> np.ndarray:
    """The observed color sequence f(S_0), ..., f(S_L)."""
    if f.n != walk.n:
        raise ValueError("dimension mismatch between function and walk")
    return f.table[walk.vertices]


def _feasibility_guard(f: CubeFunction, length: int):
    if length < 0:
        raise ValueError("length must be >= 0")
    if f.n > MAX_N or length > MAX_LEN:
        raise ValueError(
            f"exact distribution limited to n <= {MAX_N}, length <= {MAX_LEN}")


def exact_scenery_distribution(f: CubeFunction, length: int) -> SceneryDistribution:
    """Exact law of the scenery word (f(S_0), ..., f(S_L)) under the
    uniform start, by forward DP over (emitted word, current vertex)."""
    _feasibility_guard(f, length)
    n = f.n
    size = 1 << n
    idx = np.arange(size)
    plus = f.table > 0
    # numerators over vertices; denominator = 2^n * n^step
    states = {}
    for sign, sel in ((1, plus), (-1, ~plus)):
        vec = np.where(sel, 1, 0).astype(np.int64)
        if vec.any():
            states[(sign,)] = vec
    for _ in range(length):
        nxt = {}
        for word, vec in states.items():
            moved = np.zeros(size, dtype=np.int64)
            for i in range(n):
                moved += vec[idx ^ (1 << i)]
            for sign, sel in ((1, plus), (-1, ~plus)):
                child = np.where(sel, moved, 0)
                if child.any():
                    key = word + (sign,)
                    if key in nxt:
                        nxt[key] += child
                    else:
                        nxt[key] = child
        states = nxt
    denom = (1 << n) * n ** length
    probs = {word: Fraction(int(vec.sum()), denom) for word, vec in states.items()}
    return SceneryDistribution(length + 1, probs)


def stability_pair_distribution(f: CubeFunction, length: int) -> SceneryDistribution:
    """Exact law of the agreement word (f(S_0)f(S_1), ..., f(S_{L-1})f(S_L))
    under the uniform start."""
    _feasibility_guard(f, length)
    n = f.n
    size = 1 << n
    idx = np.arange(size)
    states = {(): np.ones(size, dtype=np.int64)}
    for _ in range(length):
        nxt = {}
        for word, vec in states.items():
            same = np.zeros(size, dtype=np.int64)
            diff = np.zeros(size, dtype=np.int64)
            for i in range(n):
                src = vec[idx ^ (1 << i)]
                agree = f.table == f.table[idx ^ (1 << i)]
                same += np.where(agree, src, 0)
                diff += np.where(agree, 0, src)
            for sign, child in ((1, same), (-1, diff)):
                if child.any():
                    key = word + (sign,)
                    if key in nxt:
                        nxt[key] += child
                    else:
                        nxt[key] = child
        states = nxt
    denom = (1 << n) * n ** length
    probs = {word: Fraction(int(vec.sum()), denom) for word, vec in states.items()}
    return SceneryDistribution(length, probs)


def bernoulli_product(p: Fraction, length: int) -> SceneryDistribution:
    """Product law of `length` independent signs with P(+1) = p."""
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"p must be in [0, 1], got {p}")
    if length == 0:
        return SceneryDistribution(0, {(): Fraction(1)})
    probs = {(): Fraction(1)}
    for _ in range(length):
        nxt = {}
        for word, pr in probs.items():
            if p > 0:
                nxt[word + (1,)] = pr * p
            if p < 1:
                nxt[word + (-1,)] = pr * (1 - p)
        probs = nxt
    return SceneryDistribution(length, probs)


def distributions_equal(d1: SceneryDistribution, d2: SceneryDistribution) -> bool:
    """Exact rational equality of two word laws."""
    if d1.length != d2.length:
        raise ValueError("word length mismatch")
    words = set(d1.probs) | set(d2.probs)
    return all(d1.prob(w) == d2.prob(w) for w in words)


@dataclass(frozen=True)
class ChiSquareReport:
    statistic: float
    dof: int
    incompatible: tuple  # observed words the reference gives probability 0


def chi_square_report(sample_counts: dict, reference: SceneryDistribution) -> ChiSquareReport:
    """Pearson statistic of observed word counts against an exact reference
    law. Words with reference probability 0 are reported separately, not
    folded into the statistic."""
    total = sum(sample_counts.values())
    if total < 1:
        raise ValueError("need at least one observation")
    bad = []
    for word, cnt in sample_counts.items():
        if len(word) != reference.length:
            raise ValueError(f"word {word} has wrong length")
        if cnt and reference.prob(word) == 0:
            bad.append(tuple(word))
    stat = 0.0
    dof = -1
    for word, pr in reference.probs.items():
        if pr == 0:
            continue
        exp = float(pr) * total
        obs = sample_counts.get(word, 0)
        stat += (obs - exp) ** 2 / exp
        dof += 1
    return ChiSquareReport(stat, dof, tuple(sorted(bad)))


def sample_scenery_counts(f: CubeFunction, length: int, n_samples: int,
                          seed: int = DEFAULT_SEED) -> dict:
    """Word counts over n_samples independent sampled sceneries."""
    rng = np.random.Generator(np.random.Philox(seed))
    n = f.n
    counts = {}
    starts = rng.integers(1 << n, size=n_samples)
    flips = rng.integers(n, size=(n_samples, length))
    for s in range(n_samples):
        v = int(starts[s])
        word = [int(f.table[v])]
        for c in flips[s]:
            v ^= 1 << int(c)
            word.append(int(f.table[v]))
        key = tuple(word)
        counts[key] = counts.get(key, 0) + 1
    return counts
