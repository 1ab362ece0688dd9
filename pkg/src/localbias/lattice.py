"""Periodic colorings of Z^n, Cayley graphs of Z with arbitrary generator
sets, and greedy labelings of regular trees.

A periodic lattice coloring is stored by its cell over the period box,
with coordinate 1 as the slowest (first) axis; a Cayley-Z coloring by one
period of signs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import _kernels
from .cube import CubeFunction


@dataclass(frozen=True)
class PeriodicLatticeFunction:
    """+-1 coloring of Z^n given by a periodic cell."""

    n: int
    periods: tuple
    cell: np.ndarray

    def __post_init__(self):
        periods = tuple(int(p) for p in self.periods)
        if len(periods) != self.n or any(p < 1 for p in periods):
            raise ValueError(f"need {self.n} positive periods, got {periods}")
        cell = np.asarray(self.cell, dtype=np.int8).reshape(periods)
        if not np.all(np.abs(cell) == 1):
            raise ValueError("cell entries must be -1 or +1")
        cell.setflags(write=False)
        object.__setattr__(self, "periods", periods)
        object.__setattr__(self, "cell", cell)


@dataclass(frozen=True)
class CayleyZFunction:
    """+-1 coloring of Cayley(Z, S) given by one period of signs."""

    period: int
    generators: tuple
    pattern: np.ndarray

    def __post_init__(self):
        gens = tuple(sorted(int(s) for s in set(self.generators)))
        if not gens or any(s < 1 for s in gens):
            raise ValueError("generators must be distinct positive integers")
        pattern = np.asarray(self.pattern, dtype=np.int8)
        if pattern.shape != (self.period,) or not np.all(np.abs(pattern) == 1):
            raise ValueError(f"pattern must be {self.period} signs")
        pattern.setflags(write=False)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "pattern", pattern)

    def pattern_string(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.pattern)


def extend_to_lattice(f: CubeFunction) -> PeriodicLatticeFunction:
    """Period-2 coloring of Z^n matching f on residues: residue r_i = 0
    corresponds to cube value +1 in coordinate i. Preserves local bias."""
    n = f.n
    grid = np.indices((2,) * n)
    v = np.zeros((2,) * n, dtype=np.int64)
    for i in range(n):
        v |= grid[i] << i
    return PeriodicLatticeFunction(n, (2,) * n, f.table[v])


def verify_lattice_bias(g: PeriodicLatticeFunction) -> Optional[Fraction]:
    """p such that every lattice point sees exactly p * 2n neighbors
    valued +1 (neighbors r +- e_i, residues mod the periods), or None."""
    counts = np.zeros(g.periods, dtype=np.int64)
    for axis in range(g.n):
        counts += np.roll(g.cell, 1, axis=axis) > 0
        counts += np.roll(g.cell, -1, axis=axis) > 0
    first = int(counts.flat[0])
    if np.all(counts == first):
        return Fraction(first, 2 * g.n)
    return None


def verify_cayley_bias(f: CayleyZFunction) -> Optional[Fraction]:
    """p such that every residue sees exactly p * 2|S| neighbors (r +- s
    for each generator s) valued +1, or None."""
    P = f.period
    r = np.arange(P)
    counts = np.zeros(P, dtype=np.int64)
    for s in f.generators:
        counts += f.pattern[(r + s) % P] > 0
        counts += f.pattern[(r - s) % P] > 0
    first = int(counts[0])
    if np.all(counts == first):
        return Fraction(first, 2 * len(f.generators))
    return None


def cayley_half_biased(a: int, b: int) -> CayleyZFunction:
    """The block coloring of Cayley(Z, {a, b}): +1 on [0, a+b) and -1 on
    [a+b, 2(a+b)) mod 2(a+b). Locally 1/2-biased for any a, b > 1."""
    if a <= 1 or b <= 1 or a == b:
        raise ValueError("requires two distinct generators > 1")
    period = 2 * (a + b)
    pattern = np.where(np.arange(period) < a + b, 1, -1).astype(np.int8)
    f = CayleyZFunction(period, (a, b), pattern)
    if verify_cayley_bias(f) != Fraction(1, 2):
        raise AssertionError("block coloring failed the 1/2-bias check")
    return f


def _primitive_period(bits: tuple) -> int:
    P = len(bits)
    for d in range(1, P):
        if P % d == 0 and bits == bits[d:] + bits[:d]:
            return d
    return P


def _canonical_pattern(bits: tuple) -> tuple:
    """Minimal representative modulo rotation and reflection."""
    P = len(bits)
    candidates = []
    rev = bits[::-1]
    for r in range(P):
        candidates.append(bits[r:] + bits[:r])
        candidates.append(rev[r:] + rev[:r])
    return min(candidates)


def search_cayley(generators, p_max: int, p: Fraction) -> list:
    """All locally p-biased colorings of Cayley(Z, S) with period <= p_max,
    one representative per class modulo translation, reflection and
    repetition of a shorter period. Sorted by (period, pattern)."""
    gens = tuple(sorted(int(s) for s in set(generators)))
    if not gens or any(s < 1 for s in gens):
        raise ValueError("generators must be distinct positive integers")
    if not 1 <= p_max <= 24:
        raise ValueError("period bound must be in 1..24")
    p = Fraction(p)
    target = p * 2 * len(gens)
    if target.denominator != 1:
        return []
    target = int(target)
    offsets = [s for s in gens] + [-s for s in gens]
    found = {}
    for period in range(1, p_max + 1):
        masks = _kernels.cayley_scan(period, np.array(offsets, dtype=np.int64), target)
        for m in masks:
            bits = tuple((int(m) >> r) & 1 for r in range(period))
            if _primitive_period(bits) != period:
                continue
            canon = _canonical_pattern(bits)
            found.setdefault((period, canon), canon)
    out = []
    for (period, canon) in sorted(found):
        pattern = np.array([1 if b else -1 for b in canon], dtype=np.int8)
        out.append(CayleyZFunction(period, gens, pattern))
    return out


# ---------------------------------------------------------------------------
# regular trees

@dataclass(frozen=True)
class TreeLabeling:
    """Signs on the degree-n rooted tree truncated at the given depth,
    stored in BFS order (root first, then each vertex's children in
    order). The root has n children; every other internal vertex n-1."""

    degree: int
    depth: int
    signs: np.ndarray

    def __post_init__(self):
        signs = np.asarray(self.signs, dtype=np.int8)
        if signs.shape != (tree_size(self.degree, self.depth),):
            raise ValueError("sign count does not match the truncated tree")
        if not np.all(np.abs(signs) == 1):
            raise ValueError("signs must be -1 or +1")
        signs.setflags(write=False)
        object.__setattr__(self, "signs", signs)


def tree_level_sizes(degree: int, depth: int) -> list:
    sizes = [1]
    for d in range(1, depth + 1):
        sizes.append(sizes[-1] * (degree if d == 1 else degree - 1))
    return sizes


def tree_size(degree: int, depth: int) -> int:
    return sum(tree_level_sizes(degree, depth))


def _tree_structure(degree: int, depth: int):
    """(parents, children) index arrays for the BFS layout."""
    sizes = tree_level_sizes(degree, depth)
    total = sum(sizes)
    parents = [-1] * total
    children = [[] for _ in range(total)]
    next_free = 1
    frontier = [0]
    for d in range(1, depth + 1):
        new_frontier = []
        for v in frontier:
            nkids = degree if d == 1 else degree - 1
            for _ in range(nkids):
                parents[next_free] = v
                children[v].append(next_free)
                new_frontier.append(next_free)
                next_free += 1
        frontier = new_frontier
    return parents, children


def tree_greedy(degree: int, depth: int, b: int,
                rng: Optional[np.random.Generator] = None) -> TreeLabeling:
    """Greedy labeling in which every vertex above the leaf level sees
    exactly b of its degree-n neighbors labeled +1.

    Deterministic by default (root +1 where feasible, first children fill
    the quota); with an rng, the root is +1 with probability b/n and each
    quota is filled by a random child subset. b = 0 forces the root to -1,
    b = n forces it to +1.
    """
    n = degree
    if n < 3:
        raise ValueError(f"degree must be >= 3, got {n}")
    if depth < 2:
        raise ValueError(f"depth must be >= 2, got {depth}")
    if not 0 <= b <= n:
        raise ValueError(f"quota must be in 0..{n}, got {b}")
    parents, children = _tree_structure(n, depth)
    signs = np.zeros(len(parents), dtype=np.int8)
    if b == 0:
        signs[0] = -1
    elif b == n:
        signs[0] = 1
    elif rng is None:
        signs[0] = 1
    else:
        signs[0] = 1 if rng.random() < b / n else -1
    for v in range(len(parents)):
        kids = children[v]
        if not kids:
            continue
        quota = b - (1 if parents[v] >= 0 and signs[parents[v]] > 0 else 0)
        if not 0 <= quota <= len(kids):
            raise AssertionError(f"infeasible quota {quota} at vertex {v}")
        if rng is None:
            chosen = kids[:quota]
        else:
            chosen = [kids[i] for i in rng.choice(len(kids), size=quota, replace=False)]
        for c in kids:
            signs[c] = 1 if c in chosen else -1
    return TreeLabeling(n, depth, signs)


def verify_tree_quota(labeling: TreeLabeling, b: int) -> bool:
    """True iff every vertex above the leaf level has exactly b +1-labeled
    neighbors."""
    parents, children = _tree_structure(labeling.degree, labeling.depth)
    signs = labeling.signs
    for v in range(len(parents)):
        if not children[v]:
            continue
        count = sum(1 for c in children[v] if signs[c] > 0)
        if parents[v] >= 0 and signs[parents[v]] > 0:
            count += 1
        if count != b:
            return False
    return True
