"""Exhaustive and backtracking enumeration of locally biased/stable
functions on small cubes, isomorphism-class grouping, the permissible-p
characterization, and the combinatorial counting identities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt
from typing import Optional

import numpy as np

from .cube import CubeFunction, canonical_form

ORACLE_MAX_N = 4       # 2^(2^n) truth tables scanned outright
BACKTRACK_MAX_N = 5


def permissible_p(n: int) -> set:
    """All p = b/2^k with 2^k dividing n, as lowest-term fractions.
    Exactly the bias values realizable on the n-cube."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    out = set()
    k = 0
    while n % (1 << k) == 0:
        for b in range((1 << k) + 1):
            out.add(Fraction(b, 1 << k))
        k += 1
    return out


@dataclass
class EnumerationReport:
    """Result of enumerating constant-profile functions on the n-cube."""

    n: int
    kind: str                      # 'biased' | 'stable'
    p: Optional[Fraction]          # None = all constant-profile functions
    total_functions: int
    class_representatives: list = field(default_factory=list)
    nodes_visited: int = 0

    def found_p_values(self) -> set:
        from .cube import is_locally_biased, is_locally_stable
        check = is_locally_biased if self.kind == "biased" else is_locally_stable
        return {check(f) for f in self.class_representatives}


def _oracle_tables(n: int, kind: str) -> np.ndarray:
    """All +-1 truth tables on the n-cube with a constant profile of the
    given kind, as a (count, 2^n) array. Scans all 2^(2^n) tables."""
    size = 1 << n
    ntab = 1 << size
    arr = ((np.arange(ntab, dtype=np.int64)[:, None] >> np.arange(size)) & 1)
    tables = np.where(arr == 0, 1, -1).astype(np.int8)
    counts = np.zeros((ntab, size), dtype=np.int8)
    cols = np.arange(size)
    for i in range(n):
        nb = tables[:, cols ^ (1 << i)]
        if kind == "biased":
            counts += nb > 0
        else:
            counts += nb == tables
    constant = np.all(counts == counts[:, :1], axis=1)
    return tables[constant]


def _backtrack_tables(n: int, kind: str) -> tuple:
    """Backtracking enumeration: assign vertex values in BFS order from
    vertex 0, pruning as soon as any fully-decided neighborhood breaks the
    constant-profile constraint. Returns (tables, nodes visited)."""
    size = 1 << n
    order = sorted(range(size), key=lambda v: (bin(v).count("1"), v))
    rank = [0] * size
    for i, v in enumerate(order):
        rank[v] = i
    nbrs = [[v ^ (1 << i) for i in range(n)] for v in range(size)]

    results = []
    nodes = 0

    for m in range(n + 1):
        values = [0] * size  # 0 undecided, else +-1

        def feasible(v) -> bool:
            # constraint at v for the current target count m
            if kind == "biased":
                decided = [values[w] for w in nbrs[v] if values[w] != 0]
                plus = sum(1 for s in decided if s > 0)
                undecided = n - len(decided)
            else:
                if values[v] == 0:
                    return True
                decided = [values[w] for w in nbrs[v] if values[w] != 0]
                plus = sum(1 for s in decided if s == values[v])
                undecided = n - len(decided)
            return plus <= m <= plus + undecided

        def check_around(v) -> bool:
            # v was just assigned: re-check v and all its neighbors
            if not feasible(v):
                return False
            return all(feasible(w) for w in nbrs[v])

        def rec(i):
            nonlocal nodes
            if i == size:
                results.append(np.array(values, dtype=np.int8))
                return
            v = order[i]
            for s in (1, -1):
                nodes += 1
                values[v] = s
                if check_around(v):
                    rec(i + 1)
                values[v] = 0

        rec(0)

    tables = np.array(results) if results else np.empty((0, size), dtype=np.int8)
    return tables, nodes


def _enumerate(n: int, kind: str, p: Optional[Fraction], mode: str) -> EnumerationReport:
    if mode == "oracle":
        if n > ORACLE_MAX_N:
            raise ValueError(f"oracle mode scans 2^(2^n) tables; n <= {ORACLE_MAX_N} required")
        tables = _oracle_tables(n, kind)
        nodes = int(1 << (1 << n))
    elif mode == "backtrack":
        if n > BACKTRACK_MAX_N:
            raise ValueError(f"backtracking enumeration requires n <= {BACKTRACK_MAX_N}")
        tables, nodes = _backtrack_tables(n, kind)
    else:
        raise ValueError(f"unknown enumeration mode {mode!r}")

    funcs = [CubeFunction(n, t) for t in tables]
    if p is not None:
        from .cube import is_locally_biased, is_locally_stable
        check = is_locally_biased if kind == "biased" else is_locally_stable
        funcs = [f for f in funcs if check(f) == p]
    classes = {}
    for f in funcs:
        rep = canonical_form(f)
        classes.setdefault(rep.table.tobytes(), rep)
    reps = [classes[key] for key in sorted(classes)]
    return EnumerationReport(n, kind, p, len(funcs), reps, nodes)


def enumerate_locally_biased(n: int, p: Optional[Fraction] = None,
                             mode: str = "backtrack") -> EnumerationReport:
    """All functions with a constant bias profile (optionally of bias p),
    grouped into isomorphism classes by canonical form."""
    return _enumerate(n, "biased", p, mode)


def enumerate_locally_stable(n: int, p: Optional[Fraction] = None,
                             mode: str = "backtrack") -> EnumerationReport:
    """All functions with a constant stability profile (optionally of
    stability p), grouped into isomorphism classes."""
    return _enumerate(n, "stable", p, mode)


def count_partitions(j: int) -> int:
    """Number of integer partitions of j (p(0) = 1); exact DP."""
    if j < 0:
        raise ValueError(f"partition argument must be >= 0, got {j}")
    dp = [0] * (j + 1)
    dp[0] = 1
    for part in range(1, j + 1):
        for total in range(part, j + 1):
            dp[total] += dp[total - part]
    return dp[j]


def count_solutions_leq(k: int) -> int:
    """Number of nonnegative integer solutions of
    a_1 + 2 a_2 + ... + k a_k <= k. Equals sum_{j<=k} p(j)."""
    if k < 0:
        raise ValueError(f"bound must be >= 0, got {k}")
    dp = [0] * (k + 1)
    dp[0] = 1
    for part in range(1, k + 1):
        for total in range(part, k + 1):
            dp[total] += dp[total - part]
    return sum(dp)


def half_biased_lower_bound(n: int) -> tuple:
    """(exact, bound): exact count of solutions of
    4 a_1 + 8 a_2 + ... + 4k a_k <= n with k = n // 4, and the closed-form
    lower bound C(2 floor(sqrt k), floor(sqrt k)). exact >= bound."""
    if n < 4 or n % 2:
        raise ValueError(f"needs an even n >= 4, got {n}")
    k = n // 4
    budget = n // 4  # 4*sum(i a_i) <= n  <=>  sum(i a_i) <= n/4
    dp = [0] * (budget + 1)
    dp[0] = 1
    for part in range(1, k + 1):
        for total in range(part, budget + 1):
            dp[total] += dp[total - part]
    exact = sum(dp)
    r = isqrt(k)
    bound = comb(2 * r, r) if r >= 1 else 1
    return exact, bound


def null_space_dimension(n: int) -> int:
    """Dimension of the kernel of the n-cube adjacency matrix: C(n, n/2)."""
    if n % 2:
        raise ValueError(f"the kernel is trivial for odd n; got {n}")
    return comb(n, n // 2)


def adjacency_kernel_dimension(n: int) -> int:
    """Independent check of null_space_dimension: exact rational rank of
    the 2^n x 2^n adjacency matrix (kernel dim = 2^n - rank). Keep n small."""
    size = 1 << n
    rows = [[Fraction(1) if bin(v ^ w).count("1") == 1 else Fraction(0)
             for w in range(size)] for v in range(size)]
    rank = 0
    col = 0
    for col in range(size):
        pivot = next((r for r in range(rank, size) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(size):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return size - rank
