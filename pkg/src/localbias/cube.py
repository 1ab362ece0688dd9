"""Boolean functions on the hypercube: truth tables, local bias/stability
profiles, exact Walsh spectra, automorphisms and isomorphism testing.

Conventions (shared by every module and file format):
  * vertex id v in [0, 2^n); coordinate x_i of v is +1 when bit (i-1) of v
    is 0, and -1 when that bit is 1.
  * Walsh coefficients are kept as exact integers c_S = sum_v f(v) chi_S(v);
    the usual Fourier coefficient is c_S / 2^n.
  * an automorphism (perm, flips) acts on a point by first negating the
    flipped coordinates and then moving coordinate i to position perm[i].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from . import _kernels

#: largest dimension for which full-orbit (2^n * n!) searches run by default
DEFAULT_EXACT_BOUND = 5

#: default node budget for the certificate-mode backtracking search
DEFAULT_NODE_BUDGET = 200_000


@dataclass(frozen=True)
class CubeFunction:
    """A {-1,+1}-valued function on the n-dimensional hypercube."""

    n: int
    table: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")
        table = np.asarray(self.table, dtype=np.int8)
        if table.shape != (1 << self.n,):
            raise ValueError(
                f"table length {table.shape} does not match 2^{self.n}")
        if not np.all(np.abs(table) == 1):
            raise ValueError("table entries must be -1 or +1")
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    def __eq__(self, other):
        if not isinstance(other, CubeFunction):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.n, self.table.tobytes()))

    def support_size(self) -> int:
        """Number of vertices on which the function is +1."""
        return int(np.count_nonzero(self.table > 0))

    def negated(self) -> "CubeFunction":
        return CubeFunction(self.n, -self.table)

    def __call__(self, v: int) -> int:
        return int(self.table[v])


@dataclass(frozen=True)
class CubeAutomorphism:
    """Hypercube symmetry: coordinate sign flips followed by a permutation.

    perm is a tuple of length n with perm[i-1] = the position coordinate i
    is moved to (1-based); flips is an n-bit mask, bit (i-1) set meaning
    coordinate i is negated before permuting.
    """

    perm: tuple
    flips: int

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError(f"perm {self.perm} is not a permutation of 1..{n}")
        if not 0 <= self.flips < (1 << n):
            raise ValueError("flips mask out of range")

    @property
    def n(self) -> int:
        return len(self.perm)

    @staticmethod
    def identity(n: int) -> "CubeAutomorphism":
        return CubeAutomorphism(tuple(range(1, n + 1)), 0)

    def vertex_map(self) -> np.ndarray:
        """Array m with m[v] = image of vertex v under this automorphism."""
        n = self.n
        v = np.arange(1 << n)
        w = v ^ self.flips
        img = np.zeros_like(v)
        for i in range(n):
            img |= ((w >> i) & 1) << (self.perm[i] - 1)
        return img

    def compose(self, other: "CubeAutomorphism") -> "CubeAutomorphism":
        """Automorphism acting as self after other (self o other on points)."""
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        n = self.n
        perm = tuple(self.perm[other.perm[i] - 1] for i in range(n))
        # pull self's flips back through other's permutation
        pulled = 0
        for i in range(n):
            if (self.flips >> (other.perm[i] - 1)) & 1:
                pulled |= 1 << i
        return CubeAutomorphism(perm, other.flips ^ pulled)


@dataclass(frozen=True)
class LocalProfile:
    """Per-vertex neighbor counts: +1 neighbors (bias) or agreeing neighbors
    (stability)."""

    kind: str
    n: int
    counts: np.ndarray

    def __post_init__(self):
        if self.kind not in ("bias", "stability"):
            raise ValueError(f"unknown profile kind {self.kind!r}")
        counts = np.asarray(self.counts, dtype=np.int64)
        counts.setflags(write=False)
        object.__setattr__(self, "counts", counts)

    def constant_fraction(self) -> Optional[Fraction]:
        """count/n in lowest terms if the profile is constant, else None."""
        first = int(self.counts[0])
        if np.all(self.counts == first):
            return Fraction(first, self.n)
        return None

    def histogram(self) -> tuple:
        return tuple(int(c) for c in np.bincount(self.counts, minlength=self.n + 1))


@dataclass(frozen=True)
class WalshSpectrum:
    """Integer-scaled Walsh coefficients c_S, indexed by the subset bitmask S."""

    n: int
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=np.int64)
        if coeffs.shape != (1 << self.n,):
            raise ValueError("coefficient array length does not match 2^n")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    def coeff(self, mask: int) -> int:
        return int(self.coeffs[mask])

    def support(self) -> list:
        """Masks of the nonzero coefficients, ascending."""
        return [int(s) for s in np.nonzero(self.coeffs)[0]]

    def parseval_sum(self) -> int:
        return int(np.sum(self.coeffs.astype(object) ** 2))


def neighbors(v: int, n: int) -> list:
    """The n single-bit-flip neighbors of vertex v, in coordinate order."""
    if not 0 <= v < (1 << n):
        raise ValueError(f"vertex {v} out of range for dimension {n}")
    return [v ^ (1 << i) for i in range(n)]


def local_profile(f: CubeFunction, kind: str) -> LocalProfile:
    """Neighbor count profile of f; kind is 'bias' or 'stability'."""
    if kind == "bias":
        counts = _kernels.bias_counts(f.table, f.n)
    elif kind == "stability":
        counts = _kernels.stability_counts(f.table, f.n)
    else:
        raise ValueError(f"unknown profile kind {kind!r}")
    return LocalProfile(kind, f.n, counts)


def is_locally_biased(f: CubeFunction) -> Optional[Fraction]:
    """p such that every vertex has exactly p*n neighbors valued +1, or None."""
    return local_profile(f, "bias").constant_fraction()


def is_locally_stable(f: CubeFunction) -> Optional[Fraction]:
    """p such that every vertex agrees with exactly p*n neighbors, or None."""
    return local_profile(f, "stability").constant_fraction()


def walsh_transform(f: CubeFunction) -> WalshSpectrum:
    """Exact integer Walsh spectrum: c_S = sum_v f(v) * (-1)^popcount(v & S)."""
    coeffs = _kernels.fwht_rows(f.table.astype(np.int64))
    return WalshSpectrum(f.n, coeffs)


def walsh_inverse(spec: WalshSpectrum) -> CubeFunction:
    """Reconstruct the +-1 truth table; raises if the spectrum is not Boolean."""
    scaled = _kernels.fwht_rows(spec.coeffs.copy())
    size = 1 << spec.n
    if np.any(scaled % size):
        raise ValueError("spectrum does not correspond to a +-1 function")
    table = scaled // size
    if not np.all(np.abs(table) == 1):
        raise ValueError("spectrum does not correspond to a +-1 function")
    return CubeFunction(spec.n, table.astype(np.int8))


def degree_weight(spec: WalshSpectrum, d: int) -> Fraction:
    """Fourier weight at degree d: sum over |S| = d of (c_S / 2^n)^2."""
    if not 0 <= d <= spec.n:
        raise ValueError(f"degree {d} out of range for dimension {spec.n}")
    masks = np.arange(1 << spec.n)
    sel = _popcounts(spec.n) == d
    total = int(np.sum(spec.coeffs[sel].astype(object) ** 2))
    return Fraction(total, 4 ** spec.n)


@lru_cache(maxsize=None)
def _popcounts(n: int) -> np.ndarray:
    masks = np.arange(1 << n, dtype=np.uint32)
    counts = np.zeros(1 << n, dtype=np.int8)
    for i in range(n):
        counts += ((masks >> i) & 1).astype(np.int8)
    return counts


def apply_automorphism(f: CubeFunction, a: CubeAutomorphism) -> CubeFunction:
    """f composed with the automorphism: result(v) = f(a(v)).

    Composition law: apply(apply(f, a), b) == apply(f, a.compose(b)).
    """
    if f.n != a.n:
        raise ValueError("dimension mismatch between function and automorphism")
    return CubeFunction(f.n, f.table[a.vertex_map()])


def all_automorphisms(n: int) -> Iterator[CubeAutomorphism]:
    """All 2^n * n! hypercube automorphisms, in a fixed deterministic order."""
    for perm in itertools.permutations(range(1, n + 1)):
        for flips in range(1 << n):
            yield CubeAutomorphism(perm, flips)


@lru_cache(maxsize=8)
def _all_vertex_maps(n: int) -> np.ndarray:
    maps = [a.vertex_map() for a in all_automorphisms(n)]
    return np.array(maps)


def canonical_form(f: CubeFunction, exact_bound: int = DEFAULT_EXACT_BOUND) -> CubeFunction:
    """Lexicographically minimal truth table over the automorphism orbit
    (entries ordered -1 < +1). Constant across the isomorphism class."""
    if f.n > exact_bound:
        raise ValueError(
            f"canonical_form requires n <= {exact_bound}, got {f.n}")
    orbit = f.table[_all_vertex_maps(f.n)]
    keys = ((orbit > 0).astype(np.uint8))
    best = np.lexsort(keys.T[::-1])[0]
    return CubeFunction(f.n, orbit[best])


@dataclass(frozen=True)
class IsomorphismVerdict:
    status: str  # 'isomorphic' | 'non-isomorphic' | 'unknown'
    witness: Optional[CubeAutomorphism] = None
    certificate: Optional[str] = None

    def __bool__(self):
        return self.status == "isomorphic"


def _invariants(f: CubeFunction) -> dict:
    spec = walsh_transform(f)
    pc = _popcounts(f.n)
    by_degree = {}
    for d in range(f.n + 1):
        vals = sorted(int(abs(c)) for c in spec.coeffs[pc == d] if c)
        if vals:
            by_degree[d] = tuple(vals)
    supp = spec.support()
    inter = sorted(
        (int(_popcounts(f.n)[s & t]),
         min(abs(spec.coeff(s)), abs(spec.coeff(t))),
         max(abs(spec.coeff(s)), abs(spec.coeff(t))))
        for s, t in itertools.combinations(supp, 2))
    return {
        "support size": f.support_size(),
        "bias profile histogram": local_profile(f, "bias").histogram(),
        "stability profile histogram": local_profile(f, "stability").histogram(),
        "per-degree |c_S| multisets": by_degree,
        "Walsh support size": len(supp),
        "Walsh support intersection pattern": tuple(inter),
    }


def _backtrack_isomorphic(f, g, node_budget):
    """Search for (perm, flips) with f o psi = g, pruning with degree-1/2
    coefficients; returns verdict."""
    n = f.n
    cf = walsh_transform(f).coeffs
    cg = walsh_transform(g).coeffs
    nodes = 0

    def coeff_ok(perm, flip_bits, i):
        # check degree-1 and degree-2 constraints involving coordinate i+1
        # perm/flip_bits are 0-based partial assignments of length i+1
        s_g = 1 << i
        s_f = 1 << perm[i]
        sign_i = -1 if flip_bits[i] else 1
        if cg[s_g] != sign_i * cf[s_f]:
            return False
        for j in range(i):
            s_g2 = (1 << i) | (1 << j)
            s_f2 = (1 << perm[i]) | (1 << perm[j])
            sign = sign_i * (-1 if flip_bits[j] else 1)
            if cg[s_g2] != sign * cf[s_f2]:
                return False
        return True

    perm = [0] * n
    flip_bits = [0] * n
    used = [False] * n

    def rec(i):
        nonlocal nodes
        if i == n:
            a = CubeAutomorphism(tuple(p + 1 for p in perm),
                                 sum(1 << j for j in range(n) if flip_bits[j]))
            if apply_automorphism(f, a) == g:
                return a
            return None
        for target in range(n):
            if used[target]:
                continue
            for bit in (0, 1):
                nodes += 1
                if nodes > node_budget:
                    raise _BudgetExhausted
                perm[i] = target
                flip_bits[i] = bit
                if not coeff_ok(perm, flip_bits, i):
                    continue
                used[target] = True
                found = rec(i + 1)
                used[target] = False
                if found is not None:
                    return found
        return None

    try:
        witness = rec(0)
    except _BudgetExhausted:
        return IsomorphismVerdict("unknown",
                                  certificate=f"node budget {node_budget} exhausted")
    if witness is not None:
        return IsomorphismVerdict("isomorphic", witness=witness)
    return IsomorphismVerdict(
        "non-isomorphic",
        certificate="backtracking search over all sign/permutation assignments found no witness")


class _BudgetExhausted(Exception):
    pass


def are_isomorphic(f: CubeFunction, g: CubeFunction,
                   exact_bound: int = DEFAULT_EXACT_BOUND,
                   node_budget: int = DEFAULT_NODE_BUDGET) -> IsomorphismVerdict:
    """Decide whether g = f o psi for some hypercube automorphism psi.

    For n <= exact_bound the full orbit (2^n * n! automorphisms) is searched
    and the answer is never 'unknown'. Above the bound, isomorphism
    invariants are compared first (a mismatch yields a certificate), then a
    budgeted backtracking search over coordinate assignments runs.
    """
    if f.n != g.n:
        raise ValueError("dimension mismatch")
    n = f.n
    if n <= exact_bound:
        gt = g.table
        for a, vmap in zip(all_automorphisms(n), _all_vertex_maps(n)):
            if np.array_equal(f.table[vmap], gt):
                return IsomorphismVerdict("isomorphic", witness=a)
        return IsomorphismVerdict(
            "non-isomorphic",
            certificate=f"exhausted all {(1 << n) * _factorial(n)} automorphisms")
    inv_f = _invariants(f)
    inv_g = _invariants(g)
    for name in inv_f:
        if inv_f[name] != inv_g[name]:
            return IsomorphismVerdict(
                "non-isomorphic",
                certificate=f"{name} differs: {inv_f[name]} vs {inv_g[name]}")
    return _backtrack_isomorphic(f, g, node_budget)


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out
