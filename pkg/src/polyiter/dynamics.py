"""Direct iteration of f(x) = A*x^d + C over the whole of F_p.

Images, orbits, preimage histograms, moments, the factorial-polynomial
zero-count identity, and functional-graph statistics.  Whole-domain passes
are numpy arrays of int64; with p < 2**31 every intermediate product fits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import BudgetError
from .field import FieldParams, field_params

# Default cap on d**N for the factorial polynomial expansion.
DEFAULT_Q_DEGREE_CAP = 16


@dataclass(frozen=True)
class PolyMap:
    params: FieldParams

    @property
    def p(self) -> int:
        return self.params.p

    @property
    def d(self) -> int:
        return self.params.d

    @property
    def A(self) -> int:
        return self.params.A

    @property
    def C(self) -> int:
        return self.params.C

    @property
    def gamma(self) -> int:
        return self.params.gamma


@dataclass(frozen=True)
class OrbitSummary:
    """Tail and cycle of the forward orbit of 0."""

    tail_len: int
    cycle_len: int

    @property
    def collision_index(self) -> int:
        # smallest j with f^j(0) equal to an earlier iterate
        return self.tail_len + self.cycle_len


@dataclass(frozen=True)
class PreimageDistribution:
    """counts[m] = number of x in F_p with f^N(x) = m."""

    counts: np.ndarray
    depth: int

    @property
    def p(self) -> int:
        return len(self.counts)

    def zero_count(self) -> int:
        return int(np.count_nonzero(self.counts == 0))


@dataclass(frozen=True)
class GraphStats:
    """Cycle/tree decomposition summary of the functional graph of f."""

    num_cycles: int
    sum_cycle_lengths: int
    sum_precyclic_path_lengths: int
    max_tail: int


def poly_map(p: int, d: int, A: int, C: int) -> PolyMap:
    return PolyMap(field_params(p, d, A, C))


def eval_map(f: PolyMap, x: int) -> int:
    return (f.A * pow(x % f.p, f.d, f.p) + f.C) % f.p


@lru_cache(maxsize=32)
def _power_table(p: int, d: int) -> np.ndarray:
    """x -> x**d mod p for all residues, square-and-multiply on arrays."""
    base = np.arange(p, dtype=np.int64)
    result = np.ones(p, dtype=np.int64)
    e = d
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    result.setflags(write=False)
    return result


def step_table(f: PolyMap) -> np.ndarray:
    """x -> f(x) for every residue, as one vectorized pass."""
    table = (f.A * _power_table(f.p, f.d) + f.C) % f.p
    table.setflags(write=False)
    return table


def apply_map_to_domain(f: PolyMap, N: int) -> np.ndarray:
    """Array of f^N(x) for all x, built by N successive full-domain passes."""
    if N < 0:
        raise ValueError("depth must be nonnegative")
    arr = np.arange(f.p, dtype=np.int64)
    if N == 0:
        return arr
    table = step_table(f)
    for _ in range(N):
        arr = table[arr]
    return arr


def image_size(f: PolyMap, N: int) -> int:
    arr = apply_map_to_domain(f, N)
    return int(np.count_nonzero(np.bincount(arr, minlength=f.p)))


def preimage_distribution(f: PolyMap, N: int) -> PreimageDistribution:
    arr = apply_map_to_domain(f, N)
    counts = np.bincount(arr, minlength=f.p)
    counts.setflags(write=False)
    return PreimageDistribution(counts=counts, depth=N)


def moment_w(f: PolyMap, N: int, k: int) -> int:
    """W(N, k) = sum over m of rho_N(m)**k, with 0**0 = 1 (so W(N,0) = p)."""
    if k < 0:
        raise ValueError("moment order must be nonnegative")
    counts = preimage_distribution(f, N).counts
    # Python ints: counts reach d**N, so counts**k overflows int64 quickly.
    return sum(int(c) ** k for c in counts)


def orbit_of_zero(f: PolyMap) -> OrbitSummary:
    """Brent's scheme: power-of-two teleports find the period, then a
    synchronized scan finds the tail.  Constant memory."""
    power = lam = 1
    tortoise, hare = 0, eval_map(f, 0)
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        hare = eval_map(f, hare)
        lam += 1
    tortoise = hare = 0
    for _ in range(lam):
        hare = eval_map(f, hare)
    mu = 0
    while tortoise != hare:
        tortoise = eval_map(f, tortoise)
        hare = eval_map(f, hare)
        mu += 1
    return OrbitSummary(tail_len=mu, cycle_len=lam)


def check_precondition(f: PolyMap, N: int) -> bool:
    """True iff 0, f(0), ..., f^N(0) are pairwise distinct."""
    if N < 0:
        raise ValueError("depth must be nonnegative")
    seen = set()
    x = 0
    for _ in range(N + 1):
        if x in seen:
            return False
        seen.add(x)
        x = eval_map(f, x)
    return True


@lru_cache(maxsize=None)
def q_coeffs(d: int, N: int, degree_cap: int = DEFAULT_Q_DEGREE_CAP) -> tuple[Fraction, ...]:
    """Exact coefficients of (1/D!) * prod_{j=1..D} (j - T) with D = d**N.

    The polynomial is 1 at T=0 and 0 at T=1..D, which turns moment sums
    into exact zero-preimage counts.
    """
    D = d**N
    if D > degree_cap:
        raise BudgetError(f"factorial polynomial degree {D} exceeds cap {degree_cap}")
    # integer expansion of prod (j - T), then divide by D!
    coeffs = [1]
    for j in range(1, D + 1):
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += j * c
            nxt[i + 1] -= c
        coeffs = nxt
    fact = math.factorial(D)
    return tuple(Fraction(c, fact) for c in coeffs)


def zero_count_identity(
    f: PolyMap, N: int, degree_cap: int = DEFAULT_Q_DEGREE_CAP
) -> tuple[int, Fraction]:
    """(direct, via_q): unhit residues counted directly, and the same count
    recovered as sum_k C_k * W(N, k).  The contract is via_q == direct."""
    dist = preimage_distribution(f, N)
    direct = dist.zero_count()
    coeffs = q_coeffs(f.d, N, degree_cap)
    moments = [sum(int(c) ** k for c in dist.counts) for k in range(len(coeffs))]
    via_q = sum(ck * wk for ck, wk in zip(coeffs, moments))
    return direct, via_q


def _stats_from_table(table: np.ndarray) -> GraphStats:
    """Decompose a functional graph given its successor table.

    Single pass with an explicit path stack: every vertex is classified as
    cyclic (distance 0) or assigned its distance to the first cyclic vertex.
    """
    p = len(table)
    UNSEEN, ON_PATH = -1, -2
    # dist[x] >= 0 once classified; cyclic vertices have dist 0
    dist = [UNSEEN] * p
    cyclic = bytearray(p)
    num_cycles = 0
    sum_cycle = 0
    for start in range(p):
        if dist[start] != UNSEEN:
            continue
        path = []
        x = start
        while dist[x] == UNSEEN:
            dist[x] = ON_PATH
            path.append(x)
            x = int(table[x])
        if dist[x] == ON_PATH:
            # new cycle: from the first occurrence of x on the path to its end
            cut = path.index(x)
            cycle_len = len(path) - cut
            num_cycles += 1
            sum_cycle += cycle_len
            for v in path[cut:]:
                dist[v] = 0
                cyclic[v] = 1
            path = path[:cut]
            base = 0
        else:
            base = dist[x]
        for i, v in enumerate(reversed(path)):
            dist[v] = base + i + 1
    indegree = np.bincount(table, minlength=p)
    sources = np.flatnonzero(indegree == 0)
    dist_arr = np.asarray(dist, dtype=np.int64)
    if sources.size:
        source_dists = dist_arr[sources]
        sum_pre = int(source_dists.sum())
        max_tail = int(source_dists.max())
    else:
        sum_pre = 0
        max_tail = 0
    return GraphStats(
        num_cycles=num_cycles,
        sum_cycle_lengths=sum_cycle,
        sum_precyclic_path_lengths=sum_pre,
        max_tail=max_tail,
    )


def functional_graph_stats(f: PolyMap) -> GraphStats:
    return _stats_from_table(step_table(f))
