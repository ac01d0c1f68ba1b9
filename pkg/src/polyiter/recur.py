"""Exact-rational recursions: the density sequence mu_r, its reciprocal
bounds, the exponential-series coefficient tables v(r, m), the labeled-graph
counts U(r, k) they encode, and the set-partition recursion tying levels
together.

Everything here is Fraction arithmetic; denominators grow roughly like
d**(d**r), so exact levels are capped and large-r questions go through a
certified fixed-point interval recursion instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import BudgetError

# Exact mu levels are refused once the denominator would pass ~8 MB.
MU_EXACT_BIT_CAP = 2**26
# Largest v-table (d**(r+1) + 1 entries) built exactly.
COEFF_TABLE_CAP = 4096


@dataclass(frozen=True)
class MuSequence:
    d: int
    values: tuple[Fraction, ...]

    def __getitem__(self, r: int) -> Fraction:
        return self.values[r]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class CoeffTable:
    """v[m] = coefficient of e^(m*X) in the level-r exponential series."""

    d: int
    r: int
    v: tuple[Fraction, ...]

    def total(self) -> Fraction:
        return sum(self.v, Fraction(0))


@dataclass(frozen=True)
class Partition:
    """A set partition of {1..k}, kept as sorted tuples of sorted blocks."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def t(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def size_multiset_weight(self) -> int:
        """S = product of s_n! where s_n counts blocks of size n."""
        counts: dict[int, int] = {}
        for n in self.sizes:
            counts[n] = counts.get(n, 0) + 1
        out = 1
        for c in counts.values():
            out *= math.factorial(c)
        return out


def _mu_exact_cap(d: int) -> int:
    # denominator bits at level r are ~ d**r * log2(d)
    r = 0
    bits = 1.0
    while bits * math.log2(d) <= MU_EXACT_BIT_CAP:
        r += 1
        bits *= d
    return r


def mu_sequence(d: int, R: int) -> MuSequence:
    """mu_0 = 1 and d*mu_r = 1 - (1 - mu_{r-1})**d, exact rationals."""
    if d < 2:
        raise ValueError("degree must be at least 2")
    if R < 0:
        raise ValueError("level must be nonnegative")
    if R > _mu_exact_cap(d):
        raise BudgetError(
            f"exact mu denominators blow past the bit cap at R={R} (d={d}); "
            "use mu_interval_sequence for large levels"
        )
    values = [Fraction(1)]
    for _ in range(R):
        values.append((1 - (1 - values[-1]) ** d) / d)
    return MuSequence(d=d, values=tuple(values))


def mu_interval_sequence(d: int, R: int, bits: int = 128) -> list[tuple[int, int]]:
    """Certified enclosures of mu_0..mu_R in fixed point at the given scale.

    Entry r is (lo, hi) with lo/2**bits <= mu_r <= hi/2**bits.  Each step
    rounds outward, and the recursion map is a contraction on [0, 1], so the
    enclosure stays a few ulps wide even after thousands of levels.
    """
    if d < 2 or R < 0:
        raise ValueError("need d >= 2 and R >= 0")
    scale = 1 << bits
    lo = hi = scale
    out = [(lo, hi)]
    denom = scale ** (d - 1)
    for _ in range(R):
        t_lo, t_hi = scale - hi, scale - lo
        pow_lo = t_lo**d // denom
        pow_hi = -((-(t_hi**d)) // denom)
        y_lo, y_hi = scale - pow_hi, scale - pow_lo
        lo, hi = y_lo // d, -((-y_hi) // d)
        out.append((lo, hi))
    return out


def asymptotic_table(d: int, R: int) -> list[Fraction]:
    """Exact ratios mu_r * (d-1) * r / 2 for r = 0..R (small R only)."""
    mus = mu_sequence(d, R)
    return [mus[r] * (d - 1) * r / 2 for r in range(R + 1)]


def asymptotic_ratio_bounds(
    d: int, R: int, bits: int = 128
) -> list[tuple[Fraction, Fraction]]:
    """Certified (lo, hi) rational bounds on mu_r * (d-1) * r / 2."""
    scale = 1 << bits
    out = []
    for r, (lo, hi) in enumerate(mu_interval_sequence(d, R, bits)):
        factor = Fraction((d - 1) * r, 2)
        out.append((Fraction(lo, scale) * factor, Fraction(hi, scale) * factor))
    return out


def q_bound_check(d: int, R: int) -> bool:
    """1/mu_r >= (d-1)*r/2 + 1 for all 0 <= r <= R, exact comparison."""
    mus = mu_sequence(d, R)
    return all(1 / mus[r] >= Fraction((d - 1) * r, 2) + 1 for r in range(R + 1))


def q_increment_check(d: int, R: int) -> bool:
    """Each reciprocal density step gains at least (d-1)/2."""
    mus = mu_sequence(d, R)
    half = Fraction(d - 1, 2)
    return all(1 / mus[r + 1] - 1 / mus[r] >= half for r in range(R))


def _convolve(a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return tuple(out)


@lru_cache(maxsize=None)
def e_coeffs(d: int, r: int, table_cap: int = COEFF_TABLE_CAP) -> CoeffTable:
    """Coefficient vector of the level-r exponential series.

    Level -1 is the bare exponential (v[1] = 1).  Each later level is the
    d-fold exponent convolution of the previous vector, divided by d, with
    (d-1)/d added at index 0.
    """
    if d < 2:
        raise ValueError("degree must be at least 2")
    if r < -1:
        raise ValueError("level must be at least -1")
    if d ** (r + 1) > table_cap:
        raise BudgetError(f"coefficient table size d**{r + 1} exceeds cap {table_cap}")
    if r == -1:
        return CoeffTable(d=d, r=r, v=(Fraction(0), Fraction(1)))
    prev = e_coeffs(d, r - 1, table_cap).v
    power = prev
    for _ in range(d - 1):
        power = _convolve(power, prev)
    v = [c / d for c in power]
    v[0] += Fraction(d - 1, d)
    return CoeffTable(d=d, r=r, v=tuple(v))


@lru_cache(maxsize=None)
def u_value(d: int, r: int, k: int) -> int:
    """Number of complete proper labeled graphs at level r on k vertices,
    recovered as the k-th power moment of the coefficient table."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if r == -1:
        return 1
    table = e_coeffs(d, r)
    total = sum(vm * m**k for m, vm in enumerate(table.v))
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(
            f"graph count U({r},{k}) for d={d} came out non-integral: {total}"
        )
    return int(total)


def u_bound_check(d: int, r: int, k: int) -> bool:
    """U(r,k) <= C(k(k-1)/2, k-1) * (r+2)**(k-1) * d**(k-1), exactly."""
    bound = math.comb(k * (k - 1) // 2, k - 1) * (r + 2) ** (k - 1) * d ** (k - 1)
    return u_value(d, r, k) <= bound


def partitions_into_blocks(k: int, t: int) -> list[Partition]:
    """All set partitions of {1..k} into exactly t blocks."""
    out: list[Partition] = []

    def extend(elem: int, blocks: list[list[int]]):
        if elem > k:
            if len(blocks) == t:
                out.append(
                    Partition(tuple(sorted(tuple(b) for b in blocks)))
                )
            return
        # prune: remaining elements cannot fill the missing blocks
        if len(blocks) + (k - elem + 1) < t:
            return
        for b in blocks:
            b.append(elem)
            extend(elem + 1, blocks)
            b.pop()
        if len(blocks) < t:
            blocks.append([elem])
            extend(elem + 1, blocks)
            blocks.pop()

    extend(1, [])
    return out


def block_size_classes(k: int, t: int) -> list[tuple[tuple[int, ...], int]]:
    """Size multisets (descending) of t-block partitions of {1..k}, with the
    number of set partitions in each class: k! / (S * prod of sizes!)."""
    classes: list[tuple[tuple[int, ...], int]] = []

    def descend(remaining: int, max_part: int, parts: list[int]):
        if len(parts) == t:
            if remaining == 0:
                sizes = tuple(parts)
                s_weight = 1
                mult: dict[int, int] = {}
                for n in sizes:
                    mult[n] = mult.get(n, 0) + 1
                for c in mult.values():
                    s_weight *= math.factorial(c)
                prod_fact = math.prod(math.factorial(n) for n in sizes)
                count = math.factorial(k) // (s_weight * prod_fact)
                classes.append((sizes, count))
            return
        slots_left = t - len(parts)
        for part in range(min(max_part, remaining - (slots_left - 1)), 0, -1):
            descend(remaining - part, part, parts + [part])

    descend(k, k, [])
    return classes


def partition_recursion_check(d: int, r: int, k: int) -> bool:
    """Level difference of graph counts vs the partition sum.

    U(r,k) - U(r-1,k) must equal, over 2 <= t <= d and one representative
    per block-size class, class_count * (d-1)!/(d-t)! * prod U(r-1, size).
    """
    if r < 0 or k < 1:
        raise ValueError("need r >= 0 and k >= 1")
    lhs = u_value(d, r, k) - u_value(d, r - 1, k)
    rhs = 0
    for t in range(2, min(d, k) + 1):
        eta_ways = math.factorial(d - 1) // math.factorial(d - t)
        for sizes, count in block_size_classes(k, t):
            prod = math.prod(u_value(d, r - 1, n) for n in sizes)
            rhs += count * eta_ways * prod
    return lhs == rhs
