"""Brute-force point counts on the projective varieties cut out by iterate
equations, chart by chart: the affine chart (x0 = 1) is a full k-dimensional
scan, the plane at infinity (x0 = 0) is scanned with the first nonzero
coordinate normalized to 1.  Exactness over cleverness; budget guards keep
the scans at desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .dynamics import PolyMap, apply_map_to_domain, moment_w
from .errors import BudgetError
from .graphs import IterGraph, enumerate_complete_proper

# Largest prime per tuple size; beyond this the chart scans stop being desk scale.
MAX_P_BY_K = {1: 211, 2: 211, 3: 101}


@dataclass(frozen=True)
class PhiSpec:
    """Which factor of the iterate difference: level >= 0 with a twist in
    [1, d-1], or level -1 (the plain difference) with twist 0."""

    level: int
    twist: int

    def check(self, d: int) -> None:
        if self.level == -1:
            if self.twist != 0:
                raise ValueError("level -1 requires twist 0")
        elif self.level >= 0:
            if not (1 <= self.twist <= d - 1):
                raise ValueError(f"twist must be in [1, {d - 1}] for level >= 0")
        else:
            raise ValueError("level must be >= -1")


@dataclass(frozen=True)
class ProjectivePointSet:
    affine: frozenset[tuple[int, ...]]
    infinity: frozenset[tuple[int, ...]]

    @property
    def affine_count(self) -> int:
        return len(self.affine)

    @property
    def infinity_count(self) -> int:
        return len(self.infinity)

    @property
    def total(self) -> int:
        return self.affine_count + self.infinity_count

    def all_points(self) -> frozenset[tuple[int, ...]]:
        return self.affine | self.infinity


@dataclass(frozen=True)
class WeilReport:
    total: int
    deviation: float
    bound: int

    @property
    def ok(self) -> bool:
        return self.deviation <= self.bound


@dataclass(frozen=True)
class IntersectionReport:
    common: int
    bound: int
    sets_differ: bool

    @property
    def ok(self) -> bool:
        return self.common <= self.bound


@dataclass(frozen=True)
class DecompositionReport:
    p: int
    d: int
    N: int
    k: int
    union_total: int
    cr_total: int
    cr_affine: int
    w_value: int
    formula_infinity_term: int
    direct_infinity_count: int
    union_equals_cr: bool
    affine_equals_w: bool


@dataclass(frozen=True)
class ProbeReport:
    count: int
    deviation: float
    bound: float
    verdict: str  # CONSISTENT or SUSPICIOUS


def homogeneous_iterate(f: PolyMap, x: int, z: int, level: int) -> int:
    """F applied level times to (x, z): the degree-d**level homogenization
    of the affine iterate, via F_{i+1} = A*F_i**d + C*z**(d**(i+1))."""
    p = f.p
    value = x % p
    zpow = z % p
    for _ in range(level):
        zpow = pow(zpow, f.d, p)
        value = (f.A * pow(value, f.d, p) + f.C * zpow) % p
    return value


def phi_eval(f: PolyMap, spec: PhiSpec, x: int, y: int, z: int) -> int:
    """Value of the homogenized twisted difference at (x, y, z)."""
    spec.check(f.d)
    p = f.p
    if spec.level == -1:
        return (x - y) % p
    fx = homogeneous_iterate(f, x, z, spec.level)
    fy = homogeneous_iterate(f, y, z, spec.level)
    return (fx - pow(f.gamma, spec.twist, p) * fy) % p


@lru_cache(maxsize=64)
def _infinity_table_cached(p: int, d: int, A: int, level: int):
    # F^level(x, 0): the constant term drops out, leaving a scaled power map
    value = np.arange(p, dtype=np.int64)
    for _ in range(level):
        acc = np.ones(p, dtype=np.int64)
        powv = value
        e = d
        while e:
            if e & 1:
                acc = acc * powv % p
            powv = powv * powv % p
            e >>= 1
        value = A * acc % p
    value.setflags(write=False)
    return value


def _iterate_table(f: PolyMap, level: int, at_infinity: bool) -> np.ndarray:
    """x -> F^level(x, 1) (affine) or F^level(x, 0) (infinity) for all x."""
    if at_infinity:
        return _infinity_table_cached(f.p, f.d, f.A, level)
    return apply_map_to_domain(f, level)


def _check_budget(p: int, k: int) -> None:
    if k not in MAX_P_BY_K:
        raise BudgetError(f"point counting supports k <= 3, got k={k}")
    if p > MAX_P_BY_K[k]:
        raise BudgetError(f"p={p} exceeds point-counting budget {MAX_P_BY_K[k]} for k={k}")


def _edge_condition(
    f: PolyMap, xi: int, eta_ab: int, at_infinity: bool
) -> np.ndarray:
    """Boolean table cond[xa, xb] for one edge equation on a chart."""
    p = f.p
    if xi == -1:
        idx = np.arange(p)
        return np.equal.outer(idx, idx)
    tab = _iterate_table(f, xi, at_infinity)
    twisted = pow(f.gamma, eta_ab, p) * tab % p
    return np.equal.outer(tab, twisted)


def _infinity_reps(p: int, k: int):
    """Normalized coordinates (x1..xk) on the x0 = 0 chart: leading zeros,
    then a 1, then free residues."""
    for lead in range(1, k + 1):
        prefix = (0,) * (lead - 1) + (1,)
        free = k - lead
        if free == 0:
            yield prefix
        else:
            for rest in np.ndindex(*(p,) * free):
                yield prefix + tuple(int(t) for t in rest)


def _mask_points(mask: np.ndarray) -> frozenset[tuple[int, ...]]:
    return frozenset((1, *map(int, coords)) for coords in np.argwhere(mask))


def count_curve_points(f: PolyMap, g: IterGraph) -> ProjectivePointSet:
    """Exact projective point set of the variety attached to a labeled graph."""
    k, p = g.k, f.p
    _check_budget(p, k)
    edges = [((a, b), g.xi(a, b), g.eta(a, b)) for (a, b) in g.edge_pairs()]

    mask = np.ones((p,) * k, dtype=bool)
    for (a, b), xi, eta in edges:
        cond = _edge_condition(f, xi, eta, at_infinity=False)
        # place the (xa, xb) condition on grid axes a-1 < b-1; a C-order
        # reshape inserts the singleton axes without reordering the two live ones
        shape = [1] * k
        shape[a - 1] = p
        shape[b - 1] = p
        mask = mask & cond.reshape(shape)
    affine = _mask_points(mask)

    inf_tables = {
        xi: _iterate_table(f, xi, at_infinity=True) for _, xi, _ in edges if xi >= 0
    }
    gamma_pows = {eta: pow(f.gamma, eta, p) for _, _, eta in edges}
    infinity = set()
    for coords in _infinity_reps(p, k):
        ok = True
        for (a, b), xi, eta in edges:
            xa, xb = coords[a - 1], coords[b - 1]
            if xi == -1:
                if xa != xb:
                    ok = False
                    break
            else:
                tab = inf_tables[xi]
                if tab[xa] != gamma_pows[eta] * tab[xb] % p:
                    ok = False
                    break
        if ok:
            infinity.add((0, *coords))
    return ProjectivePointSet(affine=affine, infinity=frozenset(infinity))


def count_cr_points(f: PolyMap, N: int, k: int) -> ProjectivePointSet:
    """Exact projective point set of the equal-N-th-iterates system."""
    p = f.p
    _check_budget(p, k)
    arr = apply_map_to_domain(f, N)
    if k == 1:
        mask = np.ones(p, dtype=bool)
    else:
        eq = np.equal.outer(arr, arr)
        mask = eq
        for extra in range(3, k + 1):
            shape_lhs = [p] * (extra - 1) + [1]
            shape_rhs = [p] + [1] * (extra - 2) + [p]
            mask = mask.reshape(shape_lhs) & eq.reshape(shape_rhs)
    affine = _mask_points(mask)

    tab = _iterate_table(f, N, at_infinity=True)
    infinity = set()
    for coords in _infinity_reps(p, k):
        vals = {int(tab[c]) for c in coords}
        if len(vals) == 1:
            infinity.add((0, *coords))
    return ProjectivePointSet(affine=affine, infinity=frozenset(infinity))


def decomposition_check(
    f: PolyMap, N: int, k: int, enum_cap: int | None = None
) -> DecompositionReport:
    """Union of the graph varieties vs the equal-iterates variety.

    Asserted: the union is exactly the big variety, and its affine part is
    the k-th moment.  The closed-form infinity term (p-1)*gcd(p-1, d**N)**(k-2)
    is reported next to the directly counted one without being asserted;
    desk instances consistently match gcd(p-1, d**N)**(k-1) instead.
    """
    if N < 0:
        raise ValueError("decomposition needs N >= 0 (graphs live at level N-1)")
    kwargs = {} if enum_cap is None else {"cap": enum_cap}
    graph_list = enumerate_complete_proper(N - 1, k, f.d, **kwargs)
    union: set[tuple[int, ...]] = set()
    for g in graph_list:
        union |= count_curve_points(f, g).all_points()
    cr = count_cr_points(f, N, k)
    w = moment_w(f, N, k)
    gcd_val = math.gcd(f.p - 1, f.d**N)
    formula_term = (f.p - 1) * gcd_val ** (k - 2) if k >= 2 else 0
    return DecompositionReport(
        p=f.p,
        d=f.d,
        N=N,
        k=k,
        union_total=len(union),
        cr_total=cr.total,
        cr_affine=cr.affine_count,
        w_value=w,
        formula_infinity_term=formula_term,
        direct_infinity_count=cr.infinity_count,
        union_equals_cr=union == set(cr.all_points()),
        affine_equals_w=cr.affine_count == w,
    )


def weil_check(f: PolyMap, g: IterGraph, k: int, N: int) -> WeilReport:
    """Deviation of the point count from p + 1, in units of sqrt(p)."""
    pts = count_curve_points(f, g)
    deviation = abs(pts.total - (f.p + 1)) / math.sqrt(f.p)
    return WeilReport(total=pts.total, deviation=deviation, bound=f.d ** (2 * k * N))


def intersection_check(
    f: PolyMap, g1: IterGraph, g2: IterGraph, k: int, N: int
) -> IntersectionReport:
    """Common points of two distinct graph varieties, with the Bezout-style
    bound, plus a distinctness witness for the full point sets."""
    if g1 == g2:
        raise ValueError("intersection check needs two distinct graphs")
    pts1 = count_curve_points(f, g1).all_points()
    pts2 = count_curve_points(f, g2).all_points()
    sets_differ = pts1 != pts2 if (pts1 and pts2) else True
    return IntersectionReport(
        common=len(pts1 & pts2),
        bound=f.d ** (2 * k * N),
        sets_differ=sets_differ,
    )


def irreducibility_probe(f: PolyMap, r: int, i: int) -> ProbeReport:
    """Point count of one twisted-difference plane curve against the genus
    bound for an irreducible curve of its degree.  Evidence, not proof."""
    if r < 0:
        raise ValueError("probe level must be nonnegative")
    p = f.p
    _check_budget(p, 2)
    PhiSpec(level=r, twist=i).check(f.d)
    gamma_i = pow(f.gamma, i, p)
    tab = _iterate_table(f, r, at_infinity=False)
    count = int(np.equal.outer(tab, gamma_i * tab % p).sum())
    inf_tab = _iterate_table(f, r, at_infinity=True)
    for x, y in _infinity_reps(p, 2):
        if inf_tab[x] == gamma_i * inf_tab[y] % p:
            count += 1
    degree = f.d**r
    bound = (degree - 1) * (degree - 2) * math.sqrt(p)
    deviation = abs(count - (p + 1))
    verdict = "CONSISTENT" if deviation <= bound else "SUSPICIOUS"
    return ProbeReport(count=count, deviation=deviation, bound=bound, verdict=verdict)
