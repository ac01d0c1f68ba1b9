"""Sweep experiments and the cross-module verification suite.

Sweeps fan the verified primitives out over prime ranges and emit flat,
deterministic records: the same seed always produces byte-identical CSV or
JSON.  verify_all() is the one-shot oracle suite: every structural identity
the package promises, run on a fixed desk-scale instance matrix.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import curves, dynamics, graphs, recur
from .dynamics import poly_map
from .errors import BudgetError
from .field import is_prime
from .report import render_records

GENERATOR_NAME = "mt19937-per-prime"

THEOREM_FIELDS = ["p", "d", "A", "C", "N", "image_size", "mu_p", "norm_err", "precondition"]
COLLISION_FIELDS = ["p", "d", "A", "C", "tail_len", "cycle_len", "collision_index", "ratio"]
GRAPH_FIELDS = [
    "p", "d", "A", "C",
    "num_cycles", "sum_cycle_lengths", "sum_precyclic_path_lengths", "max_tail",
    "cycle_bound", "precyclic_bound", "n0", "image_n0", "v2_limit",
    "cycle_bound_ok", "precyclic_bound_ok", "v2_ok",
]


@dataclass(frozen=True)
class SweepConfig:
    d: int
    N: int = 1
    p_min: int = 3
    p_max: int = 101
    per_prime: int = 1
    policy: str = "random"  # "all" or "random"
    seed: int = 0
    require_precondition: bool = False
    # when set, the proof-internal image bound is asserted for p at or above it
    v2_assert_min_p: int | None = None

    def validate(self) -> None:
        if self.d < 2:
            raise ValueError("degree must be at least 2")
        if self.N < 0:
            raise ValueError("depth must be nonnegative")
        if self.p_min > self.p_max:
            raise ValueError("empty prime range")
        if self.policy not in ("all", "random"):
            raise ValueError(f"unknown policy {self.policy!r}")
        if self.policy == "random" and self.per_prime < 1:
            raise ValueError("per_prime must be positive")


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def primes_with_degree(lo: int, hi: int, d: int) -> list[int]:
    """Primes p in [lo, hi] with d | p - 1 (others are skipped, not fatal)."""
    return [p for p in range(max(lo, 2), hi + 1) if (p - 1) % d == 0 and is_prime(p)]


def _instance_rng(seed: int, p: int) -> random.Random:
    # per-prime stream so record sets are independent of the prime ordering
    return random.Random((seed << 32) ^ p)


def _coefficient_pairs(cfg: SweepConfig, p: int) -> tuple[list[tuple[int, int]], int]:
    """(A, C) pairs for one prime plus the number of rejected draws.

    Policy "all" walks every pair; "random" draws per_prime pairs from the
    seeded per-prime stream.  With require_precondition, failing pairs are
    rejected (and counted) rather than recorded.
    """
    pairs: list[tuple[int, int]] = []
    rejected = 0

    def admits(A: int, C: int) -> bool:
        if not cfg.require_precondition:
            return True
        return dynamics.check_precondition(poly_map(p, cfg.d, A, C), cfg.N)

    if cfg.policy == "all":
        for A in range(1, p):
            for C in range(p):
                if admits(A, C):
                    pairs.append((A, C))
                else:
                    rejected += 1
        return pairs, rejected

    rng = _instance_rng(cfg.seed, p)
    attempts_cap = 100 * cfg.per_prime
    attempts = 0
    while len(pairs) < cfg.per_prime and attempts < attempts_cap:
        A = rng.randrange(1, p)
        C = rng.randrange(p)
        attempts += 1
        if admits(A, C):
            pairs.append((A, C))
        else:
            rejected += 1
    return pairs, rejected


def sweep_theorem(cfg: SweepConfig) -> tuple[list[dict], dict]:
    """One record per (p, A, C): image size at depth N against mu_N * p."""
    cfg.validate()
    mu_n = recur.mu_sequence(cfg.d, cfg.N)[cfg.N]
    records = []
    total_rejected = 0
    total_drawn = 0
    for p in primes_with_degree(cfg.p_min, cfg.p_max, cfg.d):
        pairs, rejected = _coefficient_pairs(cfg, p)
        total_rejected += rejected
        total_drawn += rejected + len(pairs)
        for A, C in pairs:
            f = poly_map(p, cfg.d, A, C)
            held = dynamics.check_precondition(f, cfg.N)
            img = dynamics.image_size(f, cfg.N)
            mu_p = float(mu_n * p)
            records.append({
                "p": p, "d": cfg.d, "A": A, "C": C, "N": cfg.N,
                "image_size": img,
                "mu_p": mu_p,
                "norm_err": (img - mu_p) / math.sqrt(p),
                "precondition": held,
            })
    records.sort(key=lambda rec: (rec["p"], rec["A"], rec["C"]))
    errs = [abs(rec["norm_err"]) for rec in records]
    summary = {
        "count": len(records),
        "mean_abs_norm_err": sum(errs) / len(errs) if errs else 0.0,
        "max_abs_norm_err": max(errs) if errs else 0.0,
        "precondition_failure_fraction": (
            total_rejected / total_drawn if total_drawn else 0.0
        ),
        # the literal error bound is astronomically loose at desk scale; it is
        # recorded for honesty, never asserted
        "literal_bound_form": "M * d**(d**(6*N)) * sqrt(p), M an absolute constant",
        "literal_bound_log10_scale": cfg.d ** (6 * cfg.N) * math.log10(cfg.d),
    }
    return records, summary


def collision_stats(cfg: SweepConfig) -> tuple[list[dict], dict]:
    """Orbit-of-zero collision index per instance, scaled by log log p / p."""
    cfg.validate()
    records = []
    for p in primes_with_degree(cfg.p_min, cfg.p_max, cfg.d):
        pairs, _ = _coefficient_pairs(cfg, p)
        loglog = math.log(math.log(p))
        for A, C in pairs:
            f = poly_map(p, cfg.d, A, C)
            orbit = dynamics.orbit_of_zero(f)
            records.append({
                "p": p, "d": cfg.d, "A": A, "C": C,
                "tail_len": orbit.tail_len,
                "cycle_len": orbit.cycle_len,
                "collision_index": orbit.collision_index,
                "ratio": orbit.collision_index * loglog / p,
            })
    records.sort(key=lambda rec: (rec["p"], rec["A"], rec["C"]))
    ratios = sorted(rec["ratio"] for rec in records)
    summary = {"count": len(records)}
    if ratios:
        summary.update({
            "ratio_min": ratios[0],
            "ratio_q25": ratios[len(ratios) // 4],
            "ratio_median": ratios[len(ratios) // 2],
            "ratio_q75": ratios[(3 * len(ratios)) // 4],
            "ratio_max": ratios[-1],
        })
    return records, summary


def graph_sweep(cfg: SweepConfig) -> tuple[list[dict], dict]:
    """Functional-graph statistics per instance with the corollary bounds.

    The two bounds and the proof-internal image limit are evaluated and
    flagged on every record; nothing is asserted unless the config sets
    v2_assert_min_p (small primes routinely fail the asymptotic bounds).
    """
    cfg.validate()
    records = []
    for p in primes_with_degree(cfg.p_min, cfg.p_max, cfg.d):
        pairs, _ = _coefficient_pairs(cfg, p)
        loglog = math.log(math.log(p))
        n0 = int(loglog / (7 * math.log(cfg.d))) + 1
        cycle_bound = 21 * p * math.log(cfg.d) / loglog
        precyclic_bound = 28 * p * math.log(cfg.d) / loglog
        v2_limit = (2 / (cfg.d - 1) + 1) * p / n0
        for A, C in pairs:
            f = poly_map(p, cfg.d, A, C)
            stats = dynamics.functional_graph_stats(f)
            image_n0 = dynamics.image_size(f, n0)
            v2_ok = image_n0 < v2_limit
            if cfg.v2_assert_min_p is not None and p >= cfg.v2_assert_min_p and not v2_ok:
                raise RuntimeError(
                    f"image bound violated at p={p}, A={A}, C={C}: "
                    f"{image_n0} >= {v2_limit}"
                )
            records.append({
                "p": p, "d": cfg.d, "A": A, "C": C,
                "num_cycles": stats.num_cycles,
                "sum_cycle_lengths": stats.sum_cycle_lengths,
                "sum_precyclic_path_lengths": stats.sum_precyclic_path_lengths,
                "max_tail": stats.max_tail,
                "cycle_bound": cycle_bound,
                "precyclic_bound": precyclic_bound,
                "n0": n0,
                "image_n0": image_n0,
                "v2_limit": v2_limit,
                "cycle_bound_ok": stats.sum_cycle_lengths <= cycle_bound,
                "precyclic_bound_ok": stats.sum_precyclic_path_lengths <= precyclic_bound,
                "v2_ok": v2_ok,
            })
    records.sort(key=lambda rec: (rec["p"], rec["A"], rec["C"]))
    summary = {"count": len(records)}
    for flag in ("cycle_bound_ok", "precyclic_bound_ok", "v2_ok"):
        if records:
            summary[flag + "_fraction"] = sum(rec[flag] for rec in records) / len(records)
    return records, summary


# ---------------------------------------------------------------------------
# verification suite
# ---------------------------------------------------------------------------

def check_mu_v_consistency(
    d: int, r_max: int, tables: list[recur.CoeffTable] | None = None
) -> CheckResult:
    """Coefficient tables against the scalar recurrences.

    tables is injectable so a corrupted table is reported here, not upstream.
    """
    if tables is None:
        tables = [recur.e_coeffs(d, r) for r in range(-1, r_max + 1)]
    mus = recur.mu_sequence(d, r_max + 1)
    v0_prev = Fraction(0)
    for table in tables:
        if table.total() != 1:
            return CheckResult("mu-v-consistency", False,
                               f"d={d} r={table.r}: coefficients sum to {table.total()}")
        if any(c < 0 for c in table.v):
            return CheckResult("mu-v-consistency", False,
                               f"d={d} r={table.r}: negative coefficient")
        if table.r >= 0:
            expected = (d - 1 + v0_prev**d) / d
            if table.v[0] != expected:
                return CheckResult("mu-v-consistency", False,
                                   f"d={d} r={table.r}: v[0]={table.v[0]} != {expected}")
        if mus[table.r + 1] != 1 - table.v[0]:
            return CheckResult("mu-v-consistency", False,
                               f"d={d} r={table.r}: mu mismatch")
        v0_prev = table.v[0]
    return CheckResult("mu-v-consistency", True, f"d={d} up to r={r_max}")


def _tuple_count_oracle(arr: np.ndarray, k: int) -> int:
    """Literal enumeration of k-tuples with equal entries of arr."""
    eq = np.equal.outer(arr, arr)
    if k == 1:
        return len(arr)
    if k == 2:
        return int(eq.sum())
    if k == 3:
        p = len(arr)
        return int((eq.reshape(p, p, 1) & eq.reshape(p, 1, p)).sum())
    raise ValueError("oracle supports k <= 3")


def _moment_matrix(desk: bool) -> list[tuple[int, int, list[tuple[int, int]]]]:
    """(p, d, coefficient pairs) instances for the moment identity check:
    exhaustive coefficients for p <= 13, a fixed sample above."""
    out = []
    sampled = [(1, 0), (1, 1), (2, 1), (2, 3), (3, 5), (5, 2)]
    for p in (5, 13, 17, 29):
        for d in (2, 3, 4):
            if (p - 1) % d != 0:
                continue
            if p <= 13:
                pairs = [(A, C) for A in range(1, p) for C in range(p)]
            else:
                pairs = sampled
            if not desk:
                pairs = pairs[:6]
            out.append((p, d, pairs))
    return out


def check_moment_identities(desk: bool = True) -> CheckResult:
    """Mass conservation, moment/tuple-count agreement, the exact depth-1
    image formula, and the factorial-polynomial zero-count identity."""
    name = "moment-identities"
    for p, d, pairs in _moment_matrix(desk):
        for A, C in pairs:
            f = poly_map(p, d, A, C)
            for N in (0, 1, 2, 3):
                dist = dynamics.preimage_distribution(f, N)
                if int(dist.counts.sum()) != p:
                    return CheckResult(name, False, f"mass leak p={p} d={d} A={A} C={C} N={N}")
                if int(dist.counts.max()) > d**N:
                    return CheckResult(name, False, f"preimage count above d**N at p={p} d={d}")
                if dynamics.moment_w(f, N, 1) != p:
                    return CheckResult(name, False, f"W(N,1) != p at p={p} d={d}")
                if dynamics.moment_w(f, N, 0) != p:
                    return CheckResult(name, False, f"W(N,0) != p at p={p} d={d}")
                arr = dynamics.apply_map_to_domain(f, N)
                for k in (2, 3):
                    if dynamics.moment_w(f, N, k) != _tuple_count_oracle(arr, k):
                        return CheckResult(
                            name, False,
                            f"moment/tuple mismatch p={p} d={d} A={A} C={C} N={N} k={k}")
                direct, via_q = dynamics.zero_count_identity(f, N, degree_cap=64)
                if via_q.denominator != 1 or int(via_q) != direct:
                    return CheckResult(
                        name, False,
                        f"zero-count identity broke p={p} d={d} A={A} C={C} N={N}")
                if dynamics.image_size(f, N) != p - direct:
                    return CheckResult(
                        name, False,
                        f"image != p - unhit count at p={p} d={d} A={A} C={C} N={N}")
            if dynamics.image_size(f, 1) != (p - 1) // d + 1:
                return CheckResult(name, False, f"depth-1 image formula p={p} d={d}")
    return CheckResult(name, True, "matrix complete")


def check_enumeration_matches_u(desk: bool = True) -> CheckResult:
    name = "enumeration-u-match"
    r_values = (-1, 0, 1, 2) if desk else (-1, 0, 1)
    k_values = (1, 2, 3, 4) if desk else (1, 2, 3)
    for d in (2, 3):
        for r in r_values:
            for k in k_values:
                enumerated = len(graphs.enumerate_complete_proper(r, k, d))
                expected = recur.u_value(d, r, k)
                if enumerated != expected:
                    return CheckResult(
                        name, False,
                        f"enumeration {enumerated} != U={expected} at (d={d}, r={r}, k={k})")
    return CheckResult(name, True, f"r in {r_values}, k in {k_values}, d in (2, 3)")


def check_tree_generation(desk: bool = True) -> CheckResult:
    """Maximal extensions of the trees cover every complete proper graph,
    and extension never depends on the scan order."""
    name = "tree-generation"
    for d in (2, 3):
        for r in (-1, 0, 1):
            for k in (1, 2, 3):
                complete = set(graphs.enumerate_complete_proper(r, k, d))
                covered = set()
                for tree in graphs.enumerate_trees(r, k, d):
                    lex = graphs.maximal_extension(tree, order="lex")
                    rev = graphs.maximal_extension(tree, order="reverse")
                    if lex != rev:
                        return CheckResult(
                            name, False,
                            f"order-dependent extension of {tree.canonical()}")
                    if lex.is_complete():
                        covered.add(lex)
                if not complete <= covered:
                    missing = next(iter(complete - covered))
                    return CheckResult(
                        name, False,
                        f"graph not generated by any tree: {missing.canonical()}")
                if desk:
                    for g in complete:
                        edge_items = sorted(g.edges.items())
                        for drop in range(len(edge_items)):
                            sub = graphs.IterGraph(
                                k=k, r=r, d=d,
                                edges=dict(edge_items[:drop] + edge_items[drop + 1:]))
                            lex = graphs.maximal_extension(sub, order="lex")
                            rev = graphs.maximal_extension(sub, order="reverse")
                            if lex != rev:
                                return CheckResult(
                                    name, False,
                                    f"subgraph extension order-dependent in {g.canonical()}")
    return CheckResult(name, True, "trees cover all complete proper graphs")


def check_partition_recursion(desk: bool = True) -> CheckResult:
    name = "partition-recursion"
    k_max = 5 if desk else 3
    for d in (2, 3):
        for r in (0, 1, 2):
            for k in range(1, k_max + 1):
                if not recur.partition_recursion_check(d, r, k):
                    return CheckResult(name, False, f"failed at (d={d}, r={r}, k={k})")
    return CheckResult(name, True, f"d in (2,3), r <= 2, k <= {k_max}")


def check_recursion_values() -> CheckResult:
    name = "mu-recursion"
    expect2 = (Fraction(1), Fraction(1, 2), Fraction(3, 8), Fraction(39, 128))
    expect3 = (Fraction(1), Fraction(1, 3), Fraction(19, 81))
    if recur.mu_sequence(2, 3).values != expect2:
        return CheckResult(name, False, "d=2 sequence mismatch")
    if recur.mu_sequence(3, 2).values != expect3:
        return CheckResult(name, False, "d=3 sequence mismatch")
    for d in (2, 3, 4):
        mus = recur.mu_sequence(d, 10)
        for r in range(1, 11):
            if d * mus[r] != 1 - (1 - mus[r - 1]) ** d:
                return CheckResult(name, False, f"recurrence broken at d={d}, r={r}")
            if not 0 < mus[r] < mus[r - 1]:
                return CheckResult(name, False, f"monotonicity broken at d={d}, r={r}")
    return CheckResult(name, True, "pinned values and recurrence hold")


def check_q_bounds() -> CheckResult:
    name = "q-bound"
    for d, R in ((2, 12), (3, 8), (4, 6)):
        if not recur.q_bound_check(d, R):
            return CheckResult(name, False, f"linear lower bound fails for d={d}")
        if not recur.q_increment_check(d, R):
            return CheckResult(name, False, f"increment bound fails for d={d}")
    return CheckResult(name, True, "reciprocal density bounds hold")


def check_u_bounds() -> CheckResult:
    name = "u-bound"
    for d in (2, 3):
        for r in (-1, 0, 1, 2):
            for k in (1, 2, 3, 4):
                if not recur.u_bound_check(d, r, k):
                    return CheckResult(name, False, f"bound fails at (d={d}, r={r}, k={k})")
    return CheckResult(name, True, "binomial bound holds on the grid")


def check_decomposition_geometry(enum_cap: int | None = None) -> CheckResult:
    """Union identity, moment match, Weil and intersection bounds, and the
    infinity-term discrepancy data on the fixed desk instances."""
    name = "decomposition-geometric"
    instances = [(5, 2), (13, 2)]
    for p, k in instances + [(5, 3)]:
        f = poly_map(p, 2, 1, 1)
        N = 1
        report = curves.decomposition_check(f, N, k, enum_cap=enum_cap)
        if not report.union_equals_cr:
            return CheckResult(name, False, f"union != C_N at p={p}, k={k}")
        if not report.affine_equals_w:
            return CheckResult(name, False, f"affine != W at p={p}, k={k}")
        expected_inf = math.gcd(p - 1, 2**N) ** (k - 1)
        if report.direct_infinity_count != expected_inf:
            return CheckResult(
                name, False,
                f"direct infinity {report.direct_infinity_count} != gcd^(k-1)={expected_inf}")
        graph_list = graphs.enumerate_complete_proper(N - 1, k, 2)
        bound = 2 ** (2 * k * N)
        for g in graph_list:
            weil = curves.weil_check(f, g, k, N)
            if not weil.ok:
                return CheckResult(name, False, f"Weil deviation {weil.deviation} at p={p}")
        for i, g1 in enumerate(graph_list):
            for g2 in graph_list[i + 1:]:
                inter = curves.intersection_check(f, g1, g2, k, N)
                if not inter.ok or not inter.sets_differ:
                    return CheckResult(
                        name, False,
                        f"intersection bound {inter.common} > {bound} at p={p}")
    return CheckResult(name, True, "union, moments, Weil and Bezout bounds hold")


def check_asymptotic_trend() -> CheckResult:
    name = "asymptotic-trend"
    bounds = recur.asymptotic_ratio_bounds(2, 1000)
    lo_band, hi_band = Fraction(9, 10), Fraction(11, 10)
    for r in range(200, 1001):
        lo, hi = bounds[r]
        if not (lo_band <= lo and hi <= hi_band):
            return CheckResult(name, False, f"ratio escapes [0.9, 1.1] at r={r}")
    for r in range(10, 1001):
        lo, hi = bounds[r]
        if not (Fraction(1, 2) <= lo and hi <= Fraction(3, 2)):
            return CheckResult(name, False, f"ratio escapes [0.5, 1.5] at r={r}")
    return CheckResult(name, True, "certified ratios stay in band")


def check_theorem_statistics(desk: bool = True) -> CheckResult:
    """Distributional error of the depth-2 image size over a seeded sweep."""
    name = "theorem-statistics"
    p_max = 5000 if desk else 2000
    per = 20 if desk else 5
    cfg = SweepConfig(d=2, N=2, p_min=1000, p_max=p_max, per_prime=per,
                      policy="random", seed=20260808, require_precondition=True)
    _, summary = sweep_theorem(cfg)
    if summary["count"] == 0:
        return CheckResult(name, False, "empty sweep")
    if summary["mean_abs_norm_err"] > 3.0:
        return CheckResult(name, False, f"mean error {summary['mean_abs_norm_err']:.3f} > 3.0")
    if summary["max_abs_norm_err"] > 12.0:
        return CheckResult(name, False, f"max error {summary['max_abs_norm_err']:.3f} > 12.0")
    cfg4 = SweepConfig(d=4, N=1, p_min=1000, p_max=p_max, per_prime=per,
                       policy="random", seed=20260808, require_precondition=True)
    records, _ = sweep_theorem(cfg4)
    for rec in records:
        if rec["image_size"] != (rec["p"] - 1) // 4 + 1:
            return CheckResult(name, False, f"closed-form image broke at p={rec['p']}")
    return CheckResult(
        name, True,
        f"mean={summary['mean_abs_norm_err']:.3f}, max={summary['max_abs_norm_err']:.3f}")


def check_corollary_sweeps(desk: bool = True) -> CheckResult:
    """Determinism, pigeonhole sanity, and schema of both sweeps."""
    name = "corollary-sweeps"
    p_max = 10000 if desk else 3000
    cfg = SweepConfig(d=2, N=1, p_min=1000, p_max=p_max, per_prime=2,
                      policy="random", seed=7)
    col1, _ = collision_stats(cfg)
    col2, _ = collision_stats(cfg)
    if render_records(col1, COLLISION_FIELDS, "csv") != render_records(col2, COLLISION_FIELDS, "csv"):
        return CheckResult(name, False, "collision sweep not deterministic")
    gr1, _ = graph_sweep(cfg)
    gr2, _ = graph_sweep(cfg)
    if render_records(gr1, GRAPH_FIELDS, "json") != render_records(gr2, GRAPH_FIELDS, "json"):
        return CheckResult(name, False, "graph sweep not deterministic")
    for rec in col1:
        if not (1 <= rec["collision_index"] <= rec["p"]):
            return CheckResult(name, False, f"collision index out of range at p={rec['p']}")
        if not math.isfinite(rec["ratio"]):
            return CheckResult(name, False, "non-finite ratio")
        if set(rec) != set(COLLISION_FIELDS):
            return CheckResult(name, False, "collision schema mismatch")
    for rec in gr1:
        if rec["sum_cycle_lengths"] > rec["p"]:
            return CheckResult(name, False, f"cycle mass exceeds p at p={rec['p']}")
        if set(rec) != set(GRAPH_FIELDS):
            return CheckResult(name, False, "graph schema mismatch")
        if not math.isfinite(rec["cycle_bound"]) or not math.isfinite(rec["v2_limit"]):
            return CheckResult(name, False, "non-finite bound")
    return CheckResult(name, True, f"{len(col1)} collision and {len(gr1)} graph records")


def verify_all(desk: bool = True, enum_cap: int | None = None) -> dict:
    """Run every cross-module check; returns a machine-readable manifest.

    A BudgetError inside any check becomes a failure named "budget" instead
    of a crash, so misconfigured budgets are reported like any other defect.
    """
    steps = [
        lambda: check_recursion_values(),
        lambda: _mu_v_all(),
        lambda: check_q_bounds(),
        lambda: check_u_bounds(),
        lambda: check_partition_recursion(desk),
        lambda: check_enumeration_matches_u(desk),
        lambda: check_tree_generation(desk),
        lambda: check_moment_identities(desk),
        lambda: check_decomposition_geometry(enum_cap),
        lambda: check_asymptotic_trend(),
        lambda: check_theorem_statistics(desk),
        lambda: check_corollary_sweeps(desk),
    ]
    results: list[CheckResult] = []
    for step in steps:
        try:
            results.append(step())
        except BudgetError as exc:
            results.append(CheckResult("budget", False, str(exc)))
    return {
        "version": "0.1.0",
        "desk": desk,
        "ok": all(res.ok for res in results),
        "checks": [
            {"name": res.name, "ok": res.ok, "detail": res.detail} for res in results
        ],
    }


def _mu_v_all() -> CheckResult:
    for d, r_max in ((2, 6), (3, 4)):
        result = check_mu_v_consistency(d, r_max)
        if not result.ok:
            return result
    return CheckResult("mu-v-consistency", True, "d=2 up to r=6, d=3 up to r=4")
