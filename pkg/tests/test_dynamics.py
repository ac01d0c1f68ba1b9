import math

import numpy as np
import pytest
from fractions import Fraction
from hypothesis import given, settings
from hypothesis import strategies as st

from polyiter import dynamics
from polyiter.dynamics import poly_map
from polyiter.errors import BudgetError

F5 = poly_map(5, 2, 1, 1)


def brute_orbit(f):
    """Hash-set oracle: store every iterate until the first repeat."""
    seen = {}
    x, i = 0, 0
    while x not in seen:
        seen[x] = i
        x = dynamics.eval_map(f, x)
        i += 1
    tail = seen[x]
    return tail, i - tail


def test_eval_map_examples():
    assert dynamics.eval_map(F5, 2) == 0
    assert dynamics.eval_map(F5, 0) == F5.C
    assert dynamics.eval_map(poly_map(7, 3, 2, 3), 1) == 5


def test_apply_map_to_domain():
    assert dynamics.apply_map_to_domain(F5, 0).tolist() == [0, 1, 2, 3, 4]
    assert dynamics.apply_map_to_domain(F5, 1).tolist() == [1, 2, 0, 0, 2]
    assert dynamics.apply_map_to_domain(F5, 2).tolist() == [2, 0, 1, 1, 0]


def test_image_size():
    assert dynamics.image_size(F5, 1) == 3
    assert dynamics.image_size(F5, 0) == 5
    # depth-1 image is exactly (p-1)/d + 1 for any valid map
    for p, d in ((13, 2), (13, 3), (13, 4), (29, 4), (31, 5)):
        f = poly_map(p, d, 2, 7)
        assert dynamics.image_size(f, 1) == (p - 1) // d + 1


def test_image_size_non_increasing():
    f = poly_map(101, 2, 3, 11)
    sizes = [dynamics.image_size(f, n) for n in range(6)]
    assert sizes == sorted(sizes, reverse=True)


def test_orbit_examples():
    orbit = dynamics.orbit_of_zero(F5)
    assert (orbit.tail_len, orbit.cycle_len, orbit.collision_index) == (0, 3, 3)
    fixed = dynamics.orbit_of_zero(poly_map(5, 2, 1, 0))
    assert (fixed.tail_len, fixed.cycle_len) == (0, 1)
    orbit7 = dynamics.orbit_of_zero(poly_map(7, 2, 1, 1))
    assert (orbit7.tail_len, orbit7.cycle_len) == (3, 1)


def test_orbit_confirms_collision():
    # re-iterating must confirm the claimed collision and no earlier one
    for p, d, A, C in ((101, 2, 3, 7), (97, 4, 5, 12), (61, 3, 2, 2)):
        f = poly_map(p, d, A, C)
        orbit = dynamics.orbit_of_zero(f)
        iterates = [0]
        for _ in range(orbit.collision_index):
            iterates.append(dynamics.eval_map(f, iterates[-1]))
        assert iterates[-1] == iterates[orbit.tail_len]
        assert len(set(iterates[:-1])) == orbit.collision_index


def test_check_precondition():
    assert dynamics.check_precondition(F5, 0)
    assert dynamics.check_precondition(F5, 2)
    assert not dynamics.check_precondition(F5, 3)


def test_preimage_distribution():
    dist = dynamics.preimage_distribution(F5, 1)
    assert dist.counts.tolist() == [2, 1, 2, 0, 0]
    assert dynamics.preimage_distribution(F5, 0).counts.tolist() == [1] * 5
    dist2 = dynamics.preimage_distribution(F5, 2)
    assert dist2.counts.tolist() == [2, 2, 1, 0, 0]
    assert dist2.zero_count() == 2


def test_distribution_mass_and_bounds():
    for p, d in ((29, 2), (29, 4), (31, 3)):
        f = poly_map(p, d, 3, 4)
        for n in range(4):
            dist = dynamics.preimage_distribution(f, n)
            assert int(dist.counts.sum()) == p
            assert int(dist.counts.max()) <= d**n


def test_moments():
    assert dynamics.moment_w(F5, 1, 2) == 9
    assert dynamics.moment_w(F5, 1, 1) == 5
    assert dynamics.moment_w(F5, 1, 0) == 5
    assert dynamics.moment_w(F5, 2, 3) == 17


def test_moment_equals_tuple_enumeration():
    # W(N, k) is the number of k-tuples with equal N-th iterates
    for p, d in ((13, 2), (29, 4)):
        f = poly_map(p, d, 2, 5)
        for n in (1, 2):
            arr = dynamics.apply_map_to_domain(f, n).tolist()
            pairs = sum(1 for x in arr for y in arr if x == y)
            triples = sum(
                1 for x in arr for y in arr if x == y for z in arr if z == x
            )
            assert dynamics.moment_w(f, n, 2) == pairs
            assert dynamics.moment_w(f, n, 3) == triples


def test_q_coeffs():
    assert dynamics.q_coeffs(2, 1) == (Fraction(1), Fraction(-3, 2), Fraction(1, 2))
    for d, n in ((2, 2), (3, 1), (2, 3)):
        coeffs = dynamics.q_coeffs(d, n)
        D = d**n
        assert coeffs[0] == 1
        assert coeffs[-1] == Fraction((-1) ** D, math.factorial(D))
        for j in range(1, D + 1):
            assert sum(c * j**k for k, c in enumerate(coeffs)) == 0
        assert sum(c * 0**k for k, c in enumerate(coeffs)) == 1


def test_q_coeffs_cap():
    with pytest.raises(BudgetError):
        dynamics.q_coeffs(2, 5)  # default cap is 16
    dynamics.q_coeffs(2, 5, degree_cap=32)


def test_zero_count_identity():
    assert dynamics.zero_count_identity(F5, 1) == (2, Fraction(2))
    assert dynamics.zero_count_identity(F5, 0) == (0, Fraction(0))
    assert dynamics.zero_count_identity(F5, 2) == (2, Fraction(2))
    for p, d in ((13, 3), (17, 4)):
        f = poly_map(p, d, 2, 3)
        for n in (1, 2):
            direct, via_q = dynamics.zero_count_identity(f, n, degree_cap=16)
            assert via_q.denominator == 1
            assert int(via_q) == direct
            assert dynamics.image_size(f, n) == p - direct


def test_functional_graph_stats():
    stats = dynamics.functional_graph_stats(F5)
    assert stats.num_cycles == 1
    assert stats.sum_cycle_lengths == 3
    squares = dynamics.functional_graph_stats(poly_map(5, 2, 1, 0))
    assert squares.num_cycles == 2
    assert squares.sum_cycle_lengths == 2
    assert squares.sum_precyclic_path_lengths == 4
    assert squares.max_tail == 2


def test_graph_stats_on_permutation_table():
    # a bijective table has every vertex on a cycle and no sources
    identity = np.arange(11, dtype=np.int64)
    stats = dynamics._stats_from_table(identity)
    assert stats.num_cycles == 11
    assert stats.sum_cycle_lengths == 11
    assert stats.sum_precyclic_path_lengths == 0
    shift = (np.arange(11, dtype=np.int64) + 1) % 11
    stats = dynamics._stats_from_table(shift)
    assert (stats.num_cycles, stats.sum_cycle_lengths) == (1, 11)


def test_graph_stats_every_vertex_reaches_cycle():
    f = poly_map(211, 2, 5, 17)
    stats = dynamics.functional_graph_stats(f)
    table = dynamics.step_table(f)
    cyclic_bound = stats.sum_cycle_lengths
    assert cyclic_bound <= 211
    for start in range(211):
        x = int(start)
        for _ in range(212):
            x = int(table[x])
        # after p steps every walk must sit inside a cycle
        probe = x
        for _ in range(cyclic_bound):
            probe = int(table[probe])
            if probe == x:
                break
        else:
            pytest.fail(f"vertex {start} never settled into a cycle")


def test_source_paths_cover_every_noncyclic_vertex():
    # walking from each in-degree-zero vertex to its cycle must visit the
    # whole non-cyclic part of the graph
    for p, d, A, C in ((97, 2, 3, 11), (101, 4, 7, 2), (61, 3, 5, 9)):
        f = poly_map(p, d, A, C)
        table = dynamics.step_table(f).tolist()
        cyclic = set()
        for start in range(p):
            x = start
            for _ in range(p):
                x = table[x]
            cycle = {x}
            y = table[x]
            while y != x:
                cycle.add(y)
                y = table[y]
            cyclic |= cycle
        indeg = [0] * p
        for v in table:
            indeg[v] += 1
        visited = set()
        for source in (v for v in range(p) if indeg[v] == 0):
            x = source
            while x not in cyclic:
                visited.add(x)
                x = table[x]
        assert visited == set(range(p)) - cyclic


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_orbit_matches_hash_oracle(data):
    p = data.draw(st.sampled_from([5, 13, 17, 29, 97, 101, 257]))
    d = data.draw(st.sampled_from([d for d in (2, 3, 4) if (p - 1) % d == 0]))
    A = data.draw(st.integers(min_value=1, max_value=p - 1))
    C = data.draw(st.integers(min_value=0, max_value=p - 1))
    f = poly_map(p, d, A, C)
    orbit = dynamics.orbit_of_zero(f)
    assert (orbit.tail_len, orbit.cycle_len) == brute_orbit(f)
