import math
from fractions import Fraction

import pytest

from polyiter import recur
from polyiter.errors import BudgetError


def test_mu_sequence_pinned_values():
    assert recur.mu_sequence(2, 3).values == (
        Fraction(1), Fraction(1, 2), Fraction(3, 8), Fraction(39, 128),
    )
    assert recur.mu_sequence(3, 2).values == (
        Fraction(1), Fraction(1, 3), Fraction(19, 81),
    )


def test_mu_sequence_invariants():
    # exact denominators grow like d**(d**r); keep ranges inside the cap
    for d, r_max in ((2, 12), (3, 12), (4, 10), (5, 6)):
        mus = recur.mu_sequence(d, r_max)
        assert mus[0] == 1
        assert mus[1] == Fraction(1, d)
        for r in range(1, r_max + 1):
            assert d * mus[r] == 1 - (1 - mus[r - 1]) ** d
            assert 0 < mus[r] < mus[r - 1]


def test_mu_sequence_refuses_huge_levels():
    with pytest.raises(BudgetError):
        recur.mu_sequence(2, 10_000)


def test_mu_interval_encloses_exact():
    for d in (2, 3):
        exact = recur.mu_sequence(d, 14)
        scale = 1 << 128
        for r, (lo, hi) in enumerate(recur.mu_interval_sequence(d, 14)):
            assert Fraction(lo, scale) <= exact[r] <= Fraction(hi, scale)
            assert hi - lo <= 4 * (r + 1)  # a few ulps per level at most


def test_q_bound_examples():
    assert recur.q_bound_check(2, 0)
    assert recur.q_bound_check(2, 3)
    assert recur.q_bound_check(3, 2)
    mus = recur.mu_sequence(2, 3)
    assert 1 / mus[3] == Fraction(128, 39)
    mus3 = recur.mu_sequence(3, 2)
    assert 1 / mus3[2] == Fraction(81, 19)


def test_q_increment():
    assert recur.q_increment_check(2, 12)
    assert recur.q_increment_check(3, 8)
    assert recur.q_increment_check(5, 6)


def test_asymptotic_table_exact_values():
    table = recur.asymptotic_table(2, 3)
    assert table[1] == Fraction(1, 4)
    assert table[3] == Fraction(117, 256)


def test_asymptotic_bounds_certified():
    bounds = recur.asymptotic_ratio_bounds(2, 300)
    exact = recur.asymptotic_table(2, 20)
    for r in range(21):
        lo, hi = bounds[r]
        assert lo <= exact[r] <= hi
    lo200, hi200 = bounds[200]
    assert Fraction(9, 10) <= lo200 and hi200 <= Fraction(11, 10)


def test_e_coeffs_base_and_small_levels():
    base = recur.e_coeffs(2, -1)
    assert base.v == (Fraction(0), Fraction(1))
    level0 = recur.e_coeffs(2, 0)
    assert level0.v == (Fraction(1, 2), Fraction(0), Fraction(1, 2))
    level1 = recur.e_coeffs(2, 1)
    assert level1.v[0] == Fraction(5, 8)
    assert level1.v[2] == Fraction(1, 4)
    assert level1.v[4] == Fraction(1, 8)


def test_e_coeffs_invariants():
    for d, r_max in ((2, 6), (3, 4)):
        v0_prev = Fraction(0)
        mus = recur.mu_sequence(d, r_max + 1)
        for r in range(0, r_max + 1):
            table = recur.e_coeffs(d, r)
            assert len(table.v) == d ** (r + 1) + 1
            assert table.total() == 1
            assert all(c >= 0 for c in table.v)
            assert table.v[0] == (d - 1 + v0_prev**d) / d
            assert mus[r + 1] == 1 - table.v[0]
            v0_prev = table.v[0]


def test_e_coeffs_cap():
    with pytest.raises(BudgetError):
        recur.e_coeffs(2, 15)


def test_u_values():
    assert recur.u_value(2, 1, 2) == 3
    assert recur.u_value(2, 1, 3) == 10
    assert recur.u_value(2, 0, 3) == 4
    for d in (2, 3):
        for r in (-1, 0, 1, 2):
            assert recur.u_value(d, r, 0) == 1
            assert recur.u_value(d, r, 1) == 1
        for k in range(5):
            assert recur.u_value(d, -1, k) == 1


def test_u_bound_examples():
    assert recur.u_bound_check(2, 1, 1)
    assert recur.u_bound_check(2, 1, 2)  # 3 <= 6
    assert recur.u_bound_check(2, 0, 3)  # 4 <= 48
    for d in (2, 3):
        for r in (-1, 0, 1, 2):
            for k in (1, 2, 3, 4):
                assert recur.u_bound_check(d, r, k)


def test_partitions_into_blocks():
    parts = recur.partitions_into_blocks(3, 2)
    assert len(parts) == 3
    assert all(p.t == 2 for p in parts)
    assert len(recur.partitions_into_blocks(4, 2)) == 7  # Stirling S(4,2)
    assert len(recur.partitions_into_blocks(4, 3)) == 6


def test_block_size_classes():
    classes = dict(recur.block_size_classes(3, 2))
    assert classes == {(2, 1): 3}
    classes4 = dict(recur.block_size_classes(4, 2))
    assert classes4 == {(3, 1): 4, (2, 2): 3}
    # class sizes must add up to the Stirling number
    assert sum(classes4.values()) == 7


def test_partition_weight_helper():
    part = recur.Partition(((1, 2), (3,), (4,)))
    assert part.sizes == (2, 1, 1)
    assert part.size_multiset_weight() == 2  # two singleton blocks


def test_partition_recursion():
    assert recur.partition_recursion_check(2, 1, 1)  # both sides zero
    assert recur.partition_recursion_check(2, 1, 2)  # 3 - 2 = 1
    assert recur.partition_recursion_check(2, 1, 3)  # 10 - 4 = 6
    for d in (2, 3):
        for r in (0, 1, 2):
            for k in range(1, 6):
                assert recur.partition_recursion_check(d, r, k)
