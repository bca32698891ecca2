from math import factorial

import pytest

from horsenum import oracle
from horsenum.errors import DomainError
from horsenum.oracle import PRESCRIBED, RELATIVE_STRONG


def test_empty_ordering():
    assert list(oracle.enumerate_weak_orderings(0)) == [oracle.WeakOrdering(())]


def test_two_elements_by_hand():
    got = {w.blocks for w in oracle.enumerate_weak_orderings(2)}
    assert got == {
        (frozenset({0, 1}),),
        (frozenset({0}), frozenset({1})),
        (frozenset({1}), frozenset({0})),
    }


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 3), (3, 13), (4, 75), (5, 541)])
def test_enumeration_counts(n, count):
    assert sum(1 for _ in oracle.enumerate_weak_orderings(n)) == count
    assert oracle.count_weak_orderings(n) == count


@pytest.mark.parametrize("n", range(7))
def test_no_duplicates_and_valid_blocks(n):
    seen = set()
    for w in oracle.enumerate_weak_orderings(n):
        assert all(w.blocks)
        assert sorted(x for b in w.blocks for x in b) == list(range(n))
        key = w.ranks()
        assert key not in seen
        seen.add(key)
    assert len(seen) == oracle.count_weak_orderings(n)


def test_enumeration_ceiling():
    with pytest.raises(DomainError):
        next(oracle.enumerate_weak_orderings(10))


def test_rigged_by_filtering_orderings():
    # Filter the 13 orderings of 3 elements directly, independent of the profile cache.
    orderings = [w.ranks() for w in oracle.enumerate_weak_orderings(3)]
    untied = [r for r in orderings if r[0] != r[1]]
    in_order = [r for r in orderings if r[0] < r[1]]
    assert len(untied) == 10
    assert len(in_order) == 5
    assert oracle.count_rigged(3, 2, RELATIVE_STRONG) == 10
    assert oracle.count_rigged(3, 2, PRESCRIBED) == 5


@pytest.mark.parametrize("n", range(8))
def test_rigged_zero_is_unconstrained(n):
    assert oracle.count_rigged(n, 0, RELATIVE_STRONG) == oracle.count_weak_orderings(n)
    assert oracle.count_rigged(n, 0, PRESCRIBED) == oracle.count_weak_orderings(n)


def test_relative_strong_is_r_factorial_times_prescribed():
    for n in range(8):
        for r in range(n + 1):
            assert oracle.count_rigged(n, r, RELATIVE_STRONG) == factorial(r) * oracle.count_rigged(n, r, PRESCRIBED)


def test_rigged_rejects_r_above_n():
    with pytest.raises(DomainError):
        oracle.count_rigged(2, 3)


@pytest.mark.parametrize("n, k, expected", [(3, 3, 1), (3, 2, -3), (4, 1, -6), (4, 0, 0), (0, 0, 1)])
def test_signed_cycles(n, k, expected):
    assert oracle.count_cycles_signed(n, k) == expected


def test_cycle_counts_total_n_factorial():
    for n in range(8):
        assert sum(abs(oracle.count_cycles_signed(n, k)) for k in range(n + 1)) == factorial(n)


@pytest.mark.parametrize("n, k, expected", [(4, 4, 1), (3, 2, 3), (5, 2, 15), (0, 0, 1), (3, 0, 0)])
def test_set_partitions(n, k, expected):
    assert oracle.count_set_partitions(n, k) == expected


def test_set_partition_blocks_are_partitions():
    parts = list(oracle.enumerate_set_partitions(4))
    assert len(parts) == 15  # Bell(4)
    assert len(set(parts)) == 15
    for p in parts:
        assert sorted(x for b in p for x in b) == [0, 1, 2, 3]


def test_counting_lemma_small_cases():
    assert oracle.verify_counting_lemma(2, 1)
    assert oracle.verify_counting_lemma(3, 2)
    for n in range(6):
        assert oracle.verify_counting_lemma(n, 0)


def test_counting_lemma_rejects_m_above_n():
    with pytest.raises(DomainError):
        oracle.verify_counting_lemma(2, 3)


def test_classical_recurrences():
    assert oracle.fubini_by_binomial_recurrence(6) == [1, 1, 3, 13, 75, 541]
    assert oracle.stirling_first_by_recurrence(4)[3] == [0, 2, -3, 1]
    assert oracle.stirling_second_by_recurrence(5)[4] == [0, 1, 7, 6, 1]


@pytest.mark.parametrize("K, expected", [(1, 1), (2, 1), (8, 2), (15, 4), (16, 4), (7, 6)])
def test_group_exponent(K, expected):
    assert oracle.group_exponent(K) == expected
