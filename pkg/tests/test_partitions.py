from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasigenera.partitions import (
    Partition,
    PhiKind,
    cycle_index,
    enumerate_partitions,
    multiplicative_phi,
    partition_count,
    phi_eval,
    z_lambda,
)


def brute_partitions(k):
    # all nonincreasing tuples summing to k, from compositions
    found = set()
    for r in range(1, k + 1):
        for combo in itertools.combinations_with_replacement(range(1, k + 1), r):
            if sum(combo) == k:
                found.add(tuple(sorted(combo, reverse=True)))
    return found if k else {()}


def cycle_type(perm):
    seen, lengths = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        n, j = 0, i
        while j not in seen:
            seen.add(j)
            j = perm[j]
            n += 1
        lengths.append(n)
    return Partition.from_parts(lengths)


parts_strategy = st.lists(st.integers(1, 8), max_size=8)


def test_reverse_lex_order():
    assert [p.parts for p in enumerate_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_zero_has_empty_partition():
    assert enumerate_partitions(0) == [Partition()]
    with pytest.raises(ValueError):
        enumerate_partitions(-1)


@pytest.mark.parametrize("k", range(0, 13))
def test_enumeration_matches_brute_force(k):
    assert {p.parts for p in enumerate_partitions(k)} == brute_partitions(k)


def test_partition_count_known_values():
    assert [partition_count(k) for k in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert partition_count(100) == 190569292
    assert all(partition_count(k) == len(enumerate_partitions(k)) for k in range(25))


@pytest.mark.parametrize("k", range(1, 7))
def test_cycle_index_counts_permutations(k):
    counts = Counter(cycle_type(p) for p in itertools.permutations(range(k)))
    assert {lam: Fraction(c, math.factorial(k)) for lam, c in counts.items()} == cycle_index(k)


@pytest.mark.parametrize("k", range(0, 15))
def test_class_equation(k):
    assert sum(Fraction(1, z_lambda(lam)) for lam in enumerate_partitions(k)) == 1


@given(parts_strategy)
def test_from_parts_round_trip(parts):
    lam = Partition.from_parts(parts)
    assert lam.parts == tuple(sorted(parts, reverse=True))
    assert lam.weight == sum(parts)
    assert lam.length == len(parts)
    assert all(lam.multiplicity(j) == parts.count(j) for j in range(1, 10))


@given(parts_strategy, parts_strategy)
def test_addition_is_union_of_parts(a, b):
    assert Partition.from_parts(a) + Partition.from_parts(b) == Partition.from_parts(a + b)


def test_trailing_zero_multiplicities_are_normalized():
    assert Partition((1, 0, 0)) == Partition((1,))
    assert hash(Partition((2, 0))) == hash(Partition.from_parts([1, 1]))
    with pytest.raises(ValueError):
        Partition.from_parts([0])
    with pytest.raises(ValueError):
        Partition((-1,))


def test_ahat_phi_matches_trace_closed_form():
    # -G6 + 15 G2G4 - 15 G2^3 over 6!
    got = {lam.parts: phi_eval(PhiKind.AHAT, lam) for lam in enumerate_partitions(3)}
    assert got == {(3,): Fraction(-1, 720), (2, 1): Fraction(15, 720), (1, 1, 1): Fraction(-15, 720)}


def test_l_phi_factors():
    # single part j: 4^j (4^j - 2) / (2j)!
    assert phi_eval("l", Partition.from_parts([1])) == Fraction(4 * 2, 2)
    assert phi_eval("l", Partition.from_parts([2])) == Fraction(16 * 14, 24)
    # m_j! in the denominator
    assert phi_eval("l", Partition.from_parts([1, 1])) == Fraction(4**2, 2)


def test_u_and_abs_u():
    for k in range(1, 8):
        for lam in enumerate_partitions(k):
            u, a = phi_eval(PhiKind.U, lam), phi_eval(PhiKind.ABS_U, lam)
            assert abs(u) == a and a > 0


@given(parts_strategy, parts_strategy)
def test_phi_is_multiplicative_on_disjoint_supports(a, b):
    a = [x for x in a if x % 2]
    b = [x for x in b if x % 2 == 0]
    la, lb = Partition.from_parts(a), Partition.from_parts(b)
    for kind in PhiKind:
        assert phi_eval(kind, la + lb) == phi_eval(kind, la) * phi_eval(kind, lb)


def test_custom_phi_via_callable():
    phi = multiplicative_phi(lambda j: Fraction(1, j))
    assert phi_eval(phi, Partition.from_parts([2, 2, 1])) == Fraction(1, 4) / 2
