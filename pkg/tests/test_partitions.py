from collections import Counter
from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from genbinom.partitions import (
    Partition,
    add_part,
    cells,
    enumerate_partitions,
    enumerate_with_length,
    multiplicity,
    partitions_up_to,
    zeta,
)


def euler_partition_counts(n_max):
    """p(0..n_max) by Euler's pentagonal recurrence."""
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def brute_partitions(n):
    """Weakly decreasing sequences summing to n, found by filtering all compositions."""
    found = set()
    for length in range(n + 1):
        for seq in product(range(1, n + 1), repeat=length):
            if sum(seq) == n and all(a >= b for a, b in zip(seq, seq[1:])):
                found.add(seq)
    return found


def cycle_type(perm):
    seen, lengths = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        k, length = start, 0
        while k not in seen:
            seen.add(k)
            k = perm[k]
            length += 1
        lengths.append(length)
    return Partition.from_parts(lengths)


def test_enumerate_small():
    assert enumerate_partitions(0) == (Partition(),)
    assert enumerate_partitions(3) == (Partition((3,)), Partition((2, 1)), Partition((1, 1, 1)))


@pytest.mark.parametrize("n", range(0, 7))
def test_enumerate_matches_brute_force(n):
    got = enumerate_partitions(n)
    assert len(set(got)) == len(got)
    assert set(got) == brute_partitions(n)


def test_partition_counts_match_euler():
    counts = euler_partition_counts(20)
    assert counts[8] == 22
    for n in range(21):
        assert len(enumerate_partitions(n)) == counts[n]


@pytest.mark.parametrize("n", range(0, 13))
def test_enumeration_is_reverse_lexicographic(n):
    parts = [tuple(mu) for mu in enumerate_partitions(n)]
    assert parts == sorted(parts, reverse=True)


@pytest.mark.parametrize("n,p,expected", [
    (3, 2, [(2, 1)]),
    (3, 4, []),
    (4, 2, [(3, 1), (2, 2)]),
])
def test_enumerate_with_length(n, p, expected):
    assert list(enumerate_with_length(n, p)) == [Partition(e) for e in expected]


@pytest.mark.parametrize("n", range(0, 13))
def test_enumerate_with_length_is_filter(n):
    for p in range(n + 2):
        assert enumerate_with_length(n, p) == tuple(mu for mu in enumerate_partitions(n) if len(mu) == p)


def test_zeta_examples():
    assert zeta(Partition((2, 1))) == 2
    assert zeta(Partition((1, 1, 1))) == 6
    assert zeta(Partition()) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_zeta_counts_permutations_by_cycle_type(n):
    counts = Counter(cycle_type(p) for p in permutations(range(n)))
    for mu in enumerate_partitions(n):
        assert counts[mu] * zeta(mu) == factorial(n)
    assert sum(factorial(n) // zeta(mu) for mu in enumerate_partitions(n)) == factorial(n)


def test_multiplicity():
    assert multiplicity(Partition((2, 1)), 1) == 1
    assert multiplicity(Partition((2, 2, 1)), 2) == 2
    assert multiplicity(Partition((3,)), 2) == 0
    with pytest.raises(ValueError):
        multiplicity(Partition((3,)), 0)


def test_partition_statistics():
    mu = Partition((4, 2, 2, 1))
    assert mu.weight == 9 and mu.length == 4
    assert mu.multiplicities == {4: 1, 2: 2, 1: 1}
    assert sum(i * m for i, m in mu.multiplicities.items()) == mu.weight


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition.from_parts([1, 3, 2]) == Partition((3, 2, 1))


def test_add_part_examples():
    assert add_part(Partition((2, 1)), 2) == Partition((2, 2, 1))
    assert add_part(Partition(), 3) == Partition((3,))
    lam = Partition((3, 1))
    mu = add_part(lam, 1)
    assert mu == Partition((3, 1, 1))
    assert (zeta(lam), zeta(mu)) == (3, 6)


def test_add_part_relations_exhaustive():
    for lam in partitions_up_to(10):
        for i in range(1, 11):
            mu = add_part(lam, i)
            assert multiplicity(mu, i) == multiplicity(lam, i) + 1
            assert len(mu) == len(lam) + 1
            assert zeta(mu) == i * multiplicity(mu, i) * zeta(lam)


@given(st.lists(st.integers(1, 9), max_size=8), st.integers(1, 9))
def test_add_part_is_sorted_insertion(parts, i):
    lam = Partition.from_parts(parts)
    assert add_part(lam, i) == Partition.from_parts(parts + [i])


def test_cells():
    assert cells(Partition((2, 1))) == [(1, 1), (1, 2), (2, 1)]
    assert cells(Partition()) == []
    assert cells(Partition((3,))) == [(1, 1), (1, 2), (1, 3)]
    for mu in enumerate_partitions(7):
        assert len(cells(mu)) == mu.weight
