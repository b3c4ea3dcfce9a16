import itertools
import math
from fractions import Fraction

import pytest

from octa.partitions import (
    Bipartition,
    as_partition,
    class_size,
    conjugate_partition,
    enumerate_bipartitions,
    enumerate_partitions,
    hook_dimension,
    mn_character,
    z_factor,
)
from octa.seminormal import seminormal_character, standard_tableaux


def euler_partition_counts(limit):
    # pentagonal number recurrence
    p = [1] + [0] * limit
    for n in range(1, limit + 1):
        total, j = 0, 1
        while True:
            g1, g2 = j * (3 * j - 1) // 2, j * (3 * j + 1) // 2
            if g1 > n:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            j += 1
        p[n] = total
    return p


def count_syt(shape):
    # brute force: remove a corner holding the largest entry, recursively
    shape = tuple(x for x in shape if x)
    if not shape:
        return 1
    total = 0
    for i, row in enumerate(shape):
        if i + 1 == len(shape) or shape[i + 1] < row:
            total += count_syt(shape[:i] + (row - 1,) + shape[i + 1:])
    return total


def test_partition_examples():
    assert enumerate_partitions(0) == [()]
    assert len(enumerate_partitions(4)) == 5
    assert len(enumerate_partitions(10)) == 42


def test_partition_counts_match_pentagonal_recurrence():
    counts = euler_partition_counts(18)
    for n in range(19):
        parts = enumerate_partitions(n)
        assert len(parts) == counts[n]
        assert len(set(parts)) == len(parts)
        assert all(sum(p) == n and list(p) == sorted(p, reverse=True) for p in parts)


def test_partitions_descending_order():
    assert enumerate_partitions(3) == [(3,), (2, 1), (1, 1, 1)]


def test_bipartition_examples():
    assert enumerate_bipartitions(0) == [Bipartition((), ())]
    assert enumerate_bipartitions(1) == [Bipartition((1,), ()), Bipartition((), (1,))]
    assert len(enumerate_bipartitions(2)) == 5


def test_bipartition_counts():
    p = euler_partition_counts(8)
    for n in range(9):
        assert len(enumerate_bipartitions(n)) == sum(p[k] * p[n - k] for k in range(n + 1))


def test_bipartition_label():
    assert Bipartition((3,), (1, 1)).label() == "[[3],[1,1]]"
    assert Bipartition((2,), (1,)).k == 2
    assert Bipartition((2,), (1,)).n == 3


def test_as_partition_validates():
    assert as_partition([3, 2, 2]) == (3, 2, 2)
    assert as_partition([]) == ()
    for bad in ([2, 0], [2, -1], [1, 3]):
        with pytest.raises(ValueError):
            as_partition(bad)


@pytest.mark.parametrize("lam,dim", [((), 1), ((2, 1), 2), ((3, 2), 5), ((3, 1, 1), 6)])
def test_hook_dimension_examples(lam, dim):
    assert hook_dimension(lam) == dim


def test_hook_dimension_matches_tableau_count():
    for n in range(9):
        for lam in enumerate_partitions(n):
            assert hook_dimension(lam) == count_syt(lam)
            assert hook_dimension(lam) == hook_dimension(conjugate_partition(lam))
        assert sum(hook_dimension(lam) ** 2 for lam in enumerate_partitions(n)) == math.factorial(n)


def test_class_sizes_sum_to_group_order():
    for n in range(1, 9):
        assert sum(class_size(mu) for mu in enumerate_partitions(n)) == math.factorial(n)
    assert z_factor((2, 2, 1)) == 8


def test_mn_examples():
    assert all(mn_character((4,), mu) == 1 for mu in enumerate_partitions(4))
    assert mn_character((1, 1, 1), (2, 1)) == -1
    assert mn_character((2, 1), (3,)) == -1
    with pytest.raises(ValueError):
        mn_character((2, 1), (2,))


def _cycle_type(images):
    seen, lengths = set(), []
    for start in range(1, len(images) + 1):
        if start in seen:
            continue
        length, i = 0, start
        while i not in seen:
            seen.add(i)
            i = images[i - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_mn_matches_seminormal_traces(n):
    for lam in enumerate_partitions(n):
        assert len(standard_tableaux(lam)) == hook_dimension(lam)
        for images in itertools.permutations(range(1, n + 1)):
            mu = _cycle_type(images)
            assert seminormal_character(lam, images) == mn_character(lam, mu)


@pytest.mark.parametrize("n", range(1, 7))
def test_symmetric_group_orthogonality(n):
    parts = enumerate_partitions(n)
    for a in parts:
        for b in parts:
            s = sum(Fraction(mn_character(a, mu) * mn_character(b, mu), z_factor(mu)) for mu in parts)
            assert s == (a == b)
    for mu in parts:
        for nu in parts:
            s = sum(mn_character(lam, mu) * mn_character(lam, nu) for lam in parts)
            assert s == (z_factor(mu) if mu == nu else 0)
