import itertools

import pytest

from octa import _matrix as mx
from octa.partitions import enumerate_partitions
from octa.seminormal import adjacent_matrix, reduced_word, representation_matrix


def compose(a, b):
    # (a o b)(i) = a(b(i)) on image tuples
    return tuple(a[b[i] - 1] for i in range(len(a)))


def apply_word(word, n):
    images = tuple(range(1, n + 1))
    for a in word:
        s = list(range(1, n + 1))
        s[a - 1], s[a] = s[a], s[a - 1]
        images = compose(images, tuple(s))
    return images


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_reduced_word_reproduces_permutation(n):
    for images in itertools.permutations(range(1, n + 1)):
        word = reduced_word(images)
        assert apply_word(word, n) == images
        inversions = sum(1 for i, j in itertools.combinations(range(n), 2) if images[i] > images[j])
        assert len(word) == inversions


@pytest.mark.parametrize("lam", [(2, 1), (3, 1), (2, 2), (2, 1, 1), (3, 2)])
def test_coxeter_relations(lam):
    n = sum(lam)
    one = mx.identity(len(adjacent_matrix(lam, 1)))
    mats = {i: [list(r) for r in adjacent_matrix(lam, i)] for i in range(1, n)}
    for i, s in mats.items():
        assert mx.matmul(s, s) == one
        if i + 1 < n:
            t = mats[i + 1]
            assert mx.matmul(s, mx.matmul(t, s)) == mx.matmul(t, mx.matmul(s, t))
        for j in range(i + 2, n):
            assert mx.matmul(s, mats[j]) == mx.matmul(mats[j], s)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_representation_is_homomorphism(n):
    perms = list(itertools.permutations(range(1, n + 1)))
    for lam in enumerate_partitions(n):
        rho = {p: representation_matrix(lam, p) for p in perms}
        for a in perms:
            for b in perms:
                assert mx.matmul(rho[a], rho[b]) == rho[compose(a, b)]
