"""Young's seminormal form: explicit rational matrices for S_m irreducibles.

Basis vectors are standard Young tableaux.  For the adjacent transposition
``s_i = (i i+1)`` let ``d = c(i+1) - c(i)`` be the axial distance (content is
column minus row).  Then ``s_i v_T = v_T / d`` when ``i, i+1`` share a row or
column (``d = +-1``), and otherwise, with ``T' = s_i T``,

    s_i v_T = v_T / d + v_T'               if d > 0
    s_i v_T = v_T / d + (1 - 1/d**2) v_T'  if d < 0

No square roots appear, so every entry is an exact rational.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import _matrix as mx
from .partitions import Partition

Tableau = tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def standard_tableaux(lam: Partition) -> tuple[Tableau, ...]:
    """All standard Young tableaux of shape ``lam`` filled with 1..|lam|."""
    n = sum(lam)
    if n == 0:
        return ((),)
    out = []
    # place n in a removable corner, recurse on the smaller shape
    for r in range(len(lam)):
        if lam[r] > (lam[r + 1] if r + 1 < len(lam) else 0):
            smaller = list(lam)
            smaller[r] -= 1
            smaller_t = tuple(p for p in smaller if p > 0)
            for t in standard_tableaux(smaller_t):
                rows = [list(row) for row in t]
                if r == len(rows):
                    rows.append([])
                rows[r].append(n)
                out.append(tuple(tuple(row) for row in rows))
    return tuple(sorted(out))


def _positions(t: Tableau) -> dict[int, tuple[int, int]]:
    return {v: (r, c) for r, row in enumerate(t) for c, v in enumerate(row)}


def _swap(t: Tableau, i: int) -> Tableau:
    swap = {i: i + 1, i + 1: i}
    return tuple(tuple(swap.get(v, v) for v in row) for row in t)


@lru_cache(maxsize=None)
def adjacent_matrix(lam: Partition, i: int) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix of ``(i i+1)`` in the seminormal basis (column = input vector)."""
    basis = standard_tableaux(lam)
    index = {t: j for j, t in enumerate(basis)}
    m = mx.zeros(len(basis), len(basis))
    for col, t in enumerate(basis):
        pos = _positions(t)
        (r1, c1), (r2, c2) = pos[i], pos[i + 1]
        d = (c2 - r2) - (c1 - r1)
        m[col][col] = Fraction(1, d)
        if abs(d) > 1:
            other = index[_swap(t, i)]
            m[other][col] = Fraction(1) if d > 0 else 1 - Fraction(1, d * d)
    return tuple(tuple(row) for row in m)


def reduced_word(images: Sequence[int]) -> list[int]:
    """Adjacent indices ``[a1, ..., ar]`` with ``w = s_a1 s_a2 ... s_ar``.

    ``images[j-1] = w(j)`` for a permutation ``w`` of ``1..m``.
    """
    w = list(images)
    word = []
    while True:
        for j in range(len(w) - 1):
            if w[j] > w[j + 1]:
                # w = (w s_j) s_j with w s_j one inversion shorter
                w[j], w[j + 1] = w[j + 1], w[j]
                word.append(j + 1)
                break
        else:
            break
    return word[::-1]


def representation_matrix(lam: Partition, images: Sequence[int]) -> mx.Matrix:
    """Seminormal matrix of the permutation ``j -> images[j-1]`` of ``1..|lam|``."""
    if sorted(images) != list(range(1, sum(lam) + 1)):
        raise ValueError(f"images {list(images)} is not a permutation of 1..{sum(lam)}")
    dim = len(standard_tableaux(lam))
    out = mx.identity(dim)
    for a in reduced_word(images):
        out = mx.matmul(out, [list(r) for r in adjacent_matrix(lam, a)])
    return out


def seminormal_character(lam: Partition, images: Sequence[int]) -> Fraction:
    return mx.trace(representation_matrix(lam, images))
