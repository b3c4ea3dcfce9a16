"""Integer partitions, bipartitions and irreducible characters of S_n.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the partition of 0.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import NamedTuple, Sequence

from .errors import GuardError

Partition = tuple[int, ...]

PARTITION_GUARD = 30
BIPARTITION_GUARD = 12


class Bipartition(NamedTuple):
    lambda0: Partition
    lambda1: Partition

    @property
    def k(self) -> int:
        return sum(self.lambda0)

    @property
    def n(self) -> int:
        return sum(self.lambda0) + sum(self.lambda1)

    def label(self) -> str:
        return "[[" + ",".join(map(str, self.lambda0)) + "],[" + ",".join(map(str, self.lambda1)) + "]]"


def as_partition(parts: Sequence[int]) -> Partition:
    """Validate and normalize a sequence into a ``Partition``."""
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition must be weakly decreasing: {parts}")
    return parts


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in lexicographically descending order."""
    if n < 0 or n > PARTITION_GUARD:
        raise GuardError(f"n={n} outside 0..{PARTITION_GUARD}", field="n")
    return list(_partitions(n, n))


@lru_cache(maxsize=None)
def _partitions(n: int, cap: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return tuple(out)


def enumerate_bipartitions(n: int) -> list[Bipartition]:
    """All pairs (lambda0 |- k, lambda1 |- n-k), k running from n down to 0."""
    if n < 0 or n > BIPARTITION_GUARD:
        raise GuardError(f"n={n} outside 0..{BIPARTITION_GUARD}", field="n")
    return [
        Bipartition(a, b)
        for k in range(n, -1, -1)
        for a in enumerate_partitions(k)
        for b in enumerate_partitions(n - k)
    ]


def conjugate_partition(lam: Partition) -> Partition:
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0] if lam else 0))


def hook_dimension(lam: Partition) -> int:
    """Dimension of the S_n irreducible ``lam`` by the hook-length formula."""
    cols = conjugate_partition(lam)
    hooks = prod(
        (lam[i] - j - 1) + (cols[j] - i - 1) + 1
        for i in range(len(lam))
        for j in range(lam[i])
    )
    return factorial(sum(lam)) // hooks


def z_factor(mu: Partition) -> int:
    """Centralizer order ``prod i**m_i * m_i!`` of cycle type ``mu`` in S_n."""
    return prod(i**m * factorial(m) for i, m in Counter(mu).items())


def class_size(mu: Partition) -> int:
    return factorial(sum(mu)) // z_factor(mu)


def mn_character(lam: Partition, mu: Partition) -> int:
    """Character of the irreducible ``lam`` at cycle type ``mu`` (Murnaghan-Nakayama)."""
    lam, mu = tuple(lam), tuple(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError(f"weight mismatch: |{lam}|={sum(lam)} vs |{mu}|={sum(mu)}")
    return _mn(lam, mu)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    # beta-set: removing an r-rim hook moves one bead from b to b - r
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        new = sorted((occupied - {b}) | {target}, reverse=True)
        shape = tuple(x - (ell - 1 - i) for i, x in enumerate(new))
        shape = tuple(p for p in shape if p > 0)
        total += (-1) ** height * _mn(shape, rest)
    return total
