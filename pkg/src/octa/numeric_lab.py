"""Finite-truncation witnesses for stability and its failure.

Two concrete representations of B are evaluated by brute force:

* on l2(N), permutations move basis functions and ``z`` multiplies the
  value at ``x`` by ``(-1)**z_x``;
* on L2({0,1}^N, nu^N) with ``nu(0) = p``, ``nu(1) = q``, permutations act on
  coordinates and ``z`` multiplies by ``(-1)**sum(x_i z_i)``.

For the second, ``(Pi(s) f)(x) = f(s^-1 . x)`` with ``(s . x)_i = x_{s^-1(i)}``,
which makes ``Pi`` a homomorphism for the ``g = s.z`` convention.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .elements import GroupElement, element, multiply, support
from .errors import GuardError
from .thoma import to_rational

CONFIG_GUARD = 20


@dataclass(frozen=True)
class BernoulliParam:
    p: Fraction

    def __post_init__(self):
        p = to_rational(self.p, "p")
        if not 0 < p < 1:
            raise GuardError(f"p must lie strictly between 0 and 1, got {p}", field="p")
        object.__setattr__(self, "p", p)

    @property
    def q(self) -> Fraction:
        return 1 - self.p


# l2(N) side: vectors are finitely supported dicts index -> coefficient

def _sign_operator(signs: frozenset[int]) -> Callable[[dict], dict]:
    return lambda f: {x: (-1) ** (x in signs) * v for x, v in f.items()}


def _l2_inner(f: dict, h: dict) -> Fraction:
    return sum((Fraction(v) * h.get(x, 0) for x, v in f.items()), Fraction(0))


def example1_pairing(m: int, f_index: int) -> Fraction:
    """``<T(1^[1,m]) e_j, e_j>`` for the basis vector ``e_j``, ``j = f_index``."""
    if m < 0 or f_index < 1:
        raise GuardError("need m >= 0 and f_index >= 1", field="m" if m < 0 else "f_index")
    e_j = {f_index: Fraction(1)}
    block = frozenset(range(1, m + 1))
    return _l2_inner(_sign_operator(block)(e_j), e_j)


def example1_defect(m: int, f_index: int) -> Fraction:
    """``|<T(1^[1,m]) e_j, e_j> - <e_j, e_j>|``; stays 2 once ``m >= f_index``."""
    return abs(example1_pairing(m, f_index) - 1)


def example1_series(f_index: int, m_max: int) -> Iterator[tuple[int, Fraction]]:
    for m in range(0, m_max + 1):
        yield m, example1_pairing(m, f_index)


# L2({0,1}^m) side: functions are callables on 0/1 tuples indexed from 1

def _configurations(m: int) -> Iterator[tuple[int, ...]]:
    return itertools.product((0, 1), repeat=m)


def _apply(g: GroupElement, f: Callable[[tuple[int, ...]], Fraction]) -> Callable:
    s, z = g.perm, g.signs

    def z_part(x):
        return (-1) ** sum(x[i - 1] for i in z) * f(x)

    def pulled(x):
        # (s^-1 . x)_i = x_{s(i)}
        return z_part(tuple(x[s(i + 1) - 1] for i in range(len(x))))

    return pulled


def example3_state(p: BernoulliParam, g: GroupElement, m: int, check_stable: bool = True) -> Fraction:
    """``<Pi(g) 1, 1>`` by exact summation over {0,1}^m weighted by nu^m."""
    top = max(support(g), default=0)
    if m < top:
        raise GuardError(f"truncation m={m} does not cover support up to {top}", field="m")
    if m > CONFIG_GUARD or (check_stable and m + 1 > CONFIG_GUARD):
        raise GuardError(f"truncation limited to m <= {CONFIG_GUARD}", field="m")
    value = _summed_state(p, g, m)
    if check_stable:
        wider = _summed_state(p, g, m + 1)
        if wider != value:
            raise AssertionError(f"state changed from {value} to {wider} between m={m} and m+1")
    return value


def _summed_state(p: BernoulliParam, g: GroupElement, m: int) -> Fraction:
    one = lambda x: Fraction(1)  # noqa: E731
    vec = _apply(g, one)
    total = Fraction(0)
    for x in _configurations(m):
        ones = sum(x)
        total += p.p ** (m - ones) * p.q**ones * vec(x)
    return total


def example3_defect(p: BernoulliParam, n: int, m: int | None = None) -> Fraction:
    """``<Pi(1^(n)) Pi((n n+1)) Pi(1^(n)) 1, 1> - <Pi((n n+1)) 1, 1>``."""
    if n < 1:
        raise GuardError(f"n must be positive, got {n}", field="n")
    m = n + 1 if m is None else m
    flip = element(signs=[n])
    swap = element((n, n + 1))
    sandwiched = multiply(multiply(flip, swap), flip)
    return example3_state(p, sandwiched, m) - example3_state(p, swap, m)
