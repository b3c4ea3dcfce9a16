"""Seeded random generators for elements and specs (used by the test suites)."""

from __future__ import annotations

import random
from fractions import Fraction

from .elements import GroupElement, Permutation
from .induced_states import RepSpec
from .partitions import Bipartition, enumerate_partitions
from .thoma import ThomaSpec

GAMMA_CASES = ("both", "gamma0", "gamma1", "none")


def random_element(rng: random.Random, max_point: int = 8, sign_prob: float = 0.4) -> GroupElement:
    pts = [i for i in range(1, max_point + 1) if rng.random() < 0.7]
    images = pts[:]
    rng.shuffle(images)
    signs = frozenset(i for i in range(1, max_point + 1) if rng.random() < sign_prob)
    return GroupElement(Permutation(dict(zip(pts, images))), signs)


def random_permutation(rng: random.Random, max_point: int = 10) -> Permutation:
    return random_element(rng, max_point, 0.0).perm


def _split(rng: random.Random, total: Fraction, parts: int) -> list[Fraction]:
    weights = [rng.randint(1, 6) for _ in range(parts)]
    return [total * w / sum(weights) for w in weights]


def random_thoma_spec(rng: random.Random, case: str | None = None) -> ThomaSpec:
    case = case or rng.choice(GAMMA_CASES)
    if case == "none" and rng.random() < 0.2:
        # one-dimensional factor: a single parameter equal to 1
        entry = ((Fraction(1), rng.randint(0, 1)),)
        return ThomaSpec(entry, ()) if rng.random() < 0.5 else ThomaSpec((), entry)
    n_alpha, n_beta = rng.randint(0, 3), rng.randint(0, 3)
    if case == "none" and n_alpha + n_beta == 0:
        n_alpha = 1
    if case == "none":
        mass = Fraction(1)
    elif n_alpha + n_beta == 0:
        mass = Fraction(0)
    else:
        mass = Fraction(rng.randint(0, 11), 12)
    params = _split(rng, mass, n_alpha + n_beta) if n_alpha + n_beta else []
    params = [x for x in params if x > 0]
    alpha = [(x, rng.randint(0, 1)) for x in params[:n_alpha]]
    beta = [(x, rng.randint(0, 1)) for x in params[n_alpha:]]
    rest = 1 - sum(params, Fraction(0))
    if case == "both":
        g0 = rest * Fraction(rng.randint(1, 5), 6)
        g1 = rest - g0
    elif case == "gamma0":
        g0, g1 = rest, Fraction(0)
    elif case == "gamma1":
        g0, g1 = Fraction(0), rest
    else:
        g0 = g1 = Fraction(0)
    return ThomaSpec(tuple(alpha), tuple(beta), g0, g1)


def random_rep_spec(rng: random.Random, n_max: int = 4, case: str | None = None) -> RepSpec:
    n = rng.randint(0, n_max)
    k = rng.randint(0, n)
    bp = Bipartition(rng.choice(enumerate_partitions(k)), rng.choice(enumerate_partitions(n - k)))
    return RepSpec(n, bp, random_thoma_spec(rng, case))
