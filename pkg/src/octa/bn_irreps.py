"""Characters of the finite hyperoctahedral groups B_n = Z2 wr S_n.

Irreducibles are indexed by bipartitions ``(lambda0 |- k, lambda1 |- n-k)``
and obtained by inducing ``Omega_kn (x) Irr_lambda0 (x) Irr_lambda1`` from the
stabilizer ``Z2^n . (S_k x S_{n-k})`` of the multiplicative character
``Omega_kn(z) = (-1)**(number of flipped j > k)``.

Two independent routes compute the same numbers:

* ``bn_induced_character`` evaluates the Frobenius sum over coset
  representatives, using Murnaghan-Nakayama values for the S_k factors;
* ``oracle_trace`` assembles the induced representation as explicit block
  matrices from Young's seminormal form and takes the trace.
"""

from __future__ import annotations

import csv
import io
import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod
from typing import Iterator

from . import _matrix as mx
from .elements import (
    GroupElement,
    Permutation,
    SignedCycleType,
    conjugate,
    element,
    inverse,
    multiply,
    signed_cycle_type,
    support,
)
from .errors import GuardError, MembershipError
from .partitions import (
    Bipartition,
    enumerate_bipartitions,
    enumerate_partitions,
    hook_dimension,
    mn_character,
)
from .seminormal import representation_matrix

CLASS_GUARD = 8
VERIFY_GUARD = 5
TABLE_GUARD = 6
ORACLE_GUARD = 5
ORACLE_DIM_GUARD = 64


@dataclass(frozen=True)
class MultiplicativeCharacter:
    k: int
    n: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise GuardError(f"need 0 <= k <= n, got k={self.k}, n={self.n}", field="k")

    def __call__(self, z) -> int:
        return omega_value(self.k, self.n, z)


def omega_value(k: int, n: int, z) -> int:
    if not 0 <= k <= n:
        raise GuardError(f"need 0 <= k <= n, got k={k}, n={n}", field="k")
    z = frozenset(z)
    if any(j < 1 or j > n for j in z):
        raise MembershipError(f"sign support {sorted(z)} not inside 1..{n}", field="z")
    return -1 if sum(1 for j in z if j > k) % 2 else 1


@dataclass(frozen=True)
class BnClass:
    """Conjugacy class of B_n; fixed points count as plus-type 1-cycles."""

    ctype: SignedCycleType
    size: int

    @property
    def n(self) -> int:
        return self.ctype.weight

    def label(self) -> str:
        return self.ctype.label()

    def representative(self) -> GroupElement:
        cycles, signs, nxt = [], [], 1
        for length, flipped in [(p, False) for p in self.ctype.plus] + [(m, True) for m in self.ctype.minus]:
            cyc = tuple(range(nxt, nxt + length))
            cycles.append(cyc)
            if flipped:
                signs.append(nxt)
            nxt += length
        return element(*cycles, signs=signs)


def centralizer_order(ctype: SignedCycleType) -> int:
    return prod(
        (2 * i) ** m * factorial(m)
        for part in (ctype.plus, ctype.minus)
        for i, m in Counter(part).items()
    )


def bn_class_type(g: GroupElement, n: int) -> SignedCycleType:
    """Signed cycle type of ``g`` as an element of B_n (fixed points padded in)."""
    if any(i > n for i in support(g)):
        raise MembershipError(f"support {sorted(support(g))} not inside 1..{n}", field="element")
    ct = signed_cycle_type(g)
    return SignedCycleType(ct.plus + (1,) * (n - ct.weight), ct.minus)


def enumerate_bn(n: int) -> Iterator[GroupElement]:
    """All 2**n * n! elements of B_n."""
    for images in itertools.permutations(range(1, n + 1)):
        perm = Permutation(dict(zip(range(1, n + 1), images)))
        for bits in itertools.product((0, 1), repeat=n):
            yield GroupElement(perm, frozenset(i + 1 for i, b in enumerate(bits) if b))


def bn_classes(n: int, verify: bool = False) -> list[BnClass]:
    """Classes of B_n indexed by (lambda_plus, lambda_minus), sizes from the centralizer formula.

    With ``verify=True`` the sizes are checked against exhaustive enumeration.
    """
    if n < 0 or n > CLASS_GUARD:
        raise GuardError(f"n={n} outside 0..{CLASS_GUARD}", field="n")
    order = 2**n * factorial(n)
    out = []
    for a in range(n, -1, -1):
        for plus in enumerate_partitions(a):
            for minus in enumerate_partitions(n - a):
                ct = SignedCycleType(plus, minus)
                out.append(BnClass(ct, order // centralizer_order(ct)))
    if verify:
        if n > VERIFY_GUARD:
            raise GuardError(f"brute-force verification limited to n <= {VERIFY_GUARD}", field="n")
        counts = Counter(bn_class_type(g, n) for g in enumerate_bn(n))
        got = {c.ctype: c.size for c in out}
        if counts != got:
            raise AssertionError(f"class sizes disagree with enumeration for n={n}")
    return out


def bn_dimension(bp: Bipartition) -> int:
    return comb(bp.n, bp.k) * hook_dimension(bp.lambda0) * hook_dimension(bp.lambda1)


def coset_representatives(n: int, k: int) -> list[tuple[tuple[int, ...], Permutation]]:
    """Minimal-length representatives of S_n / (S_k x S_{n-k}).

    Each is keyed by the k-subset ``A``; the permutation sends ``1..k``
    increasingly onto ``A`` and ``k+1..n`` increasingly onto the complement.
    """
    out = []
    for subset in itertools.combinations(range(1, n + 1), k):
        rest = [j for j in range(1, n + 1) if j not in subset]
        images = list(subset) + rest
        out.append((subset, Permutation(dict(zip(range(1, n + 1), images)))))
    return out


def _restricted_types(h: GroupElement, k: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    low, high = [], []
    for c in h.perm.cycles():
        (low if c[0] <= k else high).append(len(c))
    low += [1] * (k - sum(low))
    high += [1] * (n - k - sum(high))
    return tuple(sorted(low, reverse=True)), tuple(sorted(high, reverse=True))


def _check_weight(n: int, bp: Bipartition) -> None:
    if bp.n != n:
        raise GuardError(f"bipartition {bp.label()} has weight {bp.n}, expected {n}", field="bipartition")


def induced_character_at(n: int, bp: Bipartition, g: GroupElement) -> int:
    """Frobenius sum for the character of ``bp`` at the element ``g`` of B_n."""
    _check_weight(n, bp)
    if any(i > n for i in support(g)):
        raise MembershipError(f"support {sorted(support(g))} not inside 1..{n}", field="element")
    k = bp.k
    total = 0
    for _, x in coset_representatives(n, k):
        xe = GroupElement(x, frozenset())
        h = conjugate(g, inverse(xe))  # x^-1 g x
        if any(h.perm(i) > k for i in range(1, k + 1)):
            continue
        mu0, mu1 = _restricted_types(h, k, n)
        total += omega_value(k, n, h.signs) * mn_character(bp.lambda0, mu0) * mn_character(bp.lambda1, mu1)
    return total


def bn_induced_character(n: int, bp: Bipartition, cls: BnClass) -> int:
    if cls.n != n:
        raise GuardError(f"class {cls.label()} does not belong to B_{n}", field="class")
    return induced_character_at(n, bp, cls.representative())


@dataclass(frozen=True)
class CharacterTable:
    n: int
    bipartitions: tuple[Bipartition, ...]
    classes: tuple[BnClass, ...]
    values: dict = field(repr=False)  # Bipartition -> tuple[int, ...] aligned with classes
    dims: dict = field(repr=False)

    def __getitem__(self, key: tuple[Bipartition, BnClass]) -> int:
        bp, cls = key
        return self.values[bp][self.classes.index(cls)]

    @property
    def rows(self) -> dict:
        return {bp: dict(zip(self.classes, self.values[bp])) for bp in self.bipartitions}

    @property
    def order(self) -> int:
        return 2**self.n * factorial(self.n)

    def dims_squared_sum(self) -> int:
        return sum(d * d for d in self.dims.values())

    def inner_product(self, a: Bipartition, b: Bipartition) -> Fraction:
        """Normalized first-orthogonality pairing; 1 when a == b, 0 otherwise."""
        s = sum(c.size * x * y for c, x, y in zip(self.classes, self.values[a], self.values[b]))
        return Fraction(s, self.order)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "order": self.order,
            "classes": [{"label": c.label(), "size": c.size} for c in self.classes],
            "rows": [
                {"bipartition": bp.label(), "dim": self.dims[bp], "values": list(self.values[bp])}
                for bp in self.bipartitions
            ],
            "dims_squared_sum": self.dims_squared_sum(),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["bipartition"] + [c.label() for c in self.classes])
        for bp in self.bipartitions:
            w.writerow([bp.label()] + list(self.values[bp]))
        return buf.getvalue()


def bn_character_table(n: int) -> CharacterTable:
    if n < 1 or n > TABLE_GUARD:
        raise GuardError(f"n={n} outside 1..{TABLE_GUARD}", field="n")
    classes = tuple(bn_classes(n))
    bps = tuple(enumerate_bipartitions(n))
    values, dims = {}, {}
    for bp in bps:
        row = tuple(bn_induced_character(n, bp, c) for c in classes)
        dims[bp] = bn_dimension(bp)
        assert row[classes.index(_identity_class(classes))] == dims[bp]
        values[bp] = row
    return CharacterTable(n, bps, classes, values, dims)


def _identity_class(classes) -> BnClass:
    return next(c for c in classes if not c.ctype.minus and set(c.ctype.plus) <= {1})


def bn_normalized_character(n: int, bp: Bipartition, g: GroupElement) -> Fraction:
    return Fraction(induced_character_at(n, bp, g), bn_dimension(bp))


def _rho_tilde(bp: Bipartition, n: int, h: GroupElement) -> mx.Matrix:
    k = bp.k
    m0 = representation_matrix(bp.lambda0, [h.perm(j) for j in range(1, k + 1)])
    m1 = representation_matrix(bp.lambda1, [h.perm(j) - k for j in range(k + 1, n + 1)])
    return mx.scale(mx.kron(m0, m1), omega_value(k, n, h.signs))


def oracle_matrix(n: int, bp: Bipartition, g: GroupElement) -> mx.Matrix:
    """Full induced representation matrix of ``g`` in block-monomial form."""
    _check_weight(n, bp)
    if n > ORACLE_GUARD or bn_dimension(bp) > ORACLE_DIM_GUARD:
        raise GuardError(f"oracle limited to n <= {ORACLE_GUARD}, dim <= {ORACLE_DIM_GUARD}", field="n")
    if any(i > n for i in support(g)):
        raise MembershipError(f"support {sorted(support(g))} not inside 1..{n}", field="element")
    k = bp.k
    reps = coset_representatives(n, k)
    where = {subset: i for i, (subset, _) in enumerate(reps)}
    block = hook_dimension(bp.lambda0) * hook_dimension(bp.lambda1)
    out = mx.zeros(len(reps) * block, len(reps) * block)
    for col, (subset, x) in enumerate(reps):
        image = tuple(sorted(g.perm(a) for a in subset))
        row = where[image]
        y = reps[row][1]
        h = multiply(multiply(GroupElement(y.inverse(), frozenset()), g), GroupElement(x, frozenset()))
        assert all(h.perm(i) <= k for i in range(1, k + 1))
        rho = _rho_tilde(bp, n, h)
        for p in range(block):
            for q in range(block):
                out[row * block + p][col * block + q] = rho[p][q]
    return out


def oracle_trace(n: int, bp: Bipartition, g: GroupElement) -> Fraction:
    return mx.trace(oracle_matrix(n, bp, g))
