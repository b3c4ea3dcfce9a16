"""Finite-support signed permutations: the group B = Z2 wr S_inf.

An element is stored as ``g = s.z``: the sign vector ``z`` acts first and the
permutation ``s`` second.  Viewed as a signed permutation of the integers,
``g`` sends ``i`` to ``s(i)`` with sign ``(-1)**z_i``.  The pair law
``(z, s)(z', s') = (z + s z', s s')`` with ``s(z)_i = z_{s^-1(i)}`` becomes

    (s1 z1)(s2 z2) = (s1 s2)(s2^-1(z1) + z2),   s2^-1(z1)_i = z1_{s2(i)}.

Sign vectors are plain ``frozenset`` objects holding the indices ``i`` with
``z_i = 1``; Z2 addition is symmetric difference.  All indices are 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import ElementSyntaxError, GuardError

__all__ = [
    "Permutation",
    "GroupElement",
    "QuasiCycle",
    "SignedCycleType",
    "IDENTITY",
    "element",
    "multiply",
    "inverse",
    "conjugate",
    "support",
    "quasi_cycle_decompose",
    "recompose",
    "signed_cycle_type",
    "shift_conjugate",
    "split_in_level",
    "parse_element",
    "format_element",
]


class Permutation:
    """Bijection of the positive integers moving finitely many points.

    Fixed points are never stored, so equal permutations have equal state.
    """

    __slots__ = ("_map", "_key")

    def __init__(self, mapping: Mapping[int, int] | None = None):
        clean = {}
        for i, j in (mapping or {}).items():
            if i < 1 or j < 1:
                raise ValueError(f"indices must be positive, got {i}->{j}")
            if i != j:
                clean[int(i)] = int(j)
        if sorted(clean) != sorted(clean.values()):
            raise ValueError(f"not a bijection on its moved points: {mapping}")
        self._map = clean
        self._key = tuple(sorted(clean.items()))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from cycles ``(a b c)`` meaning ``a->b->c->a``.

        Cycles are composed right to left when they overlap.
        """
        perm = cls()
        for cyc in cycles:
            cyc = [int(c) for c in cyc]
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"repeated point in cycle {cyc}")
            if len(cyc) > 1:
                m = {a: b for a, b in zip(cyc, cyc[1:] + cyc[:1])}
                perm = perm * cls(m)
        return perm

    def __call__(self, i: int) -> int:
        return self._map.get(i, i)

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        pts = set(self._map) | set(other._map)
        return Permutation({i: self(other(i)) for i in pts})

    def inverse(self) -> "Permutation":
        return Permutation({j: i for i, j in self._map.items()})

    @property
    def moved(self) -> frozenset[int]:
        return frozenset(self._map)

    def items(self):
        return self._key

    def is_identity(self) -> bool:
        return not self._map

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its minimum, sorted by minimum."""
        seen: set[int] = set()
        out = []
        for start in sorted(self._map):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self._map[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self._map[j]
            out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"Permutation({''.join('(' + ' '.join(map(str, c)) + ')' for c in self.cycles()) or '()'})"


@dataclass(frozen=True)
class GroupElement:
    perm: Permutation
    signs: frozenset[int]

    def __post_init__(self):
        signs = frozenset(int(i) for i in self.signs)
        if any(i < 1 for i in signs):
            raise ValueError(f"sign indices must be positive: {sorted(signs)}")
        object.__setattr__(self, "signs", signs)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def __invert__(self) -> "GroupElement":
        return inverse(self)

    def is_identity(self) -> bool:
        return self.perm.is_identity() and not self.signs

    def __str__(self) -> str:
        return format_element(self)


IDENTITY = GroupElement(Permutation(), frozenset())


def element(*cycles: Sequence[int], signs: Iterable[int] = ()) -> GroupElement:
    """Convenience constructor: ``element((1, 2, 3), (4, 5), signs=[1])``."""
    return GroupElement(Permutation.from_cycles(cycles), frozenset(signs))


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    s1, s2 = g.perm, h.perm
    pulled = {s2.inverse()(i) for i in g.signs}  # s2^-1 applied to z1
    return GroupElement(s1 * s2, frozenset(pulled ^ h.signs))


def inverse(g: GroupElement) -> GroupElement:
    # (s z)^-1 = z s^-1 = s^-1 . s(z)
    return GroupElement(g.perm.inverse(), frozenset(g.perm(i) for i in g.signs))


def conjugate(g: GroupElement, h: GroupElement) -> GroupElement:
    """Return ``h g h^-1``."""
    return multiply(multiply(h, g), inverse(h))


def support(g: GroupElement) -> frozenset[int]:
    return g.perm.moved | g.signs


@dataclass(frozen=True)
class QuasiCycle:
    """A cycle of ``s`` with the sign bits ``z`` carries on its orbit."""

    orbit: tuple[int, ...]
    bits: frozenset[int] = frozenset()

    def __post_init__(self):
        if not self.orbit or len(set(self.orbit)) != len(self.orbit):
            raise ValueError(f"bad orbit {self.orbit}")
        if not set(self.bits) <= set(self.orbit):
            raise ValueError(f"sign bits {sorted(self.bits)} outside orbit {self.orbit}")
        object.__setattr__(self, "bits", frozenset(self.bits))

    @property
    def length(self) -> int:
        return len(self.orbit)

    @property
    def sign_sum(self) -> int:
        return len(self.bits) % 2

    def is_trivial(self) -> bool:
        return self.length == 1 and not self.bits

    def as_element(self) -> GroupElement:
        return GroupElement(Permutation.from_cycles([self.orbit]), self.bits)


def quasi_cycle_decompose(g: GroupElement) -> list[QuasiCycle]:
    """Split ``g`` into commuting quasi-cycles, ordered by minimal element.

    Flipped fixed points become length-1 quasi-cycles; trivial ones are omitted.
    """
    out = [QuasiCycle(c, g.signs & set(c)) for c in g.perm.cycles()]
    out += [QuasiCycle((i,), frozenset([i])) for i in g.signs - g.perm.moved]
    out.sort(key=lambda q: q.orbit[0])
    return out


def recompose(parts: Iterable[QuasiCycle]) -> GroupElement:
    g = IDENTITY
    for q in parts:
        g = multiply(g, q.as_element())
    return g


@dataclass(frozen=True)
class SignedCycleType:
    """Conjugacy invariant of B: cycle lengths split by parity of sign sum.

    Both tuples are sorted descending (partition convention).
    """

    plus: tuple[int, ...] = ()
    minus: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "plus", tuple(sorted(self.plus, reverse=True)))
        object.__setattr__(self, "minus", tuple(sorted(self.minus, reverse=True)))
        if any(x < 1 for x in self.plus + self.minus):
            raise ValueError("cycle lengths must be positive")

    @property
    def weight(self) -> int:
        return sum(self.plus) + sum(self.minus)

    def label(self) -> str:
        return "+[" + ",".join(map(str, self.plus)) + "]|-[" + ",".join(map(str, self.minus)) + "]"


def signed_cycle_type(g: GroupElement) -> SignedCycleType:
    plus, minus = [], []
    for q in quasi_cycle_decompose(g):
        (minus if q.sign_sum else plus).append(q.length)
    return SignedCycleType(tuple(plus), tuple(minus))


def shift_conjugate(g: GroupElement, n: int) -> GroupElement:
    """Conjugate ``g`` by ``t_n = (1 1+n)(2 2+n)...(K K+n)``, K = max support.

    The result lives in B_{n,inf}, i.e. its support avoids ``1..n``.
    """
    supp = support(g)
    top = max(supp, default=0)
    if n < top:
        raise GuardError(f"shift {n} is below max support {top}", field="n")
    t = element(*[(i, i + n) for i in range(1, top + 1) if n > 0])
    return conjugate(g, t)


def split_in_level(g: GroupElement, n: int) -> tuple[GroupElement, GroupElement] | None:
    """Factor ``g = b1 b2`` with b1 in B_n and b2 in B_{n,inf}, or return None."""
    s = g.perm
    if any(s(i) > n for i in range(1, n + 1)):
        return None
    low = {i: j for i, j in s.items() if i <= n}
    high = {i: j for i, j in s.items() if i > n}
    b1 = GroupElement(Permutation(low), frozenset(i for i in g.signs if i <= n))
    b2 = GroupElement(Permutation(high), frozenset(i for i in g.signs if i > n))
    return b1, b2


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_element(text: str) -> GroupElement:
    """Parse ``"(1 2 3)(4 5);signs=1,7"``.  ``"()"`` and ``"e"`` denote the identity."""
    body, _, tail = text.strip().partition(";")
    body = body.strip()
    signs: list[int] = []
    if tail:
        key, eq, vals = tail.partition("=")
        if key.strip() != "signs" or not eq:
            raise ElementSyntaxError(f"expected ';signs=...', got {tail!r}", field="signs")
        try:
            signs = [int(v) for v in vals.replace(",", " ").split()]
        except ValueError:
            raise ElementSyntaxError(f"bad sign list {vals!r}", field="signs") from None
        if any(v < 1 for v in signs):
            raise ElementSyntaxError("sign indices must be positive", field="signs")
        if len(set(signs)) != len(signs):
            raise ElementSyntaxError("repeated sign index", field="signs")
    cycles = []
    if body not in ("", "e"):
        if _CYCLE.sub("", body).strip():
            raise ElementSyntaxError(f"cannot parse cycles in {body!r}", field="cycles")
        for grp in _CYCLE.findall(body):
            try:
                pts = [int(v) for v in grp.split()]
            except ValueError:
                raise ElementSyntaxError(f"non-integer point in ({grp})", field="cycles") from None
            if any(p < 1 for p in pts):
                raise ElementSyntaxError("points must be positive", field="cycles")
            cycles.append(pts)
    try:
        return element(*cycles, signs=signs)
    except ValueError as exc:
        raise ElementSyntaxError(str(exc), field="cycles") from None


def format_element(g: GroupElement) -> str:
    cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in g.perm.cycles()) or "()"
    if g.signs:
        cyc += ";signs=" + ",".join(map(str, sorted(g.signs)))
    return cyc
