"""States of representations of B induced from B_inf^(n) = B_n . B_{n,inf}.

A ``RepSpec`` fixes a finite-type factor representation of B_inf^(n): an
irreducible of B_n (a bipartition) tensored with the factor representation
of B_{n,inf} attached to a ``ThomaSpec``.  Its normalized trace is the product
of the two normalized characters, and the state of the canonical cyclic
vector of the induced representation extends that trace by zero off
B_inf^(n).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Mapping, Sequence

import numpy as np

from .bn_irreps import bn_normalized_character
from .elements import (
    GroupElement,
    Permutation,
    inverse,
    multiply,
    shift_conjugate,
    split_in_level,
    support,
)
from .errors import GuardError, MembershipError, SpecError
from .partitions import Bipartition, as_partition
from .thoma import ThomaSpec, character_value, validate_spec

log = logging.getLogger(__name__)

EXACT_GRAM_GUARD = 16
APPROX_TOLERANCE = -1e-9


@dataclass(frozen=True)
class RepSpec:
    n: int
    bp: Bipartition
    thoma: ThomaSpec

    def __post_init__(self):
        if self.n < 0:
            raise SpecError(f"n must be nonnegative, got {self.n}", field="n")
        if self.bp.n != self.n:
            raise SpecError(
                f"|lambda0| + |lambda1| = {self.bp.n} does not match n = {self.n}", field="lambda1"
            )

    @property
    def k(self) -> int:
        return self.bp.k

    @classmethod
    def from_json(cls, raw: Mapping[str, Any]) -> "RepSpec":
        if not isinstance(raw, Mapping):
            raise SpecError("RepSpec must be a JSON object", field="rep")
        missing = {"n", "lambda0", "lambda1", "thoma"} - set(raw)
        if missing:
            raise SpecError(f"missing keys {sorted(missing)}", field=sorted(missing)[0])
        n = raw["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise SpecError(f"n must be an integer, got {n!r}", field="n")
        bp = []
        for key in ("lambda0", "lambda1"):
            try:
                bp.append(as_partition(raw[key]))
            except (TypeError, ValueError) as exc:
                raise SpecError(f"{key}: {exc}", field=key) from None
        spec = cls(n, Bipartition(*bp), validate_spec(raw["thoma"]))
        if "k" in raw and raw["k"] != spec.k:
            raise SpecError(f"k = {raw['k']} but |lambda0| = {spec.k}", field="k")
        return spec

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "lambda0": list(self.bp.lambda0),
            "lambda1": list(self.bp.lambda1),
            "thoma": self.thoma.to_json(),
        }


@dataclass(frozen=True)
class CosetInvolution:
    """Product of transpositions ``(p_i r_i)`` with p_1 < p_2 < ... <= k < r_1 < r_2 < ..."""

    pairs: tuple[tuple[int, int], ...]

    def as_permutation(self) -> Permutation:
        return Permutation.from_cycles(self.pairs)

    def as_element(self) -> GroupElement:
        return GroupElement(self.as_permutation(), frozenset())


def canonical_coset_involution(s: Permutation, k: int) -> CosetInvolution:
    """The unique involution in the coset ``s (S_k x S_{k,inf})``.

    It pairs, in increasing order, the points of ``1..k`` missed by ``s(1..k)``
    with the points of ``s(1..k)`` lying above ``k``.
    """
    image = {s(i) for i in range(1, k + 1)}
    lost = sorted(set(range(1, k + 1)) - image)
    gained = sorted(image - set(range(1, k + 1)))
    return CosetInvolution(tuple(zip(lost, gained)))


def finite_trace(spec: RepSpec, b: GroupElement) -> Fraction:
    parts = split_in_level(b, spec.n)
    if parts is None:
        raise MembershipError(f"{b} is not in B_inf^({spec.n})", field="element")
    head, tail = parts
    return bn_normalized_character(spec.n, spec.bp, head) * character_value(spec.thoma, tail)


def induced_state(spec: RepSpec, g: GroupElement) -> Fraction:
    if split_in_level(g, spec.n) is None:
        return Fraction(0)
    return finite_trace(spec, g)


@dataclass(frozen=True)
class GramVerdict:
    psd: bool
    exact: bool
    witness: tuple[int, ...] = ()  # indices of a principal submatrix with negative determinant
    witness_det: Fraction | float | None = None
    gram: tuple = ()

    @property
    def verdict(self) -> str:
        return "psd" if self.psd else "not_psd"

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "exact": self.exact, "size": len(self.gram)}
        if not self.psd:
            out["witness"] = list(self.witness)
            out["witness_det"] = str(self.witness_det)
        return out


def gram_matrix(phi: Callable[[GroupElement], Fraction], elems: Sequence[GroupElement]) -> list[list]:
    inv = [inverse(g) for g in elems]
    return [[phi(multiply(inv[i], elems[j])) for j in range(len(elems))] for i in range(len(elems))]


def _det(m: list[list[Fraction]]) -> Fraction:
    a = [row[:] for row in m]
    n, det = len(a), Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def psd_exact(m: list[list[Fraction]]) -> tuple[bool, tuple[int, ...]]:
    """Symmetric elimination; returns (is_psd, witness indices).

    Pivots are taken in order.  A negative pivot, or a zero pivot whose row
    in the remaining Schur complement is not identically zero, refutes
    positive semidefiniteness; the witness is then the set of used pivots
    plus the offending indices, whose principal minor is negative.
    """
    n = len(m)
    if any(m[i][j] != m[j][i] for i in range(n) for j in range(i)):
        # a positive-definite function gives a Hermitian Gram matrix
        i, j = next((i, j) for i in range(n) for j in range(i) if m[i][j] != m[j][i])
        return False, (j, i)
    a = [[Fraction(x) for x in row] for row in m]
    used: list[int] = []
    for c in range(n):
        piv = a[c][c]
        if piv < 0:
            return False, tuple(used + [c])
        if piv == 0:
            bad = next((j for j in range(c + 1, n) if a[c][j] != 0), None)
            if bad is not None:
                return False, tuple(used + [c, bad])
            continue
        used.append(c)
        for r in range(c + 1, n):
            f = a[r][c] / piv
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return True, ()


def gram_psd_check(
    phi: Callable[[GroupElement], Fraction],
    elems: Sequence[GroupElement],
    exact: bool = True,
) -> GramVerdict:
    """Decide whether ``[phi(g_i^-1 g_j)]`` is positive semidefinite.

    Exact mode handles at most 16 elements; approximate mode uses floating
    eigenvalues with tolerance -1e-9.
    """
    if exact and len(elems) > EXACT_GRAM_GUARD:
        raise GuardError(
            f"exact Gram check limited to {EXACT_GRAM_GUARD} elements, got {len(elems)}", field="elements"
        )
    g = gram_matrix(phi, elems)
    frozen = tuple(tuple(row) for row in g)
    if not exact:
        vals = np.linalg.eigvalsh(np.array(g, dtype=float))
        low = float(vals.min()) if len(vals) else 0.0
        if low >= APPROX_TOLERANCE:
            return GramVerdict(True, False, gram=frozen)
        return GramVerdict(False, False, (int(np.argmin(vals)),), low, frozen)
    ok, witness = psd_exact(g)
    if ok:
        return GramVerdict(True, True, gram=frozen)
    sub = [[Fraction(g[i][j]) for j in witness] for i in witness]
    return GramVerdict(False, True, witness, _det(sub), frozen)


def asymptotic_character_estimate(spec: RepSpec, g: GroupElement) -> Fraction:
    """Value of the asymptotic character at ``g`` via shifted conjugates.

    The state is evaluated at ``t_m g t_m^-1`` for three consecutive
    ``m >= max(support(g), n)``; these agree exactly, and agree with the
    character of the B_{n,inf} factor.
    """
    base = max(max(support(g), default=0), spec.n)
    values = [induced_state(spec, shift_conjugate(g, m)) for m in (base, base + 1, base + 2)]
    if len(set(values)) != 1:
        raise AssertionError(f"shifted states not constant: {values}")
    direct = character_value(spec.thoma, g)
    if values[0] != direct:
        raise AssertionError(f"asymptotic value {values[0]} differs from character value {direct}")
    log.debug("asymptotic character at %s = %s", g, direct)
    return values[0]
