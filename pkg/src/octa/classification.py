"""Central depth, factor type and quasi-equivalence of induced stable factor representations."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .induced_states import RepSpec


class FactorType(str, enum.Enum):
    I_1 = "I_1"
    I_INF = "I_inf"
    II_1 = "II_1"
    II_INF = "II_inf"


def central_depth(spec: RepSpec) -> int:
    g0, g1 = spec.thoma.gamma_case
    if g0 and g1:
        return 0
    if g1:
        return spec.k
    if g0:
        return spec.n - spec.k
    return spec.n


def _is_flat(spec: RepSpec) -> bool:
    """The B_{n,inf} factor is one-dimensional: a single parameter equal to 1."""
    t = spec.thoma
    entries = t.alpha + t.beta
    return len(entries) == 1 and entries[0][0] == 1


def factor_type(spec: RepSpec) -> FactorType:
    g0, g1 = spec.thoma.gamma_case
    if g0 and g1:
        return FactorType.II_1
    if g1:
        return FactorType.II_1 if spec.k == 0 else FactorType.II_INF
    if g0:
        return FactorType.II_1 if spec.k == spec.n else FactorType.II_INF
    if spec.n == 0:
        return FactorType.I_1 if _is_flat(spec) else FactorType.II_1
    return FactorType.I_INF if _is_flat(spec) else FactorType.II_INF


@dataclass(frozen=True)
class Verdict:
    quasi_equivalent: bool
    reason: str
    central_depth: tuple[int, int]
    factor_type: tuple[FactorType, FactorType]

    def __bool__(self) -> bool:
        return self.quasi_equivalent

    def to_json(self) -> dict:
        return {
            "quasi_equivalent": self.quasi_equivalent,
            "reason": self.reason,
            "central_depth": list(self.central_depth),
            "factor_type": [t.value for t in self.factor_type],
        }


def _decide(a: RepSpec, b: RepSpec) -> tuple[bool, str]:
    if a.thoma != b.thoma:
        return False, "asymptotic-characters-differ"
    g0, g1 = a.thoma.gamma_case
    if g0 and g1:
        return True, "II1-character-determined"
    if not g0 and not g1:
        same = a.n == b.n and a.bp == b.bp
        return same, "finite-part-match" if same else "finite-part-differs(n,lambda0,lambda1)"
    if g1:
        same = a.k == b.k and a.bp.lambda0 == b.bp.lambda0
        return same, "depth-k-match" if same else "depth-k-differs(k,lambda0)"
    # gamma1 = 0 < gamma0: mirror of the branch above under the sign twist
    same = a.n - a.k == b.n - b.k and a.bp.lambda1 == b.bp.lambda1
    return same, "depth-n-k-match" if same else "depth-n-k-differs(n-k,lambda1)"


def quasi_equivalent(a: RepSpec, b: RepSpec) -> Verdict:
    same, reason = _decide(a, b)
    return Verdict(
        same,
        reason,
        (central_depth(a), central_depth(b)),
        (factor_type(a), factor_type(b)),
    )
