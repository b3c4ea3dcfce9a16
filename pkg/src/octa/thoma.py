"""Indecomposable characters of B and the functions tau on S_inf.

A character is fixed by Thoma-type parameters ``alpha``, ``beta`` (each entry
carrying a sign label ``sigma`` in {0, 1}) and ``gamma0, gamma1 >= 0`` with
``gamma0 + gamma1 = 1 - sum(alpha) - sum(beta)``.  Its value is multiplicative
over quasi-cycles.  On a quasi-cycle of length ``k`` with sign parity ``e``:

    k > 1:  sum a**k (-1)**(sigma*e) + (-1)**(k-1) sum b**k (-1)**(sigma*e)
    k = 1:  gamma0 + gamma1 (-1)**e + sum a (-1)**(sigma*e) + sum b (-1)**(sigma*e)

Only finitely many nonzero parameters are representable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Any, Iterable, Mapping

from .elements import GroupElement, QuasiCycle, quasi_cycle_decompose, split_in_level
from .errors import SpecError
from .partitions import Partition, hook_dimension, mn_character

Entry = tuple[Fraction, int]


def to_rational(x: Any, field_name: str = "value") -> Fraction:
    """Parse ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(x, bool) or isinstance(x, float):
        raise SpecError(f"{field_name}: use an exact 'p/q' string, not {x!r}", field=field_name)
    try:
        return Fraction(x)
    except (ValueError, TypeError, ZeroDivisionError):
        raise SpecError(f"{field_name}: not a rational: {x!r}", field=field_name) from None


def format_rational(x: Fraction | int) -> str:
    return str(Fraction(x))


def _entries(raw: Iterable, name: str) -> tuple[Entry, ...]:
    out = []
    for idx, item in enumerate(raw):
        where = f"{name}[{idx}]"
        if isinstance(item, Mapping):
            value, sigma = item.get("value"), item.get("sigma", 0)
        elif isinstance(item, (tuple, list)):
            if len(item) != 2:
                raise SpecError(f"{where}: expected (value, sigma)", field=where)
            value, sigma = item
        else:
            value, sigma = item, 0
        value = to_rational(value, where)
        if sigma not in (0, 1) or isinstance(sigma, bool):
            raise SpecError(f"{where}: sigma must be 0 or 1, got {sigma!r}", field=where)
        if not 0 < value <= 1:
            raise SpecError(f"{where}: parameter {value} outside (0, 1]", field=where)
        out.append((value, int(sigma)))
    # ties between equal values are ordered by sigma; labels on equal values are interchangeable
    return tuple(sorted(out, key=lambda e: (-e[0], e[1])))


@dataclass(frozen=True)
class ThomaSpec:
    alpha: tuple[Entry, ...] = ()
    beta: tuple[Entry, ...] = ()
    gamma0: Fraction = Fraction(0)
    gamma1: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "alpha", _entries(self.alpha, "alpha"))
        object.__setattr__(self, "beta", _entries(self.beta, "beta"))
        g0 = to_rational(self.gamma0, "gamma0")
        g1 = to_rational(self.gamma1, "gamma1")
        for name, g in (("gamma0", g0), ("gamma1", g1)):
            if g < 0:
                raise SpecError(f"{name} must be nonnegative, got {g}", field=name)
        mass = sum(a for a, _ in self.alpha) + sum(b for b, _ in self.beta)
        if mass > 1:
            raise SpecError(f"sum(alpha) + sum(beta) = {mass} exceeds 1", field="alpha")
        if g0 + g1 != 1 - mass:
            raise SpecError(
                f"gamma0 + gamma1 = {g0 + g1} but 1 - sum(alpha) - sum(beta) = {1 - mass}",
                field="gamma",
            )
        object.__setattr__(self, "gamma0", g0)
        object.__setattr__(self, "gamma1", g1)

    @property
    def gamma_case(self) -> tuple[bool, bool]:
        """(gamma0 > 0, gamma1 > 0)."""
        return self.gamma0 > 0, self.gamma1 > 0

    def twisted(self) -> "ThomaSpec":
        """Spec of chi * (-1)**|signs|: swap the gammas and flip every sigma."""
        return ThomaSpec(
            tuple((a, 1 - s) for a, s in self.alpha),
            tuple((b, 1 - s) for b, s in self.beta),
            self.gamma1,
            self.gamma0,
        )

    def to_json(self) -> dict:
        def ent(xs):
            return [{"value": format_rational(v), "sigma": s} for v, s in xs]

        return {
            "alpha": ent(self.alpha),
            "beta": ent(self.beta),
            "gamma0": format_rational(self.gamma0),
            "gamma1": format_rational(self.gamma1),
        }


def validate_spec(raw: ThomaSpec | Mapping[str, Any]) -> ThomaSpec:
    """Normalize a candidate spec (a ``ThomaSpec`` or its JSON dict form).

    Raises ``SpecError`` on negative or out-of-range parameters, on
    ``sum(alpha) + sum(beta) > 1`` and when the gammas do not fill the remainder.
    """
    if isinstance(raw, ThomaSpec):
        return ThomaSpec(raw.alpha, raw.beta, raw.gamma0, raw.gamma1)
    if not isinstance(raw, Mapping):
        raise SpecError(f"spec must be a JSON object, got {type(raw).__name__}", field="thoma")
    unknown = set(raw) - {"alpha", "beta", "gamma0", "gamma1"}
    if unknown:
        raise SpecError(f"unknown spec keys {sorted(unknown)}", field=sorted(unknown)[0])
    for key in ("alpha", "beta"):
        if not isinstance(raw.get(key, []), list):
            raise SpecError(f"{key} must be a list", field=key)
    return ThomaSpec(
        tuple(raw.get("alpha", [])),
        tuple(raw.get("beta", [])),
        raw.get("gamma0", 0),
        raw.get("gamma1", 0),
    )


def quasi_cycle_value(spec: ThomaSpec, qc: QuasiCycle) -> Fraction:
    k, e = qc.length, qc.sign_sum
    if k > 1:
        a = sum((x**k * (-1) ** (s * e) for x, s in spec.alpha), Fraction(0))
        b = sum((x**k * (-1) ** (s * e) for x, s in spec.beta), Fraction(0))
        return a + (-1) ** (k - 1) * b
    return (
        spec.gamma0
        + spec.gamma1 * (-1) ** e
        + sum((x * (-1) ** (s * e) for x, s in spec.alpha), Fraction(0))
        + sum((x * (-1) ** (s * e) for x, s in spec.beta), Fraction(0))
    )


def character_value(spec: ThomaSpec, g: GroupElement) -> Fraction:
    return prod((quasi_cycle_value(spec, q) for q in quasi_cycle_decompose(g)), start=Fraction(1))


def tau_lambda_value(lam: Partition, alphabeta: ThomaSpec, s: GroupElement) -> Fraction:
    """Normalized chi_lam on S_n times the Thoma character on S_{n,inf}; 0 off S_n x S_{n,inf}."""
    if s.signs:
        raise SpecError("tau is defined on S_inf only; element carries signs", field="signs")
    n = sum(lam)
    parts = split_in_level(s, n)
    if parts is None:
        return Fraction(0)
    head, tail = parts
    lengths = [len(c) for c in head.perm.cycles()]
    mu = tuple(sorted(lengths + [1] * (n - sum(lengths)), reverse=True))
    return Fraction(mn_character(lam, mu), hook_dimension(lam)) * character_value(alphabeta, tail)
