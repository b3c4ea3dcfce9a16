import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from octa.elements import IDENTITY, GroupElement, QuasiCycle, element, conjugate, shift_conjugate, support
from octa.errors import SpecError
from octa.thoma import ThomaSpec, character_value, quasi_cycle_value, tau_lambda_value, validate_spec

from strategies import elements, permutations, thoma_specs

HALVES = ThomaSpec(((F(1, 2), 0), (F(1, 2), 0)))


def test_valid_specs():
    assert validate_spec(HALVES) == HALVES
    s = validate_spec({"alpha": [{"value": "1/2", "sigma": 0}], "gamma0": "1/4", "gamma1": "1/4"})
    assert s.gamma_case == (True, True)


@pytest.mark.parametrize(
    "raw",
    [
        {"alpha": [{"value": "3/4", "sigma": 0}], "gamma0": "1/2"},
        {"alpha": [{"value": "1/2", "sigma": 0}], "gamma0": "1/4"},
        {"alpha": [{"value": "-1/2", "sigma": 0}], "gamma0": "3/2"},
        {"alpha": [{"value": "1/2", "sigma": 2}], "gamma0": "1/2"},
        {"gamma0": "-1/2", "gamma1": "3/2"},
        {"gamma0": 0.5, "gamma1": "1/2"},
        {"gamma0": "1", "extra": 1},
        ["not", "a", "dict"],
    ],
)
def test_invalid_specs(raw):
    with pytest.raises(SpecError):
        validate_spec(raw)


def test_spec_error_reports_field():
    with pytest.raises(SpecError) as info:
        validate_spec({"alpha": [{"value": "3/4", "sigma": 0}], "gamma0": "1/2"})
    assert info.value.to_dict()["field"]


@given(thoma_specs())
def test_spec_json_round_trip(spec):
    assert validate_spec(json.loads(json.dumps(spec.to_json()))) == spec


@given(thoma_specs())
def test_trivial_one_cycle_is_one(spec):
    assert quasi_cycle_value(spec, QuasiCycle((1,), frozenset())) == 1


def test_quasi_cycle_examples():
    assert quasi_cycle_value(HALVES, QuasiCycle((1, 2), frozenset())) == F(1, 2)
    mixed = ThomaSpec(((F(1, 2), 1), (F(1, 2), 0)))
    assert quasi_cycle_value(mixed, QuasiCycle((1, 2), frozenset({1}))) == 0


def test_character_examples():
    assert character_value(HALVES, IDENTITY) == 1
    thirds = ThomaSpec((), ((F(1, 3), 0),) * 3)
    assert character_value(thirds, element((1, 2, 3))) == F(1, 9)
    g = element((1, 2)) * element((4, 5))
    assert character_value(HALVES, g) == F(1, 4)
    direct = quasi_cycle_value(HALVES, QuasiCycle((1, 2), frozenset())) * quasi_cycle_value(
        HALVES, QuasiCycle((4, 5), frozenset())
    )
    assert direct == F(1, 4)


def test_pure_gamma_values():
    g0 = ThomaSpec(gamma0=1)
    g1 = ThomaSpec(gamma1=1)
    flip = element(signs=[1])
    assert character_value(g0, flip) == 1
    assert character_value(g1, flip) == -1
    assert character_value(g0, element((1, 2))) == 0


@settings(max_examples=200)
@given(thoma_specs(), elements(), elements())
def test_class_function(spec, g, h):
    assert character_value(spec, conjugate(g, h)) == character_value(spec, g)


@settings(max_examples=200)
@given(thoma_specs(), elements(), elements())
def test_multiplicative_on_disjoint_supports(spec, g, h):
    h = shift_conjugate(h, max(support(g), default=0) + 8)
    assert character_value(spec, g * h) == character_value(spec, g) * character_value(spec, h)


def classical_thoma(alpha, beta, s):
    value = F(1)
    for c in s.cycles():
        k = len(c)
        if k > 1:
            value *= sum(a**k for a in alpha) + (-1) ** (k - 1) * sum(b**k for b in beta)
    return value


@settings(max_examples=200)
@given(thoma_specs(), permutations())
def test_restriction_to_permutations_is_classical(spec, s):
    alpha = [a for a, _ in spec.alpha]
    beta = [b for b, _ in spec.beta]
    assert character_value(spec, GroupElement(s, frozenset())) == classical_thoma(alpha, beta, s)


@settings(max_examples=200)
@given(thoma_specs(), elements())
def test_sign_twist(spec, g):
    assert character_value(spec.twisted(), g) == (-1) ** len(g.signs) * character_value(spec, g)


@given(thoma_specs("gamma0"), elements())
def test_untwisted_spec_ignores_signs(spec, g):
    flat = ThomaSpec(tuple((a, 0) for a, _ in spec.alpha), tuple((b, 0) for b, _ in spec.beta), spec.gamma0, 0)
    assert character_value(flat, g) == character_value(flat, GroupElement(g.perm, frozenset()))


def test_tau_examples():
    assert tau_lambda_value((2,), HALVES, IDENTITY) == 1
    assert tau_lambda_value((1, 1), HALVES, element((1, 2))) == -1
    assert tau_lambda_value((2,), HALVES, element((1, 3))) == 0
    assert tau_lambda_value((2, 1), HALVES, element((1, 2), (4, 5))) == F(0) * F(1, 2)
    assert tau_lambda_value((1,), HALVES, element((2, 3))) == F(1, 2)
    with pytest.raises(SpecError):
        tau_lambda_value((1,), HALVES, element(signs=[1]))
