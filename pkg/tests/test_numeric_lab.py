from fractions import Fraction as F

import pytest

from octa.elements import IDENTITY, element
from octa.errors import GuardError
from octa.numeric_lab import (
    BernoulliParam,
    example1_defect,
    example1_pairing,
    example1_series,
    example3_defect,
    example3_state,
)

PS = [F(1, 2), F(3, 4), F(9, 10)]


def test_bernoulli_param():
    assert BernoulliParam(F(3, 4)).q == F(1, 4)
    for bad in (F(0), F(1), F(-1, 2), F(3, 2)):
        with pytest.raises(GuardError):
            BernoulliParam(bad)


def test_example1_examples():
    assert example1_pairing(0, 1) == 1
    assert example1_pairing(4, 1) == -1
    assert example1_pairing(4, 7) == 1


def test_example1_defect_persists():
    for j in (1, 3, 10):
        for m, value in example1_series(j, 40):
            assert value == (-1 if m >= j else 1)
            assert example1_defect(m, j) == (2 if m >= j else 0)


@pytest.mark.parametrize("p", PS)
def test_example3_state_examples(p):
    bp = BernoulliParam(p)
    assert example3_state(bp, IDENTITY, 3) == 1
    for n in (1, 2, 3):
        assert example3_state(bp, element(signs=[n]), n + 1) == bp.p - bp.q
        assert example3_state(bp, element((n, n + 1)), n + 1) == 1


@pytest.mark.parametrize("p,expected", [(F(1, 2), F(-1)), (F(3, 4), F(-3, 4)), (F(9, 10), F(-9, 25))])
def test_example3_defect_values(p, expected):
    bp = BernoulliParam(p)
    for n in range(1, 5):
        assert example3_defect(bp, n) == expected
        assert example3_defect(bp, n) == (bp.p - bp.q) ** 2 - 1


def test_example3_state_is_truncation_stable():
    bp = BernoulliParam(F(3, 4))
    g = element((1, 2), signs=[1, 3])
    values = {example3_state(bp, g, m, check_stable=False) for m in range(3, 8)}
    assert len(values) == 1


def test_example3_guards():
    bp = BernoulliParam(F(1, 2))
    with pytest.raises(GuardError):
        example3_state(bp, element((1, 5)), 3)
    with pytest.raises(GuardError):
        example3_state(bp, IDENTITY, 21)
    with pytest.raises(GuardError):
        example3_defect(bp, 0)
