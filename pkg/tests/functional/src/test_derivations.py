import pytest
from sympy import Rational

from core.exceptions import BadParam
from jacobi import derivations
from jacobi.derivations import Op


def test_delta_tau_on_g2():
    """δ_τ𝔾₂ = −½."""
    assert derivations.apply_delta(Op('delta_tau'), derivations.G(2)) == Rational(-1, 2)


def test_two_point_function():
    """δ_τF₂ = 0 и δ_{z₁}F₂ = F₁(z₁ + z₂)."""
    f2 = derivations.F2()
    assert derivations.apply_delta(Op('delta_tau'), f2) == 0, 'δ_τF₂ не равно нулю'
    assert derivations.apply_delta(Op('delta_z', 1), f2) == derivations.F1(1, 1), 'Неверное δ_{z₁}F₂'


def test_weight_operator():
    """W умножает образующую на её вес."""
    theta = derivations.Theta(1)
    assert derivations.apply_delta(Op('W'), theta) == -theta


def test_unknown_operator():
    with pytest.raises(BadParam):
        derivations.apply_delta(Op('nope'), derivations.G(2))
