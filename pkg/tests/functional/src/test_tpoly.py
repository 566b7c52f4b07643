from fractions import Fraction

from arith.cyclotomic import CycQ
from brackets.qbracket import qbracket
from quasimodular.certify import Status, certify
from structure.tpoly import TPoly, delta, pi_T

T = TPoly.T


def test_delta_on_generators():
    """δT₁₁ = −½ и δT₂₂ = 2T₁₁."""
    assert delta(T(1, 1)) == Fraction(-1, 2), 'Неверное δT₁₁'
    assert delta(T(2, 2)) == T(1, 1) * 2, 'Неверное δT₂₂'


def test_projection_of_t11():
    """π(T₁₁) = 0."""
    assert pi_T(T(1, 1)).is_zero(), 'π(T₁₁) не равна нулю'


def test_projection_of_t22():
    """π(T₂₂) = T₂₂ + 2T₁₁⊙T₁₁."""
    assert pi_T(T(2, 2)) == T(2, 2) + T(1, 1) ** 2 * 2, 'Неверная проекция T₂₂'


def test_projection_multiplicative():
    """π(fg) = π(f)π(g)."""
    f, g = T(2, 2), T(1, 3)
    assert pi_T(f * g) == pi_T(f) * pi_T(g), 'Проекция не мультипликативна'


def test_projected_bracket_is_modular(orders):
    """⟨π(T₂₂)⟩ = (5/6)𝔾₄."""
    order = orders.certify_order
    series = qbracket(pi_T(T(2, 2)).evaluate(order), order)
    certificate = certify(series, 4, 1, 0, orders.margin)
    assert certificate.status == Status.certified, 'Скобка π(T₂₂) не сертифицирована'
    assert certificate.solution == [CycQ.rational(Fraction(5, 6))], 'Неверный коэффициент при 𝔾₄'
