from fractions import Fraction

import pytest

from arith.cyclotomic import cyc_root
from arith.qseries import QSeries
from brackets.qbracket import qbracket
from core.exceptions import BadParam
from jacobi.jets import JetForm
from jacobi.kernels import (
    Theta_jet,
    Theta_translated_jet,
    Theta_value,
    fourier_to_jet,
    inverse_Theta_jet,
    theta,
    theta_prime_zero,
    theta_triple_product,
)
from jacobi.npoint import bo_bracket_jet
from partitions import families


def test_one_point_function(orders):
    """Производящая функция ⟨Q_k⟩ равна 1/Θ."""
    T, order = orders.order + 1, orders.jet_order
    assert bo_bracket_jet([Fraction(0)], T, order).agrees_with(inverse_Theta_jet(T, order)), 'Струи не совпали'


def test_inverse_theta_linear_term(orders, g2_exepted):
    """Коэффициент 1/Θ при w равен 𝔾₂."""
    jet = inverse_Theta_jet(orders.order + 1, orders.jet_order)
    assert jet.coefficient([1]) == g2_exepted, 'Линейный коэффициент 1/Θ не равен 𝔾₂'


@pytest.mark.parametrize('a', [Fraction(1, 2), Fraction(1, 3)])
def test_shifted_moment_times_theta(a, orders):
    """⟨Q₁(a)⟩·Θ(a) = 𝒆(−a/2)."""
    order = orders.order
    product = qbracket(families.Q(1, a), order) * Theta_value(a, order + 1)
    assert product == QSeries.constant(cyc_root(-a / 2), order + 1), 'Тождество для Q₁(a) не выполнено'


def test_theta_bad_truncation():
    with pytest.raises(BadParam):
        Theta_jet(0, 3)


def test_theta_prime_zero_coefficients():
    """θ′(0) = q^{1/8}(1 − 3q + 5q³ − …)."""
    expected = QSeries({Fraction(1, 8): 1, Fraction(9, 8): -3, Fraction(25, 8): 5}, 4)
    assert theta_prime_zero(4) == expected, 'Неверные коэффициенты θ′(0)'


def test_theta_matches_triple_product():
    """Ряд Фурье θ совпадает с тройным произведением Якоби."""
    assert theta(6).agrees_with(theta_triple_product(6)), 'θ не совпала с тройным произведением'


def test_theta_derivative_from_fourier(orders):
    """Линейный член струи θ равен θ′(0)."""
    T = orders.order + 1
    assert theta(T).jet((2,)).coefficient((1,)).agrees_with(theta_prime_zero(T)), 'Производная θ в нуле неверна'


def test_untranslated_theta_jet(orders):
    """Θ(w + 0·τ + 0) совпадает с Θ(w)."""
    T, order = orders.order + 1, orders.jet_order
    assert Theta_translated_jet(0, 0, T, order).agrees_with(Theta_jet(T, order)), 'Нулевой сдвиг изменил Θ'


def test_fourier_to_jet_clears_pole(orders):
    """θ/θ после снятия полюса равна единице."""
    T, order = orders.order + 1, orders.jet_order
    jet = fourier_to_jet(theta(T), (1,), order)
    assert jet.agrees_with(JetForm.constant(1, 1)), 'θ·(1/θ) не равна 1'


def test_two_point_mixed_negative_coefficient(g2_exepted):
    """Коэффициент F₂ при w₁^{−1}w₂ равен ⟨Q₂⟩ = 𝔾₂, а не нулю."""
    jet = bo_bracket_jet([Fraction(0), Fraction(0)], 5, 2)
    assert jet.coefficient((-1, 1)) == g2_exepted, 'Коэффициент при w₁^{−1}w₂ не равен 𝔾₂'
    assert jet.coefficient((-1, -1)) == QSeries.constant(1, 5), 'Коэффициент при w₁^{−1}w₂^{−1} не равен 1'
