from fractions import Fraction

import pytest

from arith.qseries import QSeries
from core.exceptions import NotUnimodular, TruncationUnderflow
from jacobi.context import double_slash
from jacobi.jets import JetForm
from jacobi.kernels import (
    THETA_INDEX,
    Theta_translated_jet,
    inverse_Theta_translated_jet,
    theta,
)
from jacobi.npoint import bo_bracket_jet, convention_factor, f1_context
from jacobi.slash import as_shift, gamma_X_member, rho, slash_cocycle, slash_X, zeta
from services.suites import PASSED, SLASH_PAIRS, SLASH_T, SuiteRunner

HALF = Fraction(1, 2)


def shift_sum(X, Y):  # noqa: N803
    return as_shift([a + b for a, b in zip(X[0], Y[0])], [a + b for a, b in zip(X[1], Y[1])])


@pytest.fixture
def f1_exepted(orders):
    """Контекст 1/Θ и порядки струй."""
    return f1_context(orders.order + 1), orders.jet_order


@pytest.mark.parametrize(
    'X, Y',
    [
        (as_shift((0,), (HALF,)), as_shift((1,), (0,))),
        (as_shift((HALF,), (0,)), as_shift((0,), (1,))),
        (as_shift((HALF,), (0,)), as_shift((-1,), (1,))),
        (as_shift((Fraction(1, 3),), (Fraction(1, 4),)), as_shift((-1,), (1,))),
        (as_shift((Fraction(1, 3),), (0,)), as_shift((0,), (-1,))),
    ],
)
def test_double_slash_elliptic_equation(X, Y, f1_exepted):  # noqa: N803
    """ρ(X′)·ζ_{X,X′}·φ‖(X+X′) = φ‖X для 1/Θ при любых рациональных X."""
    ctx, order = f1_exepted
    left = double_slash(ctx, shift_sum(X, Y), order).scale(rho(Y, ctx.index) * zeta(X, Y, ctx.index))
    right = double_slash(ctx, X, order)
    assert left.q_trunc > 0, 'Сдвиг съел всю точность по q'
    assert left.agrees_with(right), 'Функциональное уравнение двойного слэша не выполнено'


@pytest.mark.parametrize('a', [HALF, Fraction(1, 3)])
def test_shifted_one_point(a, f1_exepted, orders):
    """1/Θ‖(0, a) = 𝒆(a/2)·Σ⟨Q_{ℓ+1}(·, a)⟩ w^ℓ."""
    ctx, order = f1_exepted
    slashed = double_slash(ctx, as_shift((0,), (a,)), order)
    bracket = bo_bracket_jet([a], orders.order + 1, order).scale(convention_factor([a]))
    assert slashed.agrees_with(bracket), 'Сдвинутая одноточечная функция не совпала со скобками'


def test_theta_translation_keeps_precision(orders):
    """Θ(w + τ + 3/2) = −q^{−1/2}e^{−w}Θ(w + 1/2) без потери точности по q."""
    T, order = orders.order + 1, orders.jet_order
    moved = Theta_translated_jet(Fraction(1), Fraction(3, 2), T, order)
    factor = JetForm.exp_linear((-1,), (order,)).scale(QSeries.monomial(-HALF, -1))
    expected = Theta_translated_jet(Fraction(0), HALF, T, order) * factor
    assert moved.q_trunc > T - 1, 'Сдвиг θ потерял точность'
    assert moved.agrees_with(expected), 'Квазипериодичность Θ не выполнена'


def test_inverse_theta_far_translate(orders):
    """1/Θ в точке τ + 3/2 обратима при малом усечении."""
    T, order = orders.order + 1, orders.jet_order
    jet = inverse_Theta_translated_jet(Fraction(1), Fraction(3, 2), T, order)
    assert jet.q_trunc > 1, 'Обратная струя потеряла точность'


def test_generic_translate_underflow():
    """Сдвиг общей формы за пределы точности даёт понятную ошибку."""
    with pytest.raises(TruncationUnderflow):
        theta(5).translate((3,), (0,))


def test_theta_slash_invariance():
    """θ|X′ = θ для целых X′."""
    form = theta(SLASH_T)
    for Y in (as_shift((1,), (0,)), as_shift((-1,), (0,)), as_shift((1,), (1,))):  # noqa: N806
        assert slash_X(form, Y).agrees_with(form), f'θ не инвариантна относительно {Y}'


@pytest.mark.parametrize('X, Y', SLASH_PAIRS)
def test_slash_composition(X, Y):  # noqa: N803
    """φ|X|X′ = c(X, X′)·φ|(X+X′)."""
    form = theta(SLASH_T)
    left = slash_X(slash_X(form, X), Y)
    right = slash_X(form, shift_sum(X, Y)).scale(slash_cocycle(X, Y, THETA_INDEX))
    assert left.q_trunc > 1, 'Слэш съел всю точность по q'
    assert left.agrees_with(right), 'Композиция слэшей не сошлась'


@pytest.mark.parametrize(
    'gamma, member',
    [
        (((1, 1), (0, 1)), True),
        (((0, -1), (1, 0)), False),
        (((1, 0), (2, 1)), False),
        (((1, 0), (4, 1)), False),
        (((1, 0), (8, 1)), True),
    ],
)
def test_gamma_x_membership(gamma, member):
    """Γ_X для X = (0, 1/2) и индекса 1/2."""
    X = as_shift((0,), (HALF,))  # noqa: N806
    assert gamma_X_member(X, gamma, THETA_INDEX) is member, f'Неверная принадлежность {gamma} группе Γ_X'


def test_gamma_x_needs_unimodular():
    with pytest.raises(NotUnimodular):
        gamma_X_member(as_shift((0,), (HALF,)), ((1, 1), (1, 1)), THETA_INDEX)


def test_suite_elliptic_check(orders):
    """Проверка набора taylor-xi проходит в точке X = (1/3, 1/4)."""
    runner = SuiteRunner(order=orders.order, jet_order=orders.jet_order)
    X = as_shift((Fraction(1, 3),), (Fraction(1, 4),))  # noqa: N806
    assert runner._elliptic(X, as_shift((1,), (0,)), orders.order + 1) == PASSED, 'Проверка набора не прошла'
