from fractions import Fraction

import pytest

from core.exceptions import BadParam
from structure.formal import D, Delta, FormalPoly, partial
from structure.projections import D_bo, M_bo, h, join, pi_BO, pi_fractional, pi_general, split

Q = FormalPoly.Q


@pytest.fixture
def h4_exepted():
    return Q(4) + Q(2) ** 2 * Fraction(1, 2)


def test_h4(h4_exepted):
    """Проверка h₄ = Q₄ + ½Q₂²."""
    assert h(4) == h4_exepted, 'Неверный многочлен h₄'


def test_h2_vanishes():
    """h₂ = 0."""
    assert h(2).is_zero(), 'h₂ не равен нулю'


def test_projection_kills_q2():
    """Q₂ лежит в ядре проекции."""
    assert pi_BO(Q(2)) == 0, 'π(Q₂) не равна нулю'


def test_projection_of_moment(h4_exepted):
    """π(Q₄) = h₄ во всех трёх записях проекции."""
    assert pi_BO(Q(4)) == h4_exepted, 'π(Q₄) не равна h₄'
    assert pi_fractional(Q(4)) == h4_exepted, 'Дробная запись проекции расходится'
    assert pi_general(Q(4), M_bo, D_bo) == h4_exepted, 'Общая формула проекции расходится'


def test_projection_idempotent():
    """π∘π = π."""
    f = Q(3) ** 2 + Q(6)
    once = pi_BO(f)
    assert pi_BO(once) == once, 'Проекция не идемпотентна'


def test_partial_lowers_index():
    """∂Q₃(a) = Q₂(a) на уровне N."""
    a = Fraction(1, 2)
    assert partial(Q(3, a)) == Q(2, a), 'Оператор ∂ не понижает индекс'


def test_second_operator_on_pair():
    """𝒟₂(Q₂Q₃) = 6Q₃."""
    assert D(Q(2) * Q(3), 2) == Q(3) * 6, 'Неверное действие 𝒟₂'


def test_first_difference_vanishes():
    """Δ₁ = 𝒟₁ − ∂ = 0."""
    assert Delta(1, Q(4) * Q(3)).is_zero(), 'Δ₁ не равен нулю'


def test_split_and_join(h4_exepted):
    """Разложение по степеням Q₂ восстанавливает элемент."""
    f = Q(4) + Q(2) ** 2
    parts = split(f)
    assert parts[0] == h4_exepted, 'Свободная от Q₂ часть вычислена неверно'
    assert join(parts) == f, 'Сборка частей не вернула исходный элемент'


def test_negative_operator_index():
    """𝒟_j при j < 0 не определён."""
    with pytest.raises(BadParam):
        D(Q(2), -1)
