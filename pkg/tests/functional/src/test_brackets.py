from fractions import Fraction

import pytest

from arith.cyclotomic import ZERO, CycQ, cyc_root
from arith.qseries import QSeries
from brackets.qbracket import qbracket
from brackets.ubracket import odot, ubracket
from core.exceptions import BadParam
from partitions import families
from partitions.families import PartitionFunction
from partitions.partition import Partition
from quasimodular.eisenstein import G


@pytest.fixture
def q1_half_exepted():
    """⟨Q₁(·, 1/2)⟩ при q⁰ равна β₁(1/2) = −1/2."""
    return QSeries.from_list([Fraction(-1, 2)])


def test_q2_bracket_is_g2(g2_exepted):
    """Проверка ⟨Q₂⟩ = 𝔾₂."""
    assert qbracket(families.Q(2), 4) == g2_exepted, 'Скобка Q₂ не совпала с 𝔾₂'


def test_constant_bracket():
    """Скобка константы равна константе."""
    assert qbracket(PartitionFunction.constant(1), 5) == QSeries.constant(1, 6), 'Скобка единицы не равна 1'


def test_shifted_bracket(q1_half_exepted):
    """Проверка постоянного члена сдвинутого момента."""
    assert qbracket(families.Q(1, Fraction(1, 2)), 0) == q1_half_exepted, 'Неверный постоянный член ⟨Q₁(1/2)⟩'


def test_hooks_bracket(g2_exepted):
    """Проверка ⟨H₂⟩ = 𝔾₂."""
    assert qbracket(families.H(2), 4) == g2_exepted, 'Скобка H₂ не совпала с 𝔾₂'


def test_ubracket_specializes_to_qbracket():
    """u-скобка после u_m ↦ q^m совпадает с q-скобкой."""
    f = families.Q(2) * families.Q(4)
    assert ubracket(f, 4).specialize() == qbracket(f, 4), 'Специализация u-скобки не равна q-скобке'


def test_induced_product_multiplies_brackets(g2_exepted):
    """Проверка ⟨T₁₁⊙Q₂⟩ = 𝔾₂⟨Q₂⟩."""
    product = odot(families.T(1, 1), families.Q(2), 4)
    assert qbracket(product, 4) == g2_exepted * g2_exepted, 'Скобка ⊙-произведения не мультипликативна'


def test_eisenstein_coefficients():
    """Проверка 𝔾₄ = 1/240 + q + 9q²."""
    assert G(4, 3) == QSeries.from_list([Fraction(1, 240), 1, 9]), 'Неверные коэффициенты 𝔾₄'


def test_negative_order():
    """Отрицательный порядок отклоняется."""
    with pytest.raises(BadParam):
        qbracket(families.Q(2), -1)


def test_shifted_parts():
    """Сдвинутые части λ_i − i + 1/2."""
    assert Partition((3, 1)).shifted == (Fraction(5, 2), Fraction(-1, 2)), 'Неверные сдвинутые части (3, 1)'
    assert Partition((1,)).shifted == (Fraction(1, 2),), 'Неверные сдвинутые части (1)'


def test_q2_on_single_box():
    """Q₂((1)) = −1/24 + 1."""
    assert families.Q(2)(Partition((1,))) == CycQ.rational(Fraction(23, 24)), 'Неверное значение Q₂ на разбиении (1)'


@pytest.mark.parametrize('k', [2, 3])
@pytest.mark.parametrize('parts', [(1,), (2, 1), (3, 1), (4, 2, 2, 1)])
def test_sieve_identity(k, parts):
    """Q_k^{(3)}(λ) = Q_k(λ) − (1/3)Σ_j 𝒆(j/3)Q_k(λ, 2j/3)."""
    lam = Partition(parts)
    shifted = sum((cyc_root(Fraction(j, 3)) * families.Q(k, Fraction(2 * j, 3))(lam) for j in range(3)), ZERO)
    expected = families.Q(k)(lam) - shifted / 3
    assert (families.Q_sieved(k, 3)(lam) - expected).is_zero(), f'Решето не совпало на {lam}'


def test_trivial_sieve_vanishes():
    """При m = 1 выброшены все слагаемые."""
    assert families.Q_sieved(3, 1)(Partition((3, 1))).is_zero(), 'Q₃^{(1)} не равна нулю'


def test_shifted_moment_is_periodic():
    """Q_k(λ, a) зависит только от a mod 1."""
    lam = Partition((3, 1))
    left, right = families.Q(3, Fraction(1, 3))(lam), families.Q(3, Fraction(4, 3))(lam)
    assert (left - right).is_zero(), 'Q₃(λ, a) не периодична по a'
