from fractions import Fraction

import pytest

from brackets.qbracket import qbracket
from core.exceptions import FamilyParseError
from partitions import families
from services.family_spec import Atom, build_family, parse_family


@pytest.mark.parametrize('text', ['', 'Q(2', 'Q(2))', 'Q(2) $', 'X(1)', 'Q(1/2)'])
def test_bad_descriptions(text):
    """Ошибочные описания семейств."""
    with pytest.raises(FamilyParseError):
        build_family(text, 3)


def test_parse_product():
    """Разбор произведения с параметром сдвига."""
    product = parse_family('Q(4)*Q(3; a=1/2)')
    first, second = product.factors
    assert isinstance(first, Atom) and first.name == 'Q', 'Первый множитель разобран неверно'
    assert second.keywords == {'a': Fraction(1, 2)}, 'Параметр сдвига разобран неверно'


def test_product_matches_direct_build():
    """Произведение из описания совпадает с произведением семейств."""
    direct = families.Q(4) * families.Q(3, Fraction(1, 2))
    assert qbracket(build_family('Q(4) * Q(3; a=1/2)', 3), 3) == qbracket(direct, 3), 'Скобки не совпали'


def test_constant_factor(g2_exepted):
    """Числовой множитель в описании."""
    assert qbracket(build_family('2*Q(2)', 4), 4) == g2_exepted * 2, 'Числовой множитель потерян'


def test_induced_product(g2_exepted):
    """⊙-произведение в описании."""
    f = build_family('Todot[T(1,1), Q(2)]', 4)
    assert qbracket(f, 4) == g2_exepted * g2_exepted, 'Неверная скобка ⊙-произведения'
