from fractions import Fraction

import pytest

from arith.cyclotomic import CycQ
from arith.qseries import QSeries
from brackets.qbracket import qbracket
from core.exceptions import BadParam, InsufficientTruncation, UnsupportedLevel
from models.series import SeriesModel
from partitions import families
from quasimodular.certify import Status, certify
from services.certify import get_certify_service


@pytest.fixture
def q2_bracket(orders):
    return qbracket(families.Q(2), orders.certify_order)


def test_g2_certified(q2_bracket, orders):
    """⟨Q₂⟩ = 𝔾₂ на уровне 1 глубины 1."""
    certificate = certify(q2_bracket, 2, 1, 1, orders.margin)
    assert certificate.status == Status.certified, 'Скобка Q₂ не сертифицирована'
    assert certificate.solution == [CycQ.rational(1)], 'Коэффициент при 𝔾₂ не равен 1'


def test_constant_weight_zero(orders):
    """Константа сертифицируется в весе 0."""
    certificate = certify(QSeries.constant(1, orders.certify_order + 1), 0, 1, 0, orders.margin)
    assert certificate.status == Status.certified, 'Константа не сертифицирована'


def test_non_modular_series_fails(orders):
    """Ряд q не лежит в весе 2 глубины 0."""
    certificate = certify(QSeries.monomial(1, 1, orders.certify_order + 1), 2, 1, 0, orders.margin)
    assert certificate.status == Status.failed, 'Ряд q ошибочно сертифицирован'


def test_short_series_rejected(q2_bracket):
    """Недостаточное усечение."""
    with pytest.raises(InsufficientTruncation):
        certify(q2_bracket.truncate(3), 2, 1, 1, 10)


def test_unsupported_level(q2_bracket):
    with pytest.raises(UnsupportedLevel):
        certify(q2_bracket, 2, 5)


def test_service_loads_series(q2_bracket, orders):
    """Сервис принимает ряд в JSON."""
    service = get_certify_service()
    series = service.load_series(SeriesModel.from_series(q2_bracket).json())
    model = service.certify_series(series, 2, 1, 1, orders.margin, 'Q(2)')
    assert model.status == Status.certified.value, 'Сервис не сертифицировал ⟨Q₂⟩'
    assert model.target_id == 'Q(2)'


@pytest.mark.parametrize('raw', ['', '{"denom": 1}', 'not json'])
def test_service_rejects_input(raw):
    with pytest.raises(BadParam):
        get_certify_service().load_series(raw)


def test_service_family(orders):
    """Сертификат по описанию семейства: ⟨Q₄⟩ = ½𝔾₂² + 𝔾₄/12."""
    model = get_certify_service().certify_family(
        'Q(4)', 4, orders.certify_order, level=1, depth=2, margin=orders.margin
    )
    assert model.status == Status.certified.value, 'Скобка Q₄ не сертифицирована'
    assert len(model.solution) == len(model.basis)


def test_solution_fraction(q2_bracket, orders):
    certificate = certify(q2_bracket * Fraction(3, 2), 2, 1, 1, orders.margin)
    assert certificate.solution == [CycQ.rational(Fraction(3, 2))]
