from fractions import Fraction

import orjson

from arith.cyclotomic import cyc_root
from arith.qseries import QSeries
from jacobi.kernels import inverse_Theta_jet, theta
from models.formal import FormalPolyModel
from models.report import CheckRecord, CheckStatus, SuiteReport
from models.series import FourierFormModel, JetFormModel, SeriesModel
from structure.projections import h


def test_series_codec():
    """Ряд с дробными показателями и корнями из единицы переживает JSON."""
    series = QSeries({0: cyc_root(Fraction(1, 3)), Fraction(1, 2): 2, Fraction(3, 2): Fraction(-1, 5)}, 3)
    model = SeriesModel.from_series(series)
    assert model.denom == 2
    assert model.trunc == '3'
    assert SeriesModel.parse_raw(model.json()).to_series() == series, 'Ряд искажён при сериализации'


def test_series_rationals_are_strings():
    """Рациональные числа хранятся строками 'p/q'."""
    data = orjson.loads(SeriesModel.from_series(QSeries.constant(Fraction(-1, 24), 1)).json())
    assert data['terms'][0]['coeff']['vec'] == [['0', '-1/24']]


def test_formal_poly_codec():
    model = FormalPolyModel.from_poly(h(4))
    assert FormalPolyModel.parse_raw(model.json()).to_poly() == h(4), 'Многочлен искажён при сериализации'


def test_report_without_runtime():
    """Детерминированный JSON отчёта не содержит времени выполнения."""
    report = SuiteReport(
        suite='hooks',
        seed=0,
        checks=[CheckRecord(name='h2', anchor='hooks/g2', status=CheckStatus.passed, orders={'q': 4}, runtime=0.5)],
    )
    data = orjson.loads(report.deterministic_json())
    assert 'runtime' not in data['checks'][0]
    assert data['checks'][0]['status'] == 'pass'
    assert not report.failed


def test_jet_codec():
    """Джет 1/Θ с полюсом переживает JSON."""
    jet = inverse_Theta_jet(4, 3)
    model = JetFormModel.parse_raw(JetFormModel.from_jet(jet).json())
    assert model.pole_orders == [1]
    assert model.to_jet() == jet, 'Джет искажён при сериализации'


def test_fourier_codec():
    model = FourierFormModel.from_fourier(theta(3))
    assert FourierFormModel.from_fourier(model.to_fourier()).json() == model.json()
