from fractions import Fraction

import orjson

from arith.qseries import QSeries
from brackets.qbracket import qbracket
from models.series import SeriesModel
from partitions import families


def test_qbracket_json(make_cli_call, g2_exepted):
    """Команда qbracket печатает ряд в JSON."""
    result = make_cli_call('qbracket', 'Q(2)', '--order', '4')
    assert result.exit_code == 0, result.output
    assert SeriesModel.parse_raw(result.output).to_series() == g2_exepted, 'Неверная скобка в выводе'


def test_qbracket_csv(make_cli_call):
    result = make_cli_call('qbracket', 'Q(2)', '--order', '1', '--format', 'csv')
    assert result.exit_code == 0, result.output
    lines = result.output.strip().splitlines()
    assert lines[0] == 'exp,modulus,coeff'
    assert lines[1] == '0,1,0:-1/24'


def test_qbracket_uses_cache(make_cli_call, cache_dir):
    """Повторный запрос обслуживается из кэша."""
    make_cli_call('qbracket', 'Q(2)', '--order', '2')
    assert list(cache_dir.glob('*.json')), 'Результат не попал в кэш'
    result = make_cli_call('flush-cache')
    assert result.exit_code == 0
    assert not list(cache_dir.glob('*.json')), 'Кэш не очищен'


def test_bad_family(make_cli_call):
    """Ошибка в описании семейства: код выхода 2."""
    result = make_cli_call('qbracket', 'Q(2', '--order', '2')
    assert result.exit_code == 2, 'Неверный код выхода для ошибки разбора'


def test_unknown_suite(make_cli_call):
    result = make_cli_call('verify', 'no-such-suite')
    assert result.exit_code == 2, 'Неверный код выхода для неизвестного набора'


def test_certify_from_stdin(make_cli_call, orders):
    """Команда certify читает ряд из stdin."""
    series = qbracket(families.Q(2), orders.certify_order)
    result = make_cli_call('certify', '--weight', '2', '--depth', '1', stdin=SeriesModel.from_series(series).json())
    assert result.exit_code == 0, result.output
    data = orjson.loads(result.output)
    assert data['status'] == 'certified-to-order'
    assert data['solution'] == [{'modulus': 1, 'vec': [['0', '1']]}]


def test_certify_family_option(make_cli_call, orders):
    result = make_cli_call('certify', '--weight', '2', '--family', 'Q(2)', '--order', str(orders.certify_order))
    assert result.exit_code == 0, result.output
    assert orjson.loads(result.output)['status'] == 'certified-to-order'


def test_certify_bad_input(make_cli_call):
    """Ввод не является рядом: код выхода 3."""
    result = make_cli_call('certify', '--weight', '2', stdin='[1, 2]')
    assert result.exit_code == 3


def test_certify_fails_on_non_modular(make_cli_call, orders):
    series = QSeries.monomial(1, Fraction(1), orders.certify_order + 1)
    result = make_cli_call('certify', '--weight', '2', '--depth', '0', stdin=SeriesModel.from_series(series).json())
    assert result.exit_code == 0
    assert orjson.loads(result.output)['status'] == 'failed'
