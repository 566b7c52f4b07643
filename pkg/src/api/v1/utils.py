import csv
import io
from enum import Enum

import click
import orjson

from models.report import SuiteReport
from models.series import SeriesModel


class FormatEnum(str, Enum):
    json = 'json'
    csv = 'csv'


format_option = click.option(
    '--format',
    'fmt',
    type=click.Choice([f.value for f in FormatEnum]),
    default=FormatEnum.json.value,
    show_default=True,
    help='Формат вывода.',
)
margin_option = click.option('--margin', type=int, default=None, help='Число контрольных коэффициентов сверх решения.')
level_option = click.option('--level', type=int, default=None, help='Уровень N.')
depth_option = click.option('--depth', type=int, default=None, help='Ограничение глубины.')


def _csv(rows: list[list]) -> str:
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator='\n').writerows(rows)
    return buffer.getvalue()


def series_output(model: SeriesModel, fmt: str) -> str:
    """Ряд в JSON или CSV; в CSV координаты коэффициента записываются как 'e:p/q' через пробел."""
    if fmt == FormatEnum.json:
        return model.json()
    rows = [['exp', 'modulus', 'coeff']]
    rows += [[t.exp, t.coeff.modulus, ' '.join(f'{e}:{c}' for e, c in t.coeff.vec)] for t in model.terms]
    return _csv(rows)


def report_output(report: SuiteReport, fmt: str) -> str:
    if fmt == FormatEnum.json:
        return report.json()
    rows = [['suite', 'name', 'anchor', 'status', 'orders', 'detail', 'runtime']]
    for check in report.checks:
        orders = orjson.dumps(check.orders, option=orjson.OPT_SORT_KEYS).decode()
        rows.append([report.suite, check.name, check.anchor, check.status.value, orders, check.detail, check.runtime])
    return _csv(rows)
