from typing import Optional

import click

from api.v1.utils import format_option, series_output
from core.logger import logger as _logger
from models.series import SeriesModel
from services.bracket import get_bracket_service

logger = _logger(__name__)


@click.command('qbracket')
@click.argument('spec')
@click.option('--order', type=int, default=None, help='Старшая степень q.')
@format_option
def qbracket_command(spec: str, order: Optional[int], fmt: str) -> None:
    """q-скобка функции на разбиениях, заданной описанием SPEC, например "Q(4)*Q(3; a=1/2)"."""
    series = get_bracket_service().get_bracket(spec, order)
    logger.debug('[+] bracket of %s emitted as %s', spec, fmt)
    click.echo(series_output(SeriesModel.from_series(series), fmt))
