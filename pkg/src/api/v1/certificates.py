from typing import Optional

import click

from api.v1.utils import depth_option, level_option, margin_option
from core.logger import logger as _logger
from services.certify import get_certify_service

logger = _logger(__name__)


@click.command('certify')
@click.argument('source', type=click.File('r'), default='-')
@click.option('--weight', type=int, required=True, help='Вес k.')
@level_option
@depth_option
@margin_option
@click.option('--family', default=None, help='Описание семейства вместо готового ряда.')
@click.option('--order', type=int, default=None, help='Порядок q-скобки для --family.')
def certify_command(
    source,
    weight: int,
    level: Optional[int],
    depth: Optional[int],
    margin: Optional[int],
    family: Optional[str],
    order: Optional[int],
) -> None:
    """Сертификат принадлежности ряда из SOURCE (JSON, по умолчанию stdin) кольцу квазимодулярных форм."""
    service = get_certify_service()
    options = {'level': level, 'depth': depth, 'margin': margin}
    if family is not None:
        model = service.certify_family(family, weight, order, **options)
    else:
        model = service.certify_series(service.load_series(source.read()), weight, **options)
    logger.debug('[+] certificate status %s', model.status)
    click.echo(model.json())
