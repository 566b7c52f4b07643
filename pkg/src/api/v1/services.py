import click

from core.logger import logger as _logger
from db.cache import get_cache_instance
from services.response_messages import CliMessages as Msg

logger = _logger(__name__)


@click.command('flush-cache')
def flush_cache() -> None:
    """Очистка кэша q-скобок."""
    get_cache_instance().flushall()
    logger.debug('[+] %s', Msg.cache_flushed.value)
    click.echo(Msg.cache_flushed.value)
