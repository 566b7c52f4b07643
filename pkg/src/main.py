import click

from api.v1 import brackets, certificates, services, suites
from core.config import settings
from core.exceptions import FamilyParseError, QBracketError, UnknownSuite
from core.logger import logger as _logger
from core.logger import set_verbose

logger = _logger(__name__)

EXIT_FAILED_CHECK = 1
EXIT_BAD_INPUT = 2
EXIT_COMPUTATION = 3


class QBracketGroup(click.Group):
    """Переводит ошибки вычислений в коды выхода: 2 для описаний и наборов, 3 для остального."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except (FamilyParseError, UnknownSuite) as error:
            click.echo(f'{type(error).__name__}: {error}', err=True)
            ctx.exit(EXIT_BAD_INPUT)
        except QBracketError as error:
            logger.debug('[-] %s', error, exc_info=True)
            click.echo(f'{type(error).__name__}: {error}', err=True)
            ctx.exit(EXIT_COMPUTATION)


@click.group(cls=QBracketGroup, help=settings.PROJECT_NAME)
@click.option('--verbose', is_flag=True, help='Отладочный вывод в stderr.')
def cli(verbose: bool) -> None:
    set_verbose(verbose)


cli.add_command(brackets.qbracket_command)
cli.add_command(certificates.certify_command)
cli.add_command(suites.verify_command)
cli.add_command(services.flush_cache)


if __name__ == '__main__':
    cli()
