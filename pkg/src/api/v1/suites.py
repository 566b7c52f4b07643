from typing import Optional

import click

from api.v1.utils import depth_option, format_option, level_option, margin_option, report_output
from core.logger import logger as _logger
from models.report import CheckStatus
from services.response_messages import CliMessages as Msg
from services.suites import SuiteRunner

logger = _logger(__name__)


@click.command('verify')
@click.argument('suite')
@click.option('--order', type=int, default=None, help='Порядок q по умолчанию.')
@click.option('--jet-order', type=int, default=None, help='Порядок струй по переменным z.')
@level_option
@depth_option
@margin_option
@click.option('--seed', type=int, default=None, help='Зерно случайных выборок.')
@click.option('--samples', type=int, default=None, help='Размер случайных выборок.')
@format_option
@click.pass_context
def verify_command(
    ctx: click.Context,
    suite: str,
    order: Optional[int],
    jet_order: Optional[int],
    level: Optional[int],
    depth: Optional[int],
    margin: Optional[int],
    seed: Optional[int],
    samples: Optional[int],
    fmt: str,
) -> None:
    """Набор проверок SUITE.

    Наборы: bloch-okounkov, hooks, moments, double-moments, taylor-xi, level-N, projections, j-algebra.
    """
    runner = SuiteRunner(order, jet_order, margin, seed, samples, level, depth)
    report = runner.run(suite)
    click.echo(report_output(report, fmt))
    if report.failed:
        failed = sum(1 for c in report.checks if c.status == CheckStatus.failed)
        logger.debug('[-] %s', Msg.failed_checks.value.format(count=failed, suite=suite))
        click.echo(Msg.failed_checks.value.format(count=failed, suite=suite), err=True)
        ctx.exit(1)
