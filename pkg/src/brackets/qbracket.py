"""q-скобка ⟨f⟩_q = Σ f(λ)q^{|λ|} / Σ q^{|λ|}."""
from functools import lru_cache
from typing import Iterable, Sequence

from arith.cyclotomic import ZERO, CycQ
from arith.qseries import QSeries
from core.exceptions import BadParam
from core.logger import logger as _logger
from partitions.families import PartitionFunction
from partitions.partition import enumerate_partitions

logger = _logger(__name__)


@lru_cache(maxsize=None)
def euler_product(order: int) -> QSeries:
    """Π_{n≥1}(1 − q^n) до q^order включительно."""
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for n in range(1, order + 1):
        for e in range(order, n - 1, -1):
            coeffs[e] -= coeffs[e - n]
    return QSeries(dict(enumerate(coeffs)), order + 1)


def partition_generating_function(order: int) -> QSeries:
    return euler_product(order).invert()


def numerator(f: PartitionFunction, order: int) -> QSeries:
    sums: list[CycQ] = [ZERO] * (order + 1)
    for lam in enumerate_partitions(order):
        sums[lam.size] = sums[lam.size] + f(lam)
    return QSeries(dict(enumerate(sums)), order + 1)


def qbracket(f: PartitionFunction, order: int) -> QSeries:
    """⟨f⟩_q по модулю q^{order+1}; используются только разбиения размера ≤ order."""
    if order < 0:
        raise BadParam(f'order must be non-negative, got {order}')
    logger.debug('[+] q-bracket of %r up to q^%s', f, order)
    return numerator(f, order) * euler_product(order)


def qbrackets(functions: Iterable[PartitionFunction], order: int) -> list[QSeries]:
    """Несколько скобок за один проход по разбиениям."""
    functions = list(functions)
    sums: list[list[CycQ]] = [[ZERO] * (order + 1) for _ in functions]
    for lam in enumerate_partitions(order):
        for acc, f in zip(sums, functions):
            acc[lam.size] = acc[lam.size] + f(lam)
    euler = euler_product(order)
    return [QSeries(dict(enumerate(acc)), order + 1) * euler for acc in sums]


def bracket_of_values(values: Sequence[CycQ]) -> QSeries:
    """Скобка по готовым суммам значений по размерам 0..n."""
    order = len(values) - 1
    return QSeries(dict(enumerate(values)), order + 1) * euler_product(order)
