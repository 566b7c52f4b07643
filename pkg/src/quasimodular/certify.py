"""Сертификация принадлежности q-ряда градуированному кольцу квазимодулярных форм."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import ceil, gcd
from typing import Optional

from arith.cyclotomic import CycQ
from arith.qseries import QSeries
from core.config import settings
from core.exceptions import InsufficientTruncation, UnsupportedLevel
from core.logger import logger as _logger
from quasimodular.linalg import combine, solve
from quasimodular.ring import LEVEL_ONE, Exps, Generator, QMPoly, eisenstein_generator, monomials_of_weight
from quasimodular.torsion import torsion_generators

logger = _logger(__name__)


class Status(str, Enum):
    certified = 'certified-to-order'
    failed = 'failed'
    inconclusive = 'inconclusive'


@lru_cache(maxsize=None)
def level_generators(level: int) -> tuple[Generator, ...]:
    """Уровень 1: 𝔾₂, 𝔾₄, 𝔾₆. Уровень N: 𝔾_k(dτ) для d | N и значения в точках кручения."""
    if level not in settings.certify.SUPPORTED_LEVELS:
        raise UnsupportedLevel(f'level {level} is not among {settings.certify.SUPPORTED_LEVELS}')
    if level == 1:
        return LEVEL_ONE
    divisors = [d for d in range(1, level + 1) if level % d == 0]
    rescaled = tuple(eisenstein_generator(k, Fraction(d)) for k in (2, 4, 6) for d in divisors)
    return rescaled + torsion_generators(level)


def spanning_basis(
    level: int, weight: int, depth: Optional[int] = None
) -> tuple[tuple[Generator, ...], tuple[Exps, ...]]:
    """Образующие и мономы веса weight глубины не больше depth."""
    generators = level_generators(level)
    depth = weight // 2 if depth is None else depth
    monomials = monomials_of_weight(
        tuple(g.weight for g in generators), weight, tuple(bool(g.depth) for g in generators), depth
    )
    return generators, monomials


def spanning_set(level: int, weight: int, depth: Optional[int], order: int) -> list[QSeries]:
    generators, monomials = spanning_basis(level, weight, depth)
    return [QMPoly(generators, {e: 1}, level).expand(order) for e in monomials]


@dataclass
class Certificate:
    target_id: str
    weight: int
    level: int
    depth: int
    basis: list[str]
    solution: list[CycQ]
    solve_order: int
    margin: int
    status: Status
    heuristic: bool
    generators: tuple[Generator, ...] = field(default=(), repr=False)
    monomials: tuple[Exps, ...] = field(default=(), repr=False)

    @property
    def certified(self) -> bool:
        return self.status == Status.certified

    def as_poly(self) -> QMPoly:
        """Найденная комбинация как элемент кольца."""
        return QMPoly(self.generators, dict(zip(self.monomials, self.solution)), self.level)

    def revalidate(self, target: QSeries) -> bool:
        """Комбинация совпадает с целью до порядка B + m."""
        if not self.certified:
            return False
        order = self.solve_order + self.margin if target.trunc is None else int(ceil(target.trunc))
        return self.as_poly().expand(order).agrees_with(target)


def _rows(series: QSeries, exponents: list[Fraction]) -> list[CycQ]:
    return [series.coefficient(e) for e in exponents]


def certify(
    target: QSeries,
    weight: int,
    level: Optional[int] = None,
    depth: Optional[int] = None,
    margin: Optional[int] = None,
    target_id: str = '',
) -> Certificate:
    """Точное решение на первых B коэффициентах и проверка следующих m."""
    level = settings.certify.LEVEL if level is None else level
    margin = settings.certify.MARGIN if margin is None else margin
    depth = weight // 2 if depth is None else depth
    generators, monomials = spanning_basis(level, weight, depth)
    heuristic = level != 1
    names = [next(QMPoly(generators, {e: 1}, level).terms())[0] for e in monomials]

    denom = target.denom
    start = min(Fraction(0), target.valuation) if target.terms else Fraction(0)
    trunc = target.trunc
    if trunc is None:
        trunc = start + Fraction(len(monomials) + margin + 1)
    order = int(ceil(trunc))
    basis = [QMPoly(generators, {e: 1}, level).expand(order) for e in monomials]
    for series in basis:
        denom = denom * series.denom // gcd(denom, series.denom)
    available = int((trunc - start) * denom)
    if available < len(monomials) + margin:
        raise InsufficientTruncation(
            f'{available} coefficients known, {len(monomials)} + {margin} needed for weight {weight} level {level}'
        )
    exponents = [start + Fraction(j, denom) for j in range(available)]
    solve_order = available - margin
    head, tail = exponents[:solve_order], exponents[solve_order:]

    columns = [_rows(series, exponents) for series in basis]
    wanted = _rows(target, exponents)
    matrix = [[column[i] for column in columns] for i in range(solve_order)]
    solution = solve(matrix, wanted[:solve_order])
    failure = Status.inconclusive if heuristic else Status.failed
    if solution is None:
        status = failure
        solution = []
    else:
        fitted = combine(columns, solution) if columns else [CycQ.rational(0)] * available
        status = Status.certified if fitted[solve_order:] == wanted[solve_order:] else failure
    logger.debug(
        '[+] certify %s: weight %s level %s depth %s, %s basis elements, %s rows, margin %s -> %s',
        target_id or 'series',
        weight,
        level,
        depth,
        len(monomials),
        len(head),
        len(tail),
        status.value,
    )
    return Certificate(
        target_id, weight, level, depth, names, solution, solve_order, margin, status, heuristic, generators, monomials
    )
