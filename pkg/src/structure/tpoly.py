"""Алгебра двойных моментов 𝒯 с произведением ⊙: дифференцирование δ и проекция π_T."""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterator, Union

from sympy import Expr, Integer, Rational, Symbol, diff, expand, sympify

from brackets.ubracket import odot_all
from core.exceptions import BadParam
from core.logger import logger as _logger
from partitions.families import PartitionFunction, T

logger = _logger(__name__)

Number = Union[int, Fraction]

_INDEX: dict[str, tuple[int, int]] = {}


def t_symbol(k: int, l: int) -> Symbol:  # noqa: E741
    if k < 0 or l < 1:
        raise BadParam(f'T_(k,l) needs k >= 0, l >= 1, got ({k},{l})')
    name = f'T{k}_{l}'
    _INDEX.setdefault(name, (k, l))
    return Symbol(name)


def _index(symbol: Symbol) -> tuple[int, int]:
    try:
        return _INDEX[symbol.name]
    except KeyError:
        raise BadParam(f'{symbol} is not a double moment symbol') from None


def _rational(value: Number) -> Expr:
    return Rational(str(Fraction(value)))


class TPoly:
    """⊙-многочлен от T_{k,l}; произведение символов означает ⊙, а не поточечное умножение."""

    def __init__(self, expr):
        self.expr: Expr = expand(sympify(expr))

    @classmethod
    def T(cls, k: int, l: int) -> TPoly:  # noqa: N802, E741
        return cls(t_symbol(k, l))

    @classmethod
    def constant(cls, value: Number) -> TPoly:
        return cls(_rational(value))

    def __add__(self, other: Union[TPoly, Number]) -> TPoly:
        return TPoly(self.expr + _as_expr(other))

    __radd__ = __add__

    def __neg__(self) -> TPoly:
        return TPoly(-self.expr)

    def __sub__(self, other: Union[TPoly, Number]) -> TPoly:
        return TPoly(self.expr - _as_expr(other))

    def __mul__(self, other: Union[TPoly, Number]) -> TPoly:
        """⊙-произведение."""
        return TPoly(self.expr * _as_expr(other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> TPoly:
        return TPoly(self.expr**n)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = TPoly.constant(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return expand(self.expr - other.expr) == 0

    __hash__ = None

    def is_zero(self) -> bool:
        return self.expr == 0

    def terms(self) -> Iterator[tuple[list[tuple[int, int]], Fraction]]:
        """(сомножители с кратностью, коэффициент)."""
        if self.is_zero():
            return
        for mono, coeff in self.expr.as_coefficients_dict().items():
            factors = []
            for base, e in mono.as_powers_dict().items():
                if base == 1:
                    continue
                factors.extend([_index(base)] * int(e))
            coeff = Rational(coeff)
            yield sorted(factors), Fraction(int(coeff.p), int(coeff.q))

    @property
    def weights(self) -> set[int]:
        return {sum(k + l for k, l in factors) for factors, _ in self.terms()}

    def evaluate(self, n: int) -> PartitionFunction:
        """Функция на разбиениях размера ≤ n: мономы вычисляются через ⊙."""
        total = PartitionFunction.constant(0)
        for factors, coeff in self.terms():
            if not factors:
                total = total + PartitionFunction.constant(coeff)
                continue
            total = total + odot_all([T(k, l) for k, l in factors], n) * coeff
        weights = self.weights
        if len(weights) == 1:
            total.weight = weights.pop()
        return total

    def __repr__(self) -> str:
        return str(self.expr)


def _as_expr(value: Union[TPoly, Number]) -> Expr:
    return value.expr if isinstance(value, TPoly) else _rational(value)


def delta_symbol(k: int, l: int) -> Expr:  # noqa: E741
    """δT_{k,l} = k(l−1)T_{k−1,l−1} при k ≥ 1, l ≥ 2; −1/2 при k + l = 2; иначе 0."""
    if k >= 1 and l >= 2:
        return k * (l - 1) * t_symbol(k - 1, l - 1)
    if k + l == 2:
        return Rational(-1, 2)
    return Integer(0)


def delta(f: TPoly) -> TPoly:
    """⊙-дифференцирование, согласованное с ⟨δf⟩_q = δ_τ⟨f⟩_q."""
    total = Integer(0)
    for symbol in f.expr.free_symbols:
        total += diff(f.expr, symbol) * delta_symbol(*_index(symbol))
    return TPoly(total)


def pi_T(f: TPoly) -> TPoly:  # noqa: N802
    """π(f) = Σ_r 2^r/r!·T_{1,1}^{⊙r}⊙δ^r f."""
    t11 = TPoly.T(1, 1)
    total = TPoly.constant(0)
    power = f
    r = 0
    while not power.is_zero():
        total = total + t11**r * power * Fraction(2**r, factorial(r))
        power = delta(power)
        r += 1
    logger.debug('[+] pi_T of %r: %s derivations', f, r)
    return total


def T_ops(f: TPoly, which: str) -> TPoly:  # noqa: N802
    if which == 'delta':
        return delta(f)
    if which == 'pi_T':
        return pi_T(f)
    raise BadParam(f'unknown operation {which}; known: delta, pi_T')
