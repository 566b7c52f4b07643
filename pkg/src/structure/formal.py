"""Формальная алгебра ℚ[Q_k(a)] с градуировкой wt Q_k(a) = k и операторы 𝒟_j, ∂, Δ_n, ∨."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from math import comb, gcd
from typing import Iterable, Iterator, Union

from sympy import Expr, Integer, Rational, Symbol, diff, expand, sympify

from arith.numbers import multinomial
from core.exceptions import BadParam, NotHomogeneous
from core.logger import logger as _logger
from partitions.constants import beta
from partitions.families import ONE_FUNCTION, PartitionFunction
from partitions.families import Q as Q_function

logger = _logger(__name__)

Number = Union[int, Fraction]


def _mod1(a: Number) -> Fraction:
    a = Fraction(a)
    return a - (a.numerator // a.denominator)


@dataclass(frozen=True)
class QVariable:
    k: int
    a: Fraction

    @property
    def name(self) -> str:
        return f'Q{self.k}' if not self.a else f'Q{self.k}({self.a})'

    @property
    def symbol(self) -> Symbol:
        return Symbol(self.name)


_REGISTRY: dict[str, QVariable] = {}


def q_symbol(k: int, a: Number = 0) -> Expr:
    """Q_k(a); Q_0(a) сразу заменяется константой β_0(a)."""
    if k < 0:
        raise BadParam(f'Q_k needs k >= 0, got {k}')
    a = _mod1(a)
    if k == 0:
        return Rational(str(beta(0, a).to_fraction()))
    var = QVariable(k, a)
    _REGISTRY.setdefault(var.name, var)
    return var.symbol


def variable_of(symbol: Symbol) -> QVariable:
    var = _REGISTRY.get(symbol.name)
    if var is None:
        raise BadParam(f'{symbol} is not a Q-variable')
    return var


def _fraction(value) -> Fraction:
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


class FormalPoly:
    """Многочлен от Q_k(a) с рациональными коэффициентами; показатель у Q₂ может быть дробным."""

    def __init__(self, expr, level: int = 1):
        self.expr: Expr = expand(sympify(expr))
        self.level = level

    @classmethod
    def Q(cls, k: int, a: Number = 0) -> FormalPoly:  # noqa: N802
        return cls(q_symbol(k, a), Fraction(a).denominator)

    @classmethod
    def constant(cls, value: Number, level: int = 1) -> FormalPoly:
        return cls(Rational(str(Fraction(value))), level)

    @classmethod
    def monomial(cls, ks: Iterable[int], shifts: Iterable[Number] = ()) -> FormalPoly:
        ks = list(ks)
        shifts = list(shifts) or [0] * len(ks)
        result = cls.constant(1)
        for k, a in zip(ks, shifts):
            result = result * cls.Q(k, a)
        return result

    def _wrap(self, expr, other: object = None) -> FormalPoly:
        level = self.level
        if isinstance(other, FormalPoly):
            level = level * other.level // gcd(level, other.level)
        return FormalPoly(expr, level)

    def __add__(self, other: Union[FormalPoly, Number]) -> FormalPoly:
        return self._wrap(self.expr + _as_expr(other), other)

    __radd__ = __add__

    def __neg__(self) -> FormalPoly:
        return self._wrap(-self.expr)

    def __sub__(self, other: Union[FormalPoly, Number]) -> FormalPoly:
        return self._wrap(self.expr - _as_expr(other), other)

    def __mul__(self, other: Union[FormalPoly, Number]) -> FormalPoly:
        return self._wrap(self.expr * _as_expr(other), other)

    __rmul__ = __mul__

    def __pow__(self, n: Number) -> FormalPoly:
        return self._wrap(self.expr ** Rational(str(Fraction(n))))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = FormalPoly.constant(other)
        if not isinstance(other, FormalPoly):
            return NotImplemented
        return expand(self.expr - other.expr) == 0

    __hash__ = None

    def is_zero(self) -> bool:
        return self.expr == 0

    def terms(self) -> Iterator[tuple[dict[QVariable, Fraction], Fraction]]:
        """(показатели, коэффициент) по мономам."""
        if self.is_zero():
            return
        for mono, coeff in self.expr.as_coefficients_dict().items():
            powers: dict[QVariable, Fraction] = {}
            for base, e in mono.as_powers_dict().items():
                if base == 1:
                    continue
                powers[variable_of(base)] = _fraction(e)
            yield powers, _fraction(coeff)

    def variables(self) -> set[QVariable]:
        return {variable_of(s) for s in self.expr.free_symbols}

    @property
    def weights(self) -> set[Fraction]:
        return {sum((v.k * e for v, e in powers.items()), Fraction(0)) for powers, _ in self.terms()}

    @property
    def weight(self) -> Fraction:
        """Вес однородного элемента; у нуля вес 0."""
        weights = self.weights
        if len(weights) > 1:
            raise NotHomogeneous(f'{self!r} mixes weights {sorted(weights)}')
        return weights.pop() if weights else Fraction(0)

    def is_homogeneous(self) -> bool:
        return len(self.weights) <= 1

    def reduced(self) -> FormalPoly:
        """Образ в Λ*(N): Q₁(0) ↦ 0."""
        return FormalPoly(self.expr.subs(q_symbol(1), 0), self.level)

    def divide_by_Q2(self) -> FormalPoly:  # noqa: N802
        quotient = self._wrap(self.expr / q_symbol(2))
        if any(e < 0 for powers, _ in quotient.terms() for e in powers.values()):
            raise BadParam(f'{self!r} is not divisible by Q2')
        return quotient

    def evaluate(self) -> PartitionFunction:
        """Гомоморфизм вычисления Q_k(a) ↦ функция на разбиениях."""
        total = None
        for powers, coeff in self.terms():
            if any(e.denominator != 1 or e < 0 for e in powers.values()):
                raise BadParam(f'{self!r} has non-polynomial exponents')
            term = reduce(
                lambda acc, item: acc * Q_function(item[0].k, item[0].a or None) ** int(item[1]),
                powers.items(),
                ONE_FUNCTION,
            )
            term = term * coeff
            total = term if total is None else total + term
        if total is None:
            return PartitionFunction.constant(0)
        weight = self.weights
        if len(weight) == 1:
            total.weight = int(weight.pop())
        return total

    def __repr__(self) -> str:
        return str(self.expr)


def _as_expr(value: Union[FormalPoly, Number]) -> Expr:
    if isinstance(value, FormalPoly):
        return value.expr
    return Rational(str(Fraction(value)))


# --- дифференциальные операторы


def D(f: FormalPoly, j: int) -> FormalPoly:  # noqa: N802
    """𝒟_j = Σ_{i⃗,a⃗} multinomial(i⃗)·Q_{|i⃗|}(|a⃗|)·∂^j/∂Q_{i_1+1}(a_1)⋯∂Q_{i_j+1}(a_j)."""
    if j < 0:
        raise BadParam(f'D_j needs j >= 0, got {j}')
    if j == 0:
        return f
    variables = sorted(f.variables(), key=lambda v: (v.k, v.a))
    total = Integer(0)
    for chosen in product(variables, repeat=j):
        derivative = f.expr
        for var in chosen:
            derivative = diff(derivative, var.symbol)
            if derivative == 0:
                break
        if derivative == 0:
            continue
        lowered = [var.k - 1 for var in chosen]
        shift = sum((var.a for var in chosen), Fraction(0))
        total += multinomial(lowered) * q_symbol(sum(lowered), shift) * derivative
    return FormalPoly(total, f.level)


def partial(f: FormalPoly, times: int = 1) -> FormalPoly:
    """∂ = 𝒟₁: Q_k(a) ↦ Q_{k−1}(a)."""
    for _ in range(times):
        f = D(f, 1)
    return f


def Delta(n: int, f: FormalPoly) -> FormalPoly:  # noqa: N802
    """Δ_n = Σ_i (−1)^i binom(n, i) ∂^i𝒟_{n−i}."""
    total = FormalPoly.constant(0, f.level)
    for i in range(n + 1):
        total = total + partial(D(f, n - i), i) * ((-1) ** i * comb(n, i))
    return total


def vee(f: FormalPoly, g: FormalPoly) -> FormalPoly:
    """f^∨(g), где ∨ есть гомоморфизм алгебр Q_n ↦ Δ_n (уровень 1)."""
    total = FormalPoly.constant(0, g.level)
    for powers, coeff in f.terms():
        if any(v.a for v in powers):
            raise BadParam('the vee map is defined on level one elements')
        image = g
        for var, e in powers.items():
            if e.denominator != 1 or e < 0:
                raise BadParam(f'{f!r} has non-polynomial exponents')
            for _ in range(int(e)):
                image = Delta(var.k, image)
        total = total + image * coeff
    logger.debug('[+] vee of %r applied', f)
    return total
