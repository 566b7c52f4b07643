"""Усечённые ряды Пюизё по q с коэффициентами в CycQ."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Mapping, Optional, Union

from arith.cyclotomic import ONE, ZERO, CycQ, Scalar
from core.exceptions import BadParam, NotAUnit, TruncationUnderflow

Exponent = Union[int, Fraction]


def _min_trunc(*truncs: Optional[Fraction]) -> Optional[Fraction]:
    known = [t for t in truncs if t is not None]
    return min(known) if known else None


class QSeries:
    """Σ c_e q^e, e ∈ (1/D)Z, известный строго ниже `trunc` (None для точного ряда)."""

    __slots__ = ('terms', 'trunc', '_denom')

    def __init__(self, terms: Mapping[Exponent, Scalar] = None, trunc: Optional[Exponent] = None):
        self.trunc = None if trunc is None else Fraction(trunc)
        clean: dict[Fraction, CycQ] = {}
        for e, c in (terms or {}).items():
            e = Fraction(e)
            if self.trunc is not None and e >= self.trunc:
                continue
            c = CycQ.coerce(c)
            if not c.is_zero():
                clean[e] = c
        self.terms = clean
        self._denom = None

    @classmethod
    def zero(cls, trunc: Optional[Exponent] = None) -> QSeries:
        return cls({}, trunc)

    @classmethod
    def constant(cls, value: Scalar, trunc: Optional[Exponent] = None) -> QSeries:
        return cls({0: value}, trunc)

    @classmethod
    def monomial(cls, exponent: Exponent, value: Scalar = 1, trunc: Optional[Exponent] = None) -> QSeries:
        return cls({exponent: value}, trunc)

    @classmethod
    def from_list(cls, coeffs: Iterable[Scalar], trunc: Optional[Exponent] = None) -> QSeries:
        """Коэффициенты при q^0, q^1, ...; по умолчанию усечение сразу за списком."""
        coeffs = list(coeffs)
        return cls(dict(enumerate(coeffs)), len(coeffs) if trunc is None else trunc)

    @property
    def denom(self) -> int:
        if self._denom is None:
            d = 1
            for e in self.terms:
                d = d * e.denominator // gcd(d, e.denominator)
            self._denom = d
        return self._denom

    @property
    def valuation(self) -> Optional[Fraction]:
        """Младший показатель; для усечённого нуля trunc, для точного нуля None."""
        if self.terms:
            return min(self.terms)
        return self.trunc

    @property
    def floor(self) -> Optional[Fraction]:
        return self.valuation

    def is_exact(self) -> bool:
        return self.trunc is None

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponent: Exponent) -> CycQ:
        exponent = Fraction(exponent)
        if self.trunc is not None and exponent >= self.trunc:
            raise TruncationUnderflow(f'coefficient of q^{exponent} requested, series known below q^{self.trunc}')
        return self.terms.get(exponent, ZERO)

    def coefficients(self, start: Exponent, stop: Exponent, step: Exponent = 1) -> list[CycQ]:
        start, stop, step = Fraction(start), Fraction(stop), Fraction(step)
        out = []
        e = start
        while e < stop:
            out.append(self.coefficient(e))
            e += step
        return out

    def constant_term(self) -> CycQ:
        return self.coefficient(0)

    def truncate(self, trunc: Optional[Exponent]) -> QSeries:
        if trunc is None:
            return self
        return QSeries(self.terms, _min_trunc(self.trunc, Fraction(trunc)))

    def map_coefficients(self, func: Callable[[CycQ], Scalar]) -> QSeries:
        return QSeries({e: func(c) for e, c in self.terms.items()}, self.trunc)

    def __add__(self, other: Union[QSeries, Scalar]) -> QSeries:
        if not isinstance(other, QSeries):
            other = QSeries.constant(other)
        trunc = _min_trunc(self.trunc, other.trunc)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return QSeries(terms, trunc)

    __radd__ = __add__

    def __neg__(self) -> QSeries:
        return QSeries({e: -c for e, c in self.terms.items()}, self.trunc)

    def __sub__(self, other: Union[QSeries, Scalar]) -> QSeries:
        if not isinstance(other, QSeries):
            other = QSeries.constant(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> QSeries:
        return (-self) + other

    def scale(self, value: Scalar) -> QSeries:
        value = CycQ.coerce(value)
        if value.is_zero():
            return QSeries.zero(self.trunc)
        return QSeries({e: c * value for e, c in self.terms.items()}, self.trunc)

    def product_trunc(self, other: QSeries) -> Optional[Fraction]:
        if self.is_exact() and not self.terms or other.is_exact() and not other.terms:
            return None
        candidates = []
        if self.trunc is not None:
            candidates.append(self.trunc + other.valuation)
        if other.trunc is not None:
            candidates.append(other.trunc + self.valuation)
        return min(candidates) if candidates else None

    def __mul__(self, other: Union[QSeries, Scalar]) -> QSeries:
        if not isinstance(other, QSeries):
            if isinstance(other, (int, Fraction, CycQ)):
                return self.scale(other)
            return NotImplemented
        trunc = self.product_trunc(other)
        left = sorted(self.terms.items())
        right = sorted(other.terms.items())
        terms: dict[Fraction, CycQ] = {}
        for e1, c1 in left:
            for e2, c2 in right:
                e = e1 + e2
                if trunc is not None and e >= trunc:
                    break
                terms[e] = terms[e] + c1 * c2 if e in terms else c1 * c2
        return QSeries(terms, trunc)

    __rmul__ = __mul__

    def shift(self, exponent: Exponent) -> QSeries:
        """Умножение на q^e."""
        exponent = Fraction(exponent)
        trunc = None if self.trunc is None else self.trunc + exponent
        return QSeries({e + exponent: c for e, c in self.terms.items()}, trunc)

    def invert(self, order: Optional[Exponent] = None) -> QSeries:
        """Обратный ряд; для точного ряда нужен порядок усечения результата `order`."""
        if not self.terms:
            raise NotAUnit('series vanishes up to its truncation order')
        v = self.valuation
        trunc = None if self.trunc is None else self.trunc - 2 * v
        trunc = _min_trunc(trunc, None if order is None else Fraction(order))
        if trunc is None:
            raise BadParam('inverting an exact series requires a truncation order')
        lead = self.terms[v].inverse()
        d = self.denom
        # относительные показатели в единицах 1/D
        unit = {int((e - v) * d): c * lead for e, c in self.terms.items() if e != v}
        steps = (trunc + v) * d
        n_max = int(steps) if steps.denominator == 1 else int(steps) + 1
        inv: list[CycQ] = [ONE]
        for n in range(1, max(n_max, 1)):
            acc = ZERO
            for k, u in unit.items():
                if k <= n:
                    acc = acc + u * inv[n - k]
            inv.append(-acc)
        return QSeries({Fraction(n, d) - v: c * lead for n, c in enumerate(inv)}, trunc)

    def __truediv__(self, other: Union[QSeries, Scalar]) -> QSeries:
        if isinstance(other, QSeries):
            return self * other.invert()
        return self.scale(CycQ.coerce(other).inverse())

    def __pow__(self, n: int) -> QSeries:
        if n < 0:
            return self.invert() ** (-n)
        result = QSeries.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale_exponents(self, factor: int) -> QSeries:
        """q ↦ q^{1/N}: показатель e переходит в e/N."""
        factor = Fraction(factor)
        if factor <= 0:
            raise BadParam(f'scale factor must be positive, got {factor}')
        trunc = None if self.trunc is None else self.trunc / factor
        return QSeries({e / factor: c for e, c in self.terms.items()}, trunc)

    def substitute(self, factor: Exponent) -> QSeries:
        """q ↦ q^d."""
        return self.scale_exponents(1 / Fraction(factor))

    def D_tau(self) -> QSeries:
        """D_τ = q d/dq."""
        return QSeries({e: c * e for e, c in self.terms.items()}, self.trunc)

    def agrees_with(self, other: QSeries, upto: Optional[Exponent] = None) -> bool:
        """Совпадение коэффициентов ниже общего усечения (и ниже `upto`, если задан)."""
        bound = _min_trunc(self.trunc, other.trunc, None if upto is None else Fraction(upto))
        keys = set(self.terms) | set(other.terms)
        for e in keys:
            if bound is not None and e >= bound:
                continue
            if self.terms.get(e, ZERO) != other.terms.get(e, ZERO):
                return False
        return True

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, CycQ)):
            other = QSeries.constant(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.agrees_with(other)

    __hash__ = None

    def conjugate(self) -> QSeries:
        return self.map_coefficients(CycQ.conjugate)

    def max_modulus(self) -> int:
        m = 1
        for c in self.terms.values():
            m = m * c.modulus // gcd(m, c.modulus)
        return m

    def __repr__(self) -> str:
        body = ' + '.join(f'({c!r})*q^{e}' for e, c in sorted(self.terms.items())) or '0'
        tail = '' if self.trunc is None else f' + O(q^{self.trunc})'
        return f'QSeries({body}{tail})'
