"""Точные элементы круговых полей Q(ζ_M)."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Mapping, Union

from sympy import Poly, QQ, cyclotomic_poly, mobius, symbols, totient

from core.exceptions import BadParam

_x = symbols('x')

Scalar = Union[int, Fraction, 'CycQ']


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def cyclotomic_relation(modulus: int) -> tuple[int, ...]:
    """Коэффициенты Φ_M от младшего к старшему (многочлен приведённый)."""
    return tuple(int(c) for c in reversed(cyclotomic_poly(modulus, _x, polys=True).all_coeffs()))


@lru_cache(maxsize=None)
def degree(modulus: int) -> int:
    return int(totient(modulus))


@lru_cache(maxsize=None)
def power_table(modulus: int) -> tuple[tuple[Fraction, ...], ...]:
    """ζ_M^e в степенном базисе для 0 ≤ e < M."""
    phi = cyclotomic_relation(modulus)
    d = len(phi) - 1
    row = [Fraction(0)] * d
    row[0] = Fraction(1)
    table = [tuple(row)]
    for _ in range(1, modulus):
        top = row[-1]
        row = [Fraction(0)] + row[:-1]
        if top:
            row = [c - top * p for c, p in zip(row, phi)]
        table.append(tuple(row))
    return tuple(table)


@lru_cache(maxsize=None)
def _trace_weights(modulus: int) -> tuple[Fraction, ...]:
    # Tr(ζ^e)/φ(M) для базисных степеней; не зависит от вложения в большее поле.
    weights = []
    for e in range(degree(modulus)):
        m = modulus // gcd(e, modulus)
        weights.append(Fraction(int(mobius(m)), degree(m)))
    return tuple(weights)


def _reduce(modulus: int, exps: Mapping[int, Fraction]) -> tuple[Fraction, ...]:
    table = power_table(modulus)
    vec = [Fraction(0)] * degree(modulus)
    for e, c in exps.items():
        if not c:
            continue
        for i, t in enumerate(table[e % modulus]):
            if t:
                vec[i] += c * t
    return tuple(vec)


class CycQ:
    """Элемент Q(ζ_M): вектор рациональных чисел в степенном базисе по модулю Φ_M.

    Значения модуля вида 2 (mod 4) заменяются на M/2, константы хранятся с модулем 1.
    """

    __slots__ = ('modulus', 'vec', '_hash')

    def __init__(self, modulus: int, vec: Iterable[Fraction]):
        vec = tuple(Fraction(c) for c in vec)
        if len(vec) != degree(modulus):
            raise BadParam(f'vector of length {len(vec)} does not fit modulus {modulus}')
        if modulus > 1 and not any(vec[1:]):
            modulus, vec = 1, vec[:1]
        self.modulus = modulus
        self.vec = vec
        self._hash = None

    @classmethod
    def rational(cls, value: Union[int, Fraction]) -> CycQ:
        return cls(1, (Fraction(value),))

    @classmethod
    def from_exponents(cls, modulus: int, exps: Mapping[int, Union[int, Fraction]]) -> CycQ:
        """Σ c_e ζ_M^e для произвольных целых e."""
        if modulus <= 0:
            raise BadParam(f'modulus must be positive, got {modulus}')
        exps = {e % modulus: Fraction(c) for e, c in exps.items()}
        if modulus % 4 == 2:
            half = modulus // 2
            step = (half + 1) // 2
            folded: dict[int, Fraction] = {}
            for e, c in exps.items():
                key = (e * step) % half
                folded[key] = folded.get(key, Fraction(0)) + (-c if e % 2 else c)
            modulus, exps = half, folded
        return cls(modulus, _reduce(modulus, exps))

    @classmethod
    def coerce(cls, value: Scalar) -> CycQ:
        if isinstance(value, CycQ):
            return value
        if isinstance(value, (int, Rational)):
            return cls.rational(Fraction(value))
        raise TypeError(f'cannot coerce {type(value).__name__} to CycQ')

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return {e: c for e, c in enumerate(self.vec) if c}

    def is_zero(self) -> bool:
        return not any(self.vec)

    def is_rational(self) -> bool:
        return self.modulus == 1

    def to_fraction(self) -> Fraction:
        if self.modulus != 1:
            raise BadParam(f'{self!r} is not rational')
        return self.vec[0]

    def lift(self, modulus: int) -> tuple[Fraction, ...]:
        """Координаты в Q(ζ_{M'}) для M | M'."""
        if modulus % self.modulus:
            raise BadParam(f'cannot embed modulus {self.modulus} into {modulus}')
        if modulus == self.modulus:
            return self.vec
        step = modulus // self.modulus
        return _reduce(modulus, {e * step: c for e, c in enumerate(self.vec) if c})

    def restrict(self, modulus: int) -> CycQ:
        """Обратное к `lift`, если элемент лежит в Q(ζ_m)."""
        from sympy.polys.matrices import DomainMatrix

        if modulus % 4 == 2:
            modulus //= 2
        if self.modulus == modulus:
            return self
        big = _lcm(self.modulus, modulus)
        target = self.lift(big)
        columns = [CycQ.from_exponents(modulus, {j: 1}).lift(big) for j in range(degree(modulus))]
        rows = [[QQ(c.numerator, c.denominator) for c in coords] for coords in zip(*columns)]
        aug = DomainMatrix(
            [row + [QQ(t.numerator, t.denominator)] for row, t in zip(rows, target)],
            (len(rows), len(columns) + 1),
            QQ,
        )
        reduced, pivots = aug.rref()
        if len(columns) in pivots:
            raise BadParam(f'{self!r} does not lie in Q(zeta_{modulus})')
        values = [Fraction(0)] * len(columns)
        dense = reduced.to_Matrix()
        for i, p in enumerate(pivots):
            cell = dense[i, len(columns)]
            values[p] = Fraction(int(cell.p), int(cell.q))
        return CycQ(modulus, values)

    def _binary(self, other: Scalar) -> tuple[int, tuple[Fraction, ...], tuple[Fraction, ...]]:
        other = CycQ.coerce(other)
        if self.modulus == other.modulus:
            return self.modulus, self.vec, other.vec
        m = _lcm(self.modulus, other.modulus)
        return m, self.lift(m), other.lift(m)

    def __add__(self, other: Scalar) -> CycQ:
        if isinstance(other, (int, Fraction)):
            return CycQ(self.modulus, (self.vec[0] + other,) + self.vec[1:])
        if not isinstance(other, CycQ):
            return NotImplemented
        if self.modulus == 1 and other.modulus == 1:
            return CycQ(1, (self.vec[0] + other.vec[0],))
        m, a, b = self._binary(other)
        return CycQ(m, (x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> CycQ:
        return CycQ(self.modulus, (-c for c in self.vec))

    def __sub__(self, other: Scalar) -> CycQ:
        if not isinstance(other, (int, Fraction, CycQ)):
            return NotImplemented
        return self + (-CycQ.coerce(other))

    def __rsub__(self, other: Scalar) -> CycQ:
        return (-self) + other

    def __mul__(self, other: Scalar) -> CycQ:
        if isinstance(other, (int, Fraction)):
            return CycQ(self.modulus, (c * other for c in self.vec))
        if not isinstance(other, CycQ):
            return NotImplemented
        if other.modulus == 1:
            return CycQ(self.modulus, (c * other.vec[0] for c in self.vec))
        if self.modulus == 1:
            return CycQ(other.modulus, (c * self.vec[0] for c in other.vec))
        m, a, b = self._binary(other)
        prod: dict[int, Fraction] = {}
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    prod[i + j] = prod.get(i + j, Fraction(0)) + x * y
        return CycQ(m, _reduce(m, prod))

    __rmul__ = __mul__

    def inverse(self) -> CycQ:
        if self.is_zero():
            raise ZeroDivisionError('inverse of zero in a cyclotomic field')
        if self.modulus == 1:
            return CycQ(1, (1 / self.vec[0],))
        relation = Poly(list(reversed(cyclotomic_relation(self.modulus))), _x, domain=QQ)
        element = Poly([QQ(c.numerator, c.denominator) for c in reversed(self.vec)], _x, domain=QQ)
        inv = element.invert(relation)
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
        coeffs += [Fraction(0)] * (degree(self.modulus) - len(coeffs))
        return CycQ(self.modulus, coeffs)

    def __truediv__(self, other: Scalar) -> CycQ:
        if isinstance(other, (int, Fraction)):
            return CycQ(self.modulus, (c / other for c in self.vec))
        if not isinstance(other, CycQ):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> CycQ:
        return CycQ.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> CycQ:
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> CycQ:
        return CycQ.from_exponents(self.modulus, {-e: c for e, c in enumerate(self.vec) if c})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.modulus == 1 and self.vec[0] == other
        if not isinstance(other, CycQ):
            return NotImplemented
        if self.modulus == other.modulus:
            return self.vec == other.vec
        _, a, b = self._binary(other)
        return a == b

    def __hash__(self) -> int:
        if self._hash is None:
            trace = sum((c * w for c, w in zip(self.vec, _trace_weights(self.modulus))), Fraction(0))
            self._hash = hash(trace)
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        if self.modulus == 1:
            return f'CycQ({self.vec[0]})'
        terms = ' + '.join(f'{c}*z{self.modulus}^{e}' for e, c in self.coeffs.items())
        return f'CycQ({terms or 0})'


ZERO = CycQ(1, (Fraction(0),))
ONE = CycQ(1, (Fraction(1),))


def cyc_root(a: Union[int, Fraction]) -> CycQ:
    """𝒆(a) = exp(2πia) для рационального a."""
    a = Fraction(a)
    return CycQ.from_exponents(a.denominator, {a.numerator: 1})
