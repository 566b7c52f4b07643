"""Градуированные кольца квазимодулярных форм в именованных образующих."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from arith.cyclotomic import CycQ, Scalar
from arith.qseries import QSeries
from core.exceptions import BadParam, NotHomogeneous
from quasimodular.eisenstein import G, G_rescaled

Exps = tuple[int, ...]


@dataclass(frozen=True)
class Generator:
    """Образующая: вес, значение δ_τ (константа, ненулевая только у квазимодулярных весом 2) и q-разложение."""

    name: str
    weight: int
    delta: Fraction
    series: Callable[[int], QSeries]

    @property
    def depth(self) -> int:
        return 1 if self.delta else 0

    def __repr__(self) -> str:
        return self.name


@lru_cache(maxsize=None)
def eisenstein_generator(k: int, d: Fraction = Fraction(1)) -> Generator:
    """𝔾_k(dτ); δ_τ𝔾₂(dτ) = −1/(2d)."""
    d = Fraction(d)
    name = f'G{k}' if d == 1 else f'G{k}({d}tau)'
    delta = Fraction(-1, 2) / d if k == 2 else Fraction(0)
    if d == 1:
        return Generator(name, k, delta, lambda order: G(k, order))
    return Generator(name, k, delta, lambda order: G_rescaled(k, d, order))


LEVEL_ONE: tuple[Generator, ...] = tuple(eisenstein_generator(k) for k in (2, 4, 6))


class QMPoly:
    """Σ c_e Π g_i^{e_i} над ℚ(ζ) в фиксированном наборе образующих."""

    __slots__ = ('generators', 'poly', 'level')

    def __init__(self, generators: Sequence[Generator], poly: Mapping[Sequence[int], Scalar] = None, level: int = 1):
        self.generators = tuple(generators)
        self.level = level
        clean: dict[Exps, CycQ] = {}
        for e, c in (poly or {}).items():
            e = tuple(e)
            if len(e) != len(self.generators):
                raise BadParam(f'exponent {e} does not match {len(self.generators)} generators')
            c = CycQ.coerce(c)
            if not c.is_zero():
                clean[e] = clean[e] + c if e in clean else c
        self.poly = {e: c for e, c in clean.items() if not c.is_zero()}

    @classmethod
    def constant(cls, value: Scalar, generators: Sequence[Generator] = LEVEL_ONE, level: int = 1) -> QMPoly:
        return cls(generators, {(0,) * len(generators): value}, level)

    @classmethod
    def generator(cls, name: str, generators: Sequence[Generator] = LEVEL_ONE, level: int = 1) -> QMPoly:
        names = [g.name for g in generators]
        if name not in names:
            raise BadParam(f'unknown generator {name}; known: {names}')
        e = [0] * len(generators)
        e[names.index(name)] = 1
        return cls(generators, {tuple(e): 1}, level)

    def _monomial_weight(self, e: Exps) -> int:
        return sum(g.weight * x for g, x in zip(self.generators, e))

    @property
    def weights(self) -> set[int]:
        return {self._monomial_weight(e) for e in self.poly}

    @property
    def weight(self) -> int:
        weights = self.weights
        if len(weights) > 1:
            raise NotHomogeneous(f'mixed weights {sorted(weights)}')
        return weights.pop() if weights else 0

    @property
    def depth(self) -> int:
        return max((sum(x for g, x in zip(self.generators, e) if g.depth) for e in self.poly), default=0)

    def is_zero(self) -> bool:
        return not self.poly

    def _compatible(self, other: QMPoly) -> None:
        if self.generators != other.generators:
            raise BadParam('polynomials live in different generator rings')

    def __add__(self, other: Union[QMPoly, Scalar]) -> QMPoly:
        if not isinstance(other, QMPoly):
            other = QMPoly.constant(other, self.generators, self.level)
        self._compatible(other)
        poly = dict(self.poly)
        for e, c in other.poly.items():
            poly[e] = poly[e] + c if e in poly else c
        return QMPoly(self.generators, poly, self.level)

    __radd__ = __add__

    def __neg__(self) -> QMPoly:
        return self.scale(-1)

    def __sub__(self, other: Union[QMPoly, Scalar]) -> QMPoly:
        return self + (-other)

    def scale(self, value: Scalar) -> QMPoly:
        value = CycQ.coerce(value)
        return QMPoly(self.generators, {e: c * value for e, c in self.poly.items()}, self.level)

    def __mul__(self, other: Union[QMPoly, Scalar]) -> QMPoly:
        if not isinstance(other, QMPoly):
            return self.scale(other)
        self._compatible(other)
        poly: dict[Exps, CycQ] = {}
        for e1, c1 in self.poly.items():
            for e2, c2 in other.poly.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                poly[e] = poly[e] + c1 * c2 if e in poly else c1 * c2
        return QMPoly(self.generators, poly, self.level)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QMPoly:
        result = QMPoly.constant(1, self.generators, self.level)
        for _ in range(n):
            result = result * self
        return result

    def partial(self, i: int) -> QMPoly:
        """∂/∂g_i."""
        poly = {}
        for e, c in self.poly.items():
            if e[i]:
                lowered = list(e)
                lowered[i] -= 1
                poly[tuple(lowered)] = c * e[i]
        return QMPoly(self.generators, poly, self.level)

    def expand(self, order: int) -> QSeries:
        """q-разложение по модулю q^order."""
        powers: dict[tuple[int, int], QSeries] = {}

        def power(i: int, n: int) -> QSeries:
            if (i, n) not in powers:
                powers[i, n] = self.generators[i].series(order) ** n
            return powers[i, n]

        total = QSeries.zero(order)
        for e, c in self.poly.items():
            term = QSeries.constant(c, order)
            for i, n in enumerate(e):
                if n:
                    term = term * power(i, n)
            total = total + term
        return total.truncate(order)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, CycQ)):
            other = QMPoly.constant(other, self.generators, self.level)
        if not isinstance(other, QMPoly):
            return NotImplemented
        return self.generators == other.generators and (self - other).is_zero()

    __hash__ = None

    def terms(self) -> Iterable[tuple[str, CycQ]]:
        for e, c in sorted(self.poly.items(), reverse=True):
            name = '*'.join(
                g.name if x == 1 else f'{g.name}^{x}' for g, x in zip(self.generators, e) if x
            )
            yield name or '1', c

    def __repr__(self) -> str:
        body = ' + '.join(f'({c!r})*{name}' for name, c in self.terms()) or '0'
        return f'QMPoly({body})'


@lru_cache(maxsize=None)
def monomials_of_weight(
    weights: tuple[int, ...], k: int, depth_mask: tuple[bool, ...], depth: Optional[int]
) -> tuple[Exps, ...]:
    """Все мономы веса k; depth ограничивает суммарную степень по отмеченным образующим."""
    if k < 0:
        return ()
    out = []
    ranges = [range(k // w + 1) if w > 0 else range(1) for w in weights]
    for e in product(*ranges):
        if sum(w * x for w, x in zip(weights, e)) != k:
            continue
        if depth is not None and sum(x for x, m in zip(e, depth_mask) if m) > depth:
            continue
        out.append(e)
    return tuple(sorted(out, reverse=True))
