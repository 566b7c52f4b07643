"""Усечённые ряды Лорана по w_i = 2πi z_i с коэффициентами QSeries."""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Iterable, Mapping, Optional, Sequence, Union

from arith.cyclotomic import CycQ, Scalar
from arith.numbers import ps_inverse
from arith.qseries import QSeries
from core.exceptions import BadParam, JetOrderExceeded, NotAUnit
from core.logger import logger as _logger

logger = _logger(__name__)

Exps = tuple[int, ...]
Bound = Union[int, float]
IndexMatrix = tuple[tuple[Fraction, ...], ...]


def _as_series(value: Union[QSeries, Scalar]) -> QSeries:
    return value if isinstance(value, QSeries) else QSeries.constant(value)


def check_index(index: IndexMatrix) -> None:
    """2B_M(x, x) целочисленна на ℤⁿ: 2M_ii ∈ ℤ и 4M_ij ∈ ℤ."""
    n = len(index)
    for i in range(n):
        if len(index[i]) != n:
            raise BadParam(f'index matrix must be square, got {index}')
        for j in range(n):
            if index[i][j] != index[j][i]:
                raise BadParam(f'index matrix must be symmetric, got {index}')
            scale = 2 if i == j else 4
            if (Fraction(index[i][j]) * scale).denominator != 1:
                raise BadParam(f'2B_M is not an integral quadratic form for index {index}')


def add_index(a: Optional[IndexMatrix], b: Optional[IndexMatrix]) -> Optional[IndexMatrix]:
    if a is None or b is None:
        return None
    return tuple(tuple(Fraction(x) + Fraction(y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scalar_index(n: int, value) -> IndexMatrix:
    return tuple(tuple(Fraction(value) if i == j else Fraction(0) for j in range(n)) for i in range(n))


def sum_index(n: int, value) -> IndexMatrix:
    """Индекс value·(z_1+…+z_n)²."""
    return tuple(tuple(Fraction(value) for _ in range(n)) for _ in range(n))


class JetForm:
    """Σ c_ℓ w^ℓ по мультииндексам ℓ с ℓ_i ≥ −pole_orders[i], известный при ℓ_i < trunc[i].

    Отсутствующий коэффициент равен нулю по модулю q^{q_trunc}.
    """

    __slots__ = ('rank', 'coeffs', 'pole_orders', 'trunc', 'q_trunc', 'weight', 'index')

    def __init__(
        self,
        rank: int,
        coeffs: Mapping[Exps, Union[QSeries, Scalar]],
        trunc: Sequence[Bound],
        pole_orders: Sequence[int] = None,
        q_trunc: Optional[Fraction] = None,
        weight: Optional[int] = None,
        index: Optional[IndexMatrix] = None,
        jacobi: bool = False,
    ):
        self.rank = rank
        self.trunc = tuple(trunc)
        self.pole_orders = tuple(pole_orders) if pole_orders is not None else (0,) * rank
        if len(self.trunc) != rank or len(self.pole_orders) != rank:
            raise BadParam(f'rank {rank} does not match trunc {self.trunc} / pole orders {self.pole_orders}')
        if jacobi:
            if index is None:
                raise BadParam('a Jacobi-tagged jet needs an index matrix')
            check_index(index)
        clean: dict[Exps, QSeries] = {}
        truncs = []
        for ell, c in coeffs.items():
            ell = tuple(ell)
            if any(e >= t for e, t in zip(ell, self.trunc)):
                continue
            if any(e < -p for e, p in zip(ell, self.pole_orders)):
                raise BadParam(f'exponent {ell} below the pole orders {self.pole_orders}')
            c = _as_series(c)
            if c.trunc is not None:
                truncs.append(c.trunc)
            if not c.is_zero():
                clean[ell] = c
        if truncs:
            q_trunc = min(truncs) if q_trunc is None else min(min(truncs), Fraction(q_trunc))
        self.q_trunc = None if q_trunc is None else Fraction(q_trunc)
        if self.q_trunc is not None:
            clean = {e: c.truncate(self.q_trunc) for e, c in clean.items()}
            clean = {e: c for e, c in clean.items() if not c.is_zero()}
        self.coeffs = clean
        self.weight = weight
        self.index = index

    # --- конструкторы

    @classmethod
    def univariate(
        cls,
        coeffs: Mapping[int, Union[QSeries, Scalar]],
        trunc: Bound,
        pole_order: int = 0,
        q_trunc: Optional[Fraction] = None,
        **meta,
    ) -> JetForm:
        return cls(1, {(e,): c for e, c in coeffs.items()}, (trunc,), (pole_order,), q_trunc, **meta)

    @classmethod
    def constant(cls, rank: int, value: Union[QSeries, Scalar] = 1, trunc: Bound = math.inf) -> JetForm:
        return cls(rank, {(0,) * rank: value}, (trunc,) * rank)

    @classmethod
    def exp_linear(cls, scales: Sequence[Scalar], trunc: Sequence[int]) -> JetForm:
        """Π_i exp(c_i w_i)."""
        rank = len(scales)
        scales = [CycQ.coerce(c) for c in scales]
        coeffs = {}
        for ell in product(*(range(t) for t in trunc)):
            value = CycQ.coerce(1)
            for c, e in zip(scales, ell):
                value = value * (c**e) * Fraction(1, factorial(e))
            coeffs[ell] = value
        return cls(rank, coeffs, tuple(trunc))

    # --- доступ

    @property
    def lower(self) -> Exps:
        return tuple(-p for p in self.pole_orders)

    def coefficient(self, ell: Sequence[int]) -> QSeries:
        ell = tuple(ell)
        if len(ell) != self.rank:
            raise BadParam(f'exponent {ell} does not match rank {self.rank}')
        if any(e >= t for e, t in zip(ell, self.trunc)):
            raise JetOrderExceeded(f'coefficient w^{ell} requested, jet known below {self.trunc}')
        return self.coeffs.get(ell, QSeries.zero(self.q_trunc))

    def box(self) -> Iterable[Exps]:
        """Все мультииндексы известного окна (trunc должен быть конечным)."""
        if any(t == math.inf for t in self.trunc):
            raise BadParam('infinite jet order has no finite box')
        return product(*(range(-p, int(t)) for p, t in zip(self.pole_orders, self.trunc)))

    def _meta(self, other: JetForm) -> dict:
        weight = self.weight if self.weight == other.weight else None
        index = self.index if self.index == other.index else None
        return {'weight': weight, 'index': index}

    # --- арифметика

    def __add__(self, other: Union[JetForm, QSeries, Scalar]) -> JetForm:
        if not isinstance(other, JetForm):
            other = JetForm.constant(self.rank, other)
        if other.rank != self.rank:
            raise BadParam(f'rank mismatch {self.rank} vs {other.rank}')
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            coeffs[e] = coeffs[e] + c if e in coeffs else c
        return JetForm(
            self.rank,
            coeffs,
            tuple(min(a, b) for a, b in zip(self.trunc, other.trunc)),
            tuple(max(a, b) for a, b in zip(self.pole_orders, other.pole_orders)),
            min_trunc(self.q_trunc, other.q_trunc),
            **self._meta(other),
        )

    __radd__ = __add__

    def __neg__(self) -> JetForm:
        return self.scale(-1)

    def __sub__(self, other: Union[JetForm, QSeries, Scalar]) -> JetForm:
        if not isinstance(other, JetForm):
            other = JetForm.constant(self.rank, other)
        return self + (-other)

    def scale(self, value: Union[QSeries, Scalar]) -> JetForm:
        value = _as_series(value)
        q_trunc = self.q_trunc
        if q_trunc is not None and value.terms:
            q_trunc = q_trunc + value.valuation
        if value.trunc is not None:
            low = min((c.valuation for c in self.coeffs.values()), default=Fraction(0))
            q_trunc = min_trunc(q_trunc, value.trunc + low)
        return JetForm(
            self.rank,
            {e: c * value for e, c in self.coeffs.items()},
            self.trunc,
            self.pole_orders,
            q_trunc,
            weight=self.weight,
            index=self.index,
        )

    def __mul__(self, other: Union[JetForm, QSeries, Scalar]) -> JetForm:
        if not isinstance(other, JetForm):
            return self.scale(other)
        if other.rank != self.rank:
            raise BadParam(f'rank mismatch {self.rank} vs {other.rank}')
        trunc = tuple(
            min(hx + ly, hy + lx) for hx, hy, lx, ly in zip(self.trunc, other.trunc, self.lower, other.lower)
        )
        coeffs: dict[Exps, QSeries] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if any(x >= t for x, t in zip(e, trunc)):
                    continue
                term = c1 * c2
                coeffs[e] = coeffs[e] + term if e in coeffs else term
        q_trunc = product_q_trunc(self, other)
        weight = None if self.weight is None or other.weight is None else self.weight + other.weight
        return JetForm(
            self.rank,
            coeffs,
            trunc,
            tuple(a + b for a, b in zip(self.pole_orders, other.pole_orders)),
            q_trunc,
            weight=weight,
            index=add_index(self.index, other.index),
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> JetForm:
        if n < 0:
            return self.invert() ** (-n)
        result = JetForm.constant(self.rank, 1)
        for _ in range(n):
            result = result * self
        return result

    def invert(self, order: Optional[int] = None) -> JetForm:
        """1/f для ранга 1: f = w^v·u, где u обратим."""
        if self.rank != 1:
            raise BadParam('jet inversion is defined for rank 1 only')
        if not self.coeffs:
            raise NotAUnit('jet vanishes up to its truncation order')
        (v,) = min(self.coeffs)
        hi = self.trunc[0]
        if hi == math.inf:
            if order is None:
                raise BadParam('inverting a polynomial jet requires an order')
            hi = order + 2 * v
        length = int(hi) - v
        if order is not None:
            length = min(length, order + v)
        base = [self.coeffs.get((v + j,), QSeries.zero(self.q_trunc)) for j in range(length)]
        inv = ps_inverse(base, length, QSeries.zero(), lambda c: reciprocal(c, self.q_trunc))
        weight = None if self.weight is None else -self.weight
        index = None if self.index is None else tuple(tuple(-x for x in row) for row in self.index)
        return JetForm.univariate(
            {j - v: c for j, c in enumerate(inv)},
            length - v,
            max(v, 0),
            weight=weight,
            index=index,
        )

    def __truediv__(self, other: Union[JetForm, QSeries, Scalar]) -> JetForm:
        if isinstance(other, JetForm):
            return self * other.invert()
        if isinstance(other, QSeries):
            return self.scale(other.invert())
        return self.scale(CycQ.coerce(other).inverse())

    # --- дифференцирования

    def D_z(self, i: int) -> JetForm:  # noqa: N802
        """D_{z_i} = ∂/∂w_i."""
        coeffs = {}
        for ell, c in self.coeffs.items():
            if ell[i] == 0:
                continue
            new = ell[:i] + (ell[i] - 1,) + ell[i + 1 :]
            coeffs[new] = c * ell[i]
        poles = list(self.pole_orders)
        if poles[i]:
            poles[i] += 1
        trunc = list(self.trunc)
        trunc[i] = trunc[i] - 1
        weight = None if self.weight is None else self.weight + 1
        return JetForm(self.rank, coeffs, trunc, poles, self.q_trunc, weight=weight, index=self.index)

    def D_tau(self) -> JetForm:  # noqa: N802
        weight = None if self.weight is None else self.weight + 2
        return JetForm(
            self.rank,
            {e: c.D_tau() for e, c in self.coeffs.items()},
            self.trunc,
            self.pole_orders,
            self.q_trunc,
            weight=weight,
            index=self.index,
        )

    # --- замены переменных

    def reflect(self, signs: Sequence[int]) -> JetForm:
        """w_i ↦ s_i w_i, s_i = ±1."""
        coeffs = {}
        for ell, c in self.coeffs.items():
            sign = 1
            for s, e in zip(signs, ell):
                if s < 0 and e % 2:
                    sign = -sign
            coeffs[ell] = c if sign > 0 else -c
        return JetForm(
            self.rank, coeffs, self.trunc, self.pole_orders, self.q_trunc, weight=self.weight, index=self.index
        )

    def permute(self, perm: Sequence[int]) -> JetForm:
        """Переменная i результата берётся из переменной perm[i] исходной формы."""
        coeffs = {tuple(ell[p] for p in perm): c for ell, c in self.coeffs.items()}
        index = None
        if self.index is not None:
            index = tuple(tuple(self.index[p][r] for r in perm) for p in perm)
        return JetForm(
            self.rank,
            coeffs,
            tuple(self.trunc[p] for p in perm),
            tuple(self.pole_orders[p] for p in perm),
            self.q_trunc,
            weight=self.weight,
            index=index,
        )

    def embed(self, rank: int, positions: Sequence[int], trunc: Bound = math.inf) -> JetForm:
        """Форма от переменных positions внутри формы ранга rank."""
        coeffs = {}
        for ell, c in self.coeffs.items():
            full = [0] * rank
            for e, p in zip(ell, positions):
                full[p] = e
            coeffs[tuple(full)] = c
        full_trunc = [trunc] * rank
        full_poles = [0] * rank
        for p, t, pole in zip(positions, self.trunc, self.pole_orders):
            full_trunc[p] = t
            full_poles[p] = pole
        return JetForm(rank, coeffs, full_trunc, full_poles, self.q_trunc, weight=self.weight)

    def along_sum(self, rank: int, signs: Mapping[int, int], trunc: int) -> JetForm:
        """f(Σ s_i w_i) для голоморфной f ранга 1 как форма ранга rank с окном [0, trunc) по переменным signs."""
        if self.rank != 1 or self.pole_orders[0]:
            raise BadParam('composition with a linear form needs a holomorphic rank-1 jet')
        positions = sorted(signs)
        if len(positions) * (trunc - 1) >= self.trunc[0]:
            raise JetOrderExceeded(f'jet order {self.trunc[0]} is too small for a {len(positions)}-fold sum')
        coeffs: dict[Exps, QSeries] = {}
        for (e,), c in self.coeffs.items():
            for split in compositions(e, len(positions)):
                if any(x >= trunc for x in split):
                    continue
                value = comb_multi(split)
                full = [0] * rank
                for p, x in zip(positions, split):
                    full[p] = x
                    if signs[p] < 0 and x % 2:
                        value = -value
                key = tuple(full)
                term = c * value
                coeffs[key] = coeffs[key] + term if key in coeffs else term
        box = [trunc if p in signs else math.inf for p in range(rank)]
        return JetForm(rank, coeffs, box, q_trunc=self.q_trunc, weight=self.weight)

    def truncated(self, trunc: Sequence[Bound]) -> JetForm:
        if any(t > s for t, s in zip(trunc, self.trunc)):
            raise JetOrderExceeded(f'cannot extend a jet known below {self.trunc} to {tuple(trunc)}')
        return JetForm(
            self.rank, self.coeffs, tuple(trunc), self.pole_orders, self.q_trunc, weight=self.weight, index=self.index
        )

    def truncate_q(self, q_trunc: Fraction) -> JetForm:
        return JetForm(
            self.rank,
            self.coeffs,
            self.trunc,
            self.pole_orders,
            min_trunc(self.q_trunc, Fraction(q_trunc)),
            weight=self.weight,
            index=self.index,
        )

    def even_part(self) -> JetForm:
        """(f(w) + f(−w))/2 для ранга 1."""
        return JetForm(
            self.rank,
            {e: c for e, c in self.coeffs.items() if sum(e) % 2 == 0},
            self.trunc,
            self.pole_orders,
            self.q_trunc,
            weight=self.weight,
            index=self.index,
        )

    # --- сравнение

    def agrees_with(self, other: JetForm, trunc: Optional[Sequence[int]] = None, q_trunc=None) -> bool:
        """Совпадение коэффициентов в общем окне и ниже общего q-усечения."""
        box = tuple(min(a, b) for a, b in zip(self.trunc, other.trunc))
        if trunc is not None:
            box = tuple(min(a, b) for a, b in zip(box, trunc))
        bound = min_trunc(min_trunc(self.q_trunc, other.q_trunc), None if q_trunc is None else Fraction(q_trunc))
        for ell in set(self.coeffs) | set(other.coeffs):
            if any(e >= t for e, t in zip(ell, box)):
                continue
            mine = self.coeffs.get(ell, QSeries.zero())
            theirs = other.coeffs.get(ell, QSeries.zero())
            if not mine.agrees_with(theirs, bound):
                logger.debug('[+] jets differ at w^%s: %r vs %r', ell, mine, theirs)
                return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JetForm):
            return NotImplemented
        return self.rank == other.rank and self.agrees_with(other)

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f'JetForm(rank={self.rank}, terms={len(self.coeffs)}, trunc={self.trunc}, '
            f'poles={self.pole_orders}, q_trunc={self.q_trunc})'
        )


def min_trunc(a: Optional[Fraction], b: Optional[Fraction]) -> Optional[Fraction]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _valuation(jet: JetForm) -> Fraction:
    return min((c.valuation for c in jet.coeffs.values() if c.valuation is not None), default=Fraction(0))


def product_q_trunc(x: JetForm, y: JetForm) -> Optional[Fraction]:
    candidates = []
    if x.q_trunc is not None:
        candidates.append(x.q_trunc + _valuation(y))
    if y.q_trunc is not None:
        candidates.append(y.q_trunc + _valuation(x))
    return min(candidates) if candidates else None


def compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for tail in compositions(total - first, parts - 1):
            yield (first,) + tail


def comb_multi(split: Sequence[int]) -> int:
    """Мультиномиальный коэффициент (Σ x)!/Π x!."""
    out, total = 1, 0
    for x in split:
        total += x
        out *= comb(total, x)
    return out


def reciprocal(c: QSeries, q_trunc: Optional[Fraction] = None) -> QSeries:
    """1/c; точный моном обращается точно."""
    if c.is_exact() and len(c.terms) == 1:
        ((e, v),) = c.terms.items()
        return QSeries.monomial(-e, v.inverse())
    return c.invert(order=q_trunc)
