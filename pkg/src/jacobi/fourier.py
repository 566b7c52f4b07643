"""Разложения Фурье Σ c_r(q) ζ^r с r ∈ (½ℤ)ⁿ внутри окна [−R, R]ⁿ."""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import factorial, gcd
from typing import Mapping, Optional, Sequence, Union

from arith.cyclotomic import Scalar, cyc_root
from arith.qseries import QSeries
from core.exceptions import BadParam, TruncationUnderflow, WindowOverflow
from jacobi.jets import IndexMatrix, JetForm, add_index, min_trunc, product_q_trunc

Vector = tuple[Fraction, ...]
Divisor = tuple[int, ...]


def bilinear(index: IndexMatrix, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    """B_M(x, y) = xᵀ M y."""
    return sum(
        (Fraction(x[i]) * Fraction(index[i][j]) * Fraction(y[j]) for i in range(len(x)) for j in range(len(y))),
        Fraction(0),
    )


def _vector(values: Sequence) -> Vector:
    return tuple(Fraction(v) for v in values)


class FourierForm:
    """Коэффициенты вне окна считаются нулевыми по модулю q^{q_trunc}.

    poles: объявленные дивизоры (линейные формы по z); region: метка области разложения.
    """

    __slots__ = ('rank', 'coeffs', 'window', 'q_trunc', 'weight', 'index', 'region', 'poles')

    def __init__(
        self,
        rank: int,
        coeffs: Mapping[Sequence, Union[QSeries, Scalar]],
        window: Fraction,
        q_trunc: Optional[Fraction] = None,
        weight: Optional[Fraction] = None,
        index: Optional[IndexMatrix] = None,
        region: str = 'holomorphic',
        poles: Sequence[Divisor] = (),
    ):
        self.rank = rank
        self.window = Fraction(window)
        self.q_trunc = None if q_trunc is None else Fraction(q_trunc)
        clean: dict[Vector, QSeries] = {}
        for r, c in coeffs.items():
            r = _vector(r)
            if len(r) != rank:
                raise BadParam(f'exponent {r} does not match rank {rank}')
            if any((2 * x).denominator != 1 for x in r):
                raise BadParam(f'zeta exponents must lie in (1/2)Z, got {r}')
            c = c if isinstance(c, QSeries) else QSeries.constant(c)
            if self.q_trunc is not None:
                c = c.truncate(self.q_trunc)
            if c.is_zero():
                continue
            if any(abs(x) > self.window for x in r):
                raise WindowOverflow(f'zeta exponent {r} exits the window {self.window}')
            clean[r] = c
        self.coeffs = clean
        self.weight = weight
        self.index = index
        self.region = region
        self.poles = tuple(tuple(p) for p in poles)

    @classmethod
    def constant(
        cls, rank: int, value: Union[QSeries, Scalar] = 1, window: Fraction = Fraction(0), **meta
    ) -> FourierForm:
        q_trunc = value.trunc if isinstance(value, QSeries) else None
        return cls(rank, {(0,) * rank: value}, window, q_trunc, **meta)

    @property
    def q_denominator(self) -> int:
        """Общий знаменатель показателей q."""
        d = 1
        for c in self.coeffs.values():
            d = d * c.denom // gcd(d, c.denom)
        return d

    def _like(self, coeffs, window=None, q_trunc=None, **overrides) -> FourierForm:
        meta = {
            'weight': self.weight,
            'index': self.index,
            'region': self.region,
            'poles': self.poles,
        }
        meta.update(overrides)
        return FourierForm(
            self.rank,
            coeffs,
            self.window if window is None else window,
            self.q_trunc if q_trunc is None else q_trunc,
            **meta,
        )

    def __add__(self, other: FourierForm) -> FourierForm:
        if other.rank != self.rank:
            raise BadParam(f'rank mismatch {self.rank} vs {other.rank}')
        coeffs = dict(self.coeffs)
        for r, c in other.coeffs.items():
            coeffs[r] = coeffs[r] + c if r in coeffs else c
        return FourierForm(
            self.rank,
            coeffs,
            max(self.window, other.window),
            min_trunc(self.q_trunc, other.q_trunc),
            self.weight if self.weight == other.weight else None,
            self.index if self.index == other.index else None,
            self.region,
            tuple(dict.fromkeys(self.poles + other.poles)),
        )

    def __neg__(self) -> FourierForm:
        return self.scale(-1)

    def __sub__(self, other: FourierForm) -> FourierForm:
        return self + (-other)

    def scale(self, value: Union[QSeries, Scalar]) -> FourierForm:
        if isinstance(value, QSeries):
            q_trunc = product_q_trunc(self, _Wrap(value))
            return self._like({r: c * value for r, c in self.coeffs.items()}, q_trunc=q_trunc)
        return self._like({r: c * value for r, c in self.coeffs.items()})

    def __mul__(self, other: Union[FourierForm, QSeries, Scalar]) -> FourierForm:
        if not isinstance(other, FourierForm):
            return self.scale(other)
        q_trunc = product_q_trunc(self, other)
        coeffs: dict[Vector, QSeries] = {}
        for r1, c1 in self.coeffs.items():
            for r2, c2 in other.coeffs.items():
                r = tuple(a + b for a, b in zip(r1, r2))
                term = c1 * c2
                if q_trunc is not None:
                    term = term.truncate(q_trunc)
                coeffs[r] = coeffs[r] + term if r in coeffs else term
        weight = None if self.weight is None or other.weight is None else self.weight + other.weight
        return FourierForm(
            self.rank,
            coeffs,
            self.window + other.window,
            q_trunc,
            weight,
            add_index(self.index, other.index),
            self.region,
            self.poles + other.poles,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> FourierForm:
        if n < 0:
            raise BadParam('Fourier forms are not inverted; divide jets instead')
        result = FourierForm.constant(self.rank, 1)
        for _ in range(n):
            result = result * self
        return result

    def translate(self, lam: Sequence, mu: Sequence) -> FourierForm:
        """φ(z + λτ + μ): ζ^r q^s ↦ 𝒆(r·μ) q^{s + r·λ} ζ^r.

        Неизвестный остаток ζ^r·O(q^T) по всему окну теряет R·|λ| точности;
        для θ точный сдвиг даёт `kernels.theta_translated`.
        """
        lam, mu = _vector(lam), _vector(mu)
        coeffs = {}
        for r, c in self.coeffs.items():
            twist = cyc_root(sum((a * b for a, b in zip(r, mu)), Fraction(0)))
            coeffs[r] = c.shift(sum((a * b for a, b in zip(r, lam)), Fraction(0))) * twist
        q_trunc = self.q_trunc
        if q_trunc is not None:
            q_trunc = q_trunc - self.window * sum((abs(x) for x in lam), Fraction(0))
            lowest = min((c.valuation for c in coeffs.values() if not c.is_zero()), default=None)
            if lowest is not None and q_trunc <= lowest:
                needed = self.q_trunc + lowest - q_trunc
                raise TruncationUnderflow(
                    f'translation by lambda={lam} leaves no known coefficient below q^{q_trunc}; '
                    f'q_trunc must exceed {needed}'
                )
        return self._like(coeffs, q_trunc=q_trunc, region=f'{self.region}+translated')

    def jet(self, order: Sequence[int]) -> JetForm:
        """ζ^r ↦ Π exp(r_i w_i): коэффициент при w^ℓ равен Σ_r c_r Π r_i^{ℓ_i}/ℓ_i!."""
        coeffs = {}
        for ell in product(*(range(t) for t in order)):
            acc = QSeries.zero()
            for r, c in self.coeffs.items():
                weight = Fraction(1)
                for x, e in zip(r, ell):
                    weight *= x**e / factorial(e)
                if weight:
                    acc = acc + c * weight
            coeffs[ell] = acc
        return JetForm(self.rank, coeffs, tuple(order), q_trunc=self.q_trunc, index=self.index)

    def specialize(self, mu: Fraction, lam: Fraction = Fraction(0)) -> QSeries:
        """Ранг 1: значение при ζ = 𝒆(μ)q^λ."""
        if self.rank != 1:
            raise BadParam('specialization is defined for rank 1')
        return self.translate((lam,), (mu,)).constant_series()

    def constant_series(self) -> QSeries:
        """Сумма всех коэффициентов (значение при ζ = 1)."""
        acc = QSeries.zero(self.q_trunc)
        for c in self.coeffs.values():
            acc = acc + c
        return acc

    def coefficient(self, r: Sequence) -> QSeries:
        r = _vector(r)
        if any(abs(x) > self.window for x in r):
            raise WindowOverflow(f'zeta exponent {r} is outside the window {self.window}')
        return self.coeffs.get(r, QSeries.zero(self.q_trunc))

    def agrees_with(self, other: FourierForm, q_trunc: Optional[Fraction] = None) -> bool:
        bound = min_trunc(min_trunc(self.q_trunc, other.q_trunc), None if q_trunc is None else Fraction(q_trunc))
        for r in set(self.coeffs) | set(other.coeffs):
            mine = self.coeffs.get(r, QSeries.zero())
            theirs = other.coeffs.get(r, QSeries.zero())
            if not mine.agrees_with(theirs, bound):
                return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FourierForm):
            return NotImplemented
        return self.rank == other.rank and self.agrees_with(other)

    __hash__ = None

    def __repr__(self) -> str:
        return f'FourierForm(rank={self.rank}, terms={len(self.coeffs)}, window={self.window}, q_trunc={self.q_trunc})'


class _Wrap:
    """Ряд как форма с одним коэффициентом для правила усечения произведения."""

    def __init__(self, series: QSeries):
        self.coeffs = {(): series}
        self.q_trunc = series.trunc
