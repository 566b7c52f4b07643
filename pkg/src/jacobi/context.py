"""Квази-якобиевы формы с семейством φ_{i,j}, двойной слэш и «коэффициенты Тейлора» g^X_ℓ."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Optional, Protocol, Sequence

from arith.qseries import QSeries
from core.exceptions import BadParam, NonOrthogonalPoles
from core.logger import logger as _logger
from jacobi.fourier import FourierForm
from jacobi.jets import IndexMatrix, JetForm
from jacobi.kernels import inverse_Theta_translated_jet, theta_prime_zero
from jacobi.slash import Shift, as_shift, rho, slash_prefactor_jet

logger = _logger(__name__)

Key = tuple[int, tuple[int, ...]]


class FormProvider(Protocol):
    """Источник струй φ(z + λτ + μ) по w."""

    rank: int

    def translated_jet(self, X: Shift, order: int) -> JetForm:  # noqa: N803
        ...


@dataclass
class FourierProvider:
    """φ = N/Π θ(z_i)^{p_i}, где N задан разложением Фурье."""

    numerator: FourierForm
    pole_spec: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.numerator.rank

    def translated_jet(self, X: Shift, order: int) -> JetForm:  # noqa: N803
        lam, mu = X
        top = max(self.pole_spec, default=0)
        result = self.numerator.translate(lam, mu).jet((order + top,) * self.rank)
        T = int(self.numerator.q_trunc)  # noqa: N806
        for i, p in enumerate(self.pole_spec):
            if not p:
                continue
            inverse = inverse_Theta_translated_jet(lam[i], mu[i], T, order + p + 1) ** p
            inverse = inverse.scale(theta_prime_zero(T).invert() ** p)
            result = result * inverse.embed(self.rank, (i,))
        return result.truncated((order,) * self.rank)


@dataclass
class JetProvider:
    """φ задана функцией сдвиг ↦ струя."""

    rank: int
    build: Callable[[Shift, int], JetForm]

    def translated_jet(self, X: Shift, order: int) -> JetForm:  # noqa: N803
        return self.build(X, order)


@dataclass
class SumProvider:
    """f(w_{i_1} + … + w_{i_k}) для ранга-1 источника f без полюса в точке сдвига."""

    rank: int
    positions: tuple[int, ...]
    inner: FormProvider

    def translated_jet(self, X: Shift, order: int) -> JetForm:  # noqa: N803
        lam, mu = X
        total = (
            (sum((lam[i] for i in self.positions), Fraction(0)),),
            (sum((mu[i] for i in self.positions), Fraction(0)),),
        )
        jet = self.inner.translated_jet(total, len(self.positions) * (order - 1) + 1)
        if jet.pole_orders[0]:
            raise NonOrthogonalPoles(f'pole along the sum of variables {self.positions}')
        return jet.along_sum(self.rank, {i: 1 for i in self.positions}, order)


@dataclass
class QJContext:
    """Семейство φ_{i,j}: ключ (i, j) задаёт степени δ_τ и δ_z; φ = family[(0, 0…0)]."""

    rank: int
    weight: int
    index: IndexMatrix
    family: dict[Key, FormProvider]
    pole_orders: tuple[int, ...] = ()
    family_complete: bool = True
    name: str = ''
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.base_key not in self.family:
            raise BadParam('the family must contain phi_{0,0}')

    @property
    def base_key(self) -> Key:
        return 0, (0,) * self.rank

    @property
    def base(self) -> FormProvider:
        return self.family[self.base_key]

    def entry(self, i: int, j: Sequence[int]) -> Optional[FormProvider]:
        return self.family.get((i, tuple(j)))


def _binom_vector(top: Sequence[int], bottom: Sequence[int]) -> int:
    out = 1
    for t, b in zip(top, bottom):
        out *= math.comb(t, b)
    return out


def _monomial_value(values: Sequence[Fraction], exps: Sequence[int]) -> Fraction:
    out = Fraction(1)
    for v, e in zip(values, exps):
        out *= Fraction(v) ** e
    return out


def slash_jet(provider: FormProvider, X: Shift, index: IndexMatrix, order: int, poles: int) -> JetForm:  # noqa: N803
    """Струя φ|X = 𝒆(B(λ+μ,λ+μ))·q^{B(λ,λ)}·exp(2B(λ,w))·φ(w + λτ + μ)."""
    moved = provider.translated_jet(X, order)
    prefactor = slash_prefactor_jet(X, index, (order + poles,) * provider.rank)
    return (moved * prefactor).truncated((order,) * provider.rank)


def double_slash(ctx: QJContext, X: Shift, order: int, key: Key = None) -> JetForm:  # noqa: N803
    """φ_{i,j}‖X = ρ(X)⁻¹·Σ_{j′} C(j+j′, j)·(φ_{i,j+j′}|X)·λ^{j′}."""
    X = as_shift(*X)  # noqa: N806
    lam, mu = X
    i, j = key if key is not None else ctx.base_key
    if not ctx.family_complete and any(lam):
        raise BadParam(f'{ctx.name or "phi"} carries no delta_z data for a shift with lambda = {lam}')
    poles = max(ctx.pole_orders, default=1)
    total: Optional[JetForm] = None
    for (i2, j2), provider in ctx.family.items():
        if i2 != i or any(b < a for a, b in zip(j, j2)):
            continue
        extra = tuple(b - a for a, b in zip(j, j2))
        weight = _monomial_value(lam, extra)
        if not weight:
            continue
        term = slash_jet(provider, X, ctx.index, order, poles).scale(weight * _binom_vector(j2, j))
        total = term if total is None else total + term
    if total is None:
        raise BadParam(f'family has no entry phi_{{{i},{j}}}')
    logger.debug('[+] double slash of %s at %s', ctx.name or 'phi', X)
    return total.scale(rho(X, ctx.index).inverse())


def bilinear_jet(index: IndexMatrix) -> JetForm:
    """B_M(w, w) как многочлен."""
    n = len(index)
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for a in range(n):
        for b in range(n):
            key = [0] * n
            key[a] += 1
            key[b] += 1
            key = tuple(key)
            coeffs[key] = coeffs.get(key, Fraction(0)) + Fraction(index[a][b])
    return JetForm(n, coeffs, (math.inf,) * n)


def g_taylor(ctx: QJContext, X: Shift, ell: Sequence[int]) -> QSeries:  # noqa: N803
    """g^X_ℓ(φ): коэффициент при w^ℓ в φ‖X."""
    ell = tuple(ell)
    if len(ell) != ctx.rank:
        raise BadParam(f'exponent {ell} does not match rank {ctx.rank}')
    return double_slash(ctx, X, max(ell) + 1).coefficient(ell)


def g_rs(ctx: QJContext, X: Shift, ell: Sequence[int], r: int, s: int) -> QSeries:  # noqa: N803
    """g^{X,r}_{ℓ,s} = [w^ℓ] B(w,w)^r Σ_{i+|j|=s} (φ_{i,j}‖X)·w^j."""
    ell = tuple(ell)
    if r < 0 or s < 0:
        raise BadParam(f'r and s must be non-negative, got r={r}, s={s}')
    order = max(ell) + 1
    total: Optional[JetForm] = None
    for i, j in ctx.family:
        if i + sum(j) != s:
            continue
        term = double_slash(ctx, X, order, (i, j)) * JetForm(ctx.rank, {j: 1}, (math.inf,) * ctx.rank)
        total = term if total is None else total + term
    if total is None:
        return QSeries.zero()
    if r:
        total = total * (bilinear_jet(ctx.index) ** r)
    return total.coefficient(ell)


def delta_tau_power(ctx: QJContext, X: Shift, ell: Sequence[int], r: int) -> QSeries:  # noqa: N803
    """δ_τ^r g_ℓ = Σ_s r!/(r−s)!·g^{r−s}_{ℓ,s}."""
    total = QSeries.zero()
    for s in range(r + 1):
        factor = math.factorial(r) // math.factorial(r - s)
        total = total + g_rs(ctx, X, ell, r - s, s) * factor
    return total


def shifts_grid(rank: int, values: Sequence[Fraction]) -> list[Shift]:
    """Все X = (λ, μ) с координатами из values."""
    out = []
    for lam in product(values, repeat=rank):
        for mu in product(values, repeat=rank):
            out.append(as_shift(lam, mu))
    return out
