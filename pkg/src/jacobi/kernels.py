"""Ядра θ, Θ, Â, Ê_k, ĝ_k, ℘̂, 𝕖₂ в струйном и фурье-представлениях.

Все эллиптические переменные нормированы как w = 2πiz.
"""
import math
from fractions import Fraction
from functools import lru_cache
from math import comb, floor
from typing import Optional, Sequence

from arith.cyclotomic import cyc_root
from arith.numbers import ps_exp
from arith.qseries import QSeries
from core.exceptions import BadParam, NonOrthogonalPoles
from core.logger import logger as _logger
from jacobi.fourier import FourierForm
from jacobi.jets import JetForm, add_index, scalar_index
from quasimodular.eisenstein import e2, g_hat

logger = _logger(__name__)

HALF = Fraction(1, 2)
THETA_INDEX = ((HALF,),)


def _sign(nu: Fraction) -> int:
    """(−1)^{⌊ν⌋} как целое при любом знаке ν."""
    return 1 - 2 * (floor(nu) % 2)


def _nu_range(T: int) -> list[Fraction]:  # noqa: N803
    """ν ∈ ℤ + 1/2 с ν²/2 < T."""
    bound = math.isqrt(2 * T) + 1
    return [Fraction(2 * j + 1, 2) for j in range(-bound - 1, bound + 1) if Fraction(2 * j + 1, 2) ** 2 / 2 < T]


@lru_cache(maxsize=None)
def theta(T: int, margin: int = 2) -> FourierForm:  # noqa: N803
    """θ = Σ_{ν ∈ ℤ+1/2} (−1)^{⌊ν⌋} ζ^ν q^{ν²/2}."""
    if T <= 0:
        raise BadParam(f'truncation must be positive, got {T}')
    nus = _nu_range(T)
    coeffs = {(nu,): QSeries.monomial(nu * nu / 2, _sign(nu), T) for nu in nus}
    window = max(abs(nu) for nu in nus) + margin
    return FourierForm(1, coeffs, window, T, HALF, THETA_INDEX, 'entire')


@lru_cache(maxsize=None)
def theta_prime_zero(T: int) -> QSeries:  # noqa: N803
    """θ′(0) в единицах w: Σ (−1)^{⌊ν⌋} ν q^{ν²/2} = q^{1/8}Π(1−qⁿ)³."""
    total = QSeries.zero(T)
    for nu in _nu_range(T):
        total = total + QSeries.monomial(nu * nu / 2, nu * _sign(nu), T)
    return total


def _linear_factor(sign: int, n: int, T: int) -> FourierForm:  # noqa: N803
    """1 − ζ^{sign} qⁿ."""
    return FourierForm(1, {(0,): 1, (sign,): QSeries.monomial(n, -1)}, 1, T)


def triple_product_tail(T: int) -> FourierForm:  # noqa: N803
    """Π_{n≥1}(1−qⁿ)(1−ζqⁿ)(1−ζ^{−1}qⁿ) по модулю q^T."""
    out = FourierForm.constant(1, QSeries.constant(1, T))
    euler = QSeries.constant(1, T)
    for n in range(1, T):
        euler = euler * QSeries({0: 1, n: -1}, T)
        out = out * _linear_factor(1, n, T) * _linear_factor(-1, n, T)
    return out.scale(euler)


@lru_cache(maxsize=None)
def theta_triple_product(T: int) -> FourierForm:  # noqa: N803
    """θ = q^{1/8}(ζ^{1/2} − ζ^{−1/2})Π(1−qⁿ)(1−ζqⁿ)(1−ζ^{−1}qⁿ)."""
    head = FourierForm(
        1, {(HALF,): QSeries.monomial(Fraction(1, 8)), (-HALF,): QSeries.monomial(Fraction(1, 8), -1)}, HALF
    )
    form = head * triple_product_tail(T)
    return FourierForm(1, form.coeffs, form.window, T, HALF, THETA_INDEX, 'entire')


def Theta_value(a: Fraction, T: int) -> QSeries:  # noqa: N802, N803
    """Θ(τ, a) = (𝒆(a/2) − 𝒆(−a/2))Π(1 − 𝒆(a)qⁿ)(1 − 𝒆(−a)qⁿ)/(1 − qⁿ)²."""
    a = Fraction(a)
    value = QSeries.constant(cyc_root(a / 2) - cyc_root(-a / 2), T)
    for n in range(1, T):
        value = value * QSeries({0: 1, n: -cyc_root(a)}, T) * QSeries({0: 1, n: -cyc_root(-a)}, T)
        value = value * (QSeries({0: 1, n: -1}, T) ** 2).invert(T)
    return value


@lru_cache(maxsize=None)
def Theta_jet(T: int, order: int) -> JetForm:  # noqa: N802, N803
    """Θ̂(w) = w·exp(−Σ_m ĝ_{2m} w^{2m}/(2m)), известная при степенях w < order."""
    if T <= 0 or order <= 0:
        raise BadParam(f'truncations must be positive, got T={T}, order={order}')
    n = max(order - 1, 1)
    log = [QSeries.zero()] * n
    for m in range(1, n):
        if 2 * m < n:
            log[2 * m] = g_hat(2 * m, T) * Fraction(-1, 2 * m)
    series = ps_exp(log, n, QSeries.zero(), QSeries.constant(1))
    return JetForm.univariate({j + 1: c for j, c in enumerate(series)}, order, 0, T, weight=-1, index=THETA_INDEX)


def inverse_Theta_jet(T: int, order: int) -> JetForm:  # noqa: N802, N803
    """1/Θ̂ с полюсом первого порядка, степени w < order."""
    return Theta_jet(T, order + 2).invert()


def Theta_derivative_at_zero(k: int, T: int) -> QSeries:  # noqa: N802, N803
    """Θ^{(k)}(0) = k!·[w^k]Θ̂."""
    return Theta_jet(T, k + 1).coefficient((k,)) * math.factorial(k)


@lru_cache(maxsize=None)
def theta_translated(lam: Fraction, mu: Fraction, T: int) -> FourierForm:  # noqa: N803
    """θ(z + λτ + μ) по модулю q^T без потери точности.

    Слагаемое ν переходит в (−1)^{⌊ν⌋}𝒆(νμ) ζ^ν q^{ν²/2 + νλ}; берутся все ν с ν²/2 + νλ < T.
    """
    if T <= 0:
        raise BadParam(f'truncation must be positive, got {T}')
    lam, mu = Fraction(lam), Fraction(mu)
    radius = math.isqrt(math.ceil(2 * T + lam * lam)) + 1
    coeffs = {}
    for j in range(floor(-lam) - radius - 1, math.ceil(-lam) + radius + 1):
        nu = Fraction(2 * j + 1, 2)
        exponent = nu * nu / 2 + nu * lam
        if exponent < T:
            coeffs[(nu,)] = QSeries.monomial(exponent, cyc_root(nu * mu) * _sign(nu), T)
    window = max(abs(r[0]) for r in coeffs)
    return FourierForm(1, coeffs, window, T, HALF, THETA_INDEX, 'entire+translated')


def Theta_translated_jet(lam: Fraction, mu: Fraction, T: int, order: int) -> JetForm:  # noqa: N802, N803
    """Θ(w + λτ + μ) = θ(z + λτ + μ)/θ′(0) как струя по w."""
    moved = theta_translated(Fraction(lam), Fraction(mu), T)
    jet = moved.jet((order,))
    return jet.scale(theta_prime_zero(T).invert())


def is_lattice_point(lam: Fraction, mu: Fraction) -> bool:
    return Fraction(lam).denominator == 1 and Fraction(mu).denominator == 1


def inverse_Theta_translated_jet(lam: Fraction, mu: Fraction, T: int, order: int) -> JetForm:  # noqa: N802, N803
    """1/Θ(w + λτ + μ): простой полюс в точках решётки, иначе степенной ряд."""
    if not lam and not mu:
        return inverse_Theta_jet(T, order)
    extra = 2 if is_lattice_point(lam, mu) else 0
    return Theta_translated_jet(lam, mu, T, order + extra).invert()


def A_jet(T: int, order: int) -> JetForm:  # noqa: N802, N803
    """Â(w) = 1/w − Σ_m ĝ_{2m} w^{2m−1}."""
    coeffs = {-1: QSeries.constant(1)}
    coeffs.update({2 * m - 1: -g_hat(2 * m, T) for m in range(1, order // 2 + 1) if 2 * m - 1 < order})
    return JetForm.univariate(coeffs, order, 1, T, weight=1, index=((Fraction(0),),))


def E_jet(k: int, T: int, order: int) -> JetForm:  # noqa: N802, N803
    """Ê_k(w) = 1/w^k + (−1)^k Σ_m C(2m−1, k−1) ĝ_{2m} w^{2m−k}."""
    if k < 1:
        raise BadParam(f'E_k needs k >= 1, got {k}')
    coeffs = {-k: QSeries.constant(1)}
    m = max(1, (k + 1) // 2)
    while 2 * m - k < order:
        coeffs[2 * m - k] = g_hat(2 * m, T) * (comb(2 * m - 1, k - 1) * (-1) ** k)
        m += 1
    return JetForm.univariate(coeffs, order, k, T, weight=k, index=((Fraction(0),),))


def ek_hat(k: int, T: int) -> QSeries:  # noqa: N803
    """ĝ_k = e_k/(2πi)^k для чётного k ≥ 2."""
    return g_hat(k, T)


def wp_jet(T: int, order: int) -> JetForm:  # noqa: N803
    """℘̂ = Ê₂ − ĝ₂."""
    return E_jet(2, T, order) - g_hat(2, T)


def e2_quasi(T: int) -> QSeries:  # noqa: N803
    return e2(T)


def _support_radius(form: FourierForm) -> Fraction:
    """Числители, очищенные степенями θ, целые: носитель по ζ конечен по модулю q^T."""
    return max((abs(r[0]) for r in form.coeffs), default=Fraction(0))


def A_fourier(T: int) -> FourierForm:  # noqa: N802, N803
    """Числитель θ·Â: q^{1/8}·½(ζ^{1/2}+ζ^{−1/2})·Π(…) − θ·Σ(ζ^d − ζ^{−d})q^{nd}."""
    head = FourierForm(
        1, {(HALF,): QSeries.monomial(Fraction(1, 8), HALF), (-HALF,): QSeries.monomial(Fraction(1, 8), HALF)}, HALF
    )
    principal = head * triple_product_tail(T)
    tail = {}
    for n in range(1, T):
        for d in range(1, (T - 1) // n + 1):
            tail[(d,)] = tail.get((d,), QSeries.zero()) + QSeries.monomial(n * d)
            tail[(-d,)] = tail.get((-d,), QSeries.zero()) - QSeries.monomial(n * d)
    series = FourierForm(1, tail, T, T)
    numerator = principal - theta(T, margin=0) * series
    radius = _support_radius(numerator)
    return FourierForm(1, numerator.coeffs, radius, T, Fraction(3, 2), THETA_INDEX, 'entire', [(1,)])


def E2_fourier(T: int) -> FourierForm:  # noqa: N802, N803
    """Числитель θ²·Ê₂, где Ê₂ = Σ_{m∈ℤ} yq^m/(1 − yq^m)²."""
    tail_product = triple_product_tail(T)
    principal = (tail_product * tail_product).scale(QSeries.monomial(Fraction(1, 4)))
    tail = {}
    for m in range(1, T):
        for r in range(1, (T - 1) // m + 1):
            tail[(r,)] = tail.get((r,), QSeries.zero()) + QSeries.monomial(m * r, r)
            tail[(-r,)] = tail.get((-r,), QSeries.zero()) + QSeries.monomial(m * r, r)
    series = FourierForm(1, tail, T, T)
    th = theta(T, margin=0)
    numerator = principal + th * th * series
    return FourierForm(
        1, numerator.coeffs, _support_radius(numerator), T, Fraction(3), scalar_index(1, 1), 'entire', [(1,), (1,)]
    )


def pole_counts(form: FourierForm) -> list[int]:
    """Кратности объявленных дивизоров по координатным гиперплоскостям."""
    counts = [0] * form.rank
    for divisor in form.poles:
        support = [i for i, x in enumerate(divisor) if x]
        if len(support) != 1 or abs(divisor[support[0]]) != 1:
            raise NonOrthogonalPoles(f'divisor {divisor} is not a coordinate hyperplane')
        counts[support[0]] += 1
    return counts


def fourier_to_jet(form: FourierForm, pole_spec: Optional[Sequence[int]], order: int) -> JetForm:
    """Струя формы, заданной числителем θ(z_1)^{p_1}…θ(z_n)^{p_n}·φ в фурье-виде."""
    pole_spec = tuple(pole_spec) if pole_spec is not None else (0,) * form.rank
    counts = pole_counts(form)
    if any(c > p for c, p in zip(counts, pole_spec)):
        raise NonOrthogonalPoles(f'pole spec {pole_spec} cannot clear divisors {form.poles}')
    T = int(form.q_trunc) if form.q_trunc is not None else None  # noqa: N806
    numerator = form.jet(tuple(order + p for p in pole_spec))
    result = numerator
    index = form.index
    for i, p in enumerate(pole_spec):
        if not p:
            continue
        if T is None:
            raise BadParam('clearing theta powers needs a truncated Fourier form')
        inverse = inverse_Theta_jet(T, order + p - 1) ** p
        inverse = inverse.scale(theta_prime_zero(T).invert() ** p)
        result = result * inverse.embed(form.rank, (i,))
        if index is not None:
            shift = tuple(
                tuple(-HALF * p if (a == i and b == i) else Fraction(0) for b in range(form.rank))
                for a in range(form.rank)
            )
            index = add_index(index, shift)
    weight = None if form.weight is None else form.weight - HALF * sum(pole_spec)
    return JetForm(
        form.rank,
        result.coeffs,
        (order,) * form.rank,
        tuple(max(p, 0) for p in pole_spec),
        result.q_trunc,
        weight=weight,
        index=index,
    )


KERNELS = ('A', 'Ek', 'ek_hat', 'wp', 'e2_quasi')


Kernel = tuple[Optional[JetForm], Optional[FourierForm], Optional[QSeries]]


def kernel(which: str, T: int, order: int, k: int = None) -> Kernel:  # noqa: N803
    """(струя, числитель Фурье, q-ряд) выбранного ядра."""
    if which == 'A':
        return A_jet(T, order), A_fourier(T), None
    if which == 'Ek':
        if k is None:
            raise BadParam('Ek needs k')
        return E_jet(k, T, order), E2_fourier(T) if k == 2 else None, None
    if which == 'ek_hat':
        if k is None or k < 2 or k % 2:
            raise BadParam(f'ek_hat needs even k >= 2, got {k}')
        return None, None, ek_hat(k, T)
    if which == 'wp':
        return wp_jet(T, order), None, None
    if which == 'e2_quasi':
        return None, None, e2_quasi(T)
    raise BadParam(f'unknown kernel {which!r}; expected one of {KERNELS}')
