"""n-точечные функции: Блоха–Окунькова F_n, моментное ядро 𝒮 и двойные моменты G_n."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Optional, Sequence

from arith.cyclotomic import cyc_root
from arith.qseries import QSeries
from brackets.qbracket import qbrackets
from brackets.ubracket import odot_all
from core.exceptions import BadParam, JetOrderExceeded, RecursionRankUnsupported
from core.logger import logger as _logger
from jacobi.context import FourierProvider, JetProvider, QJContext, SumProvider
from jacobi.fourier import FourierForm
from jacobi.iterated import IteratedLaurent, required_window
from jacobi.jets import JetForm, scalar_index, sum_index
from jacobi.kernels import (
    E2_fourier,
    E_jet,
    Theta_derivative_at_zero,
    Theta_jet,
    Theta_translated_jet,
    inverse_Theta_translated_jet,
    theta_prime_zero,
)
from jacobi.slash import Shift, as_shift
from partitions import families
from partitions.families import ONE_FUNCTION, PartitionFunction

logger = _logger(__name__)

MAX_RECURSION_RANK = 3
HALF = Fraction(1, 2)


# --- Блох–Окуньков: рекуррентное вычисление в кольце итерированных рядов Лорана


def _subset_shift(X: Shift, subset: Sequence[int]) -> tuple[Fraction, Fraction]:  # noqa: N803
    lam, mu = X
    return sum((lam[i] for i in subset), Fraction(0)), sum((mu[i] for i in subset), Fraction(0))


class _Recursion:
    """V_m(w_σ + X) для одной перестановки σ; элементарные множители кешируются между перестановками."""

    def __init__(self, n: int, X: Shift, T: int, window: Sequence[int]):  # noqa: N803
        self.n = n
        self.X = X
        self.T = T
        self.window = tuple(window)
        self.top = self.window[0] + 2 * n + 2
        self._derivatives: dict = {}
        self._inverses: dict = {}

    def theta_derivative(self, j: int, subset: tuple[int, ...]) -> IteratedLaurent:
        """Θ^{(j)}(Σ_{i∈subset} w_i + сдвиг)."""
        key = (j, frozenset(subset))
        if key in self._derivatives:
            return self._derivatives[key]
        if not subset:
            value = IteratedLaurent.one(self.n).scale(Theta_derivative_at_zero(j, self.T))
        else:
            lam, mu = _subset_shift(self.X, subset)
            if lam or mu:
                jet = Theta_translated_jet(lam, mu, self.T, self.top + j)
            else:
                jet = Theta_jet(self.T, self.top + j)
            for _ in range(j):
                jet = jet.D_z(0)
            value = IteratedLaurent.from_univariate(jet, subset, self.n, self.window)
        self._derivatives[key] = value
        return value

    def inverse_theta(self, subset: tuple[int, ...]) -> IteratedLaurent:
        key = frozenset(subset)
        if key not in self._inverses:
            lam, mu = _subset_shift(self.X, subset)
            jet = inverse_Theta_translated_jet(lam, mu, self.T, self.top)
            self._inverses[key] = IteratedLaurent.from_univariate(jet, subset, self.n, self.window)
        return self._inverses[key]

    def run(self, sigma: Sequence[int]) -> IteratedLaurent:
        """V_n(w_σ + X) из Σ_m ((−1)^{n−m}/(n−m)!)·Θ^{(n−m)}(s_m)·V_m = 0."""
        values = [IteratedLaurent.one(self.n)]
        for m in range(1, self.n + 1):
            acc: Optional[IteratedLaurent] = None
            for k in range(m):
                factor = Fraction((-1) ** (m - k), math.factorial(m - k))
                term = self.theta_derivative(m - k, tuple(sigma[:k])) * values[k] * factor
                acc = term if acc is None else acc + term
            values.append(-(self.inverse_theta(tuple(sigma[:m])) * acc))
        return values[-1]


@lru_cache(maxsize=None)
def bo_recursion_jet(n: int, X: Shift, T: int, order: int) -> JetForm:  # noqa: N803
    """Струя F_n(w + λτ + μ) = Σ_σ V_n(w_σ + X) с показателями в [−1, order)."""
    if n < 1:
        raise BadParam(f'n-point functions need n >= 1, got {n}')
    if n > MAX_RECURSION_RANK:
        raise RecursionRankUnsupported(f'the recursion path supports n <= {MAX_RECURSION_RANK}, got {n}')
    box = (order,) * n
    slack = n
    for _ in range(3):
        window = tuple(w + slack for w in required_window(n, order))
        recursion = _Recursion(n, X, T, window)
        total: Optional[IteratedLaurent] = None
        for sigma in permutations(range(n)):
            term = recursion.run(sigma)
            total = term if total is None else total + term
        if total.covers(box):
            logger.debug('[+] F_%s at %s: %s monomials, window %s', n, X, len(total.coeffs), window)
            return total.to_jet(order, weight=n, index=sum_index(n, -HALF))
        slack *= 2
    raise JetOrderExceeded(f'iterated window never covered the box {box} for F_{n}')


def bo_bracket_jet(shifts: Sequence[Fraction], T: int, order: int) -> JetForm:  # noqa: N803
    """Струя со стороны скобок: коэффициент при w^a равен ⟨Π Q_{a_i+1}(·, a_i-сдвиг)⟩_q."""
    n = len(shifts)
    keys = list(product(range(-1, order), repeat=n))
    functions = []
    for key in keys:
        f: PartitionFunction = ONE_FUNCTION
        for e, a in zip(key, shifts):
            f = f * families.Q(e + 1, a if a else None)
        functions.append(f)
    values = qbrackets(functions, T - 1)
    return JetForm(n, dict(zip(keys, values)), (order,) * n, (1,) * n, T)


class BOProvider:
    """Источник сдвигов F_n через рекурсию."""

    def __init__(self, n: int, T: int):  # noqa: N803
        self.rank = n
        self.T = T

    def translated_jet(self, X: Shift, order: int) -> JetForm:  # noqa: N803
        return bo_recursion_jet(self.rank, as_shift(*X), self.T, order)


def bo_context(n: int, T: int) -> QJContext:  # noqa: N803
    """F_n: вес n, индекс −½(z_1+…+z_n)², δ_τF_n = 0, δ_{z_i}F_n = Σ_j F_{n−1}(z_i+z_j, …)."""
    family = {(0, (0,) * n): BOProvider(n, T)}
    complete = n <= 2
    if n == 2:
        inner = BOProvider(1, T)
        family[(0, (1, 0))] = SumProvider(2, (0, 1), inner)
        family[(0, (0, 1))] = SumProvider(2, (0, 1), inner)
    return QJContext(n, n, sum_index(n, -HALF), family, (1,) * n, complete, f'F_{n}')


def f1_context(T: int) -> QJContext:  # noqa: N803
    """1/Θ = θ′(0)/θ через разложение Фурье числителя."""
    numerator = FourierForm.constant(1, theta_prime_zero(T), index=((Fraction(0),),))
    provider = FourierProvider(numerator, (1,))
    return QJContext(1, 1, ((-HALF,),), {(0, (0,)): provider}, (1,), True, 'F_1')


# --- моментное ядро 𝒮 и двойные моменты 𝒯


def set_partitions(items: Sequence[int]) -> Iterator[list[tuple[int, ...]]]:
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for tail in set_partitions(rest):
        yield [(first,)] + tail
        for i, block in enumerate(tail):
            yield tail[:i] + [(first,) + block] + tail[i + 1 :]


def _e2_regular(T: int, order: int) -> JetForm:  # noqa: N803
    """Ê₂ без главной части 1/w²."""
    full = E_jet(2, T, order)
    return JetForm.univariate({e: c for (e,), c in full.coeffs.items() if e >= 0}, order, 0, T)


def s_block_jet(block: Sequence[int], rank: int, T: int, order: int) -> JetForm:  # noqa: N803
    """2^{−(|A|+1)}·Σ_{s∈{±1}^A} D_τ^{|A|−1}Ê₂(s·w_A)."""
    size = len(block)
    if size == 1:
        return E_jet(2, T, order).scale(HALF).embed(rank, block, math.inf)
    base = _e2_regular(T, size * (order - 1) + 1)
    for _ in range(size - 1):
        base = base.D_tau()
    total: Optional[JetForm] = None
    for signs in product((1, -1), repeat=size):
        term = base.along_sum(rank, dict(zip(block, signs)), order)
        total = term if total is None else total + term
    return total.scale(Fraction(1, 2 ** (size + 1)))


def s_kernel_jet(n: int, T: int, order: int) -> JetForm:  # noqa: N803
    """⟨𝒮(w_1)⋯𝒮(w_n)⟩ как сумма по разбиениям множества {1,…,n} на блоки."""
    total: Optional[JetForm] = None
    for blocks in set_partitions(range(n)):
        term = JetForm.constant(n, QSeries.constant(1, T))
        for block in blocks:
            term = term * s_block_jet(block, n, T, order)
        total = term if total is None else total + term
    return total.truncated((order,) * n)


def s_bracket_jet(n: int, T: int, order: int) -> JetForm:  # noqa: N803
    """𝒮(w) = 1/(2w²) + Σ_{k чётное} S_k w^{k−2}/(k−2)!, коэффициенты равны скобкам произведений."""
    keys = [key for key in product(range(-2, order), repeat=n) if all(e % 2 == 0 for e in key)]
    functions, scales = [], []
    for key in keys:
        f: PartitionFunction = ONE_FUNCTION
        scale = Fraction(1)
        for e in key:
            if e == -2:
                scale *= HALF
            else:
                f = f * families.S(e + 2)
                scale /= math.factorial(e)
        functions.append(f)
        scales.append(scale)
    values = qbrackets(functions, T - 1)
    coeffs = {key: value * scale for key, value, scale in zip(keys, values, scales)}
    return JetForm(n, coeffs, (order,) * n, (2,) * n, T)


def s_context(n: int, T: int) -> QJContext:  # noqa: N803
    """Ядро 𝒮 веса 2n и индекса 0; для n = 1 это ½Ê₂ с δ_τ(½Ê₂) = −½."""
    if n == 1:
        provider = FourierProvider(E2_fourier(T).scale(HALF), (2,))
        constant = JetProvider(1, lambda X, order: JetForm.constant(1, -HALF, order))  # noqa: N803
        return QJContext(1, 2, scalar_index(1, 0), {(0, (0,)): provider, (1, (0,)): constant}, (2,), True, 'S_1')

    def build(X: Shift, order: int) -> JetForm:  # noqa: N803
        if any(X[0]) or any(X[1]):
            raise BadParam('the moment kernel for n >= 2 is available at X = 0 only')
        return s_kernel_jet(n, T, order)

    return QJContext(n, 2 * n, scalar_index(n, 0), {(0, (0,) * n): JetProvider(n, build)}, (2,) * n, False, f'S_{n}')


def g1_jet(X: Shift, T: int, order: int) -> JetForm:  # noqa: N803
    """G_1(z, w) = −½Θ(z+w)/(Θ(z)Θ(w)) в точке (z, w) + X."""
    (lz, lw), (mz, mw) = X
    top = 2 * order + 1
    if lz + lw or mz + mw:
        numerator = Theta_translated_jet(lz + lw, mz + mw, T, top)
    else:
        numerator = Theta_jet(T, top)
    total = numerator.along_sum(2, {0: 1, 1: 1}, order + 1)
    inv_z = inverse_Theta_translated_jet(lz, mz, T, order + 1).embed(2, (0,))
    inv_w = inverse_Theta_translated_jet(lw, mw, T, order + 1).embed(2, (1,))
    jet = (total * inv_z * inv_w).scale(-HALF).truncated((order, order))
    index = ((Fraction(0), HALF), (HALF, Fraction(0)))
    return JetForm(2, jet.coeffs, jet.trunc, jet.pole_orders, jet.q_trunc, weight=1, index=index)


def t_kernel_jet(n: int, X: Shift, T: int, order: int) -> JetForm:  # noqa: N803
    """G_n = Π_i G_1(z_i, w_i) в порядке переменных (z_1, w_1, …, z_n, w_n)."""
    lam, mu = X
    result = JetForm.constant(2 * n, QSeries.constant(1, T))
    for i in range(n):
        pair = ((lam[2 * i], lam[2 * i + 1]), (mu[2 * i], mu[2 * i + 1]))
        result = result * g1_jet(pair, T, order).embed(2 * n, (2 * i, 2 * i + 1))
    return result.truncated((order,) * (2 * n))


def double_moment_series_coefficient(a: int, b: int) -> tuple[Optional[PartitionFunction], Fraction]:
    """Коэффициент 𝒯(z,w) при z^a w^b: (функция, множитель)."""
    if (a, b) in ((-1, 0), (0, -1)):
        return None, -HALF
    if a < 0 or b < 0 or (a + b) % 2 == 0:
        return None, Fraction(0)
    return families.T(a, b + 1), Fraction(1, math.factorial(a) * math.factorial(b))


def t_bracket_jet(n: int, T: int, order: int) -> JetForm:  # noqa: N803
    """⟨𝒯(z_1,w_1)⊙⋯⊙𝒯(z_n,w_n)⟩_q через u-скобку."""
    size = T - 1
    keys, functions, scales = [], [], []
    for key in product(range(-1, order), repeat=2 * n):
        factors, scale = [], Fraction(1)
        for i in range(n):
            f, c = double_moment_series_coefficient(key[2 * i], key[2 * i + 1])
            scale *= c
            if f is not None:
                factors.append(f)
        if not scale:
            continue
        keys.append(key)
        functions.append(odot_all(factors, size) if factors else ONE_FUNCTION)
        scales.append(scale)
    values = qbrackets(functions, size)
    coeffs = {key: value * scale for key, value, scale in zip(keys, values, scales)}
    return JetForm(2 * n, coeffs, (order,) * (2 * n), (1,) * (2 * n), T)


def t_context(n: int, T: int) -> QJContext:  # noqa: N803
    """G_n: якобиева форма веса n с индексом Σ z_i w_i."""
    rank = 2 * n
    index = tuple(
        tuple(HALF if (i // 2 == j // 2 and i != j) else Fraction(0) for j in range(rank)) for i in range(rank)
    )
    provider = JetProvider(rank, lambda X, order: t_kernel_jet(n, X, T, order))  # noqa: N803
    return QJContext(rank, n, index, {(0, (0,) * rank): provider}, (1,) * rank, True, f'G_{n}')


def n_point(which: str, n: int, T: int) -> QJContext:  # noqa: N803
    """Контекст n-точечной функции: which ∈ {BO, S, T}."""
    if which == 'BO':
        return f1_context(T) if n == 1 else bo_context(n, T)
    if which == 'S':
        return s_context(n, T)
    if which == 'T':
        return t_context(n, T)
    raise BadParam(f'unknown n-point family {which!r}; expected BO, S or T')


def convention_factor(shifts: Sequence[Fraction]):
    """g^{(0,A)}_ℓ(F_n) = 𝒆(Σa_i/2)·⟨Π Q_{ℓ_i+1}(·,a_i)⟩_q: множители ρ и слэша при λ = 0 сокращаются."""
    total = sum((Fraction(a) for a in shifts), Fraction(0))
    return cyc_root(total / 2)
