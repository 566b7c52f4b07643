"""Ряды Эйзенштейна 𝔾_k = −B_k/(2k) + Σ σ_{k−1}(n) q^n и их нормировки."""
from fractions import Fraction
from functools import lru_cache
from math import factorial

from sympy import divisor_sigma

from arith.numbers import bernoulli
from arith.qseries import QSeries
from core.exceptions import BadParam


@lru_cache(maxsize=None)
def G(k: int, order: int) -> QSeries:  # noqa: N802
    """𝔾_k по модулю q^order (k ≥ 2 чётное)."""
    if k < 2 or k % 2:
        raise BadParam(f'G_k needs even k >= 2, got {k}')
    terms = {0: -bernoulli(k) / (2 * k)}
    terms.update({n: int(divisor_sigma(n, k - 1)) for n in range(1, order)})
    return QSeries(terms, order)


def e2(order: int) -> QSeries:
    """𝕖₂ = 1/12 − 2Σ σ_1(n) q^n = −2𝔾₂."""
    return G(2, order) * -2


@lru_cache(maxsize=None)
def g_hat(k: int, order: int) -> QSeries:
    """ĝ_k = e_k/(2πi)^k = 2𝔾_k/(k−1)!."""
    return G(k, order) * Fraction(2, factorial(k - 1))


def G_rescaled(k: int, d: Fraction, order: int) -> QSeries:  # noqa: N802
    """𝔾_k(dτ) по модулю q^order."""
    d = Fraction(d)
    inner = order / d
    inner_order = int(inner) + (0 if inner.denominator == 1 else 1)
    return G(k, max(inner_order, 1)).substitute(d).truncate(order)
