"""Числа Бернулли, символы Похгаммера и усечённые степенные ряды с абстрактными коэффициентами."""
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Sequence, TypeVar

from core.exceptions import BadParam

R = TypeVar('R')


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """B_n с B_1 = −1/2."""
    if n < 0:
        raise BadParam(f'bernoulli index must be non-negative, got {n}')
    if n == 0:
        return Fraction(1)
    return -sum((comb(n + 1, j) * bernoulli(j) for j in range(n)), Fraction(0)) / (n + 1)


def rising(x: Fraction, n: int) -> Fraction:
    """(x)_n = x(x+1)…(x+n−1)."""
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def falling(x: Fraction, n: int) -> Fraction:
    """(x)^−_n = x(x−1)…(x−n+1)."""
    out = Fraction(1)
    for i in range(n):
        out *= x - i
    return out


def multinomial(parts: Sequence[int]) -> int:
    out, total = 1, 0
    for p in parts:
        total += p
        out *= comb(total, p)
    return out


def inverse_factorial(n: int) -> Fraction:
    return Fraction(1, factorial(n))


def ps_mul(a: Sequence[R], b: Sequence[R], n: int, zero: R) -> list[R]:
    """Произведение рядов Σa_i w^i · Σb_j w^j по модулю w^n."""
    out = [zero] * n
    for i, x in enumerate(a[:n]):
        for j, y in enumerate(b[: n - i]):
            out[i + j] = out[i + j] + x * y
    return out


def ps_inverse(a: Sequence[R], n: int, zero: R, reciprocal: Callable[[R], R]) -> list[R]:
    """1/a по модулю w^n; reciprocal обращает свободный член."""
    if not a:
        raise BadParam('empty series has no inverse')
    lead = reciprocal(a[0])
    out = [lead]
    for k in range(1, n):
        acc = zero
        for i in range(1, min(k, len(a) - 1) + 1):
            acc = acc + a[i] * out[k - i]
        out.append(-(acc * lead))
    return out


def ps_exp(g: Sequence[R], n: int, zero: R, one: R) -> list[R]:
    """exp(g) по модулю w^n при g_0 = 0: n f_n = Σ k g_k f_{n−k}."""
    out = [one]
    for m in range(1, n):
        acc = zero
        for k in range(1, min(m, len(g) - 1) + 1):
            acc = acc + g[k] * out[m - k] * k
        out.append(acc * Fraction(1, m))
    return out


def exp_coefficients(scale: Fraction, n: int) -> list[Fraction]:
    """Коэффициенты e^{scale·w} по модулю w^n."""
    return [scale**j / factorial(j) for j in range(n)]
