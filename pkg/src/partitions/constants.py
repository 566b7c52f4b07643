"""Константы β_k(a), α_k(a), α̃_k(a) из разложений в переменной w = 2πiz."""
from fractions import Fraction
from functools import lru_cache
from math import factorial

from arith.cyclotomic import ONE, ZERO, CycQ, cyc_root
from arith.numbers import exp_coefficients, ps_inverse, ps_mul
from core.exceptions import BadParam

_CHUNK = 16


def _mod1(a) -> Fraction:
    a = Fraction(a)
    return a - (a.numerator // a.denominator)


@lru_cache(maxsize=None)
def _laurent(kind: str, a: Fraction, length: int) -> tuple[int, tuple[CycQ, ...]]:
    """(v, coeffs): coeffs[i] есть коэффициент при w^{i−v}.

    beta:  e^{w/2}/(c e^w − 1)
    alpha: (1/2)/(c e^w − 1)
    tilde: (1/2) c e^w/(c e^w − 1)²,   c = 𝒆(a).
    """
    c = cyc_root(a)
    power = 2 if kind == 'tilde' else 1
    if c == 1:
        base = [ONE * Fraction(1, factorial(j + 1)) for j in range(length)]
        v = power
    else:
        base = [c - 1] + [c * Fraction(1, factorial(j)) for j in range(1, length)]
        v = 0
    inv = ps_inverse(base, length, ZERO, CycQ.inverse)
    if power == 2:
        inv = ps_mul(inv, inv, length, ZERO)
    if kind == 'beta':
        num = [CycQ.rational(x) for x in exp_coefficients(Fraction(1, 2), length)]
    elif kind == 'alpha':
        num = [CycQ.rational(Fraction(1, 2))] + [ZERO] * (length - 1)
    else:
        num = [c * Fraction(1, 2 * factorial(j)) for j in range(length)]
    return v, tuple(ps_mul(num, inv, length, ZERO))


def laurent_coefficient(kind: str, a, exponent: int) -> CycQ:
    a = _mod1(a)
    needed = exponent + 3
    length = max(_CHUNK, (needed // _CHUNK + 1) * _CHUNK)
    v, coeffs = _laurent(kind, a, length)
    index = exponent + v
    if index < 0:
        return ZERO
    return coeffs[index]


def beta(k: int, a=0) -> CycQ:
    """Σ_k β_k(a) w^{k−1} = e^{w/2}/(𝒆(a)e^w − 1)."""
    if k < 0:
        raise BadParam(f'beta is defined for k >= 0, got {k}')
    return laurent_coefficient('beta', a, k - 1)


def alpha(k: int, a=0) -> CycQ:
    """Константы моментов S_k(·,a): α_k(a) = −(k−1)!·[w^{k−1}] (1/2)/(𝒆(a)e^w − 1) при k ≥ 1.

    α_0 равна свободному члену, α_{−1} вычету; α_k(0) = −B_k/(2k).
    """
    if k < -1:
        raise BadParam(f'alpha is defined for k >= -1, got {k}')
    if k == -1:
        return laurent_coefficient('alpha', a, -1)
    if k == 0:
        return laurent_coefficient('alpha', a, 0)
    return -laurent_coefficient('alpha', a, k - 1) * factorial(k - 1)


def alpha_tilde(k: int, a=0) -> CycQ:
    """(1/8)sinh^{−2}((w+2πia)/2) = α̃_{−2}/w² + α̃_{−1}/w + Σ_{k≥2} α̃_k w^{k−2}/(k−2)!."""
    if k in (-2, -1):
        return laurent_coefficient('tilde', a, k)
    if k < 2:
        raise BadParam(f'alpha_tilde is defined for k in {{-2, -1}} or k >= 2, got {k}')
    return laurent_coefficient('tilde', a, k - 2) * factorial(k - 2)
