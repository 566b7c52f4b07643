"""Проекции π на подалгебру с модулярными q-скобками, элементы h_k и разложение по степеням Q₂."""
from fractions import Fraction
from math import factorial
from typing import Callable, Optional

from arith.numbers import falling, rising
from core.exceptions import NotHomogeneous, PochhammerZero
from core.logger import logger as _logger
from structure.formal import D, FormalPoly, partial, vee

logger = _logger(__name__)

Operator = Callable[[FormalPoly], FormalPoly]


def _weight(f: FormalPoly) -> Fraction:
    if not f.is_homogeneous():
        raise NotHomogeneous(f'projection needs a homogeneous element, got {f!r}')
    return f.weight


def _pochhammer(weight: Fraction, r: int) -> Fraction:
    value = rising(weight - r - Fraction(3, 2), r)
    if not value:
        raise PochhammerZero(f'({weight} - {r} - 3/2)_{r} vanishes')
    return value


def _power(op: Operator, f: FormalPoly, n: int) -> FormalPoly:
    for _ in range(n):
        if f.is_zero():
            break
        f = op(f)
    return f


def pi_general(f: FormalPoly, M: Operator, Dop: Operator) -> FormalPoly:  # noqa: N803
    """π(f) = Σ_r Σ_{s≤r} (−1)^r Q₂^r ℳ^{r−s}𝒟^s f / ((m−r−3/2)_r (r−s)! s!) для f веса m."""
    f = f.reduced()
    m = _weight(f)
    q2 = FormalPoly.Q(2)
    total = FormalPoly.constant(0, f.level)
    for r in range(int(m) // 2 + 1):
        layer = FormalPoly.constant(0, f.level)
        for s in range(r + 1):
            term = _power(M, _power(Dop, f, s), r - s)
            if not term.is_zero():
                layer = layer + term * Fraction(1, factorial(r - s) * factorial(s))
        if not layer.is_zero():
            total = total + q2**r * layer * (Fraction((-1) ** r) / _pochhammer(m, r))
    return total.reduced()


def M_bo(f: FormalPoly) -> FormalPoly:  # noqa: N802
    """ℳ = −∂²/2."""
    return partial(f, 2) * Fraction(-1, 2)


def D_bo(f: FormalPoly) -> FormalPoly:  # noqa: N802
    """𝒟 = 𝒟₂/2."""
    return D(f, 2) * Fraction(1, 2)


def pi_BO(f: FormalPoly) -> FormalPoly:  # noqa: N802
    """π(f) = Σ_r Σ_s (−1)^s Q₂^r ∂^{2r−2s}𝒟₂^s f / (2^r (ℓ−r−3/2)_r (r−s)! s!); годится и для уровня N."""
    f = f.reduced()
    ell = _weight(f)
    q2 = FormalPoly.Q(2)
    total = FormalPoly.constant(0, f.level)
    for r in range(int(ell) // 2 + 1):
        poch = _pochhammer(ell, r)
        for s in range(r + 1):
            term = partial(_power(lambda g: D(g, 2), f, s), 2 * r - 2 * s)
            if term.is_zero():
                continue
            scale = Fraction((-1) ** s) / (2**r * poch * factorial(r - s) * factorial(s))
            total = total + q2**r * term * scale
    logger.debug('[+] pi of weight %s element with %s terms', ell, len(list(f.terms())))
    return total.reduced()


def h(k: int) -> FormalPoly:
    """h_k = Σ_r Q₂^r Q_{k−2r} / (2^r (k−r−3/2)_r r!)."""
    q2 = FormalPoly.Q(2)
    total = FormalPoly.constant(0)
    for r in range(k // 2 + 1):
        total = total + q2**r * FormalPoly.Q(k - 2 * r) * (
            Fraction(1) / (2**r * _pochhammer(Fraction(k), r) * factorial(r))
        )
    return total.reduced()


def pi_fractional(f: FormalPoly) -> FormalPoly:
    """π(f) = Q₂^{ℓ−3/2}·f^∨(Q₂^{3/2}) / ((3/2)^−_ℓ ℓ!) на уровне 1."""
    f = f.reduced()
    ell = _weight(f)
    q2 = FormalPoly.Q(2)
    image = vee(f, q2 ** Fraction(3, 2))
    result = q2 ** (ell - Fraction(3, 2)) * image
    return (result * (Fraction(1) / (falling(Fraction(3, 2), int(ell)) * factorial(int(ell))))).reduced()


def split(f: FormalPoly, limit: Optional[int] = None) -> list[FormalPoly]:
    """f = Σ g_i Q₂^i с g_i = π(f_i), f_{i+1} = (f_i − π(f_i))/Q₂."""
    f = f.reduced()
    limit = int(_weight(f)) // 2 + 1 if limit is None else limit
    parts = []
    for _ in range(limit + 1):
        if f.is_zero():
            break
        g = pi_BO(f)
        parts.append(g)
        f = (f - g).divide_by_Q2()
    return parts


def join(parts: list[FormalPoly]) -> FormalPoly:
    q2 = FormalPoly.Q(2)
    total = FormalPoly.constant(0)
    for i, g in enumerate(parts):
        total = total + g * q2**i
    return total
