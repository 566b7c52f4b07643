"""Модулярные комбинации ξ^X_ℓ коэффициентов Тейлора g^X_ℓ."""
from fractions import Fraction
from math import ceil, factorial
from typing import Optional, Sequence

from arith.numbers import rising
from arith.qseries import QSeries
from core.exceptions import BadParam, PochhammerZero
from core.logger import logger as _logger
from jacobi.context import QJContext, delta_tau_power, g_taylor
from jacobi.slash import Shift
from quasimodular.eisenstein import e2
from quasimodular.operators import D_plus_G2

logger = _logger(__name__)

VARIANTS = ('D', 'D+G2')


def _order(series: QSeries) -> int:
    if series.trunc is None:
        raise BadParam('xi needs truncated Taylor coefficients')
    return int(ceil(series.trunc))


def _derivative(series: QSeries, r: int) -> QSeries:
    for _ in range(r):
        series = series.D_tau()
    return series


def xi(
    ctx: QJContext,
    X: Shift,  # noqa: N803
    ell: Sequence[int],
    weight: Optional[int] = None,
    variant: str = 'D',
    depth: Optional[int] = None,
) -> QSeries:
    """ξ^X_ℓ = Σ_r (−1)^r D^r(δ^r g/r!)/(K−r−1)_r, K = k + |ℓ|.

    При K = 2 берётся g − 𝕖₂·δg; вариант 'D+G2' заменяет D на D + 𝔾₂ и (K−r−1)_r на (K−r−3/2)_r.
    """
    if variant not in VARIANTS:
        raise BadParam(f'unknown xi variant {variant}; known: {VARIANTS}')
    k = ctx.weight if weight is None else weight
    K = k + sum(ell)  # noqa: N806
    top = max(K // 2, 0) if depth is None else depth
    g = g_taylor(ctx, X, ell)
    order = _order(g)
    if variant == 'D' and K == 2:
        correction = delta_tau_power(ctx, X, ell, 1)
        logger.debug('[+] xi at %s, ell %s: weight-2 branch', X, tuple(ell))
        return (g - e2(order) * correction).truncate(order)
    total = g
    for r in range(1, top + 1):
        delta = delta_tau_power(ctx, X, ell, r) * Fraction(1, factorial(r))
        if delta.is_zero():
            continue
        if variant == 'D':
            poch = rising(Fraction(K - r - 1), r)
            if not poch:
                raise PochhammerZero(f'(K - r - 1)_r vanishes for K={K}, r={r}')
            term = _derivative(delta, r)
        else:
            poch = rising(Fraction(2 * K - 2 * r - 3, 2), r)
            term = D_plus_G2(delta, r)
        total = total + term * ((-1) ** r / poch)
    logger.debug('[+] xi at %s, ell %s, variant %s, depth bound %s', X, tuple(ell), variant, top)
    return total.truncate(order)
