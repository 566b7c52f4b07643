"""Операторы δ_τ, D_τ, ϑ и W на элементах колец квазимодулярных форм."""
from typing import Optional

from arith.qseries import QSeries
from core.config import settings
from core.exceptions import BadParam, CertifyFailed
from core.logger import logger as _logger
from quasimodular.certify import certify, spanning_basis
from quasimodular.eisenstein import G, e2
from quasimodular.ring import QMPoly

logger = _logger(__name__)

RING_OPS = ('delta', 'D', 'serre', 'W')


def delta_tau(f: QMPoly) -> QMPoly:
    """δ_τ = Σ δ_τ(g)·∂/∂g; ненулевые значения только у образующих глубины 1."""
    total = QMPoly(f.generators, {}, f.level)
    for i, g in enumerate(f.generators):
        if g.delta:
            total = total + f.partial(i).scale(g.delta)
    return total


def weight_W(f: QMPoly) -> QMPoly:  # noqa: N802
    """W умножает однородную компоненту на её вес."""
    poly = {e: c * f._monomial_weight(e) for e, c in f.poly.items()}
    return QMPoly(f.generators, poly, f.level)


def D_tau(f: QMPoly, margin: Optional[int] = None) -> QMPoly:  # noqa: N802
    """D_τ через дифференцирование q-разложения и сертификацию в весе k+2 глубины p+1."""
    if f.is_zero():
        return f
    margin = settings.certify.MARGIN if margin is None else margin
    k, p = f.weight, f.depth
    _, monomials = spanning_basis(f.level, k + 2, p + 1)
    order = len(monomials) + margin + 1
    series = f.expand(order).D_tau()
    certificate = certify(series, k + 2, f.level, p + 1, margin, target_id=f'D({f!r})')
    if not certificate.certified:
        raise CertifyFailed(f'D_tau of {f!r} did not certify: {certificate.status.value}')
    logger.debug('[+] D_tau %r -> %s basis elements', f, len(monomials))
    return certificate.as_poly()


def e2_poly(level: int = 1) -> QMPoly:
    """𝕖₂ = −2𝔾₂ в кольце данного уровня."""
    return QMPoly.generator('G2', spanning_basis(level, 2)[0], level).scale(-2)


def serre(f: QMPoly, margin: Optional[int] = None) -> QMPoly:
    """ϑ = D_τ − 𝕖₂·W."""
    return D_tau(f, margin) - e2_poly(f.level) * weight_W(f)


def ring_op(f: QMPoly, which: str, margin: Optional[int] = None) -> QMPoly:
    if which == 'delta':
        return delta_tau(f)
    if which == 'D':
        return D_tau(f, margin)
    if which == 'serre':
        return serre(f, margin)
    if which == 'W':
        return weight_W(f)
    raise BadParam(f'unknown ring operation {which}; known: {RING_OPS}')


def commutator_delta_D(f: QMPoly, margin: Optional[int] = None) -> QMPoly:
    """[δ_τ, D_τ]f; для однородного f равно W f."""
    return delta_tau(D_tau(f, margin)) - D_tau(delta_tau(f), margin)


# --- те же операторы на q-рядах


def series_serre(series: QSeries, weight: int) -> QSeries:
    """ϑf = D_τf − 𝕖₂·k·f."""
    order = series.trunc
    return series.D_tau() - e2(int(order)) * series * weight


def D_plus_G2(series: QSeries, power: int = 1) -> QSeries:  # noqa: N802
    """(D_τ + 𝔾₂)^power."""
    for _ in range(power):
        series = series.D_tau() + G(2, int(series.trunc)) * series
    return series


def Q2_action(series: QSeries) -> QSeries:  # noqa: N802
    """⟨Q₂f⟩_q = (D_τ + 𝔾₂)⟨f⟩_q."""
    return D_plus_G2(series)

