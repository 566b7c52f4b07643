"""Действие группы Якоби: слэш по X = (λ, μ), ρ(X), ζ_{X,X'} и группы Γ_X."""
from fractions import Fraction
from typing import Sequence

from arith.cyclotomic import CycQ, cyc_root
from arith.qseries import QSeries
from core.exceptions import BadParam, NotUnimodular, WindowOverflow
from core.logger import logger as _logger
from jacobi.fourier import FourierForm, bilinear
from jacobi.jets import IndexMatrix, JetForm

logger = _logger(__name__)

Shift = tuple[tuple[Fraction, ...], tuple[Fraction, ...]]
Matrix2 = tuple[tuple[int, int], tuple[int, int]]


def as_shift(lam: Sequence, mu: Sequence) -> Shift:
    lam = tuple(Fraction(x) for x in lam)
    mu = tuple(Fraction(x) for x in mu)
    if len(lam) != len(mu):
        raise BadParam(f'lambda {lam} and mu {mu} have different lengths')
    return lam, mu


def _plus(x: Sequence[Fraction], y: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(a + b for a, b in zip(x, y))


def index_row_shift(index: IndexMatrix, lam: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Сдвиг показателей ζ от множителя 𝒆(2B(λ, z)): вектор 2Mλ."""
    n = len(lam)
    return tuple(2 * sum((Fraction(index[i][j]) * lam[j] for j in range(n)), Fraction(0)) for i in range(n))


def rho(X: Shift, index: IndexMatrix) -> CycQ:  # noqa: N803
    """ρ(X) = 𝒆(B(λ,λ) + B(λ,μ) + B(μ,μ)).

    Двойной слэш нормирован множителем ρ(X)⁻¹; тогда ρ(X′)·ζ_{X,X′}·φ‖(X+X′) = φ‖X
    для целых X′ и любых рациональных X.
    """
    lam, mu = X
    return cyc_root(bilinear(index, lam, lam) + bilinear(index, lam, mu) + bilinear(index, mu, mu))


def zeta(X: Shift, Y: Shift, index: IndexMatrix) -> CycQ:  # noqa: N803
    """ζ_{X,X'} = 𝒆(B(λ′,μ) − B(λ,μ′))."""
    (lam, mu), (lam2, mu2) = X, Y
    return cyc_root(bilinear(index, lam2, mu) - bilinear(index, lam, mu2))


def slash_cocycle(X: Shift, Y: Shift, index: IndexMatrix) -> CycQ:  # noqa: N803
    """c(X, X′) с φ|X|X′ = c·φ|(X+X′)."""
    (lam, mu), (lam2, mu2) = X, Y
    value = bilinear(index, lam, lam2) + bilinear(index, mu, lam2) + bilinear(index, mu, mu2)
    return cyc_root(-2 * value)


def slash_X(form: FourierForm, X: Shift, index: IndexMatrix = None) -> FourierForm:  # noqa: N802, N803
    """(φ|X)(z) = 𝒆(B(λ+μ,λ+μ))·𝒆(B(λ,λτ+2z))·φ(z+λτ+μ) на мономах ζ^r q^s."""
    index = index if index is not None else form.index
    if index is None:
        raise BadParam('slash action needs an index matrix')
    lam, mu = X
    if len(lam) != form.rank:
        raise BadParam(f'shift of length {len(lam)} for a rank-{form.rank} form')
    total = _plus(lam, mu)
    prefactor = cyc_root(bilinear(index, total, total))
    q_shift = bilinear(index, lam, lam)
    row = index_row_shift(index, lam)
    moved = form.translate(lam, mu)
    coeffs = {}
    for r, c in moved.coeffs.items():
        target = _plus(r, row)
        if any(abs(x) > form.window for x in target):
            raise WindowOverflow(f'shifted support {target} exits the window {form.window}')
        coeffs[target] = c.shift(q_shift) * prefactor
    q_trunc = None if moved.q_trunc is None else moved.q_trunc + q_shift
    logger.debug('[+] slash by %s: %s monomials, q_trunc %s', X, len(coeffs), q_trunc)
    return FourierForm(form.rank, coeffs, form.window, q_trunc, form.weight, index, form.region, form.poles)


def slash_prefactor_jet(X: Shift, index: IndexMatrix, order: Sequence[int]) -> JetForm:  # noqa: N803
    """Множитель 𝒆(B(λ+μ,λ+μ))·q^{B(λ,λ)}·exp(2B(λ,w)) как струя."""
    lam, mu = X
    total = _plus(lam, mu)
    jet = JetForm.exp_linear(index_row_shift(index, lam), order)
    return jet.scale(QSeries.monomial(bilinear(index, lam, lam), cyc_root(bilinear(index, total, total))))


def act(X: Shift, gamma: Matrix2) -> Shift:  # noqa: N803
    """Xγ для X = (λ | μ) ∈ M_{n,2}(ℚ)."""
    (a, b), (c, d) = gamma
    lam, mu = X
    return (
        tuple(x * a + y * c for x, y in zip(lam, mu)),
        tuple(x * b + y * d for x, y in zip(lam, mu)),
    )


def gamma_X_member(X: Shift, gamma: Matrix2, index: IndexMatrix) -> bool:  # noqa: N802, N803
    """γ ∈ Γ_X: D = Xγ − X целочисленна и ρ(D)·ζ_{X,D} = 1, т.е. φ‖Xγ = φ‖X."""
    (a, b), (c, d) = gamma
    if any(Fraction(x).denominator != 1 for x in (a, b, c, d)) or a * d - b * c != 1:
        raise NotUnimodular(f'{gamma} is not in SL2(Z)')
    moved = act(X, gamma)
    diff = (tuple(x - y for x, y in zip(moved[0], X[0])), tuple(x - y for x, y in zip(moved[1], X[1])))
    if any(x.denominator != 1 for part in diff for x in part):
        return False
    return (rho(diff, index) * zeta(X, diff, index) - 1).is_zero()
