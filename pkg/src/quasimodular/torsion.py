"""Значения Â, ℘̂, Ê₃ в точках кручения v ∈ (1/N)ℤ как образующие уровня N."""
from fractions import Fraction
from functools import lru_cache

from arith.qseries import QSeries
from jacobi.context import FourierProvider, JetProvider, QJContext, g_taylor
from jacobi.jets import JetForm, scalar_index
from jacobi.kernels import A_fourier, E2_fourier
from jacobi.slash import as_shift
from quasimodular.eisenstein import g_hat
from quasimodular.ring import Generator


@lru_cache(maxsize=None)
def a_context(T: int) -> QJContext:  # noqa: N803
    """Â веса 1 и индекса 0 с δ_zÂ = 1."""
    provider = FourierProvider(A_fourier(T), (1,))
    shift = JetProvider(1, lambda X, order: JetForm.constant(1, 1, order))  # noqa: N803
    return QJContext(1, 1, scalar_index(1, 0), {(0, (0,)): provider, (0, (1,)): shift}, (1,), True, 'A')


@lru_cache(maxsize=None)
def h_value(u: Fraction, v: Fraction, order: int) -> QSeries:
    """h_{u,v} = Â(uτ + v) + u."""
    return g_taylor(a_context(order), as_shift((u,), (v,)), (0,)).truncate(order)


@lru_cache(maxsize=None)
def _e2_translated(v: Fraction, order: int):
    provider = FourierProvider(E2_fourier(order), (2,))
    return provider.translated_jet(as_shift((0,), (v,)), 2)


def wp_value(v: Fraction, order: int) -> QSeries:
    """℘̂(v) = Ê₂(v) − ĝ₂."""
    return (_e2_translated(v, order).coefficient((0,)) - g_hat(2, order)).truncate(order)


def e3_value(v: Fraction, order: int) -> QSeries:
    """Ê₃(v) = −½·D_uÊ₂(v)."""
    return (_e2_translated(v, order).coefficient((1,)) * Fraction(-1, 2)).truncate(order)


def torsion_points(level: int) -> list[Fraction]:
    """Представители v ∈ (1/N)ℤ/ℤ, v ≠ 0, с точностью до знака."""
    return [Fraction(j, level) for j in range(1, level // 2 + 1)]


@lru_cache(maxsize=None)
def torsion_generators(level: int, probe: int = 4) -> tuple[Generator, ...]:
    """Ненулевые значения в точках кручения; тождественные нули (нечётные функции при v = ½) отбрасываются."""
    out = []
    for v in torsion_points(level):
        candidates = [
            Generator(f'h(0,{v})', 1, Fraction(0), lambda order, v=v: h_value(Fraction(0), v, order)),
            Generator(f'wp({v})', 2, Fraction(0), lambda order, v=v: wp_value(v, order)),
            Generator(f'E3({v})', 3, Fraction(0), lambda order, v=v: e3_value(v, order)),
        ]
        out.extend(g for g in candidates if not g.series(probe).is_zero())
    return tuple(out)
