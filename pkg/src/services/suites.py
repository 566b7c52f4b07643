"""Наборы проверок: каждый воспроизводит группу точных тождеств на заданных порядках усечения."""
from __future__ import annotations

import random
from fractions import Fraction
from functools import reduce
from itertools import product
from math import comb
from time import perf_counter
from typing import Callable, Optional, Sequence

from arith.cyclotomic import cyc_root
from arith.qseries import QSeries
from brackets.qbracket import qbracket
from brackets.ubracket import odot
from core.config import settings
from core.exceptions import BadParam, QBracketError, UnknownSuite
from core.logger import logger as _logger
from jacobi import derivations
from jacobi.context import delta_tau_power, double_slash, g_taylor
from jacobi.derivations import Op
from jacobi.kernels import THETA_INDEX, Theta_value, inverse_Theta_jet, theta
from jacobi.npoint import (
    bo_bracket_jet,
    bo_recursion_jet,
    convention_factor,
    f1_context,
    s_bracket_jet,
    s_kernel_jet,
    t_bracket_jet,
    t_kernel_jet,
)
from jacobi.slash import Shift, as_shift, rho, slash_cocycle, slash_X, zeta
from models.report import CheckRecord, CheckStatus, SuiteReport
from partitions import families
from partitions.families import ONE_FUNCTION, PartitionFunction
from quasimodular.certify import Certificate, Status, certify, spanning_basis
from quasimodular.eisenstein import G
from quasimodular.operators import D_plus_G2, delta_tau
from quasimodular.xi import VARIANTS, xi
from services.response_messages import SuiteMessages as Msg
from structure.formal import D, FormalPoly, partial
from structure.projections import D_bo, M_bo, h, join, pi_BO, pi_fractional, pi_general, split
from structure.tpoly import TPoly, pi_T

logger = _logger(__name__)

Outcome = tuple[CheckStatus, str]

PASSED: Outcome = (CheckStatus.passed, '')

ZERO_SHIFT_1 = as_shift((0,), (0,))
HALF = Fraction(1, 2)
# усечение θ для проверок слэша: окно θ съедает R·|λ| точности
SLASH_T = 16
SLASH_PAIRS = (
    (as_shift((HALF,), (Fraction(1, 4),)), as_shift((1,), (0,))),
    (as_shift((0,), (Fraction(1, 3),)), as_shift((-1,), (0,))),
)


def verdict(ok: bool, detail: str = Msg.mismatch.value) -> Outcome:
    return PASSED if ok else (CheckStatus.failed, detail)


def from_certificate(certificate: Certificate) -> Outcome:
    if certificate.status == Status.certified:
        return CheckStatus.passed, f'solution on {len(certificate.basis)} basis elements'
    status = CheckStatus.inconclusive if certificate.status == Status.inconclusive else CheckStatus.failed
    return status, Msg.not_certified.value.format(status=certificate.status.value)


def q_product(ks: Sequence[int], shifts: Sequence[Fraction] = ()) -> PartitionFunction:
    """Π Q_{k_i}(·, a_i)."""
    shifts = list(shifts) or [None] * len(ks)
    return reduce(lambda acc, item: acc * families.Q(item[0], item[1] or None), zip(ks, shifts), ONE_FUNCTION)


class SuiteRunner:
    """Выполняет набор проверок последовательно; порядок записей в отчёте фиксирован."""

    def __init__(
        self,
        order: Optional[int] = None,
        jet_order: Optional[int] = None,
        margin: Optional[int] = None,
        seed: Optional[int] = None,
        samples: Optional[int] = None,
        level: Optional[int] = None,
        depth: Optional[int] = None,
    ):
        self.order = settings.suite.ORDER if order is None else order
        self.jet_order = settings.suite.JET_ORDER if jet_order is None else jet_order
        self.margin = settings.certify.MARGIN if margin is None else margin
        self.seed = settings.suite.SEED if seed is None else seed
        self.samples = settings.suite.SAMPLES if samples is None else samples
        self.level = level
        self.depth = depth
        self.records: list[CheckRecord] = []

    # --- инфраструктура

    def run(self, suite: str) -> SuiteReport:
        method = SUITES.get(suite)
        if method is None:
            raise UnknownSuite(Msg.unknown.value.format(suite=suite, known=', '.join(SUITES)))
        self.records = []
        logger.debug('[+] suite %s: order %s, jet order %s, seed %s', suite, self.order, self.jet_order, self.seed)
        method(self)
        return SuiteReport(suite=suite, seed=self.seed, checks=self.records)

    def check(self, name: str, anchor: str, func: Callable[[], Outcome], **orders: int) -> CheckRecord:
        start = perf_counter()
        try:
            status, detail = func()
        except QBracketError as error:
            status, detail = CheckStatus.failed, f'{type(error).__name__}: {error}'
        record = CheckRecord(
            name=name,
            anchor=anchor,
            status=status,
            orders=orders,
            detail=detail,
            runtime=round(perf_counter() - start, 3),
        )
        self.records.append(record)
        logger.debug('[+] check %s -> %s %s', name, status.value, detail)
        return record

    def fit_order(self, weight: int, level: int = 1, depth: Optional[int] = None) -> int:
        """Порядок q, достаточный для сертификации с текущим запасом."""
        _, monomials = spanning_basis(level, weight, depth)
        return max(self.order, len(monomials) + self.margin)

    def certify_series(
        self, series: QSeries, weight: int, level: int = 1, depth: Optional[int] = None, target_id: str = ''
    ) -> Outcome:
        if series.is_zero():
            return CheckStatus.passed, 'zero series'
        return from_certificate(certify(series, weight, level, depth, self.margin, target_id))

    def certify_bracket(
        self, function: PartitionFunction, weight: int, level: int = 1, depth: Optional[int] = None, target_id: str = ''
    ) -> Outcome:
        order = self.fit_order(weight, level, depth)
        if order > settings.suite.MAX_ORDER:
            return CheckStatus.inconclusive, f'needs q^{order}, above {settings.suite.MAX_ORDER}'
        return self.certify_series(qbracket(function, order), weight, level, depth, target_id)

    # --- Блох–Окуньков

    def bloch_okounkov(self) -> None:
        T, order = self.order + 1, self.jet_order  # noqa: N806

        self.check(
            'one-point bracket equals 1/Theta',
            'n-point/one-point',
            lambda: verdict(bo_bracket_jet([Fraction(0)], T, order).agrees_with(inverse_Theta_jet(T, order))),
            q=self.order,
            w=order,
        )
        self.check(
            'one-point recursion equals 1/Theta',
            'n-point/recursion',
            lambda: verdict(bo_recursion_jet(1, ZERO_SHIFT_1, T, order).agrees_with(inverse_Theta_jet(T, order))),
            q=self.order,
            w=order,
        )
        for a in (HALF, Fraction(1, 3)):
            self.check(
                f'shifted one-point bracket at a={a}',
                'n-point/torsion-shift',
                lambda a=a: self._shifted_one_point(a, T, order),
                q=self.order,
                w=order,
            )
        self.check(
            'two-point recursion equals bracket side',
            'n-point/two-point',
            lambda: verdict(
                bo_recursion_jet(2, as_shift((0, 0), (0, 0)), T, order).agrees_with(
                    bo_bracket_jet([Fraction(0)] * 2, T, order)
                )
            ),
            q=self.order,
            w=order,
        )
        self.check(
            'F2 coefficient at w1^-1 w2 is G2, not zero',
            'n-point/two-point',
            lambda: verdict(
                bo_recursion_jet(2, as_shift((0, 0), (0, 0)), T, order).coefficient((-1, 1)).agrees_with(G(2, T))
            ),
            q=self.order,
            w=order,
        )
        for k1 in range(1, 6):
            for k2 in range(k1, 11 - k1):
                self.check(
                    f'<Q{k1} Q{k2}> quasimodular',
                    'shifted-symmetric/level-one',
                    lambda k1=k1, k2=k2: self._level_one_pair(k1, k2),
                    q=self.fit_order(k1 + k2),
                    weight=k1 + k2,
                )

    def _shifted_one_point(self, a: Fraction, T: int, order: int) -> Outcome:  # noqa: N803
        bracket = bo_bracket_jet([a], T, order).scale(convention_factor([a]))
        slashed = double_slash(f1_context(T), as_shift((0,), (a,)), order)
        return verdict(slashed.agrees_with(bracket))

    def _level_one_pair(self, k1: int, k2: int) -> Outcome:
        weight = k1 + k2
        if weight % 2:
            return verdict(qbracket(q_product([k1, k2]), self.order).is_zero(), 'odd weight bracket is not zero')
        depth = weight // 2 if self.depth is None else self.depth
        return self.certify_bracket(q_product([k1, k2]), weight, 1, depth, f'Q{k1}Q{k2}')

    # --- крюки

    def hooks(self) -> None:
        self.check(
            '<H2> = G2',
            'hooks/weight-two',
            lambda: verdict(qbracket(families.H(2), self.order).agrees_with(G(2, self.order + 1))),
            q=self.order,
        )
        for k in (4, 6):
            self.check(
                f'<H{k}> quasimodular',
                'hooks/quasimodularity',
                lambda k=k: self.certify_bracket(families.H(k), k, target_id=f'H{k}'),
                q=self.fit_order(k),
                weight=k,
            )
        self.check(
            '<H2 H2> quasimodular',
            'hooks/products',
            lambda: self.certify_bracket(families.H(2) * families.H(2), 4, target_id='H2H2'),
            q=self.fit_order(4),
            weight=4,
        )

    # --- моменты

    def moments(self) -> None:
        T = self.order + 1  # noqa: N806
        for n in (1, 2):
            self.check(
                f'moment kernel, n={n}',
                'moments/n-point',
                lambda n=n: verdict(
                    s_bracket_jet(n, T, self.jet_order).agrees_with(s_kernel_jet(n, T, self.jet_order))
                ),
                q=self.order,
                w=self.jet_order,
            )
        for k in (2, 4, 6):
            self.check(
                f'<S{k}> quasimodular',
                'moments/quasimodularity',
                lambda k=k: self.certify_bracket(families.S(k), k, target_id=f'S{k}'),
                q=self.fit_order(k),
                weight=k,
            )

    # --- двойные моменты

    def double_moments(self) -> None:
        T, order = self.order + 1, self.jet_order  # noqa: N806
        self.check(
            'double moment kernel',
            'double-moments/one-point',
            lambda: verdict(
                t_bracket_jet(1, T, order).agrees_with(t_kernel_jet(1, as_shift((0, 0), (0, 0)), T, order))
            ),
            q=self.order,
            w=order,
        )
        for spec, f in (('Q2', families.Q(2)), ('Q4', families.Q(4)), ('H2', families.H(2))):
            self.check(
                f'<T11 odot {spec}> = G2 <{spec}>',
                'double-moments/odot-T11',
                lambda f=f: verdict(
                    qbracket(odot(families.T(1, 1), f, self.order), self.order).agrees_with(
                        G(2, self.order + 1) * qbracket(f, self.order)
                    )
                ),
                q=self.order,
            )
        self.check(
            '<pi_T(T11)> = 0',
            'double-moments/projection',
            lambda: verdict(qbracket(pi_T(TPoly.T(1, 1)).evaluate(self.order), self.order).is_zero()),
            q=self.order,
        )
        self.check(
            '<pi_T(T22)> = D G2 + 2 G2^2',
            'double-moments/serre',
            self._pi_t22,
            q=self.order,
        )
        for k, l in ((1, 3), (2, 2)):  # noqa: E741
            self.check(
                f'<pi_T(T{k}{l})> modular',
                'double-moments/serre',
                lambda k=k, l=l: self.certify_bracket(  # noqa: E741
                    pi_T(TPoly.T(k, l)).evaluate(self.fit_order(k + l, 1, 0)), k + l, 1, 0, f'pi_T(T{k}{l})'
                ),
                q=self.fit_order(k + l, 1, 0),
                weight=k + l,
            )
        self.check(
            'pi_T multiplicative on odot monomials',
            'double-moments/multiplicativity',
            self._pi_t_multiplicative,
            samples=self.samples,
        )

    def _pi_t22(self) -> Outcome:
        g2 = G(2, self.order + 1)
        expected = g2.D_tau() + g2 * g2 * 2
        return verdict(qbracket(pi_T(TPoly.T(2, 2)).evaluate(self.order), self.order).agrees_with(expected))

    def _pi_t_multiplicative(self) -> Outcome:
        rng = random.Random(self.seed)
        pool = [(k, l) for k in range(0, 5) for l in range(1, 6) if k + l <= 5]  # noqa: E741
        for _ in range(self.samples):
            budget = 10
            sides = []
            for _ in range(2):
                monomial = TPoly.constant(1)
                for _ in range(rng.randint(1, 2)):
                    k, l = rng.choice(pool)  # noqa: E741
                    if k + l > budget:
                        break
                    budget -= k + l
                    monomial = monomial * TPoly.T(k, l)
                sides.append(monomial)
            left, right = sides
            if pi_T(left * right) != pi_T(left) * pi_T(right):
                return CheckStatus.failed, f'{left!r} and {right!r}'
        return PASSED

    # --- коэффициенты Тейлора и ξ

    def taylor_xi(self) -> None:
        points = (
            ZERO_SHIFT_1,
            as_shift((0,), (HALF,)),
            as_shift((HALF,), (0,)),
            as_shift((Fraction(1, 3),), (Fraction(1, 4),)),
        )
        T = self.order + 1  # noqa: N806
        for X in points:  # noqa: N806
            for lam, mu in product((-1, 0, 1), repeat=2):
                self.check(
                    f'elliptic transformation at X={X}, X\'=({lam},{mu})',
                    'taylor/elliptic',
                    lambda X=X, Y=as_shift((lam,), (mu,)): self._elliptic(X, Y, T),  # noqa: N803
                    q=self.order,
                    w=self.jet_order,
                )
        for X, Y in SLASH_PAIRS:  # noqa: N806
            self.check(
                f'slash composition at X={X}, X\'={Y}',
                'taylor/slash',
                lambda X=X, Y=Y: self._slash_composition(X, Y),  # noqa: N803
                q=SLASH_T,
            )
            self.check(
                f'theta invariant under X\'={Y}',
                'taylor/slash',
                lambda Y=Y: verdict(slash_X(theta(SLASH_T), Y).agrees_with(theta(SLASH_T))),  # noqa: N803
                q=SLASH_T,
            )
        for ell in range(4):
            for r in (1, 2):
                self.check(
                    f'delta_tau^{r} g_{ell} at X=0',
                    'taylor/delta-tau',
                    lambda ell=ell, r=r: self._delta_power(ZERO_SHIFT_1, ell, r, 1),
                    q=self.fit_order(1 + ell),
                    ell=ell,
                    r=r,
                )
        for ell in (1, 2):
            self.check(
                f'delta_tau g_{ell} at mu=1/2',
                'taylor/delta-tau',
                lambda ell=ell: self._delta_power(as_shift((0,), (HALF,)), ell, 1, 2),
                q=self.fit_order(1 + ell, 2),
                ell=ell,
                r=1,
            )
        for ell in (1, 3):
            for variant in VARIANTS:
                self.check(
                    f'xi_{ell} ({variant}) modular',
                    'taylor/xi',
                    lambda ell=ell, variant=variant: self._xi_modular(ell, variant),
                    q=self.fit_order(1 + ell, 1, 0),
                    ell=ell,
                )

    def _elliptic(self, X: Shift, Y: Shift, T: int) -> Outcome:  # noqa: N803
        ctx = f1_context(T)
        moved = as_shift([a + b for a, b in zip(X[0], Y[0])], [a + b for a, b in zip(X[1], Y[1])])
        left = double_slash(ctx, moved, self.jet_order).scale(rho(Y, ctx.index) * zeta(X, Y, ctx.index))
        return verdict(left.agrees_with(double_slash(ctx, X, self.jet_order)))

    def _slash_composition(self, X: Shift, Y: Shift) -> Outcome:  # noqa: N803
        form = theta(SLASH_T)
        total = as_shift([a + b for a, b in zip(X[0], Y[0])], [a + b for a, b in zip(X[1], Y[1])])
        left = slash_X(slash_X(form, X), Y)
        right = slash_X(form, total).scale(slash_cocycle(X, Y, THETA_INDEX))
        return verdict(left.agrees_with(right))

    def _delta_power(self, X: Shift, ell: int, r: int, level: int) -> Outcome:  # noqa: N803
        weight = 1 + ell
        order = self.fit_order(weight, level)
        ctx = f1_context(order + 1)
        g = g_taylor(ctx, X, (ell,))
        expected = delta_tau_power(ctx, X, (ell,), r)
        if g.is_zero():
            return verdict(expected.is_zero(), 'delta_tau of a zero coefficient is not zero')
        certificate = certify(g, weight, level, None, self.margin, f'g_{ell}')
        if not certificate.certified:
            return from_certificate(certificate)
        image = certificate.as_poly()
        for _ in range(r):
            image = delta_tau(image)
        ok = image.expand(order).agrees_with(expected)
        if not ok and certificate.heuristic:
            return CheckStatus.inconclusive, Msg.mismatch.value
        return verdict(ok)

    def _xi_modular(self, ell: int, variant: str) -> Outcome:
        order = self.fit_order(1 + ell, 1, 0)
        series = xi(f1_context(order + 1), ZERO_SHIFT_1, (ell,), variant=variant)
        return self.certify_series(series, 1 + ell, 1, 0, f'xi_{ell}')

    # --- уровень N

    def level_n(self) -> None:
        integral = {
            2: [((1, 1), (HALF, HALF)), ((2, 2), (HALF, HALF)), ((1, 3), (HALF, HALF))],
            3: [((1, 1), (Fraction(1, 3), Fraction(2, 3))), ((2, 2), (Fraction(1, 3), Fraction(2, 3)))],
        }
        fractional = {
            2: [((2,), (HALF,)), ((3,), (HALF,))],
            3: [((2,), (Fraction(1, 3),)), ((1, 2), (Fraction(1, 3), Fraction(1, 3)))],
        }
        levels = [self.level] if self.level in integral else list(integral)
        for level in levels:
            for ks, shifts in integral[level]:
                weight = sum(ks)
                self.check(
                    f'<Q{ks} at {tuple(str(a) for a in shifts)}> level {level}',
                    'level-n/integral-shift',
                    lambda ks=ks, shifts=shifts, level=level: self._level_n_certify(ks, shifts, level),
                    q=self.fit_order(weight, level),
                    level=level,
                    weight=weight,
                )
            for ks, shifts in fractional[level]:
                self.check(
                    f'<Q{ks} at {tuple(str(a) for a in shifts)}> / <Q1> level {level}',
                    'level-n/ratio',
                    lambda ks=ks, shifts=shifts, level=level: self._level_n_ratio(ks, shifts, level),
                    q=self.order,
                    level=level,
                )
        for a in (HALF, Fraction(1, 3), Fraction(1, 4)):
            self.check(
                f'<Q1(a)> Theta(a) constant at a={a}',
                'level-n/klein',
                lambda a=a: self._klein(a),
                q=self.order,
            )

    def _level_n_certify(self, ks: Sequence[int], shifts: Sequence[Fraction], level: int) -> Outcome:
        status, detail = self.certify_bracket(q_product(ks, shifts), sum(ks), level, self.depth, f'Q{ks}')
        if status == CheckStatus.failed:
            return CheckStatus.inconclusive, detail
        return status, detail

    def _level_n_ratio(self, ks: Sequence[int], shifts: Sequence[Fraction], level: int) -> Outcome:
        total = sum(shifts, Fraction(0))
        numerator = qbracket(q_product(ks, shifts), self.order)
        ratio = numerator / qbracket(families.Q(1, total), self.order)
        if not ratio.is_zero() and ratio.valuation < 0:
            return CheckStatus.failed, f'pole of order {-ratio.valuation}'
        try:
            for c in ratio.terms.values():
                c.restrict(2 * level)
        except BadParam as error:
            return CheckStatus.failed, str(error)
        return PASSED

    def _klein(self, a: Fraction) -> Outcome:
        product_series = qbracket(families.Q(1, a), self.order) * Theta_value(a, self.order + 1)
        return verdict(product_series.agrees_with(QSeries.constant(cyc_root(-a / 2), self.order + 1)))

    # --- проекции

    def projections(self) -> None:
        for k in (4, 6, 8):
            self.check(
                f'<h{k}> modular',
                'projections/h-k',
                lambda k=k: self.certify_bracket(h(k).evaluate(), k, 1, 0, f'h{k}'),
                q=self.fit_order(k, 1, 0),
                weight=k,
            )
        q2 = FormalPoly.Q(2)
        sample = {
            'Q4': FormalPoly.Q(4),
            'Q6': FormalPoly.Q(6),
            'Q3^2': FormalPoly.Q(3) ** 2,
            'Q5Q3': FormalPoly.Q(5) * FormalPoly.Q(3),
        }
        for name, f in sample.items():
            weight = int(f.weight)
            self.check(f'pi(Q2*{name}) = 0', 'projections/kernel', lambda f=f: verdict(pi_BO(q2 * f).is_zero()))
            self.check(
                f'pi idempotent on {name}', 'projections/idempotent', lambda f=f: verdict(pi_BO(pi_BO(f)) == pi_BO(f))
            )
            self.check(
                f'general template agrees on {name}',
                'projections/template',
                lambda f=f: verdict(pi_general(f, M_bo, D_bo) == pi_BO(f)),
            )
            self.check(
                f'splitting reconstructs {name}',
                'projections/splitting',
                lambda f=f: verdict(join(split(f)) == f.reduced()),
            )
            self.check(
                f'<pi({name})> modular',
                'projections/modular',
                lambda f=f, weight=weight, name=name: self.certify_bracket(
                    pi_BO(f).evaluate(), weight, 1, 0, f'pi({name})'
                ),
                q=self.fit_order(weight, 1, 0),
                weight=weight,
            )
        for k in (2, 4, 6):
            self.check(
                f'h{k} = pi(Q{k})', 'projections/h-k', lambda k=k: verdict(h(k) == pi_BO(FormalPoly.Q(k)))
            )
            self.check(
                f'fractional power formula at weight {k}',
                'projections/fractional',
                lambda k=k: verdict(pi_fractional(FormalPoly.Q(k)) == pi_BO(FormalPoly.Q(k))),
            )
        for name, f in (('Q2', FormalPoly.Q(2)), ('Q4', FormalPoly.Q(4))):
            weight = 2 + int(f.weight)
            self.check(
                f'<Q2*{name}> not modular',
                'projections/complement',
                lambda f=f, weight=weight: self._not_modular(q2 * f, weight),
                q=self.fit_order(weight, 1, 0),
                weight=weight,
            )
            self.check(
                f'<Q2*{name}> = (D + G2)<{name}>',
                'projections/Q2-action',
                lambda f=f: verdict(
                    qbracket((q2 * f).evaluate(), self.order).agrees_with(D_plus_G2(qbracket(f.evaluate(), self.order)))
                ),
                q=self.order,
            )
        for a, b in ((2, 2), (2, 3), (3, 4)):
            self.check(
                f'D2(Q{a} Q{b}) pairs the factors',
                'operators/second-order',
                lambda a=a, b=b: verdict(
                    D(FormalPoly.Q(a) * FormalPoly.Q(b), 2) == FormalPoly.Q(a + b - 2) * (2 * comb(a + b - 2, a - 1))
                ),
            )
        for k, a in ((3, 0), (3, HALF), (4, Fraction(1, 3))):
            self.check(
                f'D1 lowers Q{k}({a})',
                'operators/first-order',
                lambda k=k, a=a: verdict(partial(FormalPoly.Q(k, a)) == FormalPoly.Q(k - 1, a)),
            )

    def _not_modular(self, f: FormalPoly, weight: int) -> Outcome:
        status, detail = self.certify_bracket(f.evaluate(), weight, 1, 0)
        if status == CheckStatus.passed:
            return CheckStatus.failed, Msg.certified_unexpectedly.value
        return CheckStatus.passed, detail

    # --- алгебра дифференцирований

    def j_algebra(self) -> None:
        for rank in (1, 2):
            ops = derivations.operators(rank)
            elements = derivations.random_elements(rank, self.samples, 3, self.seed)
            for x, y in derivations.pairs(ops):
                self.check(
                    f'[{x!r}, {y!r}] rank {rank}',
                    'derivations/commutators',
                    lambda x=x, y=y, elements=elements: verdict(
                        all(derivations.commutator_defect(x, y, e) == 0 for e in elements), f'defect for {x!r}, {y!r}'
                    ),
                    rank=rank,
                    samples=self.samples,
                )
        self.check(
            'delta_tau F2 = 0',
            'derivations/n-point',
            lambda: verdict(derivations.apply_delta(Op('delta_tau'), derivations.F2()) == 0),
        )
        self.check(
            'delta_z1 F2 = F1(z1 + z2)',
            'derivations/n-point',
            lambda: verdict(derivations.apply_delta(Op('delta_z', 1), derivations.F2()) == derivations.F1(1, 1)),
        )
        T = self.order + 1  # noqa: N806
        for op in (Op('D_tau'), Op('D_z', 1)):
            self.check(
                f'{op!r} on F1 agrees with jets',
                'derivations/jets',
                lambda op=op: verdict(derivations.jet_rule_agrees(op, derivations.F1(1), 1, T, self.jet_order)),
                q=self.order,
                w=self.jet_order,
            )


SUITES: dict[str, Callable[[SuiteRunner], None]] = {
    'bloch-okounkov': SuiteRunner.bloch_okounkov,
    'hooks': SuiteRunner.hooks,
    'moments': SuiteRunner.moments,
    'double-moments': SuiteRunner.double_moments,
    'taylor-xi': SuiteRunner.taylor_xi,
    'level-N': SuiteRunner.level_n,
    'projections': SuiteRunner.projections,
    'j-algebra': SuiteRunner.j_algebra,
}
