"""Кольцо итерированных рядов Лорана в области |w_1| ≫ |w_2| ≫ … ≫ |w_n|.

Окно задаётся по суффиксным суммам t_k = a_k + … + a_n: моном известен при t_k < hi[k] для всех k,
все мономы носителя удовлетворяют t_k ≥ lo[k].
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from arith.cyclotomic import Scalar
from arith.qseries import QSeries
from core.exceptions import BadParam, JetOrderExceeded, NonOrthogonalPoles
from core.logger import logger as _logger
from jacobi.jets import Exps, JetForm, comb_multi, compositions, min_trunc, product_q_trunc

logger = _logger(__name__)

Bound = Union[int, float]


def suffix_sums(exps: Sequence[int]) -> tuple[int, ...]:
    out, acc = [], 0
    for a in reversed(exps):
        acc += a
        out.append(acc)
    return tuple(reversed(out))


def _binomial(e: int, j: int) -> Fraction:
    """C(e, j) для любого целого e."""
    out = Fraction(1)
    for i in range(j):
        out = out * (e - i) / (i + 1)
    return out


class IteratedLaurent:
    __slots__ = ('rank', 'coeffs', 'lo', 'hi', 'q_trunc')

    def __init__(
        self,
        rank: int,
        coeffs: Mapping[Exps, QSeries],
        lo: Sequence[int],
        hi: Sequence[Bound],
        q_trunc: Optional[Fraction] = None,
    ):
        self.rank = rank
        self.lo = tuple(lo)
        self.hi = tuple(hi)
        clean = {}
        for ell, c in coeffs.items():
            t = suffix_sums(ell)
            if any(x >= h for x, h in zip(t, self.hi)):
                continue
            if q_trunc is not None:
                c = c.truncate(q_trunc)
            if not c.is_zero():
                clean[tuple(ell)] = c
        self.coeffs = clean
        self.q_trunc = q_trunc

    @classmethod
    def one(cls, rank: int) -> IteratedLaurent:
        return cls(rank, {(0,) * rank: QSeries.constant(1)}, (0,) * rank, (math.inf,) * rank)

    @classmethod
    def from_univariate(
        cls, jet: JetForm, subset: Sequence[int], rank: int, window: Sequence[Bound]
    ) -> IteratedLaurent:
        """f(s) при s = Σ_{i∈subset} w_i; отрицательные степени s раскладываются по старшей переменной.

        window задаёт окно порождения: хвост s^{−1} обрывается по t_{d+1} < window[d+1], d = min(subset).
        """
        if jet.rank != 1:
            raise BadParam('only rank-1 jets can be composed with a subset sum')
        subset = sorted(subset)
        if not subset:
            raise BadParam('empty subset sum')
        d = subset[0]
        rest = subset[1:]
        tail = window[d + 1] if d + 1 < rank else math.inf
        if rest and tail == math.inf:
            raise BadParam('negative powers of a subset sum need a finite window')
        coeffs: dict[Exps, QSeries] = {}

        def put(key: list[int], value: QSeries) -> None:
            key = tuple(key)
            coeffs[key] = coeffs[key] + value if key in coeffs else value

        for (e,), c in jet.coeffs.items():
            if e >= 0:
                for split in compositions(e, len(subset)):
                    key = [0] * rank
                    for p, x in zip(subset, split):
                        key[p] = x
                    put(key, c * comb_multi(split))
                continue
            # s^e = Σ_j C(e, j) w_d^{e−j} (Σ rest)^j
            j_max = int(tail) if rest else 1
            for j in range(j_max):
                b = _binomial(e, j)
                if rest:
                    splits = compositions(j, len(rest))
                elif j == 0:
                    splits = [()]
                else:
                    splits = []
                for split in splits:
                    key = [0] * rank
                    key[d] = e - j
                    for p, x in zip(rest, split):
                        key[p] = x
                    put(key, c * (b * comb_multi(split)))
        low = min(-jet.pole_orders[0], 0)
        lo = [low if k <= d else 0 for k in range(rank)]
        hi: list[Bound] = [math.inf] * rank
        hi[0] = jet.trunc[0]
        if jet.pole_orders[0] and rest:
            hi[d + 1] = tail
        return cls(rank, coeffs, lo, hi, jet.q_trunc)

    def __add__(self, other: IteratedLaurent) -> IteratedLaurent:
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            coeffs[e] = coeffs[e] + c if e in coeffs else c
        return IteratedLaurent(
            self.rank,
            coeffs,
            tuple(min(a, b) for a, b in zip(self.lo, other.lo)),
            tuple(min(a, b) for a, b in zip(self.hi, other.hi)),
            min_trunc(self.q_trunc, other.q_trunc),
        )

    def scale(self, value: Union[QSeries, Scalar]) -> IteratedLaurent:
        coeffs = {e: c * value for e, c in self.coeffs.items()}
        return IteratedLaurent(self.rank, coeffs, self.lo, self.hi, self.q_trunc)

    def __neg__(self) -> IteratedLaurent:
        return self.scale(-1)

    def __mul__(self, other: Union[IteratedLaurent, QSeries, Scalar]) -> IteratedLaurent:
        if not isinstance(other, IteratedLaurent):
            return self.scale(other)
        hi = tuple(min(hx + ly, hy + lx) for hx, hy, lx, ly in zip(self.hi, other.hi, self.lo, other.lo))
        lo = tuple(a + b for a, b in zip(self.lo, other.lo))
        coeffs: dict[Exps, QSeries] = {}
        for e1, c1 in self.coeffs.items():
            t1 = suffix_sums(e1)
            for e2, c2 in other.coeffs.items():
                t2 = suffix_sums(e2)
                if any(a + b >= h for a, b, h in zip(t1, t2, hi)):
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                term = c1 * c2
                coeffs[e] = coeffs[e] + term if e in coeffs else term
        return IteratedLaurent(self.rank, coeffs, lo, hi, product_q_trunc(self, other))

    __rmul__ = __mul__

    def covers(self, box: Sequence[int]) -> bool:
        """Известны ли все мономы с a_i < box_i."""
        top = suffix_sums([b - 1 for b in box])
        return all(t < h for t, h in zip(top, self.hi))

    def orthogonal_violations(self, low: int = -1) -> list[Exps]:
        """Мономы с показателем ниже low по какой-либо переменной."""
        return sorted(e for e in self.coeffs if any(a < low for a in e))

    def to_jet(self, order: int, q_trunc: Optional[Fraction] = None, **meta) -> JetForm:
        """Честная струя a_i ∈ [−1, order) после проверки ортогональности полюсов."""
        bad = self.orthogonal_violations()
        if bad:
            logger.debug('[+] non-orthogonal monomials survive: %s', bad[:5])
            raise NonOrthogonalPoles(f'monomials {bad[:3]} have exponents below -1')
        box = (order,) * self.rank
        if not self.covers(box):
            raise JetOrderExceeded(f'iterated window {self.hi} does not cover the jet box {box}')
        coeffs = {e: c for e, c in self.coeffs.items() if all(-1 <= a < order for a in e)}
        poles = tuple(1 if any(e[i] < 0 for e in coeffs) else 0 for i in range(self.rank))
        return JetForm(self.rank, coeffs, box, poles, min_trunc(self.q_trunc, q_trunc), **meta)

    def monomials(self) -> Iterable[Exps]:
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return f'IteratedLaurent(rank={self.rank}, terms={len(self.coeffs)}, lo={self.lo}, hi={self.hi})'


def required_window(rank: int, order: int) -> tuple[int, ...]:
    """Окно, при котором известен весь ящик a_i ∈ [−1, order)."""
    return tuple((rank - k) * (order - 1) + 1 for k in range(rank))

