"""JSON-кодеки q-рядов, джетов и разложений Фурье."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Union

from arith.cyclotomic import CycQ, degree
from arith.qseries import QSeries
from jacobi.fourier import FourierForm
from jacobi.jets import JetForm
from models.utils import DefaultModel, parse_rational, rational_str


class CycModel(DefaultModel):
    """Элемент Q(ζ_M): ненулевые координаты степенного базиса парами [e, 'p/q']."""

    modulus: int
    vec: list[tuple[str, str]]

    @classmethod
    def from_cyc(cls, value: CycQ) -> CycModel:
        return cls(modulus=value.modulus, vec=[(str(e), rational_str(c)) for e, c in value.coeffs.items()])

    def to_cyc(self) -> CycQ:
        dense = [Fraction(0)] * degree(self.modulus)
        for e, c in self.vec:
            dense[int(e)] = parse_rational(c)
        return CycQ(self.modulus, dense)


class TermModel(DefaultModel):
    exp: str
    coeff: CycModel


class SeriesModel(DefaultModel):
    denom: int
    trunc: Optional[str]
    terms: list[TermModel]

    @classmethod
    def from_series(cls, series: QSeries) -> SeriesModel:
        return cls(
            denom=series.denom,
            trunc=None if series.trunc is None else rational_str(series.trunc),
            terms=[
                TermModel(exp=rational_str(e), coeff=CycModel.from_cyc(c)) for e, c in sorted(series.terms.items())
            ],
        )

    def to_series(self) -> QSeries:
        trunc = None if self.trunc is None else parse_rational(self.trunc)
        return QSeries({parse_rational(t.exp): t.coeff.to_cyc() for t in self.terms}, trunc)


def _index_rows(index) -> Optional[list[list[str]]]:
    if index is None:
        return None
    return [[rational_str(x) for x in row] for row in index]


def _index_matrix(rows: Optional[list[list[str]]]):
    if rows is None:
        return None
    return tuple(tuple(parse_rational(x) for x in row) for row in rows)


def _bound(value: Union[int, float]) -> Optional[int]:
    return None if value == math.inf else int(value)


class JetCoefficientModel(DefaultModel):
    ell: list[int]
    series: SeriesModel


class JetFormModel(DefaultModel):
    """Джет: trunc = None означает отсутствие усечения по этой переменной."""

    rank: int
    trunc: list[Optional[int]]
    pole_orders: list[int]
    q_trunc: Optional[str]
    weight: Optional[int]
    index: Optional[list[list[str]]]
    coeffs: list[JetCoefficientModel]

    @classmethod
    def from_jet(cls, jet: JetForm) -> JetFormModel:
        return cls(
            rank=jet.rank,
            trunc=[_bound(t) for t in jet.trunc],
            pole_orders=list(jet.pole_orders),
            q_trunc=None if jet.q_trunc is None else rational_str(jet.q_trunc),
            weight=jet.weight,
            index=_index_rows(jet.index),
            coeffs=[
                JetCoefficientModel(ell=list(ell), series=SeriesModel.from_series(c))
                for ell, c in sorted(jet.coeffs.items())
            ],
        )

    def to_jet(self) -> JetForm:
        return JetForm(
            self.rank,
            {tuple(c.ell): c.series.to_series() for c in self.coeffs},
            [math.inf if t is None else t for t in self.trunc],
            self.pole_orders,
            None if self.q_trunc is None else parse_rational(self.q_trunc),
            self.weight,
            _index_matrix(self.index),
        )


class FourierCoefficientModel(DefaultModel):
    r: list[str]
    series: SeriesModel


class FourierFormModel(DefaultModel):
    rank: int
    window: str
    q_trunc: Optional[str]
    weight: Optional[str]
    index: Optional[list[list[str]]]
    region: str
    poles: list[list[int]]
    coeffs: list[FourierCoefficientModel]

    @classmethod
    def from_fourier(cls, form: FourierForm) -> FourierFormModel:
        return cls(
            rank=form.rank,
            window=rational_str(form.window),
            q_trunc=None if form.q_trunc is None else rational_str(form.q_trunc),
            weight=None if form.weight is None else rational_str(form.weight),
            index=_index_rows(form.index),
            region=form.region,
            poles=[list(p) for p in form.poles],
            coeffs=[
                FourierCoefficientModel(r=[rational_str(x) for x in r], series=SeriesModel.from_series(c))
                for r, c in sorted(form.coeffs.items())
            ],
        )

    def to_fourier(self) -> FourierForm:
        return FourierForm(
            self.rank,
            {tuple(parse_rational(x) for x in c.r): c.series.to_series() for c in self.coeffs},
            parse_rational(self.window),
            None if self.q_trunc is None else parse_rational(self.q_trunc),
            None if self.weight is None else parse_rational(self.weight),
            _index_matrix(self.index),
            self.region,
            [tuple(p) for p in self.poles],
        )
