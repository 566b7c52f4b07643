from __future__ import annotations

from fractions import Fraction

from models.utils import DefaultModel, parse_rational, rational_str
from structure.formal import FormalPoly


class FactorModel(DefaultModel):
    k: int
    a: str = '0'
    exp: str = '1'


class MonomialModel(DefaultModel):
    coeff: str
    factors: list[FactorModel]


class FormalPolyModel(DefaultModel):
    """Элемент формальной алгебры списком мономов."""

    level: int = 1
    monomials: list[MonomialModel]

    @classmethod
    def from_poly(cls, poly: FormalPoly) -> FormalPolyModel:
        monomials = [
            MonomialModel(
                coeff=rational_str(coeff),
                factors=[
                    FactorModel(k=v.k, a=rational_str(v.a), exp=rational_str(e))
                    for v, e in sorted(powers.items(), key=lambda item: (item[0].k, item[0].a))
                ],
            )
            for powers, coeff in poly.terms()
        ]
        monomials.sort(key=lambda m: [(f.k, Fraction(f.a), Fraction(f.exp)) for f in m.factors])
        return cls(level=poly.level, monomials=monomials)

    def to_poly(self) -> FormalPoly:
        total = FormalPoly.constant(0, self.level)
        for monomial in self.monomials:
            term = FormalPoly.constant(parse_rational(monomial.coeff), self.level)
            for f in monomial.factors:
                term = term * FormalPoly.Q(f.k, parse_rational(f.a)) ** parse_rational(f.exp)
            total = total + term
        return total
