from __future__ import annotations

from quasimodular.certify import Certificate
from models.series import CycModel
from models.utils import DefaultModel


class CertificateModel(DefaultModel):
    """Сертификат принадлежности ряда кольцу квазимодулярных форм."""

    target_id: str = ''
    status: str
    weight: int
    level: int
    depth: int
    basis: list[str]
    solution: list[CycModel]
    solve_order: int
    margin: int
    heuristic: bool

    @classmethod
    def from_certificate(cls, certificate: Certificate) -> CertificateModel:
        return cls(
            target_id=certificate.target_id,
            status=certificate.status.value,
            weight=certificate.weight,
            level=certificate.level,
            depth=certificate.depth,
            basis=certificate.basis,
            solution=[CycModel.from_cyc(c) for c in certificate.solution],
            solve_order=certificate.solve_order,
            margin=certificate.margin,
            heuristic=certificate.heuristic,
        )
