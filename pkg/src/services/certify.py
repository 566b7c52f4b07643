from functools import lru_cache
from typing import Optional

from pydantic import ValidationError

from arith.qseries import QSeries
from core.exceptions import BadParam
from core.logger import logger as _logger
from models.certificate import CertificateModel
from models.series import SeriesModel
from quasimodular.certify import certify
from services.bracket import BracketService, get_bracket_service
from services.response_messages import CertifyMessages as Msg

logger = _logger(__name__)


class CertifyService:
    def __init__(self, brackets: BracketService):
        self.brackets = brackets

    @staticmethod
    def load_series(raw: str) -> QSeries:
        """Ряд из JSON в формате SeriesModel."""
        if not raw.strip():
            raise BadParam(Msg.no_input.value)
        try:
            return SeriesModel.parse_raw(raw).to_series()
        except (ValidationError, ValueError) as error:
            raise BadParam(Msg.not_a_series.value.format(detail=error)) from None

    def certify_series(
        self,
        series: QSeries,
        weight: int,
        level: Optional[int] = None,
        depth: Optional[int] = None,
        margin: Optional[int] = None,
        target_id: str = '',
    ) -> CertificateModel:
        certificate = certify(series, weight, level, depth, margin, target_id)
        logger.debug('[+] Certificate for %s: %s', target_id or 'series', certificate.status.value)
        return CertificateModel.from_certificate(certificate)

    def certify_family(self, spec: str, weight: int, order: int, **kwargs) -> CertificateModel:
        """Сертификат для q-скобки семейства, посчитанной до q^order."""
        series = self.brackets.get_bracket(spec, order)
        return self.certify_series(series, weight, target_id=spec, **kwargs)


@lru_cache()
def get_certify_service() -> CertifyService:
    return CertifyService(get_bracket_service())
