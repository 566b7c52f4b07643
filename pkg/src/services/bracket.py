from functools import lru_cache
from typing import Optional

from arith.qseries import QSeries
from brackets.qbracket import qbracket
from core.config import settings
from core.logger import logger as _logger
from db.cache import CacheProtocol, get_cache_instance
from models.series import SeriesModel
from services.family_spec import build_family, parse_family

logger = _logger(__name__)


class BracketService:
    def __init__(self, cache: CacheProtocol):
        """
        :param cache: класс, реализующий интерфейс CacheProtocol
        """
        self.cache = cache

    @staticmethod
    def cache_key(spec: str, order: int) -> str:
        return f'qbracket:{spec.replace(" ", "")}:{order}'

    def get_bracket(self, spec: str, order: Optional[int] = None) -> QSeries:
        """
        q-скобка функции на разбиениях по её описанию.
        :param spec: описание семейства, например `Q(4)*Q(3; a=1/2)`
        :param order: старшая степень q
        :return: точные коэффициенты до q^order
        """
        order = settings.bracket.ORDER if order is None else order
        parse_family(spec)
        key = self.cache_key(spec, order)
        if (cached := self.cache.get(key)) is not None:
            logger.debug('[+] Return bracket from cache. key:%s', key)
            return SeriesModel.parse_raw(cached).to_series()
        series = qbracket(build_family(spec, order), order)
        self.cache.set(key, SeriesModel.from_series(series).json().encode())
        logger.debug('[+] Computed bracket. key:%s', key)
        return series


@lru_cache()
def get_bracket_service() -> BracketService:
    """
    Провайдер для BracketService.
    :return: Объект класса BracketService для командной строки.
    """
    return BracketService(get_cache_instance())
