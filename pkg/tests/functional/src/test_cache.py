import orjson
import pytest

from core.config import settings
from db.cache import FileCache, NullCache, get_cache_instance
from models.series import SeriesModel
from services.bracket import BracketService, get_bracket_service


@pytest.fixture
def value_exepted():
    return {'denom': 1, 'trunc': '2', 'terms': []}


def test_file_cache_roundtrip(file_cache, value_exepted):
    """Запись и чтение по ключу."""
    assert file_cache.get('qbracket:Q(2):1') is None
    file_cache.set('qbracket:Q(2):1', orjson.dumps(value_exepted))
    assert orjson.loads(file_cache.get('qbracket:Q(2):1')) == value_exepted, 'Кэш вернул другое значение'
    assert file_cache.get('qbracket:Q(4):1') is None


def test_file_cache_flush(file_cache, value_exepted):
    file_cache.set('key', orjson.dumps(value_exepted))
    file_cache.flushall()
    assert file_cache.get('key') is None, 'Кэш не очищен'


def test_disabled_cache(monkeypatch):
    """При выключенном кэше используется NullCache."""
    monkeypatch.setattr(settings.cache, 'ENABLED', False)
    cache = get_cache_instance()
    assert isinstance(cache, NullCache)
    cache.set('key', b'{}')
    assert cache.get('key') is None


def test_bracket_service_key():
    """Пробелы в описании не влияют на ключ."""
    assert BracketService.cache_key('Q(4) * Q(3; a=1/2)', 5) == 'qbracket:Q(4)*Q(3;a=1/2):5'


def test_bracket_service_uses_cache(file_cache, g2_exepted):
    """Второй запрос читается из кэша."""
    service = BracketService(file_cache)
    first = service.get_bracket('Q(2)', 4)
    cached = file_cache.get(service.cache_key('Q(2)', 4))
    assert cached is not None, 'Скобка не сохранена в кэш'
    assert SeriesModel.parse_raw(cached).to_series() == first
    assert service.get_bracket('Q(2)', 4) == g2_exepted, 'Из кэша прочитан другой ряд'


def test_bracket_service_provider(cache_dir):
    """Провайдер строит сервис на файловом кэше из настроек."""
    service = get_bracket_service()
    assert isinstance(service.cache, FileCache)
    assert service.cache.directory == settings.cache.path
    assert get_bracket_service() is service
