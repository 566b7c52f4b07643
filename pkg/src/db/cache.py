from hashlib import sha256
from pathlib import Path
from typing import Optional, Protocol

import orjson

from core.config import settings
from core.logger import logger as _logger

logger = _logger(__name__)


class CacheProtocol(Protocol):
    def get(self, *args, **kwargs) -> Optional[bytes]:
        ...

    def set(self, *args, **kwargs) -> None:
        ...

    def flushall(self, *args, **kwargs) -> None:
        ...


class FileCache:
    """Кэш результатов: по файлу на ключ в каталоге `settings.cache.path`."""

    def __init__(self, directory: Path):
        self.directory = directory

    def _file(self, key: str) -> Path:
        return self.directory / f'{sha256(key.encode()).hexdigest()}.json'

    def get(self, key: str) -> Optional[bytes]:
        path = self._file(key)
        if not path.exists():
            return None
        entry = orjson.loads(path.read_bytes())
        if entry.get('key') != key:
            return None
        logger.debug('[+] cache hit %s', key)
        return orjson.dumps(entry['value'])

    def set(self, key: str, value: bytes) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        self._file(key).write_bytes(orjson.dumps({'key': key, 'value': orjson.loads(value)}))

    def flushall(self) -> None:
        if not self.directory.exists():
            return
        for path in self.directory.glob('*.json'):
            path.unlink()
        logger.debug('[+] cache flushed at %s', self.directory)


class NullCache:
    def get(self, key: str) -> Optional[bytes]:
        return None

    def set(self, key: str, value: bytes) -> None:
        pass

    def flushall(self) -> None:
        pass


def get_cache_instance() -> CacheProtocol:
    if not settings.cache.ENABLED:
        return NullCache()
    return FileCache(settings.cache.path)
