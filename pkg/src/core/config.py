from logging import config as logging_config
from pathlib import Path

from pydantic import BaseSettings

from core.logger import LOGGING

logging_config.dictConfig(LOGGING)


class BaseConfig(BaseSettings):
    class Config:
        env_file = Path(Path(__file__).parent.parent.parent, '.env')
        env_file_encoding = 'utf-8'


class BracketSettings(BaseConfig):
    ORDER: int = 8
    JET_ORDER: int = 4

    class Config:
        env_prefix = 'BRACKET_'


class CertifySettings(BaseConfig):
    MARGIN: int = 10
    LEVEL: int = 1
    SUPPORTED_LEVELS: tuple[int, ...] = (1, 2, 3, 4)

    class Config:
        env_prefix = 'CERTIFY_'


class CacheSettings(BaseConfig):
    ENABLED: bool = True
    DIR: str = '.qbracket_cache'

    class Config:
        env_prefix = 'CACHE_'

    @property
    def path(self) -> Path:
        return Path(self.DIR).expanduser()


class SuiteSettings(BaseConfig):
    SEED: int = 0
    ORDER: int = 8
    JET_ORDER: int = 4
    SAMPLES: int = 20
    MAX_ORDER: int = 30

    class Config:
        env_prefix = 'SUITE_'


class ProjectSettings(BaseConfig):
    PROJECT_NAME: str = 'qbracket'
    BASE_DIR = Path(__file__).parent.parent
    bracket: BracketSettings = BracketSettings()
    certify: CertifySettings = CertifySettings()
    cache: CacheSettings = CacheSettings()
    suite: SuiteSettings = SuiteSettings()


settings = ProjectSettings()
