from fractions import Fraction

import pytest
from click.testing import CliRunner
from settings import test_settings

from arith.qseries import QSeries
from core.config import settings
from db.cache import FileCache
from main import cli
from services.bracket import get_bracket_service
from services.certify import get_certify_service


@pytest.fixture(autouse=True)
def cache_dir(tmp_path, monkeypatch):
    """Кэш каждого теста живёт во временном каталоге."""
    monkeypatch.setattr(settings.cache, 'DIR', str(tmp_path / 'cache'))
    monkeypatch.setattr(settings.cache, 'ENABLED', True)
    get_bracket_service.cache_clear()
    get_certify_service.cache_clear()
    yield tmp_path / 'cache'
    get_bracket_service.cache_clear()
    get_certify_service.cache_clear()


@pytest.fixture
def file_cache(cache_dir):
    return FileCache(cache_dir)


@pytest.fixture
def g2_exepted():
    """𝔾₂ = −1/24 + Σσ₁(n)qⁿ до q⁴."""
    return QSeries.from_list([Fraction(-1, 24), 1, 3, 4, 7])


@pytest.fixture
def make_cli_call():
    runner = CliRunner()

    def inner(*args: str, stdin: str = None):
        return runner.invoke(cli, list(args), input=stdin)

    return inner


@pytest.fixture
def orders():
    return test_settings
