import pytest

from core.exceptions import NotAUnit, UnknownSuite
from models.report import CheckStatus
from services.suites import PASSED, SUITES, SuiteRunner, verdict


@pytest.fixture
def suites_exepted():
    return [
        'bloch-okounkov',
        'hooks',
        'moments',
        'double-moments',
        'taylor-xi',
        'level-N',
        'projections',
        'j-algebra',
    ]


def test_suite_names(suites_exepted):
    assert list(SUITES) == suites_exepted, 'Неверный список наборов'


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        SuiteRunner().run('no-such-suite')


def test_check_records_outcome():
    """Успешная и проваленная проверки попадают в отчёт по порядку."""
    runner = SuiteRunner(order=4, seed=7)
    runner.check('ok', 'test/ok', lambda: PASSED, q=4)
    runner.check('bad', 'test/bad', lambda: verdict(False))
    first, second = runner.records
    assert first.status == CheckStatus.passed and first.orders == {'q': 4}
    assert second.status == CheckStatus.failed
    assert second.detail == 'series differ'


def test_check_catches_computation_errors():
    """Ошибка вычисления превращается в проваленную проверку."""

    def broken():
        raise NotAUnit('leading coefficient is zero')

    record = SuiteRunner().check('broken', 'test/broken', broken)
    assert record.status == CheckStatus.failed
    assert record.detail.startswith('NotAUnit')


def test_runner_defaults():
    runner = SuiteRunner()
    assert runner.order == 8 and runner.margin == 10 and runner.seed == 0


def test_fit_order():
    """Порядок сертификации покрывает базис и запас."""
    runner = SuiteRunner(order=4, margin=10)
    assert runner.fit_order(4, 1, 2) == 12

