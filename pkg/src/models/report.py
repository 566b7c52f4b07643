from enum import Enum
from typing import Optional

from models.utils import DefaultModel


class CheckStatus(str, Enum):
    passed = 'pass'
    failed = 'fail'
    inconclusive = 'inconclusive'


class CheckRecord(DefaultModel):
    """Результат одной проверки набора."""

    name: str
    anchor: str
    status: CheckStatus
    orders: dict[str, int] = {}
    detail: str = ''
    runtime: Optional[float] = None


class SuiteReport(DefaultModel):
    suite: str
    seed: int
    checks: list[CheckRecord]

    @property
    def failed(self) -> bool:
        return any(c.status == CheckStatus.failed for c in self.checks)

    def deterministic_json(self) -> str:
        """JSON без полей времени."""
        return self.json(exclude={'checks': {'__all__': {'runtime'}}})
