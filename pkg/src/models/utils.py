from fractions import Fraction
from typing import Union

import orjson
from pydantic import BaseModel


def orjson_dumps(value, *, default):
    return orjson.dumps(value, default=default, option=orjson.OPT_SORT_KEYS).decode()


class DefaultModel(BaseModel):
    """Mixin."""

    class Config:
        json_loads = orjson.loads
        json_dumps = orjson_dumps


def rational_str(value: Union[int, Fraction]) -> str:
    """Рациональные числа передаются строками 'p/q'."""
    return str(Fraction(value))


def parse_rational(value: Union[str, int]) -> Fraction:
    return Fraction(value)
