from enum import Enum


class ParseMessages(str, Enum):
    empty = 'Empty family description'
    bad_symbol = 'Unexpected symbol {symbol!r} at position {pos}'
    expected = 'Expected {expected}, got {got!r}'
    unknown_family = 'Unknown family {name!r}; expected Q, H, S, T or Todot'
    bad_arguments = 'Bad arguments for {name}: {detail}'


class CertifyMessages(str, Enum):
    not_a_series = 'Input is not a serialized q-series: {detail}'
    no_input = 'No series given: pass a file or pipe JSON to stdin'


class SuiteMessages(str, Enum):
    unknown = 'Unknown suite {suite!r}; expected one of {known}'
    mismatch = 'series differ'
    not_certified = 'not certified: {status}'
    certified_unexpectedly = 'certified although membership must fail'


class CliMessages(str, Enum):
    cache_flushed = 'Cache flushed'
    failed_checks = '{count} check(s) failed in {suite}'
