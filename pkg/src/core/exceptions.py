class QBracketError(Exception):
    """Базовая ошибка вычислений."""


class NotAUnit(QBracketError):
    pass


class TruncationUnderflow(QBracketError):
    pass


class BadParam(QBracketError):
    pass


class TruncExceeded(QBracketError):
    pass


class NonOrthogonalPoles(QBracketError):
    pass


class WindowOverflow(QBracketError):
    pass


class NotUnimodular(QBracketError):
    pass


class JetOrderExceeded(QBracketError):
    pass


class RecursionRankUnsupported(QBracketError):
    pass


class NotInGeneratorRing(QBracketError):
    pass


class UnsupportedLevel(QBracketError):
    pass


class InsufficientTruncation(QBracketError):
    pass


class CertifyFailed(QBracketError):
    pass


class PochhammerZero(QBracketError):
    pass


class NotHomogeneous(QBracketError):
    pass


class FamilyParseError(QBracketError):
    pass


class UnknownSuite(QBracketError):
    pass
