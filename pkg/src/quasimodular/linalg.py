"""Точные линейные системы над ℚ(ζ_M) через приведение к ступенчатому виду в sympy."""
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from arith.cyclotomic import CycQ, degree, power_table
from core.logger import logger as _logger

logger = _logger(__name__)


def _qq(value: Fraction):
    return QQ(value.numerator, value.denominator)


def _fraction(cell) -> Fraction:
    return Fraction(int(cell.p), int(cell.q))


def common_modulus(*groups: Sequence[CycQ]) -> int:
    m = 1
    for group in groups:
        for c in group:
            m = m * c.modulus // gcd(m, c.modulus)
    return m


def _times_power(value: CycQ, e: int, modulus: int) -> tuple[Fraction, ...]:
    """Координаты value·ζ_M^e в степенном базисе."""
    coords = value.lift(modulus)
    table = power_table(modulus)
    out = [Fraction(0)] * degree(modulus)
    for i, c in enumerate(coords):
        if not c:
            continue
        for u, t in enumerate(table[(i + e) % modulus]):
            if t:
                out[u] += c * t
    return tuple(out)


def rational_rref(rows: Sequence[Sequence[Fraction]], width: int) -> tuple[list[list[Fraction]], tuple[int, ...]]:
    """Ступенчатый вид и столбцы ведущих элементов."""
    if not rows:
        return [], ()
    matrix = DomainMatrix([[_qq(Fraction(c)) for c in row] for row in rows], (len(rows), width), QQ)
    reduced, pivots = matrix.rref()
    dense = reduced.to_Matrix()
    return [[_fraction(dense[i, j]) for j in range(width)] for i in range(len(rows))], tuple(pivots)


def rational_rank(rows: Sequence[Sequence[Fraction]], width: int) -> int:
    return len(rational_rref(rows, width)[1])


def solve(matrix: Sequence[Sequence[CycQ]], target: Sequence[CycQ]) -> Optional[list[CycQ]]:
    """Частное решение A·x = b над общим круговым полем (свободные переменные равны 0) или None.

    Неизвестная x_j = Σ_t x_{j,t} ζ^t раскладывается по степенному базису, и система
    переписывается над ℚ с d = φ(M) уравнениями на каждую строку.
    """
    if not matrix:
        return [] if all(b.is_zero() for b in target) else None
    width = len(matrix[0])
    modulus = common_modulus(target, *matrix)
    d = degree(modulus)
    rows = []
    for a_row, b in zip(matrix, target):
        blocks = [_times_power(a, t, modulus) for a in a_row for t in range(d)]
        rhs = b.lift(modulus)
        for u in range(d):
            rows.append([block[u] for block in blocks] + [rhs[u]])
    reduced, pivots = rational_rref(rows, width * d + 1)
    if width * d in pivots:
        logger.debug('[+] inconsistent system of %s rows over Q(zeta_%s)', len(matrix), modulus)
        return None
    flat = [Fraction(0)] * (width * d)
    for i, p in enumerate(pivots):
        flat[p] = reduced[i][width * d]
    solution = [CycQ(modulus, flat[j * d:(j + 1) * d]) for j in range(width)]
    logger.debug('[+] solved %s x %s system over Q(zeta_%s), rank %s', len(matrix), width, modulus, len(pivots))
    return solution


def combine(columns: Sequence[Sequence[CycQ]], weights: Sequence[CycQ]) -> list[CycQ]:
    """Σ_j weights_j·columns_j покоординатно."""
    if not columns:
        return []
    out = [CycQ.rational(0)] * len(columns[0])
    for column, w in zip(columns, weights):
        if w.is_zero():
            continue
        out = [acc + c * w for acc, c in zip(out, column)]
    return out
