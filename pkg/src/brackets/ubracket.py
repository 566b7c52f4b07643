"""u-скобка ⟨f⟩_u = Σ f(λ)u_λ / Σ u_λ и индуцированное произведение ⊙."""
from __future__ import annotations

from itertools import combinations, product
from math import gcd
from typing import Iterator, Mapping

from arith.cyclotomic import ZERO, CycQ, Scalar
from arith.qseries import QSeries
from core.exceptions import BadParam, TruncExceeded
from core.logger import logger as _logger
from partitions.families import PartitionFunction
from partitions.partition import Partition, enumerate_partitions

logger = _logger(__name__)


def sub_multisets(lam: Partition) -> Iterator[Partition]:
    """Все подмультимножества частей λ (включая ∅ и само λ)."""
    items = list(lam.multiplicities.items())
    for counts in product(*(range(r + 1) for _, r in items)):
        yield Partition.from_parts(m for (m, _), c in zip(items, counts) for _ in range(c))


class USeries:
    """Σ c_λ u_λ по разбиениям размера ≤ trunc_size; u_λ·u_μ = u_{λ∪μ}."""

    def __init__(self, coeffs: Mapping[Partition, Scalar], trunc_size: int):
        self.trunc_size = trunc_size
        self.coeffs: dict[Partition, CycQ] = {}
        for lam, c in coeffs.items():
            if lam.size > trunc_size:
                continue
            c = CycQ.coerce(c)
            if not c.is_zero():
                self.coeffs[lam] = c

    def coefficient(self, lam: Partition) -> CycQ:
        if lam.size > self.trunc_size:
            raise TruncExceeded(f'u-coefficient of {lam} beyond size {self.trunc_size}')
        return self.coeffs.get(lam, ZERO)

    def __add__(self, other: USeries) -> USeries:
        coeffs = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            coeffs[lam] = coeffs[lam] + c if lam in coeffs else c
        return USeries(coeffs, min(self.trunc_size, other.trunc_size))

    def __mul__(self, other: USeries) -> USeries:
        size = min(self.trunc_size, other.trunc_size)
        coeffs: dict[Partition, CycQ] = {}
        for lam, a in self.coeffs.items():
            for mu, b in other.coeffs.items():
                if lam.size + mu.size > size:
                    continue
                key = lam.union(mu)
                coeffs[key] = coeffs[key] + a * b if key in coeffs else a * b
        return USeries(coeffs, size)

    def specialize(self) -> QSeries:
        """u_m ↦ q^m."""
        terms: dict[int, CycQ] = {}
        for lam, c in self.coeffs.items():
            terms[lam.size] = terms[lam.size] + c if lam.size in terms else c
        return QSeries(terms, self.trunc_size + 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, USeries):
            return NotImplemented
        size = min(self.trunc_size, other.trunc_size)
        keys = {lam for lam in set(self.coeffs) | set(other.coeffs) if lam.size <= size}
        return all(self.coeffs.get(lam, ZERO) == other.coeffs.get(lam, ZERO) for lam in keys)

    __hash__ = None


def ubracket(f: PartitionFunction, n: int) -> USeries:
    """Коэффициент при u_λ равен Σ_{S ⊆ различных частей λ} (−1)^{|S|} f(λ∖S)."""
    if n < 0:
        raise BadParam(f'size bound must be non-negative, got {n}')
    coeffs = {}
    for lam in enumerate_partitions(n):
        total = ZERO
        distinct = lam.distinct_parts
        for r in range(len(distinct) + 1):
            for removed in combinations(distinct, r):
                value = f(lam.remove(removed))
                total = total - value if r % 2 else total + value
        coeffs[lam] = total
    return USeries(coeffs, n)


def from_useries(series: USeries, weight: int, tag: str = 'odot', params: tuple = ()) -> PartitionFunction:
    """Функция h с ⟨h⟩_u = series: h(λ) = Σ_{μ ⊆ λ} c_μ."""
    n = series.trunc_size

    def evaluate(lam: Partition) -> CycQ:
        if lam.size > n:
            raise TruncExceeded(f'{tag} is defined on partitions of size <= {n}, got {lam}')
        return sum((series.coeffs.get(mu, ZERO) for mu in sub_multisets(lam)), ZERO)

    return PartitionFunction(evaluate, weight, 1, tag, params)


def odot(f: PartitionFunction, g: PartitionFunction, n: int) -> PartitionFunction:
    """Индуцированное произведение: ⟨f⊙g⟩_u = ⟨f⟩_u⟨g⟩_u на разбиениях размера ≤ n."""
    logger.debug('[+] induced product of %r and %r up to size %s', f, g, n)
    product_series = ubracket(f, n) * ubracket(g, n)
    result = from_useries(product_series, f.weight + g.weight, 'odot', (f, g))
    result.level = f.level * g.level // gcd(f.level, g.level)
    return result


def odot_all(functions: list[PartitionFunction], n: int) -> PartitionFunction:
    if not functions:
        raise BadParam('empty induced product')
    result = functions[0]
    for f in functions[1:]:
        result = odot(result, f, n)
    return result
