from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from core.exceptions import BadParam


@dataclass(frozen=True)
class Partition:
    """Разбиение λ: невозрастающий кортеж положительных частей."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise BadParam(f'not a partition: {parts}')
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        return cls(tuple(sorted(parts, reverse=True)))

    @cached_property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @cached_property
    def multiplicities(self) -> dict[int, int]:
        """r_m(λ)."""
        return dict(Counter(self.parts))

    @cached_property
    def conjugate(self) -> tuple[int, ...]:
        if not self.parts:
            return ()
        return tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    @cached_property
    def hooks(self) -> tuple[int, ...]:
        """Длины крюков h(ξ) по всем клеткам диаграммы Юнга."""
        conj = self.conjugate
        return tuple(
            (row - j - 1) + (conj[j] - i - 1) + 1 for i, row in enumerate(self.parts) for j in range(row)
        )

    @cached_property
    def shifted(self) -> tuple[Fraction, ...]:
        """λ_i − i + 1/2 для i ≤ ℓ(λ)."""
        return tuple(Fraction(2 * (p - i) + 1, 2) for i, p in enumerate(self.parts, start=1))

    @cached_property
    def distinct_parts(self) -> tuple[int, ...]:
        return tuple(sorted(self.multiplicities, reverse=True))

    def remove(self, parts: Iterable[int]) -> Partition:
        """λ∖S: убирает по одному экземпляру каждой части из S."""
        parts = tuple(parts)
        left = Counter(self.parts)
        left.subtract(parts)
        if any(v < 0 for v in left.values()):
            raise BadParam(f'cannot remove {tuple(parts)} from {self.parts}')
        return Partition.from_parts(left.elements())

    def union(self, other: Partition) -> Partition:
        return Partition.from_parts(self.parts + other.parts)

    def __str__(self) -> str:
        return '(' + ','.join(map(str, self.parts)) + ')'


EMPTY = Partition()


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """Все разбиения n в обратном лексикографическом порядке: (n), (n−1,1), …, (1^n)."""
    if n < 0:
        raise BadParam(f'negative size {n}')

    def build(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in build(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in build(n, n))


def enumerate_partitions(n_max: int) -> Iterator[Partition]:
    """Все разбиения размера ≤ n_max: по возрастанию размера, внутри размера в обратном лексикографическом порядке."""
    if n_max < 0:
        raise BadParam(f'negative bound {n_max}')
    for n in range(n_max + 1):
        yield from partitions_of(n)


def partition_count(n: int) -> int:
    return len(partitions_of(n))
