"""Функции на разбиениях: сдвинутые симметрические Q_k, моменты крюков H_k, моменты S_k, двойные моменты T_{k,l}."""
from __future__ import annotations

from fractions import Fraction
from math import factorial, gcd
from typing import Callable, Optional, Union

from arith.cyclotomic import ONE, ZERO, CycQ, Scalar, cyc_root
from arith.numbers import bernoulli
from core.exceptions import BadParam
from core.logger import logger as _logger
from partitions.constants import alpha, alpha_tilde, beta
from partitions.partition import Partition

logger = _logger(__name__)

Shift = Optional[Union[int, Fraction]]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _level(*shifts: Shift) -> int:
    level = 1
    for s in shifts:
        if s is not None:
            level = _lcm(level, Fraction(s).denominator)
    return level


class PartitionFunction:
    """Вычислитель λ ↦ CycQ с весом, уровнем и описанием семейства."""

    def __init__(
        self,
        evaluator: Callable[[Partition], Scalar],
        weight: int,
        level: int = 1,
        tag: str = '',
        params: tuple = (),
    ):
        self.evaluator = evaluator
        self.weight = weight
        self.level = level
        self.tag = tag
        self.params = params
        self._values: dict[Partition, CycQ] = {}

    def __call__(self, lam: Partition) -> CycQ:
        value = self._values.get(lam)
        if value is None:
            value = CycQ.coerce(self.evaluator(lam))
            self._values[lam] = value
        return value

    @classmethod
    def constant(cls, value: Scalar, weight: int = 0) -> PartitionFunction:
        value = CycQ.coerce(value)
        return cls(lambda lam: value, weight, 1, 'const', (value,))

    def __mul__(self, other: Union[PartitionFunction, Scalar]) -> PartitionFunction:
        if isinstance(other, PartitionFunction):
            return PartitionFunction(
                lambda lam: self(lam) * other(lam),
                self.weight + other.weight,
                _lcm(self.level, other.level),
                '*',
                (self, other),
            )
        value = CycQ.coerce(other)
        return PartitionFunction(lambda lam: self(lam) * value, self.weight, self.level, 'scale', (self, value))

    __rmul__ = __mul__

    def __add__(self, other: Union[PartitionFunction, Scalar]) -> PartitionFunction:
        if not isinstance(other, PartitionFunction):
            other = PartitionFunction.constant(other, self.weight)
        return PartitionFunction(
            lambda lam: self(lam) + other(lam),
            self.weight,
            _lcm(self.level, other.level),
            '+',
            (self, other),
        )

    __radd__ = __add__

    def __neg__(self) -> PartitionFunction:
        return self * -1

    def __sub__(self, other: Union[PartitionFunction, Scalar]) -> PartitionFunction:
        return self + (-other if isinstance(other, PartitionFunction) else -CycQ.coerce(other))

    def __pow__(self, n: int) -> PartitionFunction:
        if n < 0:
            raise BadParam('negative powers of partition functions are not defined')
        result = ONE_FUNCTION
        for _ in range(n):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f'PartitionFunction({self.tag}{self.params if self.tag not in ("*", "+", "scale") else ""})'


ONE_FUNCTION = PartitionFunction(lambda lam: ONE, 0, 1, 'const', (ONE,))


def seki_bernoulli(l: int, n: int, b: Shift = None) -> CycQ:  # noqa: E741
    """𝓕^b_l(n) = Σ_{i≤n} 𝒆(bi) i^{l−1}."""
    if b is None or Fraction(b) == 0:
        return CycQ.rational(sum(Fraction(i) ** (l - 1) for i in range(1, n + 1)))
    b = Fraction(b)
    return sum((cyc_root(b * i) * Fraction(i) ** (l - 1) for i in range(1, n + 1)), ZERO)


def _check(condition: bool, message: str):
    if not condition:
        raise BadParam(message)


def Q(k: int, a: Shift = None) -> PartitionFunction:  # noqa: N802
    """Q_k(λ,a) = β_k(a) + (1/(k−1)!) Σ_{i≤ℓ(λ)} [𝒆(a(λ_i−i))(λ_i−i+½)^{k−1} − 𝒆(−ai)(−i+½)^{k−1}]."""
    _check(k >= 0, f'Q_k needs k >= 0, got {k}')
    shift = Fraction(0) if a is None else Fraction(a)
    const = beta(k, shift)
    if k == 0:
        return PartitionFunction(lambda lam: const, 0, _level(a), 'Q', (k, a))
    scale = Fraction(1, factorial(k - 1))

    def evaluate(lam: Partition) -> CycQ:
        total = const
        for i, (part, x) in enumerate(zip(lam.parts, lam.shifted), start=1):
            tail = Fraction(1 - 2 * i, 2) ** (k - 1)
            if shift:
                total = total + (cyc_root(shift * (part - i)) * x ** (k - 1) - cyc_root(-shift * i) * tail) * scale
            else:
                total = total + (x ** (k - 1) - tail) * scale
        return total

    return PartitionFunction(evaluate, k, _level(a), 'Q', (k, a))


def Q_sieved(k: int, m: int) -> PartitionFunction:  # noqa: N802
    """Q_k^{(m)}: из сумм Q_k выброшены слагаемые с m | 2(λ_i−i)+1 и m | 2i−1."""
    _check(k >= 1 and m >= 1, f'Q^(m)_k needs k >= 1, m >= 1, got k={k}, m={m}')
    const = beta(k, 0) - sum((cyc_root(Fraction(a, m)) * beta(k, Fraction(2 * a, m)) for a in range(m)), ZERO) / m
    scale = Fraction(1, factorial(k - 1))

    def evaluate(lam: Partition) -> CycQ:
        total = Fraction(0)
        for i, x in enumerate(lam.shifted, start=1):
            if (2 * x).numerator % m:
                total += x ** (k - 1) * scale
            if (2 * i - 1) % m:
                total -= Fraction(1 - 2 * i, 2) ** (k - 1) * scale
        return const + total

    return PartitionFunction(evaluate, k, m, 'Qm', (k, m))


def H(k: int, a: Shift = None) -> PartitionFunction:  # noqa: N802
    """Моменты длин крюков: −B_k/(2k) + Σ h^{k−2}; со сдвигом α̃_k(a) + ½Σ(𝒆(ah)+(−1)^k𝒆(−ah))h^{k−2}."""
    _check(k >= 2, f'H_k needs k >= 2, got {k}')
    if a is None:
        const = -bernoulli(k) / (2 * k)
        return PartitionFunction(lambda lam: const + sum(Fraction(h) ** (k - 2) for h in lam.hooks), k, 1, 'H', (k,))
    shift = Fraction(a)
    const = alpha_tilde(k, shift)
    sign = -1 if k % 2 else 1

    def evaluate(lam: Partition) -> CycQ:
        total = const
        for h in lam.hooks:
            twist = cyc_root(shift * h) + cyc_root(-shift * h) * sign
            total = total + twist * (Fraction(h) ** (k - 2) / 2)
        return total

    return PartitionFunction(evaluate, k, _level(a), 'H', (k, a))


def H_t(k: int, t: int) -> PartitionFunction:  # noqa: N802
    """H_k^t = −B_k t^{k−1}/(2k) + Σ_{t | h} h^{k−2}."""
    _check(k >= 2 and t >= 1, f'H^t_k needs k >= 2, t >= 1, got k={k}, t={t}')
    const = -bernoulli(k) * Fraction(t) ** (k - 1) / (2 * k)
    return PartitionFunction(
        lambda lam: const + sum(Fraction(h) ** (k - 2) for h in lam.hooks if h % t == 0),
        k,
        t,
        'Ht',
        (k, t),
    )


def S(k: int, a: Shift = None) -> PartitionFunction:  # noqa: N802
    """Моменты частей: −B_k/(2k) + Σ λ_i^{k−1}; со сдвигом α_k(a) + ½Σ(𝒆(aλ_i)+(−1)^k𝒆(−aλ_i))λ_i^{k−1}."""
    _check(k >= 1, f'S_k needs k >= 1, got {k}')
    if a is None:
        const = -bernoulli(k) / (2 * k)
        return PartitionFunction(lambda lam: const + sum(Fraction(p) ** (k - 1) for p in lam.parts), k, 1, 'S', (k,))
    shift = Fraction(a)
    const = alpha(k, shift)
    sign = -1 if k % 2 else 1

    def evaluate(lam: Partition) -> CycQ:
        total = const
        for p in lam.parts:
            twist = cyc_root(shift * p) + cyc_root(-shift * p) * sign
            total = total + twist * (Fraction(p) ** (k - 1) / 2)
        return total

    return PartitionFunction(evaluate, k, _level(a), 'S', (k, a))


def S_t(k: int, t: int) -> PartitionFunction:  # noqa: N802
    """S_k^t = −B_k t^{k−1}/(2k) + Σ_{t | λ_i} λ_i^{k−1}."""
    _check(k >= 1 and t >= 1, f'S^t_k needs k >= 1, t >= 1, got k={k}, t={t}')
    const = -bernoulli(k) * Fraction(t) ** (k - 1) / (2 * k)
    return PartitionFunction(
        lambda lam: const + sum(Fraction(p) ** (k - 1) for p in lam.parts if p % t == 0),
        k,
        t,
        'St',
        (k, t),
    )


def double_moment_constant(k: int, l: int) -> Fraction:  # noqa: E741
    """C_{k,l} = −B_{k+l}/(2(k+l)) при k = 0 или l = 1 (случай k=0, l=1 учитывается один раз)."""
    if k == 0 or l == 1:
        return -bernoulli(k + l) / (2 * (k + l))
    return Fraction(0)


def twisted_double_moment_constant(k: int, l: int, a: Shift, b: Shift) -> CycQ:  # noqa: E741
    """C_{k,l}(a,b) = 2α_{k+1}(a) при l = 1, 2α_l(b) при k = 0, иначе 0; при a=b=0 даёт 2C_{k,l}."""
    if l == 1:
        return alpha(k + 1, a or 0) * 2
    if k == 0:
        return alpha(l, b or 0) * 2
    return ZERO


def T(k: int, l: int, a: Shift = None, b: Shift = None) -> PartitionFunction:  # noqa: N802, E741
    """Двойные моменты T_{k,l} = C_{k,l} + Σ_m m^k 𝓕_l(r_m(λ)) и их сдвиги T_{k,l}(·,a,b)."""
    _check(k >= 0 and l >= 1, f'T_(k,l) needs k >= 0, l >= 1, got k={k}, l={l}')
    if a is None and b is None:
        const = double_moment_constant(k, l)

        def evaluate(lam: Partition) -> CycQ:
            total = const
            for m, r in lam.multiplicities.items():
                total += Fraction(m) ** k * seki_bernoulli(l, r).to_fraction()
            return CycQ.rational(total)

        return PartitionFunction(evaluate, k + l, 1, 'T', (k, l))

    a_shift = Fraction(a or 0)
    b_shift = Fraction(b or 0)
    const = twisted_double_moment_constant(k, l, a_shift, b_shift)
    sign = -1 if (k + l) % 2 else 1

    def evaluate_twisted(lam: Partition) -> CycQ:
        total = const
        for m, r in lam.multiplicities.items():
            plus = cyc_root(a_shift * m) * seki_bernoulli(l, r, b_shift)
            minus = cyc_root(-a_shift * m) * seki_bernoulli(l, r, -b_shift)
            total = total + (plus + minus * sign) * Fraction(m) ** k
        return total

    return PartitionFunction(evaluate_twisted, k + l, _level(a, b), 'T', (k, l, a, b))


def T_st(k: int, l: int, s: int, t: int) -> PartitionFunction:  # noqa: N802, E741
    """T^{s,t}_{k,l} = C_{k,l} + Σ_m m^k 𝓕_l(⌊r_{ms}(λ)/t⌋)."""
    _check(k >= 0 and l >= 1 and s >= 1 and t >= 1, f'T^(s,t)_(k,l) got k={k}, l={l}, s={s}, t={t}')
    const = double_moment_constant(k, l)

    def evaluate(lam: Partition) -> CycQ:
        total = const
        for part, r in lam.multiplicities.items():
            if part % s == 0:
                total += Fraction(part // s) ** k * seki_bernoulli(l, r // t).to_fraction()
        return CycQ.rational(total)

    return PartitionFunction(evaluate, k + l, _lcm(s, t), 'Tst', (k, l, s, t))


FAMILIES: dict[str, Callable[..., PartitionFunction]] = {
    'Q': Q,
    'Qm': Q_sieved,
    'H': H,
    'Ht': H_t,
    'S': S,
    'St': S_t,
    'T': T,
    'Tst': T_st,
}


def family(tag: str, *params) -> PartitionFunction:
    try:
        build = FAMILIES[tag]
    except KeyError:
        raise BadParam(f'unknown family {tag!r}') from None
    return build(*params)


def eval_family(tag: str, params: tuple, lam: Partition) -> CycQ:
    """Значение функции семейства `tag` с параметрами `params` на разбиении λ."""
    return family(tag, *params)(lam)
