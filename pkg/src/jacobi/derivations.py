"""Кольцо образующих Θ, Â, Ê_k, 𝔾_k и действие δ_τ, δ_z, D_τ, D_z, W, I на нём."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, NamedTuple, Optional, Sequence

from sympy import Expr, Integer, Rational, Symbol, diff, expand, sympify

from core.exceptions import BadParam, NotInGeneratorRing
from core.logger import logger as _logger
from jacobi.jets import JetForm
from jacobi.kernels import A_jet, E_jet, Theta_jet
from quasimodular.eisenstein import G as G_series
from quasimodular.operators import D_tau as ring_D_tau
from quasimodular.ring import LEVEL_ONE, QMPoly

logger = _logger(__name__)

EISENSTEIN_WEIGHTS = (2, 4, 6)


@dataclass(frozen=True)
class RingGenerator:
    """Образующая от линейной формы c·w (для 𝔾_k форма пустая)."""

    kind: str
    k: int
    arg: tuple[int, ...]

    @property
    def name(self) -> str:
        arg = ','.join(str(c) for c in self.arg)
        if self.kind == 'Theta':
            return f'Theta({arg})'
        if self.kind == 'A':
            return f'A({arg})'
        if self.kind == 'E':
            return f'E{self.k}({arg})'
        return f'G{self.k}'

    @property
    def weight(self) -> int:
        return {'Theta': -1, 'A': 1}.get(self.kind, self.k)

    @property
    def symbol(self) -> Symbol:
        return Symbol(self.name)


_REGISTRY: dict[str, RingGenerator] = {}


def _register(gen: RingGenerator) -> Symbol:
    _REGISTRY.setdefault(gen.name, gen)
    return gen.symbol


def Theta(*arg: int) -> Symbol:  # noqa: N802
    return _register(RingGenerator('Theta', 0, tuple(arg)))


def A(*arg: int) -> Symbol:  # noqa: N802
    return _register(RingGenerator('A', 1, tuple(arg)))


def E(k: int, *arg: int) -> Symbol:  # noqa: N802
    """Ê_k; Ê₁ = Â."""
    if k < 1:
        raise BadParam(f'E_k needs k >= 1, got {k}')
    if k == 1:
        return A(*arg)
    return _register(RingGenerator('E', k, tuple(arg)))


def G(k: int) -> Symbol:  # noqa: N802
    if k not in EISENSTEIN_WEIGHTS:
        raise BadParam(f'the ring is generated by G_k with k in {EISENSTEIN_WEIGHTS}, got {k}')
    return _register(RingGenerator('G', k, ()))


def generator_of(symbol: Symbol) -> RingGenerator:
    gen = _REGISTRY.get(symbol.name)
    if gen is None:
        raise NotInGeneratorRing(f'{symbol} is not a generator of the ring')
    return gen


# --- правила на образующих


def _d_u(gen: RingGenerator) -> Expr:
    """Производная по аргументу u = c·w."""
    if gen.kind == 'Theta':
        return gen.symbol * A(*gen.arg)
    if gen.kind == 'A':
        return -E(2, *gen.arg)
    if gen.kind == 'E':
        return -gen.k * E(gen.k + 1, *gen.arg)
    return Integer(0)


def _d_tau_A(arg: tuple[int, ...]) -> Expr:  # noqa: N802
    return -A(*arg) * E(2, *arg) + E(3, *arg)


@lru_cache(maxsize=None)
def _eisenstein_derivative(k: int) -> Expr:
    """D_τ𝔾_k через сертификацию q-разложения."""
    derivative = ring_D_tau(QMPoly.generator(f'G{k}'))
    return from_qmpoly(derivative)


def _d_tau(gen: RingGenerator) -> Expr:
    if gen.kind == 'Theta':
        a = A(*gen.arg)
        return gen.symbol * (Rational(1, 2) * a**2 - Rational(1, 2) * E(2, *gen.arg) + 3 * G(2))
    if gen.kind == 'A':
        return _d_tau_A(gen.arg)
    if gen.kind == 'E':
        # Ê_k = (−1)^{k−1}/(k−1)!·D_u^{k−1}Â, а D_u и D_τ коммутируют
        expr = _d_tau_A(gen.arg)
        for _ in range(gen.k - 1):
            expr = apply(_d_u, expr)
        factorial = 1
        for j in range(1, gen.k):
            factorial *= j
        return expand(expr * Rational((-1) ** (gen.k - 1), factorial))
    return _eisenstein_derivative(gen.k)


def _delta_tau(gen: RingGenerator) -> Expr:
    if gen.kind == 'G' and gen.k == 2:
        return Rational(-1, 2)
    if gen.kind == 'E' and gen.k == 2:
        return Integer(-1)
    return Integer(0)


def delta_table(symbol: Symbol) -> dict[str, Expr]:
    """Значения δ_τ и δ_{z_i} на образующей."""
    gen = generator_of(symbol)
    table = {'delta_tau': _delta_tau(gen)}
    for i, c in enumerate(gen.arg):
        table[f'delta_z{i + 1}'] = Integer(c) if gen.kind == 'A' else Integer(0)
    return table


def apply(rule: Callable[[RingGenerator], Expr], expr) -> Expr:
    """Дифференцирование, заданное значениями на образующих, по правилу цепочки."""
    expr = sympify(expr)
    total = Integer(0)
    for symbol in expr.free_symbols:
        value = rule(generator_of(symbol))
        if value != 0:
            total += diff(expr, symbol) * value
    return expand(total)


class Op(NamedTuple):
    """Оператор алгебры: имя и индексы переменных (с единицы)."""

    name: str
    i: int = 0
    j: int = 0

    def __repr__(self) -> str:
        if self.name in ('delta_z', 'D_z'):
            return f'{self.name}{self.i}'
        if self.name == 'I':
            return f'I{self.i}{self.j}'
        return self.name


def rule_for(op: Op) -> Callable[[RingGenerator], Expr]:
    if op.name == 'delta_tau':
        return _delta_tau
    if op.name == 'D_tau':
        return _d_tau
    if op.name == 'W':
        return lambda gen: gen.weight * gen.symbol
    if op.name == 'delta_z':
        return lambda gen: Integer(gen.arg[op.i - 1]) if gen.kind == 'A' else Integer(0)
    if op.name == 'D_z':
        return lambda gen: gen.arg[op.i - 1] * _d_u(gen) if gen.arg else Integer(0)
    if op.name == 'I':
        return lambda gen: (
            Rational(gen.arg[op.i - 1] * gen.arg[op.j - 1], 2) * gen.symbol if gen.kind == 'Theta' else Integer(0)
        )
    raise BadParam(f'unknown derivation {op.name}')


def apply_delta(op: Op, expr) -> Expr:
    return apply(rule_for(op), expr)


def commutator(x: Op, y: Op, expr) -> Expr:
    return expand(apply_delta(x, apply_delta(y, expr)) - apply_delta(y, apply_delta(x, expr)))


def operators(rank: int) -> list[Op]:
    ops = [Op('delta_tau'), Op('D_tau'), Op('W')]
    for i in range(1, rank + 1):
        ops += [Op('delta_z', i), Op('D_z', i)]
    for i in range(1, rank + 1):
        for j in range(i, rank + 1):
            ops.append(Op('I', i, j))
    return ops


def _canonical(op: Op) -> Op:
    if op.name == 'I' and op.i > op.j:
        return Op('I', op.j, op.i)
    return op


def _relations(x: Op, y: Op) -> Optional[list[tuple[Fraction, Op]]]:
    if (x.name, y.name) == ('delta_tau', 'D_tau'):
        return [(Fraction(1), Op('W'))]
    if (x.name, y.name) == ('W', 'D_tau'):
        return [(Fraction(2), Op('D_tau'))]
    if (x.name, y.name) == ('W', 'delta_tau'):
        return [(Fraction(-2), Op('delta_tau'))]
    if (x.name, y.name) == ('delta_z', 'D_z'):
        return [(Fraction(2), _canonical(Op('I', x.i, y.i)))]
    if (x.name, y.name) == ('delta_z', 'D_tau'):
        return [(Fraction(1), Op('D_z', x.i))]
    if (x.name, y.name) == ('delta_tau', 'D_z'):
        return [(Fraction(1), Op('delta_z', y.i))]
    if (x.name, y.name) == ('W', 'D_z'):
        return [(Fraction(1), Op('D_z', y.i))]
    # δ_z понижает вес на 1
    if (x.name, y.name) == ('W', 'delta_z'):
        return [(Fraction(-1), Op('delta_z', y.i))]
    return None


def expected_commutator(x: Op, y: Op) -> list[tuple[Fraction, Op]]:
    """[x, y] как линейная комбинация операторов; пустой список означает нулевой коммутатор."""
    direct = _relations(x, y)
    if direct is not None:
        return direct
    swapped = _relations(y, x)
    if swapped is not None:
        return [(-c, op) for c, op in swapped]
    return []


def commutator_defect(x: Op, y: Op, expr) -> Expr:
    """[x, y]f − (ожидаемый оператор)f; ноль, если соотношение выполнено."""
    expected = Integer(0)
    for c, op in expected_commutator(x, y):
        expected += Rational(c.numerator, c.denominator) * apply_delta(op, expr)
    return expand(commutator(x, y, expr) - expected)


# --- выборки и замкнутые формы


def sample_generators(rank: int) -> list[Symbol]:
    """Образующие от форм с коэффициентами 0, ±1."""
    units = [tuple(1 if t == i else 0 for t in range(rank)) for i in range(rank)]
    args = list(units)
    if rank == 2:
        args += [(1, 1), (1, -1)]
    out = []
    for arg in args:
        out += [Theta(*arg), A(*arg), E(2, *arg)]
    out += [E(3, *units[0]), G(2), G(4)]
    return out


def random_elements(rank: int, count: int, degree: int, seed: int) -> list[Expr]:
    """Случайные многочлены степени не выше degree с малыми целыми коэффициентами."""
    rng = random.Random(seed)
    pool = sample_generators(rank)
    out = []
    for _ in range(count):
        expr = Integer(0)
        for _ in range(rng.randint(1, 3)):
            size = rng.randint(1, degree)
            monomial = Integer(rng.choice([-2, -1, 1, 2]))
            for symbol in rng.sample(pool, size):
                monomial *= symbol
            expr += monomial
        out.append(expand(expr))
    return out


def F1(*arg: int) -> Expr:  # noqa: N802
    """F₁ = 1/Θ."""
    return 1 / Theta(*arg)


def F2() -> Expr:  # noqa: N802
    """F₂ = (Â(w₁) + Â(w₂))/Θ(w₁ + w₂)."""
    return (A(1, 0) + A(0, 1)) / Theta(1, 1)


def from_qmpoly(poly: QMPoly) -> Expr:
    """Элемент кольца уровня 1 как выражение в 𝔾₂, 𝔾₄, 𝔾₆."""
    if poly.generators != LEVEL_ONE:
        raise NotInGeneratorRing('only level-1 Eisenstein polynomials embed into the generator ring')
    expr = Integer(0)
    for e, c in poly.poly.items():
        value = c.to_fraction()
        term = Rational(value.numerator, value.denominator)
        for k, n in zip(EISENSTEIN_WEIGHTS, e):
            term *= G(k) ** n
        expr += term
    return expand(expr)


# --- вычисление струй для сверки правил с рядами


def _single_variable(arg: Sequence[int]) -> tuple[int, int]:
    support = [(i, c) for i, c in enumerate(arg) if c]
    if len(support) != 1 or abs(support[0][1]) != 1:
        raise BadParam(f'argument {tuple(arg)} is not a single variable')
    return support[0]


def _univariate_jet(gen: RingGenerator, T: int, order: int) -> tuple[int, JetForm]:  # noqa: N803
    i, sign = _single_variable(gen.arg)
    if gen.kind == 'Theta':
        jet = Theta_jet(T, order)
    elif gen.kind == 'A':
        jet = A_jet(T, order)
    else:
        jet = E_jet(gen.k, T, order)
    return i, jet.reflect((sign,))


def generator_jet(gen: RingGenerator, rank: int, T: int, order: int, power: int = 1) -> JetForm:  # noqa: N803
    """Струя g^power; отрицательные степени только у образующих одной переменной."""
    if gen.kind == 'G':
        return JetForm.constant(rank, G_series(gen.k, T) ** power)
    if power > 0 and gen.kind == 'Theta' and sum(1 for c in gen.arg if c) > 1:
        if any(abs(c) > 1 for c in gen.arg):
            raise BadParam(f'argument {gen.arg} has coefficients beyond 1')
        signs = {i: c for i, c in enumerate(gen.arg) if c}
        return Theta_jet(T, len(signs) * (order - 1) + 1).along_sum(rank, signs, order) ** power
    i, jet = _univariate_jet(gen, T, order + 2 * abs(power))
    if power < 0:
        jet = jet.invert(order + 2 * abs(power))
    return (jet ** abs(power)).embed(rank, (i,))


def to_jet(expr, rank: int, T: int, order: int) -> JetForm:  # noqa: N803
    """Струя многочлена Лорана в образующих."""
    expr = expand(sympify(expr))
    total = JetForm.constant(rank, 0)
    for term, coeff in expr.as_coefficients_dict().items():
        coeff = sympify(coeff)
        jet = JetForm.constant(rank, Fraction(int(coeff.p), int(coeff.q)))
        for symbol, power in term.as_powers_dict().items():
            if symbol == 1:
                continue
            jet = jet * generator_jet(generator_of(symbol), rank, T, order, int(power))
        total = total + jet
    return total


def jet_rule_agrees(op: Op, expr, rank: int, T: int, order: int) -> bool:  # noqa: N803
    """Сверка символьного D_τ или D_{z_i} со струйным на окне порядка order."""
    if op.name not in ('D_tau', 'D_z'):
        raise BadParam(f'{op} has no jet counterpart')
    image = to_jet(apply_delta(op, expr), rank, T, order + 2)
    source = to_jet(expr, rank, T, order + 3)
    expected = source.D_tau() if op.name == 'D_tau' else source.D_z(op.i - 1)
    logger.debug('[+] jet check of %r on %s', op, expr)
    return image.agrees_with(expected, (order,) * rank)


def pairs(ops: Sequence[Op]) -> list[tuple[Op, Op]]:
    return [(x, y) for x, y in combinations_with_replacement(ops, 2) if x != y]
