"""Разбор описаний функций на разбиениях: `Q(4)*Q(3; a=1/2)`, `H(4; 2)`, `Todot[T(1,1),T(2,2)]`."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from brackets.ubracket import odot_all
from core.exceptions import BadParam, FamilyParseError
from core.logger import logger as _logger
from partitions import families
from partitions.families import ONE_FUNCTION, PartitionFunction
from services.response_messages import ParseMessages as Msg

logger = _logger(__name__)

TOKEN = re.compile(r'\s*(?:(?P<number>-?\d+(?:/\d+)?)|(?P<name>Todot|[A-Za-z]+)|(?P<punct>[()\[\];,=*]))')


def tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        match = TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            raise FamilyParseError(Msg.bad_symbol.value.format(symbol=text[pos:].strip()[:1], pos=pos))
        tokens.append(match.group(match.lastgroup))
        pos = match.end()
    return tokens


@dataclass
class Atom:
    """Семейство с параметрами: позиционные после `(`, затем после `;` позиционные и именованные."""

    name: str
    args: list[Fraction]
    extra: list[Fraction] = field(default_factory=list)
    keywords: dict[str, Fraction] = field(default_factory=dict)

    def build(self, order: int) -> PartitionFunction:
        try:
            return _BUILDERS[self.name](self)
        except KeyError:
            raise FamilyParseError(Msg.unknown_family.value.format(name=self.name)) from None
        except (TypeError, ValueError) as error:
            raise FamilyParseError(Msg.bad_arguments.value.format(name=self.name, detail=error)) from None


@dataclass
class Odot:
    factors: list[Product]

    def build(self, order: int) -> PartitionFunction:
        return odot_all([f.build(order) for f in self.factors], order)


@dataclass
class Constant:
    value: Fraction

    def build(self, order: int) -> PartitionFunction:
        return PartitionFunction.constant(self.value)


Factor = Union[Atom, Odot, Constant]


@dataclass
class Product:
    """Поточечное произведение сомножителей."""

    factors: list[Factor]
    text: str = ''

    def build(self, order: int) -> PartitionFunction:
        result: Optional[PartitionFunction] = None
        for factor in self.factors:
            value = factor.build(order)
            result = value if result is None else result * value
        return ONE_FUNCTION if result is None else result


def _int(value: Fraction) -> int:
    if value.denominator != 1:
        raise ValueError(f'{value} is not an integer')
    return int(value)


def _one(atom: Atom, *names: str) -> Optional[Fraction]:
    """Единственный дополнительный параметр: позиционный или один из именованных."""
    if len(atom.extra) + len(atom.keywords) > 1:
        raise ValueError('too many parameters after ;')
    if atom.extra:
        return atom.extra[0]
    for name in names:
        if name in atom.keywords:
            return atom.keywords[name]
    if atom.keywords:
        raise ValueError(f'unknown parameter {next(iter(atom.keywords))}')
    return None


def _build_q(atom: Atom) -> PartitionFunction:
    (k,) = atom.args
    if 'm' in atom.keywords:
        return families.Q_sieved(_int(k), _int(atom.keywords['m']))
    return families.Q(_int(k), _one(atom, 'a'))


def _build_h(atom: Atom) -> PartitionFunction:
    (k,) = atom.args
    if 'a' in atom.keywords:
        return families.H(_int(k), atom.keywords['a'])
    t = _one(atom, 't')
    return families.H(_int(k)) if t is None else families.H_t(_int(k), _int(t))


def _build_s(atom: Atom) -> PartitionFunction:
    (k,) = atom.args
    if 't' in atom.keywords:
        return families.S_t(_int(k), _int(atom.keywords['t']))
    return families.S(_int(k), _one(atom, 'a'))


def _build_t(atom: Atom) -> PartitionFunction:
    k, l = atom.args  # noqa: E741
    if 's' in atom.keywords or 't' in atom.keywords:
        return families.T_st(_int(k), _int(l), _int(atom.keywords.get('s', 1)), _int(atom.keywords.get('t', 1)))
    shifts = list(atom.extra) + [atom.keywords[n] for n in ('a', 'b') if n in atom.keywords]
    if len(shifts) > 2:
        raise ValueError('T takes at most two shifts')
    a, b = (shifts + [None, None])[:2]
    return families.T(_int(k), _int(l), a, b)


_BUILDERS = {'Q': _build_q, 'H': _build_h, 'S': _build_s, 'T': _build_t}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: Optional[str] = None) -> str:
        token = self.peek()
        if token is None or (expected is not None and token != expected):
            raise FamilyParseError(Msg.expected.value.format(expected=expected or 'a token', got=token or 'end'))
        self.pos += 1
        return token

    def number(self) -> Fraction:
        token = self.take()
        try:
            return Fraction(token)
        except ValueError:
            raise FamilyParseError(Msg.expected.value.format(expected='a number', got=token)) from None

    def product(self, stop: tuple[str, ...]) -> Product:
        factors = [self.factor()]
        while self.peek() == '*':
            self.take('*')
            factors.append(self.factor())
        if self.peek() not in stop:
            expected = ' or '.join(s or 'end' for s in stop)
            raise FamilyParseError(Msg.expected.value.format(expected=expected, got=self.peek()))
        return Product(factors)

    def factor(self) -> Factor:
        token = self.peek()
        if token == 'Todot':
            self.take()
            self.take('[')
            items = [self.product((',', ']'))]
            while self.peek() == ',':
                self.take(',')
                items.append(self.product((',', ']')))
            self.take(']')
            return Odot(items)
        if token is not None and token[0].isalpha():
            return self.atom()
        return Constant(self.number())

    def atom(self) -> Atom:
        atom = Atom(self.take(), [])
        self.take('(')
        atom.args.append(self.number())
        while self.peek() == ',':
            self.take(',')
            atom.args.append(self.number())
        if self.peek() == ';':
            self.take(';')
            self.parameter(atom)
            while self.peek() == ',':
                self.take(',')
                self.parameter(atom)
        self.take(')')
        return atom

    def parameter(self, atom: Atom) -> None:
        token = self.peek()
        if token is not None and token[0].isalpha():
            name = self.take()
            self.take('=')
            atom.keywords[name] = self.number()
        else:
            atom.extra.append(self.number())


def parse_family(text: str) -> Product:
    if not text.strip():
        raise FamilyParseError(Msg.empty.value)
    parser = _Parser(text)
    result = parser.product((None,))
    result.text = text
    logger.debug('[+] parsed family %r into %s factors', text, len(result.factors))
    return result


def build_family(text: str, order: int) -> PartitionFunction:
    """Функция на разбиениях по описанию; ⊙ считается на разбиениях размера ≤ order."""
    spec = parse_family(text)
    try:
        return spec.build(order)
    except BadParam as error:
        raise FamilyParseError(str(error)) from error
