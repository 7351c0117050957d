from __future__ import annotations

import re
from typing import Iterator, NamedTuple, Optional, Union
from dataclasses import dataclass
from sympy import QQ
from numeric import I, to_gauss
from liesym import SU2, LieData, SymPoly, norm_sq
from errors import ExponentNegative, ExprSyntaxError


@dataclass(frozen=True)
class Sum:
    first: Node
    # ("+" | "-", term) pairs
    rest: tuple[tuple[str, Node], ...]


@dataclass(frozen=True)
class Product:
    factors: tuple[Node, ...]


@dataclass(frozen=True)
class Power:
    base: Node
    exponent: int


@dataclass(frozen=True)
class Generator:
    index: int


@dataclass(frozen=True)
class Norm2:
    pass


@dataclass(frozen=True)
class ImagUnit:
    pass


@dataclass(frozen=True)
class RationalLit:
    num: int
    den: Optional[int] = None


Node = Union[Sum, Product, Power, Generator, Norm2, ImagUnit, RationalLit]


class Token(NamedTuple):
    type: str
    value: str
    where: int


_TOKENS = {
    "name": r"[A-Za-z_][A-Za-z0-9_]*",
    "num": r"\d+",
    "op": r"[+\-*/^()]",
    "skip": r"\s+",
    "error": r".",
}
_TOKEN_REGEX = re.compile("|".join(f"(?P<{name}>{text})" for name, text in _TOKENS.items()))
_NAMES = {"E1", "E2", "E3", "norm2", "i"}


def tokenize(src: str) -> Iterator[Token]:
    for mo in _TOKEN_REGEX.finditer(src):
        kind, value, where = str(mo.lastgroup), mo.group(), mo.start()
        if kind == "skip":
            continue
        if kind == "error":
            raise ExprSyntaxError(f"unexpected character {value!r}", where)
        if kind == "name" and value not in _NAMES:
            raise ExprSyntaxError(f"unknown symbol {value!r}", where)
        yield Token(kind, value, where)
    yield Token("end", "", len(src))


# Recursive descent over
#   expr     := term (('+'|'-') term)*
#   term     := factor ('*' factor)*
#   factor   := atom ('^' uint)?
#   atom     := 'E1' | 'E2' | 'E3' | 'norm2' | 'i' | rational | '(' expr ')'
#   rational := int ('/' uint)?
class Parser:
    def __init__(self, src: str):
        self.tokens = list(tokenize(src))
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def accept(self, value: str) -> bool:
        if self.current.type == "op" and self.current.value == value:
            self.pos += 1
            return True
        return False

    def expect(self, value: str):
        if not self.accept(value):
            raise ExprSyntaxError(f"expected {value!r}", self.current.where)

    def uint(self) -> int:
        token = self.current
        if token.type != "num":
            raise ExprSyntaxError("expected an unsigned integer", token.where)
        self.pos += 1
        return int(token.value)

    def parse(self) -> Node:
        node = self.expr()
        if self.current.type != "end":
            raise ExprSyntaxError(f"unexpected {self.current.value!r}", self.current.where)
        return node

    def expr(self) -> Node:
        first = self.term()
        rest = []
        while self.current.type == "op" and self.current.value in "+-":
            op = self.advance().value
            rest.append((op, self.term()))
        return Sum(first, tuple(rest)) if rest else first

    def term(self) -> Node:
        factors = [self.factor()]
        while self.accept("*"):
            factors.append(self.factor())
        return Product(tuple(factors)) if len(factors) > 1 else factors[0]

    def factor(self) -> Node:
        base = self.atom()
        if self.accept("^"):
            if self.current.type == "op" and self.current.value == "-":
                raise ExponentNegative(self.current.where)
            return Power(base, self.uint())
        return base

    def atom(self) -> Node:
        token = self.current
        if token.type == "name":
            self.pos += 1
            if token.value == "norm2":
                return Norm2()
            if token.value == "i":
                return ImagUnit()
            return Generator(int(token.value[1]))
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        sign = 1
        if self.accept("-"):
            # a signed literal; '-' before anything else is not an atom
            if self.current.type != "num":
                raise ExprSyntaxError("expected a number after '-'", token.where)
            sign = -1
        if self.current.type == "num":
            num = sign * self.uint()
            den = None
            if self.accept("/"):
                where = self.current.where
                den = self.uint()
                if den == 0:
                    raise ExprSyntaxError("zero denominator", where)
            return RationalLit(num, den)
        raise ExprSyntaxError(f"unexpected {token.value or 'end of input'!r}", token.where)


def parse_expr(src: str) -> Node:
    return Parser(src).parse()


def print_expr(node: Node) -> str:
    if isinstance(node, Sum):
        parts = [_print_child(node.first, (Sum,))]
        for op, child in node.rest:
            parts.append(f" {op} {_print_child(child, (Sum,))}")
        return "".join(parts)
    if isinstance(node, Product):
        return " * ".join(_print_child(child, (Sum, Product)) for child in node.factors)
    if isinstance(node, Power):
        return f"{_print_child(node.base, (Sum, Product, Power))}^{node.exponent}"
    if isinstance(node, Generator):
        return f"E{node.index}"
    if isinstance(node, Norm2):
        return "norm2"
    if isinstance(node, ImagUnit):
        return "i"
    if isinstance(node, RationalLit):
        return str(node.num) if node.den is None else f"{node.num}/{node.den}"
    raise TypeError(f"not an expression node: {node!r}")


def _print_child(node: Node, wrapped: tuple[type, ...]) -> str:
    text = print_expr(node)
    return f"({text})" if isinstance(node, wrapped) else text


def lower_expr(node: Node, lie: LieData = SU2) -> SymPoly:
    if isinstance(node, Sum):
        res = lower_expr(node.first, lie)
        for op, child in node.rest:
            res = res + lower_expr(child, lie) if op == "+" else res - lower_expr(child, lie)
        return res
    if isinstance(node, Product):
        res = lie.sym_ring.one
        for child in node.factors:
            res = res * lower_expr(child, lie)
        return res
    if isinstance(node, Power):
        return lower_expr(node.base, lie) ** node.exponent
    if isinstance(node, Generator):
        return lie.generator(node.index)
    if isinstance(node, Norm2):
        return norm_sq(lie)
    if isinstance(node, ImagUnit):
        return lie.constant(I)
    if isinstance(node, RationalLit):
        return lie.constant(to_gauss(QQ(node.num, node.den or 1)))
    raise TypeError(f"not an expression node: {node!r}")
