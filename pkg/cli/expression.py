"""Element expressions for the command line.

Grammar::

    expr := atom { ["*" | "∘"] atom }
    atom := "R(" nat "," nat ")" | "R‡(" nat "," nat ")" | "dag(" expr ")"
          | "id" | "zero" | "(" expr ")"
          | "[" nat "," nat "]+"            bicyclic [b,a]
          | "[" nat "," nat "]*"            Leech [m,n]
          | "P(" nat ";" string "," string ")"   polycyclic v‡u

Factors are written as in the algebra: the rightmost one acts first.
Alphabet and shape errors are raised by ``evaluate``, not by ``parse``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import List, Tuple

from arithmonoid.arith import (
    IDENTITY,
    ZERO,
    ArithElement,
    Zero,
    compose_all,
    dagger,
    dagger_generator,
    generator,
)
from arithmonoid.classical import BicyclicElement, LeechElement, bicyclic_embed_arith, leech_embed
from arithmonoid.config import config_value
from arithmonoid.numtheory import DomainError
from arithmonoid.polycyclic import poly_pair, theta


class ExpressionSyntaxError(DomainError):
    """A syntax error, located by a 1-based byte offset into the input."""

    def __init__(self, message: str, offset: int, expected: Tuple[str, ...] = ()):
        self.offset = offset
        self.expected = tuple(sorted(expected))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")


_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<nat>\d+)"
    r'|(?P<string>"[^"]*")'
    r"|(?P<name>R‡|dag|id|zero|R|P)"
    r"|(?P<punct>[()\[\],;*+∘])"
    r")"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    start: int
    end: int


def _tokenize(source: str) -> List[Token]:
    tokens, pos = [], 0
    while pos < len(source):
        if source[pos:].strip() == "":
            break
        match = _TOKEN.match(source, pos)
        if match is None or match.end() == pos:
            raise ExpressionSyntaxError(f"unexpected character {source[pos]!r}", _offset(source, pos))
        kind = match.lastgroup
        text = match.group(kind)
        start = match.start(kind)
        tokens.append(Token(kind if kind in ("nat", "string") else text, text, start, match.end()))
        pos = match.end()
    tokens.append(Token("end", "", len(source), len(source)))
    return tokens


def _offset(source: str, index: int) -> int:
    return len(source[:index].encode("utf-8")) + 1


@dataclass(frozen=True)
class Expression:
    source: str = field(compare=False)


@dataclass(frozen=True)
class GeneratorLit(Expression):
    a: int = 1
    b: int = 0
    daggered: bool = False


@dataclass(frozen=True)
class IdentityLit(Expression):
    pass


@dataclass(frozen=True)
class ZeroLit(Expression):
    pass


@dataclass(frozen=True)
class DaggerOf(Expression):
    inner: Expression = None


@dataclass(frozen=True)
class Composite(Expression):
    factors: Tuple[Expression, ...] = ()


@dataclass(frozen=True)
class BicyclicLit(Expression):
    b: int = 0
    a: int = 0


@dataclass(frozen=True)
class LeechLit(Expression):
    m: int = 1
    n: int = 1


@dataclass(frozen=True)
class PolyLit(Expression):
    k: int = 2
    up: str = ""
    down: str = ""


_ATOM_START = ("R", "R‡", "dag", "id", "zero", "(", "[", "P")


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = _tokenize(source)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _fail(self, expected: Tuple[str, ...]) -> None:
        token = self.current
        found = "end of input" if token.kind == "end" else repr(token.text)
        raise ExpressionSyntaxError(f"unexpected {found}", _offset(self.source, token.start), expected)

    def _expect(self, kind: str) -> Token:
        if self.current.kind != kind:
            self._fail((kind,))
        token = self.current
        self.index += 1
        return token

    def _span(self, start: Token) -> str:
        end = self.tokens[self.index - 1].end
        return self.source[start.start:end]

    def parse(self) -> Expression:
        expr = self.expr()
        if self.current.kind != "end":
            self._fail(("*", "∘", "end") + _ATOM_START)
        return expr

    def expr(self) -> Expression:
        start = self.current
        factors = [self.atom()]
        while True:
            if self.current.kind in ("*", "∘"):
                self.index += 1
                factors.append(self.atom())
            elif self.current.kind in _ATOM_START:
                factors.append(self.atom())
            else:
                break
        if len(factors) == 1:
            return factors[0]
        return Composite(self._span(start), tuple(factors))

    def _nat_pair(self, close: str) -> Tuple[int, int]:
        first = int(self._expect("nat").text)
        self._expect(",")
        second = int(self._expect("nat").text)
        self._expect(close)
        return first, second

    def atom(self) -> Expression:
        start = self.current
        kind = start.kind
        if kind in ("R", "R‡"):
            self.index += 1
            self._expect("(")
            a, b = self._nat_pair(")")
            return GeneratorLit(self._span(start), a, b, kind == "R‡")
        if kind == "dag":
            self.index += 1
            self._expect("(")
            inner = self.expr()
            self._expect(")")
            return DaggerOf(self._span(start), inner)
        if kind == "id":
            self.index += 1
            return IdentityLit(self._span(start))
        if kind == "zero":
            self.index += 1
            return ZeroLit(self._span(start))
        if kind == "(":
            self.index += 1
            inner = self.expr()
            self._expect(")")
            return inner
        if kind == "[":
            self.index += 1
            first, second = self._nat_pair("]")
            if self.current.kind == "+":
                self.index += 1
                return BicyclicLit(self._span(start), first, second)
            if self.current.kind == "*":
                self.index += 1
                return LeechLit(self._span(start), first, second)
            self._fail(("*", "+"))
        if kind == "P":
            self.index += 1
            self._expect("(")
            k = int(self._expect("nat").text)
            self._expect(";")
            up = self._expect("string").text[1:-1]
            self._expect(",")
            down = self._expect("string").text[1:-1]
            self._expect(")")
            return PolyLit(self._span(start), k, up, down)
        self._fail(_ATOM_START)


def parse(source: str) -> Expression:
    """Parse an element expression; ExpressionSyntaxError on malformed input."""
    return _Parser(source).parse()


def _evaluate_leaf(node: Expression) -> ArithElement:
    if isinstance(node, GeneratorLit):
        return dagger_generator(node.a, node.b) if node.daggered else generator(node.a, node.b)
    if isinstance(node, IdentityLit):
        return IDENTITY
    if isinstance(node, ZeroLit):
        return ZERO
    if isinstance(node, BicyclicLit):
        return bicyclic_embed_arith(config_value("bicyclic_prime"), BicyclicElement(node.b, node.a))
    if isinstance(node, LeechLit):
        return leech_embed(LeechElement(node.m, node.n))
    if isinstance(node, PolyLit):
        return theta(node.k, poly_pair(node.k, node.up, node.down))
    raise TypeError(f"not a leaf expression: {node!r}")


def _leaf(node: Expression) -> ArithElement:
    try:
        return _evaluate_leaf(node)
    except DomainError as exc:
        if isinstance(exc, ExpressionSyntaxError):
            raise
        raise DomainError(f"in {node.source!r}: {exc}") from exc


def evaluate(node: Expression) -> ArithElement:
    """Fold the expression through compose and dagger to a normal form."""
    if isinstance(node, Composite):
        return compose_all(evaluate(f) for f in node.factors)
    if isinstance(node, DaggerOf):
        return dagger(evaluate(node.inner))
    return _leaf(node)


def flatten(node: Expression) -> List[ArithElement]:
    """The expression as a left-to-right chain of leaf elements.

    Daggers are pushed down to the leaves, reversing the order of the
    factors beneath them.
    """
    if isinstance(node, Composite):
        return [e for f in node.factors for e in flatten(f)]
    if isinstance(node, DaggerOf):
        return [dagger(e) for e in reversed(flatten(node.inner))]
    return [_leaf(node)]


def format_element(e: ArithElement) -> str:
    """Print a normal form as ``R‡(c,d)∘R(a,b)``, ``id`` or ``zero``."""
    if isinstance(e, Zero):
        return "zero"
    if e == IDENTITY:
        return "id"
    down = f"R({e.dom.modulus},{e.dom.residue})"
    up = f"R‡({e.img.modulus},{e.img.residue})"
    if e.img.is_full:
        return down
    if e.dom.is_full:
        return up
    return f"{up}∘{down}"


def evaluate_text(source: str) -> ArithElement:
    return evaluate(parse(source))
