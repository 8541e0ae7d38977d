"""Expression parser for algebra elements.

Grammar (``*`` is the noncommutative product and is never reordered)::

    expr  := term (("+" | "-") term)*
    term  := unary (("*" | "/") unary)*
    unary := "-" unary | power
    power := atom ("^" INT)?
    atom  := INT | NAME | "(" expr ")"

Division is only allowed by nonzero constants.  Juxtaposition is an error.
Positions in diagnostics are 0-based character offsets.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


@dataclass(frozen=True)
class Num:
    value: int
    pos: int


@dataclass(frozen=True)
class Name:
    name: str
    pos: int


@dataclass(frozen=True)
class Neg:
    arg: object
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    pos: int


def tokenize(text):
    tokens = []
    for m in _TOKEN.finditer(text):
        num, name, other = m.groups()
        if num is not None:
            tokens.append(("num", num, m.start(1)))
        elif name is not None:
            tokens.append(("name", name, m.start(2)))
        elif other is not None:
            if other not in "+-*/^()":
                raise ParseError(f"unexpected character {other!r}", m.start(3))
            tokens.append((other, other, m.start(3)))
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, known=None):
        self.tokens = tokenize(text)
        self.i = 0
        self.known = known

    @property
    def tok(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        t = self.tokens[self.i]
        if kind is not None and t[0] != kind:
            what = "end of input" if t[0] == "end" else repr(t[1])
            raise ParseError(f"expected {kind!r}, found {what}", t[2])
        self.i += 1
        return t

    def parse(self):
        node = self.expr()
        t = self.tok
        if t[0] != "end":
            if t[0] == ")":
                raise ParseError("unbalanced ')'", t[2])
            raise ParseError(f"unexpected {t[1]!r} (use * for products)", t[2])
        return node

    def expr(self):
        node = self.term()
        while self.tok[0] in ("+", "-"):
            op, _, pos = self.take()
            node = BinOp(op, node, self.term(), pos)
        return node

    def term(self):
        node = self.unary()
        while self.tok[0] in ("*", "/"):
            op, _, pos = self.take()
            node = BinOp(op, node, self.unary(), pos)
        return node

    def unary(self):
        if self.tok[0] == "-":
            _, _, pos = self.take()
            return Neg(self.unary(), pos)
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok[0] == "^":
            _, _, pos = self.take()
            t = self.tok
            if t[0] == "-":
                raise ParseError("negative exponent", t[2])
            if t[0] != "num":
                what = "end of input" if t[0] == "end" else repr(t[1])
                raise ParseError(f"exponent must be a nonnegative integer, found {what}", t[2])
            self.take()
            return Pow(base, int(t[1]), pos)
        return base

    def atom(self):
        kind, text, pos = self.tok
        if kind == "num":
            self.take()
            return Num(int(text), pos)
        if kind == "name":
            self.take()
            if self.known is not None and text not in self.known:
                raise ParseError(f"unknown identifier {text!r}", pos)
            return Name(text, pos)
        if kind == "(":
            self.take()
            node = self.expr()
            if self.tok[0] != ")":
                t = self.tok
                what = "end of input" if t[0] == "end" else repr(t[1])
                raise ParseError(f"unbalanced '(': expected ')', found {what}", t[2])
            self.take()
            return node
        what = "end of input" if kind == "end" else repr(text)
        raise ParseError(f"expected an operand, found {what}", pos)


def parse(text, known=None):
    """Parse ``text`` into an AST; ``known`` restricts the allowed identifiers."""
    return _Parser(text, known).parse()


def evaluate(node, algebra, env=None):
    """Evaluate an AST in ``algebra``; ``env`` maps extra names to elements."""
    env = env or {}
    if isinstance(node, Num):
        return algebra.const(node.value)
    if isinstance(node, Name):
        if node.name in env:
            value = env[node.name]
            if getattr(value, "algebra", None) is not algebra:
                raise ParseError(f"{node.name!r} is not an element of {algebra.name}", node.pos)
            return value
        if node.name in algebra.variables:
            return algebra.gen(node.name)
        if node.name in algebra.field.params:
            return algebra.param(node.name)
        raise ParseError(f"unknown identifier {node.name!r}", node.pos)
    if isinstance(node, Neg):
        return -evaluate(node.arg, algebra, env)
    if isinstance(node, Pow):
        return evaluate(node.base, algebra, env) ** node.exponent
    a = evaluate(node.left, algebra, env)
    b = evaluate(node.right, algebra, env)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    if node.op == "*":
        return a * b
    if not b.is_constant() or not b:
        raise ParseError("division is only by nonzero constants", node.pos)
    return a / b.constant_value()


def parse_expression(text, algebra, env=None):
    """Parse and evaluate ``text`` as an element of ``algebra``."""
    known = set(algebra.variables) | set(algebra.field.params) | set(env or ())
    return evaluate(parse(text, known), algebra, env)
