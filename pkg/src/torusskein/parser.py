"""Recursive-descent parser for skein-algebra expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | factor
    factor := atom ('^' int)?
    atom   := '(' int ',' int ')' ('_T' | '^' uint)?
            | 'phi' | 't' | 'i' | number | '(' expr ')'

``(p,q)`` alone is the T-basis element, ``(p,q)^n`` the simple diagram with n
parallel copies.  ``*`` is the (noncommutative) product and associates to the
left.  Division and negative exponents are only allowed on scalars.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, NamedTuple, Union

from .algebra import (PHI, SimpleElement, SkeinElement, multiply, power, simple_to_T)
from .errors import ParseError, SkeinError
from .scalars import EXACT, ScalarContext


class Token(NamedTuple):
    kind: str
    text: str
    pos: int


_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
  | (?P<suffix>_T)
  | (?P<name>[A-Za-z]+)
  | (?P<op>[-+*/^(),])
""", re.VERBOSE)

_NAMES = {"t", "i", "phi"}


def tokenize(src: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        kind = m.lastgroup
        text = m.group()
        if kind == "name":
            if text not in _NAMES:
                raise ParseError(f"unknown name {text!r}", pos, _NAMES)
            kind = text
        elif kind == "op":
            kind = text
        if kind != "ws":
            tokens.append(Token(kind, text, pos))
        pos = m.end()
    tokens.append(Token("end", "", len(src)))
    return tokens


# ----------------------------------------------------------------------------
# AST
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Number:
    value: Union[int, float]


@dataclass(frozen=True)
class TVar:
    pass


@dataclass(frozen=True)
class Imag:
    pass


@dataclass(frozen=True)
class Phi:
    pass


@dataclass(frozen=True)
class BasisAtom:
    p: int
    q: int


@dataclass(frozen=True)
class SimpleAtom:
    p: int
    q: int
    n: int


@dataclass(frozen=True)
class Group:
    inner: "Expression"


@dataclass(frozen=True)
class Neg:
    operand: "Expression"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Pow:
    base: "Expression"
    exponent: int


Expression = Union[Number, TVar, Imag, Phi, BasisAtom, SimpleAtom, Group, Neg, BinOp, Pow]


class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            self.fail({kind})
        return self.advance()

    def fail(self, expected):
        t = self.tok
        what = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"unexpected {what}", t.pos, expected)

    def parse(self) -> Expression:
        node = self.expr()
        if self.tok.kind != "end":
            self.fail({"+", "-", "*", "/", "end"})
        return node

    def expr(self) -> Expression:
        node = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.advance().kind
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expression:
        node = self.unary()
        while self.tok.kind in ("*", "/"):
            op = self.advance().kind
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Expression:
        if self.tok.kind == "-":
            self.advance()
            return Neg(self.unary())
        return self.factor()

    def integer(self, signed: bool) -> int:
        neg = False
        if signed and self.tok.kind == "-":
            self.advance()
            neg = True
        t = self.tok
        if t.kind != "number" or not t.text.isdigit():
            self.fail({"integer"} | ({"-"} if signed and not neg else set()))
        self.advance()
        return -int(t.text) if neg else int(t.text)

    def factor(self) -> Expression:
        base = self.atom()
        if self.tok.kind == "^":
            self.advance()
            exp = self.integer(signed=isinstance(base, TVar))
            return Pow(base, exp)
        return base

    def _looks_like_pair(self) -> bool:
        j = self.i + 1
        if self.tokens[j].kind == "-":
            j += 1
        t = self.tokens[j]
        return t.kind == "number" and t.text.isdigit() and self.tokens[j + 1].kind == ","

    def atom(self) -> Expression:
        t = self.tok
        if t.kind == "(":
            if self._looks_like_pair():
                self.advance()
                p = self.integer(signed=True)
                self.expect(",")
                q = self.integer(signed=True)
                self.expect(")")
                if self.tok.kind == "suffix":
                    self.advance()
                    return BasisAtom(p, q)
                if self.tok.kind == "^":
                    self.advance()
                    return SimpleAtom(p, q, self.integer(signed=False))
                return BasisAtom(p, q)
            self.advance()
            inner = self.expr()
            self.expect(")")
            return Group(inner)
        if t.kind == "number":
            self.advance()
            if t.text.isdigit():
                return Number(int(t.text))
            return Number(float(t.text))
        if t.kind == "t":
            self.advance()
            return TVar()
        if t.kind == "i":
            self.advance()
            return Imag()
        if t.kind == "phi":
            self.advance()
            return Phi()
        self.fail({"(", "integer", "number", "t", "i", "phi"})


def parse_expression(src: str) -> Expression:
    return _Parser(src).parse()


# ----------------------------------------------------------------------------
# evaluation
# ----------------------------------------------------------------------------

class EvaluationError(SkeinError, ValueError):
    """The expression is well formed but has no meaning (e.g. dividing by a curve)."""


def _scalar_part(e: SkeinElement, what: str):
    if not e.is_scalar():
        raise EvaluationError(f"{what} must be a scalar multiple of phi")
    return e.terms.get(PHI, e.ctx.zero())


def evaluate(expr: Expression, ctx: ScalarContext = EXACT) -> SkeinElement:
    """Evaluate to a canonical T-basis element."""
    if isinstance(expr, Number):
        if isinstance(expr.value, float) and ctx.is_exact:
            raise EvaluationError("decimal literals need numeric mode")
        return SkeinElement.scalar(expr.value, ctx)
    if isinstance(expr, TVar):
        return SkeinElement.scalar(ctx.monomial(1), ctx)
    if isinstance(expr, Imag):
        if ctx.is_exact:
            raise EvaluationError("the imaginary unit needs numeric mode")
        return SkeinElement.scalar(1j, ctx)
    if isinstance(expr, Phi):
        return SkeinElement.phi(ctx)
    if isinstance(expr, BasisAtom):
        return SkeinElement.basis(expr.p, expr.q, ctx=ctx)
    if isinstance(expr, SimpleAtom):
        return simple_to_T(SimpleElement({(expr.p, expr.q, expr.n): 1}, ctx))
    if isinstance(expr, Group):
        return evaluate(expr.inner, ctx)
    if isinstance(expr, Neg):
        return -evaluate(expr.operand, ctx)
    if isinstance(expr, Pow):
        base = evaluate(expr.base, ctx)
        if expr.exponent >= 0:
            return power(base, expr.exponent)
        s = _scalar_part(base, "base of a negative power")
        inv = ctx.div(ctx.one(), s)
        return SkeinElement.scalar(inv, ctx) if expr.exponent == -1 else \
            power(SkeinElement.scalar(inv, ctx), -expr.exponent)
    if isinstance(expr, BinOp):
        a = evaluate(expr.left, ctx)
        b = evaluate(expr.right, ctx)
        if expr.op == "+":
            return a + b
        if expr.op == "-":
            return a - b
        if expr.op == "*":
            return multiply(a, b)
        if expr.op == "/":
            s = _scalar_part(b, "divisor")
            return a.scale(ctx.div(ctx.one(), s))
    raise TypeError(f"not an expression node: {expr!r}")


def evaluate_text(src: str, ctx: ScalarContext = EXACT) -> SkeinElement:
    return evaluate(parse_expression(src), ctx)
