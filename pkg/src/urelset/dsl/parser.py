"""Recursive descent parser for the expression language.

Grammar::

    stmt  := "let" ident "=" expr | expr
    expr  := sum (("in" | "=" | "subset" | "<") sum)?
    sum   := prod ("+" prod)*
    prod  := unary ("*" unary)*
    unary := "succ" "(" expr ")" | "union" "(" expr ")"
           | "pair" "(" expr "," expr ")" | "cup" "(" expr "," expr ")"
           | "spec" "(" expr "," ident "->" expr ")"
           | pred "(" expr ")" | atom
    atom  := ident | integer | "omega" | "true" | "false"
           | "{" expr ("," expr)* "}" | "(" expr ")"

Multiplication binds tighter than addition; relations do not chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union as TUnion

from .errors import ParseError
from .lexer import PRED_NAMES, Token, tokenize

DEFAULT_ATOMS = ("p", "q")

Span = tuple[int, int]


@dataclass(frozen=True)
class AtomRef:
    name: str
    span: Span


@dataclass(frozen=True)
class VarRef:
    name: str
    span: Span


@dataclass(frozen=True)
class NumLit:
    value: int
    span: Span


@dataclass(frozen=True)
class OrdLit:
    omega_coeff: int
    offset: int
    span: Span


@dataclass(frozen=True)
class BoolLit:
    value: bool
    span: Span


@dataclass(frozen=True)
class SetLit:
    elems: tuple
    span: Span


@dataclass(frozen=True)
class Union:
    arg: "Expr"
    span: Span


@dataclass(frozen=True)
class Pair:
    left: "Expr"
    right: "Expr"
    span: Span


@dataclass(frozen=True)
class Cup:
    left: "Expr"
    right: "Expr"
    span: Span


@dataclass(frozen=True)
class Succ:
    arg: "Expr"
    span: Span


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"
    span: Span


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"
    span: Span


@dataclass(frozen=True)
class Spec:
    source: "Expr"
    var: str
    pred: "Expr"
    span: Span


@dataclass(frozen=True)
class RelOp:
    op: str  # in | = | subset | <
    left: "Expr"
    right: "Expr"
    span: Span


@dataclass(frozen=True)
class UnaryPred:
    pred: str
    arg: "Expr"
    span: Span


@dataclass(frozen=True)
class Let:
    name: str
    expr: "Expr"
    span: Span


Expr = TUnion[
    AtomRef, VarRef, NumLit, OrdLit, BoolLit, SetLit, Union, Pair, Cup, Succ,
    Add, Mul, Spec, RelOp, UnaryPred, Let,
]

_RELOPS = ("in", "=", "subset", "<")


class _Parser:
    def __init__(self, tokens: Sequence[Token], atoms: Sequence[str], length: int):
        self.toks = list(tokens)
        self.pos = 0
        self.atoms = frozenset(atoms)
        self.length = length
        self.bound: list[str] = []

    # token helpers

    def peek(self) -> Token | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def at(self, lexeme: str) -> bool:
        t = self.peek()
        return t is not None and t.kind in ("symbol", "keyword") and t.lexeme == lexeme

    def error(self, expected, message=None) -> ParseError:
        t = self.peek()
        span = t.span if t else (self.length, self.length + 1)
        found = repr(t.lexeme) if t else "end of input"
        exp = tuple(expected)
        return ParseError(span, message or f"expected {' or '.join(exp)}, found {found}", exp)

    def expect(self, lexeme: str) -> Token:
        if not self.at(lexeme):
            raise self.error([repr(lexeme)])
        return self.advance()

    def advance(self) -> Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def ident(self) -> Token:
        t = self.peek()
        if t is None or t.kind != "identifier":
            raise self.error(["identifier"])
        return self.advance()

    # grammar

    def statement(self) -> Expr:
        if self.at("let"):
            start = self.advance().start
            name = self.ident()
            if name.lexeme in self.atoms:
                raise ParseError(name.span, f"cannot rebind atom {name.lexeme!r}")
            self.expect("=")
            e = self.expr()
            return Let(name.lexeme, e, (start, e.span[1]))
        return self.expr()

    def expr(self) -> Expr:
        left = self.sum()
        t = self.peek()
        if t is not None and t.lexeme in _RELOPS and t.kind != "identifier":
            op = self.advance().lexeme
            right = self.sum()
            nxt = self.peek()
            if nxt is not None and nxt.lexeme in _RELOPS and nxt.kind != "identifier":
                raise ParseError(nxt.span, "relations do not chain; add parentheses")
            return RelOp(op, left, right, (left.span[0], right.span[1]))
        return left

    def sum(self) -> Expr:
        left = self.prod()
        while self.at("+"):
            self.advance()
            right = self.prod()
            left = Add(left, right, (left.span[0], right.span[1]))
        return left

    def prod(self) -> Expr:
        left = self.unary()
        while self.at("*"):
            self.advance()
            right = self.unary()
            left = Mul(left, right, (left.span[0], right.span[1]))
        return left

    def unary(self) -> Expr:
        t = self.peek()
        if t is not None and t.kind == "keyword":
            if t.lexeme in ("succ", "union") or t.lexeme in PRED_NAMES:
                self.advance()
                self.expect("(")
                arg = self.expr()
                end = self.expect(")").end
                span = (t.start, end)
                if t.lexeme == "succ":
                    return Succ(arg, span)
                if t.lexeme == "union":
                    return Union(arg, span)
                return UnaryPred(t.lexeme, arg, span)
            if t.lexeme in ("pair", "cup"):
                self.advance()
                self.expect("(")
                left = self.expr()
                self.expect(",")
                right = self.expr()
                end = self.expect(")").end
                cls = Pair if t.lexeme == "pair" else Cup
                return cls(left, right, (t.start, end))
            if t.lexeme == "spec":
                self.advance()
                self.expect("(")
                source = self.expr()
                self.expect(",")
                var = self.ident()
                if var.lexeme in self.atoms:
                    raise ParseError(var.span, f"cannot bind atom {var.lexeme!r}")
                self.expect("->")
                self.bound.append(var.lexeme)
                try:
                    pred = self.expr()
                finally:
                    self.bound.pop()
                end = self.expect(")").end
                return Spec(source, var.lexeme, pred, (t.start, end))
        return self.atom()

    def atom(self) -> Expr:
        t = self.peek()
        if t is None:
            raise self.error(["expression"])
        if t.kind == "identifier":
            self.advance()
            if t.lexeme in self.atoms and t.lexeme not in self.bound:
                return AtomRef(t.lexeme, t.span)
            return VarRef(t.lexeme, t.span)
        if t.kind == "integer":
            self.advance()
            return NumLit(int(t.lexeme), t.span)
        if t.kind == "keyword" and t.lexeme == "omega":
            self.advance()
            return OrdLit(1, 0, t.span)
        if t.kind == "keyword" and t.lexeme in ("true", "false"):
            self.advance()
            return BoolLit(t.lexeme == "true", t.span)
        if self.at("{"):
            self.advance()
            if self.at("}"):
                close = self.advance()
                raise ParseError(
                    (t.start, close.end),
                    "empty set literal: there is no empty set",
                    ("expression",),
                )
            elems = [self.expr()]
            while self.at(","):
                self.advance()
                elems.append(self.expr())
            end = self.expect("}").end
            return SetLit(tuple(elems), (t.start, end))
        if self.at("("):
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        raise self.error(["expression"])


def parse(tokens: Sequence[Token], atoms: Sequence[str] = DEFAULT_ATOMS, length: int | None = None) -> Expr:
    """Parse one statement.  ``atoms`` decides which identifiers are individuals."""
    if length is None:
        length = tokens[-1].end if tokens else 0
    p = _Parser(tokens, atoms, length)
    e = p.statement()
    if p.peek() is not None:
        raise p.error(["end of input"])
    return e


def parse_source(text: str, atoms: Sequence[str] = DEFAULT_ATOMS) -> Expr:
    return parse(tokenize(text), atoms, len(text))
