from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence, Union as TUnion

from .. import naturals, ordinals
from ..errors import KernelError
from ..naturals import Alpha
from ..objects import (
    Obj,
    cup,
    equal,
    is_transitive,
    member,
    mk_individual,
    mk_set,
    pair,
    specification,
    subset,
    union,
)
from ..ordinals import SymOrd
from . import parser as ast
from .errors import KernelFailure, TypeMismatch, UnboundName
from .parser import DEFAULT_ATOMS

Value = TUnion[Obj, SymOrd, bool]


@dataclass(frozen=True)
class Universe:
    """The declared atoms; the first two form the first number."""

    atoms: tuple[str, ...] = DEFAULT_ATOMS

    @cached_property
    def alpha(self) -> Alpha:
        return naturals.first_number(mk_individual(self.atoms[0]), mk_individual(self.atoms[1]))


def kind_of(v: Value) -> str:
    if isinstance(v, bool):
        return "boolean"
    if isinstance(v, SymOrd):
        return "ordinal"
    return "object"


def evaluate(e: ast.Expr, env: Mapping[str, Value] | None = None,
             universe: Universe | Sequence[str] = Universe()) -> Value:
    """Evaluate ``e``; a :class:`~urelset.dsl.parser.Let` yields its bound value."""
    if not isinstance(universe, Universe):
        universe = Universe(tuple(universe))
    return _Evaluator(universe).eval(e, dict(env or {}))


class _Evaluator:
    def __init__(self, universe: Universe):
        self.u = universe
        self.alpha = universe.alpha

    # coercions

    def obj(self, e, env) -> Obj:
        v = self.eval(e, env)
        if isinstance(v, bool) or isinstance(v, SymOrd):
            raise TypeMismatch(e.span, f"expected an object, got {kind_of(v)}")
        return v

    def nat(self, v: Value, e) -> naturals.Nat:
        if isinstance(v, Obj) and naturals.is_number(v, self.alpha):
            return naturals.Nat(v, self.alpha)
        raise TypeMismatch(e.span, f"expected a natural number, got {self.describe(v)}")

    def describe(self, v: Value) -> str:
        if isinstance(v, Obj):
            return "an object that is not a number"
        return "an " + kind_of(v) if kind_of(v) == "ordinal" else "a " + kind_of(v)

    def finite(self, b: SymOrd) -> Value:
        # finite ordinals are ordinary numbers
        if b.is_finite:
            return naturals.from_int(b.offset, self.alpha).value
        return b

    # dispatch

    def eval(self, e, env) -> Value:
        try:
            return getattr(self, "eval_" + type(e).__name__)(e, env)
        except KernelError as exc:
            raise KernelFailure(e.span, exc) from exc

    def eval_AtomRef(self, e: ast.AtomRef, env):
        if e.name not in self.u.atoms:
            raise UnboundName(e.span, f"{e.name!r} is not a declared atom")
        return mk_individual(e.name)

    def eval_VarRef(self, e: ast.VarRef, env):
        if e.name in env:
            return env[e.name]
        if e.name in self.u.atoms:
            return mk_individual(e.name)
        raise UnboundName(e.span, f"{e.name!r} is not bound")

    def eval_NumLit(self, e: ast.NumLit, env):
        return naturals.from_int(e.value, self.alpha).value

    def eval_OrdLit(self, e: ast.OrdLit, env):
        return self.finite(SymOrd(e.omega_coeff, e.offset))

    def eval_BoolLit(self, e: ast.BoolLit, env):
        return e.value

    def eval_SetLit(self, e: ast.SetLit, env):
        return mk_set([self.obj(x, env) for x in e.elems])

    def eval_Union(self, e: ast.Union, env):
        return union(self.obj(e.arg, env))

    def eval_Pair(self, e: ast.Pair, env):
        return pair(self.obj(e.left, env), self.obj(e.right, env))

    def eval_Cup(self, e: ast.Cup, env):
        return cup(self.obj(e.left, env), self.obj(e.right, env))

    def eval_Succ(self, e: ast.Succ, env):
        v = self.eval(e.arg, env)
        if isinstance(v, SymOrd):
            return ordinals.succ_ord(v)
        if isinstance(v, bool):
            raise TypeMismatch(e.arg.span, "expected an object or ordinal, got boolean")
        return cup(v, pair(v, v))

    def eval_Add(self, e: ast.Add, env):
        a, b = self.eval(e.left, env), self.eval(e.right, env)
        if isinstance(a, SymOrd) and isinstance(b, SymOrd):
            raise TypeMismatch(e.span, "addition of two infinite ordinals is not defined")
        if isinstance(b, SymOrd):
            return self.finite(ordinals.add_nat_ord(self.nat(a, e.left), b))
        if isinstance(a, SymOrd):
            return self.finite(ordinals.add_ord_nat(a, self.nat(b, e.right)))
        return naturals.add(self.nat(a, e.left), self.nat(b, e.right)).value

    def eval_Mul(self, e: ast.Mul, env):
        a, b = self.eval(e.left, env), self.eval(e.right, env)
        if isinstance(a, SymOrd):
            if a != ordinals.omega() or isinstance(b, SymOrd):
                raise TypeMismatch(e.span, "only omega * n (a first number) is defined")
            k = naturals.to_int(self.nat(b, e.right))
            return self.finite(ordinals.first_number_level(k))
        if isinstance(b, SymOrd):
            raise TypeMismatch(e.span, "n * omega is not defined; write omega * n")
        return naturals.mul(self.nat(a, e.left), self.nat(b, e.right)).value

    def eval_Spec(self, e: ast.Spec, env):
        s = self.obj(e.source, env)

        def phi(u: Obj) -> bool:
            inner = dict(env)
            inner[e.var] = u
            v = self.eval(e.pred, inner)
            if not isinstance(v, bool):
                raise TypeMismatch(e.pred.span, f"predicate must be boolean, got {kind_of(v)}")
            return v

        return specification(s, phi)

    def eval_RelOp(self, e: ast.RelOp, env):
        a, b = self.eval(e.left, env), self.eval(e.right, env)
        if e.op == "=":
            if kind_of(a) != kind_of(b):
                return False
            if isinstance(a, Obj):
                return equal(a, b)
            return a == b
        if e.op == "<":
            return naturals.lt(self.nat(a, e.left), self.nat(b, e.right))
        if e.op == "in" and isinstance(b, SymOrd) and b == ordinals.omega():
            # omega holds the members of the first number and every number
            if not isinstance(a, Obj):
                raise TypeMismatch(e.left.span, f"expected an object, got {kind_of(a)}")
            return member(a, self.alpha.obj) or naturals.is_number(a, self.alpha)
        for side, v in ((e.left, a), (e.right, b)):
            if not isinstance(v, Obj):
                raise TypeMismatch(side.span, f"expected an object, got {kind_of(v)}")
        if e.op == "in":
            return member(a, b)
        return subset(a, b)

    def eval_UnaryPred(self, e: ast.UnaryPred, env):
        v = self.obj(e.arg, env)
        if e.pred == "is_number":
            return naturals.is_number(v, self.alpha)
        if e.pred == "is_transitive":
            return is_transitive(v)
        if e.pred == "is_individual":
            return member(v, v)
        return not member(v, v)

    def eval_Let(self, e: ast.Let, env):
        return self.eval(e.expr, env)
