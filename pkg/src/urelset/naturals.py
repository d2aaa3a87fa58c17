"""Natural numbers as ordinal numbers whose first number is a pair of individuals.

Given two distinct individuals ``p`` and ``q``, the first number (zero) is
``{p, q}`` and the successor of ``S`` is ``S ∪ {S}``.  So ``1 = {p, q, 0}``,
``2 = {p, q, 0, 1}`` and the number ``k`` has exactly ``k + 2`` members.

Numbers are validated once, when a :class:`Nat` is made through
:func:`make_nat`; the operations here build results from validated inputs and
only re-check them when assertions are enabled.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import (
    EqualAtoms,
    FirstNumber,
    MixedAlpha,
    NoNumberMember,
    NonNumberSetMember,
    NotANumber,
    NotASet,
    NotIndividuals,
    PreconditionFailed,
)
from .objects import Individual, Obj, Set, cup, equal, member, mk_set, pair, union

__all__ = [
    "Alpha",
    "Nat",
    "Ordering",
    "InductionReport",
    "first_number",
    "is_number",
    "make_nat",
    "zero",
    "succ",
    "pred",
    "lt",
    "leq",
    "compare",
    "smallest_number",
    "greatest_number",
    "induction_check",
    "add",
    "mul",
    "to_int",
    "from_int",
]


@dataclass(frozen=True)
class Alpha:
    """A first number: the set of two distinct individuals."""

    obj: Set

    @property
    def atoms(self) -> tuple[Individual, Individual]:
        return self.obj.members

    def __repr__(self) -> str:
        return f"Alpha({self.obj!r})"


@dataclass(frozen=True)
class Nat:
    value: Obj
    alpha: Alpha

    def __repr__(self) -> str:
        return f"Nat({len(self.value.members) - 2})"


class Ordering(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"


@dataclass(frozen=True)
class InductionReport:
    start: Nat
    end: Nat
    instances: int
    holds: bool


def first_number(p: Obj, q: Obj) -> Alpha:
    if not (isinstance(p, Individual) and isinstance(q, Individual)):
        raise NotIndividuals("a first number is made of two individuals")
    if equal(p, q):
        raise EqualAtoms(f"{{{p!r}, {q!r}}} is the individual {p!r}, not a set")
    return Alpha(pair(p, q))


@lru_cache(maxsize=1 << 14)
def is_number(x: Obj, alpha: Alpha) -> bool:
    """Recognize an ordinal number with first number ``alpha``.

    ``x`` must not belong to alpha, and every ``y`` in ``x ∪ {x}`` must
    either be in ``alpha ∪ {alpha}`` or contain alpha and satisfy
    ``y = ⋃y ∪ {⋃y}``.
    """
    a = alpha.obj
    if member(x, a):
        return False
    base = cup(a, pair(a, a))
    for y in cup(x, pair(x, x)).members:
        if member(y, base):
            continue
        if not member(a, y):
            return False
        uy = union(y)
        if not equal(y, cup(uy, pair(uy, uy))):
            return False
    return True


def make_nat(x: Obj, alpha: Alpha) -> Nat:
    if not is_number(x, alpha):
        raise NotANumber(f"{x!r} is not a number over {alpha.obj!r}")
    return Nat(x, alpha)


def zero(alpha: Alpha) -> Nat:
    return Nat(alpha.obj, alpha)


def _same_alpha(a: Nat, b: Nat) -> Alpha:
    if a.alpha != b.alpha:
        raise MixedAlpha(f"{a.alpha!r} and {b.alpha!r} differ")
    return a.alpha


def _successor(x: Obj) -> Obj:
    return cup(x, pair(x, x))


def succ(s: Nat) -> Nat:
    t = _successor(s.value)
    assert is_number(t, s.alpha)
    return Nat(t, s.alpha)


def pred(s: Nat) -> Nat:
    if s.value is s.alpha.obj:
        raise FirstNumber("the first number is not a successor")
    u = union(s.value)
    assert is_number(u, s.alpha)
    return Nat(u, s.alpha)


def lt(a: Nat, b: Nat) -> bool:
    _same_alpha(a, b)
    return member(a.value, b.value)


def leq(a: Nat, b: Nat) -> bool:
    _same_alpha(a, b)
    return not member(b.value, a.value)


def compare(a: Nat, b: Nat) -> Ordering:
    _same_alpha(a, b)
    if member(a.value, b.value):
        return Ordering.LESS
    if equal(a.value, b.value):
        return Ordering.EQUAL
    if member(b.value, a.value):
        return Ordering.GREATER
    raise AssertionError(f"trichotomy violated for {a!r}, {b!r}")


def _number_members(v: Obj, alpha: Alpha) -> list[Obj]:
    if isinstance(v, Individual):
        raise NotASet(f"{v!r} is an individual")
    nums = []
    for u in v.members:
        if isinstance(u, Individual):
            continue
        if not is_number(u, alpha):
            raise NonNumberSetMember(f"{u!r} is a set but not a number")
        nums.append(u)
    if not nums:
        raise NoNumberMember(f"no number belongs to {v!r}")
    return nums


def smallest_number(v: Obj, alpha: Alpha) -> Nat:
    """The ``w`` in ``v`` such that no set belonging to ``v`` belongs to ``w``."""
    nums = _number_members(v, alpha)
    for w in nums:
        if not any(member(u, w) for u in nums):
            return Nat(w, alpha)
    raise AssertionError(f"no smallest number in {v!r}")


def greatest_number(v: Obj, alpha: Alpha) -> Nat:
    """The ``z`` in ``v`` with ``z ∉ u`` for every ``u`` in ``v``."""
    nums = _number_members(v, alpha)
    for z in nums:
        if not any(member(z, u) for u in v.members):
            return Nat(z, alpha)
    raise AssertionError(f"no greatest number in {v!r}")


def induction_check(s: Nat, t: Nat, phi: Callable[[Obj], bool]) -> InductionReport:
    """Bounded check of mathematical induction from ``s`` up to ``t``.

    Verifies ``phi(s)`` and, for every ``X`` with ``X ∈ t`` and ``X ∉ s``,
    that ``phi(X)`` implies ``phi(X ∪ {X})``.  When both premises hold the
    conclusion ``phi(t)`` is evaluated and reported in ``holds``.
    Raises :class:`PreconditionFailed` naming the failing premise.
    """
    _same_alpha(s, t)
    if not member(s.value, t.value):
        raise ValueError(f"{s!r} is not less than {t!r}")
    if not phi(s.value):
        raise PreconditionFailed("a", s.value)
    instances = 1
    for x in t.value.members:
        if member(x, s.value):
            continue
        instances += 1
        if phi(x) and not phi(_successor(x)):
            raise PreconditionFailed("b", x)
    return InductionReport(s, t, instances, bool(phi(t.value)))


@lru_cache(maxsize=1 << 14)
def _add(a: Obj, b: Obj, alpha: Alpha) -> Obj:
    if b is alpha.obj:
        return cup(a, alpha.obj)
    c = _add(a, union(b), alpha)
    return _successor(c)


@lru_cache(maxsize=1 << 14)
def _mul(a: Obj, b: Obj, alpha: Alpha) -> Obj:
    if b is alpha.obj:
        return alpha.obj
    return _add(_mul(a, union(b), alpha), a, alpha)


def add(a: Nat, b: Nat) -> Nat:
    alpha = _same_alpha(a, b)
    r = _add(a.value, b.value, alpha)
    assert is_number(r, alpha)
    return Nat(r, alpha)


def mul(a: Nat, b: Nat) -> Nat:
    alpha = _same_alpha(a, b)
    r = _mul(a.value, b.value, alpha)
    assert is_number(r, alpha)
    return Nat(r, alpha)


def to_int(s: Nat) -> int:
    return len(s.value.members) - 2


@lru_cache(maxsize=1 << 12)
def _from_int(k: int, alpha: Alpha) -> Obj:
    if k == 0:
        return alpha.obj
    return _successor(_from_int(k - 1, alpha))


def from_int(k: int, alpha: Alpha) -> Nat:
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ValueError(f"not a nonnegative integer: {k!r}")
    # warm the cache bottom-up so deep k does not recurse deeply
    for j in range(0, k, 256):
        _from_int(j, alpha)
    return Nat(_from_int(k, alpha), alpha)
