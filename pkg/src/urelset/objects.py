"""Canonical hereditarily finite objects over a finite stock of individuals.

An object is either an :class:`Individual` (a named atom whose only member
is itself) or a nonempty :class:`Set` of objects.  Every object is interned:
two objects with the same members are the same Python object, so extensional
equality reduces to identity and objects can be used as dict keys cheaply.

Sets keep their members sorted under a fixed total order:

* individuals precede sets,
* individuals compare by name,
* sets compare by member count, then memberwise in canonical order.
"""

from __future__ import annotations

import re
import threading
from functools import lru_cache
from typing import Callable, Iterable

from .errors import EmptySet, InvalidName, NoSetMember, NotASet, NoWitness

__all__ = [
    "Obj",
    "Individual",
    "Set",
    "Predicate",
    "mk_individual",
    "mk_set",
    "member",
    "equal",
    "extensionally_equal",
    "subset",
    "pair",
    "union",
    "cup",
    "is_transitive",
    "specification",
    "regularity_witness",
    "is_individual",
    "is_set",
    "compare_objects",
]

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

_intern_lock = threading.Lock()
_individuals: dict[str, "Individual"] = {}
_sets: dict[tuple, "Set"] = {}


class Obj:
    """Common base of individuals and sets.  Never instantiated directly."""

    __slots__ = ()

    members: tuple

    def __lt__(self, other: "Obj") -> bool:
        return compare_objects(self, other) < 0

    def __le__(self, other: "Obj") -> bool:
        return compare_objects(self, other) <= 0

    def __gt__(self, other: "Obj") -> bool:
        return compare_objects(self, other) > 0

    def __ge__(self, other: "Obj") -> bool:
        return compare_objects(self, other) >= 0

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self


class Individual(Obj):
    __slots__ = ("name", "__weakref__")

    name: str

    def __new__(cls, name: str):
        if not isinstance(name, str) or not _NAME.match(name):
            raise InvalidName(f"not a valid individual name: {name!r}")
        obj = _individuals.get(name)
        if obj is not None:
            return obj
        with _intern_lock:
            obj = _individuals.get(name)
            if obj is None:
                obj = object.__new__(cls)
                object.__setattr__(obj, "name", name)
                _individuals[name] = obj
        return obj

    @property
    def members(self) -> tuple:
        return (self,)

    def __setattr__(self, key, value):
        raise AttributeError("objects are immutable")

    def __reduce__(self):
        return (Individual, (self.name,))

    def __repr__(self) -> str:
        return self.name


class Set(Obj):
    """A nonempty set.  Build through :func:`mk_set`, which canonicalizes."""

    __slots__ = ("members", "_lookup", "__weakref__")

    members: tuple
    _lookup: frozenset

    @classmethod
    def _intern(cls, members: tuple) -> "Set":
        # members must already be sorted and duplicate free
        obj = _sets.get(members)
        if obj is not None:
            return obj
        with _intern_lock:
            obj = _sets.get(members)
            if obj is None:
                obj = object.__new__(cls)
                object.__setattr__(obj, "members", members)
                object.__setattr__(obj, "_lookup", frozenset(members))
                _sets[members] = obj
        return obj

    def __setattr__(self, key, value):
        raise AttributeError("objects are immutable")

    def __reduce__(self):
        return (mk_set, (list(self.members),))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __repr__(self) -> str:
        return "{" + ", ".join(map(repr, self.members)) + "}"


Predicate = Callable[[Obj], bool]


def compare_objects(a: Obj, b: Obj) -> int:
    """Three-way comparison under the canonical total order."""
    if a is b:
        return 0
    a_ind = isinstance(a, Individual)
    b_ind = isinstance(b, Individual)
    if a_ind and b_ind:
        return -1 if a.name < b.name else 1
    if a_ind != b_ind:
        return -1 if a_ind else 1
    if len(a.members) != len(b.members):
        return -1 if len(a.members) < len(b.members) else 1
    for x, y in zip(a.members, b.members):
        c = compare_objects(x, y)
        if c:
            return c
    return 0  # unreachable for interned sets


def mk_individual(name: str) -> Individual:
    return Individual(name)


def mk_set(elems: Iterable[Obj]) -> Obj:
    """Return the canonical object whose members are exactly ``elems``.

    A singleton of an individual is that individual, because both have the
    same sole member.  Raises :class:`EmptySet` for an empty input.
    """
    distinct = {}
    for e in elems:
        if not isinstance(e, Obj):
            raise TypeError(f"not an object: {e!r}")
        distinct[id(e)] = e
    if not distinct:
        raise EmptySet("there is no empty set")
    if len(distinct) == 1:
        (only,) = distinct.values()
        if isinstance(only, Individual):
            return only
    return Set._intern(tuple(sorted(distinct.values())))


def member(u: Obj, t: Obj) -> bool:
    if isinstance(t, Individual):
        return u is t
    return u in t._lookup


def equal(s: Obj, t: Obj) -> bool:
    # interning makes extensional equality coincide with identity
    return s is t


def extensionally_equal(s: Obj, t: Obj) -> bool:
    """Decide equality by comparing members recursively, without interning.

    This is the slow, literal route used to cross-check :func:`equal`.
    Individuals are identified by name.
    """
    if isinstance(s, Individual) and isinstance(t, Individual):
        return s.name == t.name
    sm, tm = s.members, t.members
    return all(any(extensionally_equal(u, v) for v in tm) for u in sm) and all(
        any(extensionally_equal(v, u) for u in sm) for v in tm
    )


def is_individual(s: Obj) -> bool:
    return member(s, s)


def is_set(s: Obj) -> bool:
    return not member(s, s)


def subset(s: Obj, t: Obj) -> bool:
    return all(member(u, t) for u in s.members)


def pair(s: Obj, t: Obj) -> Obj:
    return mk_set((s, t))


@lru_cache(maxsize=1 << 16)
def union(s: Obj) -> Obj:
    """Members of members of ``s``.  An individual member contributes itself."""
    return mk_set(u for z in s.members for u in z.members)


def cup(s: Obj, t: Obj) -> Obj:
    return union(pair(s, t))


def is_transitive(s: Obj) -> bool:
    return subset(union(s), s)


def specification(s: Obj, phi: Predicate) -> Obj:
    """The set of members ``u`` of ``s`` with ``phi(u)``.

    Raises :class:`NoWitness` when no member qualifies, since the result
    would be empty.
    """
    if isinstance(s, Individual):
        raise NotASet(f"{s!r} is an individual")
    kept = [u for u in s.members if phi(u)]
    if not kept:
        raise NoWitness(f"no member of {s!r} satisfies the predicate")
    return mk_set(kept)


def regularity_witness(s: Obj) -> Obj:
    """A set member ``v`` of ``s`` sharing no set member with ``s``.

    Walks down the membership relation from the least set member, always
    moving to the least set member of ``s`` contained in the current one.
    """
    if isinstance(s, Individual):
        raise NotASet(f"{s!r} is an individual")
    candidates = [u for u in s.members if isinstance(u, Set)]
    if not candidates:
        raise NoSetMember(f"every member of {s!r} is an individual")
    v = candidates[0]
    while True:
        below = [u for u in candidates if member(u, v)]
        if not below:
            return v
        v = below[0]
