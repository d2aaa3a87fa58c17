"""Symbolic ordinals of the form ω·m + n.

The set ω of all natural numbers cannot be built as a finite object, so
ordinals from ω upward are kept symbolic.  The ordinals whose first number is
ω are exactly ω + n for natural n, which is what makes the ``(m, n)`` pair a
faithful representation for everything up to the first numbers ω·m.
``m == 0`` denotes the natural number ``n`` itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import naturals
from .naturals import Alpha, Nat

__all__ = [
    "SymOrd",
    "omega",
    "succ_ord",
    "add_nat_ord",
    "add_ord_nat",
    "is_ordinal_first_omega",
    "first_number_level",
    "from_nat",
    "to_nat",
]


@dataclass(frozen=True, order=True)
class SymOrd:
    omega_coeff: int
    offset: int

    def __post_init__(self):
        for v in (self.omega_coeff, self.offset):
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"coefficients must be nonnegative integers, got {v!r}")

    @property
    def is_finite(self) -> bool:
        return self.omega_coeff == 0

    def __str__(self) -> str:
        m, n = self.omega_coeff, self.offset
        if m == 0:
            return str(n)
        head = "ω" if m == 1 else f"ω·{m}"
        return head if n == 0 else f"{head}+{n}"


NatLike = Union[Nat, int]


def _count(k: NatLike) -> int:
    if isinstance(k, Nat):
        return naturals.to_int(k)
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise ValueError(f"not a natural number: {k!r}")
    return k


def omega() -> SymOrd:
    return SymOrd(1, 0)


def succ_ord(b: SymOrd) -> SymOrd:
    return SymOrd(b.omega_coeff, b.offset + 1)


def add_nat_ord(k: NatLike, b: SymOrd) -> SymOrd:
    """``k + b``: a finite ``k`` is absorbed by any infinite ``b`` (``k ∪ b = b``)."""
    n = _count(k)
    if b.omega_coeff >= 1:
        return b
    return SymOrd(0, n + b.offset)


def add_ord_nat(b: SymOrd, k: NatLike) -> SymOrd:
    """``b + k``, the ``k``-fold successor of ``b``."""
    return SymOrd(b.omega_coeff, b.offset + _count(k))


def is_ordinal_first_omega(b: SymOrd) -> bool:
    return b.omega_coeff == 1


def first_number_level(k: int) -> SymOrd:
    """The first number ω·k; level 0 is the finite first number."""
    return SymOrd(_count(k), 0)


def from_nat(n: Nat) -> SymOrd:
    return SymOrd(0, naturals.to_int(n))


def to_nat(b: SymOrd, alpha: Alpha) -> Nat:
    if not b.is_finite:
        raise ValueError(f"{b} is not a natural number")
    return naturals.from_int(b.offset, alpha)
