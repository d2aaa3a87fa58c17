"""Set theory with individuals: objects, natural numbers, symbolic ordinals."""

from .objects import (
    Individual,
    Obj,
    Set,
    cup,
    equal,
    is_transitive,
    member,
    mk_individual,
    mk_set,
    pair,
    regularity_witness,
    specification,
    subset,
    union,
)
from .naturals import Alpha, Nat, first_number, from_int, is_number, to_int
from .ordinals import SymOrd, omega

__version__ = "0.1.0"
