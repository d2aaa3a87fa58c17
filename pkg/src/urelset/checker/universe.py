"""Bounded universes of objects for exhaustive checking."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from ..errors import BudgetExceeded
from ..objects import Obj
from .kernel import DEFAULT_KERNEL, Kernel

DEFAULT_CAP = 10**6


class InvalidUniverse(ValueError):
    pass


@dataclass(frozen=True)
class UniverseSpec:
    """Atoms, maximum nesting depth and maximum set width."""

    atoms: tuple[str, ...] = ("p", "q")
    max_rank: int = 3
    max_width: int = 4

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        if len(self.atoms) < 2:
            raise InvalidUniverse("at least two atoms are required")
        if len(set(self.atoms)) != len(self.atoms):
            raise InvalidUniverse(f"atoms must be distinct: {self.atoms}")
        if self.max_rank < 1:
            raise InvalidUniverse("max_rank must be at least 1")
        if self.max_width < 1:
            raise InvalidUniverse("max_width must be at least 1")

    def describe(self) -> str:
        return (
            f"atoms {','.join(self.atoms)}; rank<={self.max_rank}; "
            f"width<={self.max_width}"
        )


def universe_size(spec: UniverseSpec) -> int:
    """Closed-form object count.

    Level ``r`` holds the atoms plus every nonempty subset of level ``r-1``
    of size at most ``max_width``; singletons of atoms coincide with the
    atoms, so the count is a plain sum of binomials.
    """
    n = len(spec.atoms)
    for _ in range(spec.max_rank):
        n = sum(comb(n, k) for k in range(1, spec.max_width + 1))
    return n


def enumerate_objects(
    spec: UniverseSpec, cap: int = DEFAULT_CAP, kernel: Kernel = DEFAULT_KERNEL
) -> list[Obj]:
    """Every object over ``spec.atoms`` within the rank and width bounds.

    Returned in canonical order.  Raises :class:`BudgetExceeded` up front if
    the universe would hold more than ``cap`` objects.
    """
    n = len(spec.atoms)
    for _ in range(spec.max_rank):
        n = sum(comb(n, k) for k in range(1, spec.max_width + 1))
        if n > cap:
            raise BudgetExceeded(f"universe {spec.describe()} exceeds {cap} objects")
    atoms = [kernel.mk_individual(a) for a in spec.atoms]
    level = sorted(atoms)
    for _ in range(spec.max_rank):
        nxt = list(atoms)
        for k in range(1, spec.max_width + 1):
            for combo in itertools.combinations(level, k):
                if k == 1 and combo[0] in atoms:
                    continue  # {p} is p
                nxt.append(kernel.mk_set(combo))
        level = sorted(nxt)
    return level
