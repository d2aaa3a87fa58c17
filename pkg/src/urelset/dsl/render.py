from __future__ import annotations

from .. import naturals
from ..naturals import Alpha
from ..objects import Individual, Obj
from ..ordinals import SymOrd
from .evaluator import Universe, Value

MODES = ("raw", "abbreviated")


def render(v: Value, mode: str = "abbreviated", alpha: Alpha | None = None) -> str:
    """Text for a value.

    ``raw`` spells every object in full set notation.  ``abbreviated`` writes
    numbers (relative to ``alpha``, by default ``{p, q}``) as decimals and
    ordinals as ``ω·m+n``.  Both outputs parse back to the same value.
    """
    if mode == "abbr":
        mode = "abbreviated"
    if mode not in MODES:
        raise ValueError(f"unknown render mode {mode!r}")
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, SymOrd):
        if mode == "abbreviated":
            return str(v)
        m, n = v.omega_coeff, v.offset
        head = "omega" if m == 1 else f"omega * {m}"
        return head if n == 0 else f"{head} + {n}"
    if alpha is None:
        alpha = Universe().alpha
    return _render_obj(v, mode == "abbreviated", alpha)


def _render_obj(x: Obj, fold: bool, alpha: Alpha) -> str:
    if isinstance(x, Individual):
        return x.name
    if fold and naturals.is_number(x, alpha):
        return str(len(x.members) - 2)
    return "{" + ", ".join(_render_obj(m, fold, alpha) for m in x.members) + "}"
