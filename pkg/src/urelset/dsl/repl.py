"""Line-at-a-time interpreter shared by ``repl``, ``run`` and the transcript tests."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable

from ..checker import UniverseSpec, run_suite
from ..checker.suites import SUITES
from ..errors import KernelError
from ..objects import mk_individual
from .errors import DslError, format_error
from .evaluator import Universe, Value, evaluate
from .lexer import KEYWORDS, tokenize
from .parser import DEFAULT_ATOMS, Let, parse
from .render import render

HELP = """\
expressions:  {p, q}  succ(x)  union(x)  pair(x, y)  cup(x, y)  spec(s, x -> pred)
              a + b  a * b  omega  omega * n  x in y  x = y  x subset y  a < b
              is_number(x)  is_transitive(x)  is_individual(x)  is_set(x)
statements:   let name = expr
commands:     :atoms [names...]  :mode raw|abbr  :check <suite> [max_n]  :help  :quit"""


@dataclass(frozen=True)
class ReplState:
    atoms: tuple[str, ...] = DEFAULT_ATOMS
    env: dict = field(default_factory=dict)
    mode: str = "abbreviated"
    done: bool = False

    @property
    def universe(self) -> Universe:
        return Universe(self.atoms)


def _show(state: ReplState, v: Value) -> str:
    return render(v, state.mode, state.universe.alpha)


class _Refused(Exception):
    pass


def repl_step(state: ReplState, line: str) -> tuple[ReplState, str]:
    """Process one input line; errors are reported in the output, never raised."""
    state, text, _ = execute_line(state, line)
    return state, text


def execute_line(state: ReplState, line: str) -> tuple[ReplState, str, bool]:
    """Like :func:`repl_step`, plus a flag that is False when the line failed."""
    text = line.strip()
    if not text or text.startswith("#"):
        return state, "", True
    if text.startswith(":"):
        try:
            new, out = _command(state, text)
        except _Refused as exc:
            return state, f"error: {exc}", False
        return new, out, True
    try:
        tokens = tokenize(line)
        if not tokens:
            return state, "", True
        stmt = parse(tokens, state.atoms, len(line))
        value = evaluate(stmt, state.env, state.universe)
    except DslError as err:
        return state, format_error(line, err), False
    if isinstance(stmt, Let):
        env = dict(state.env)
        env[stmt.name] = value
        return replace(state, env=env), f"{stmt.name} = {_show(state, value)}", True
    return state, _show(state, value), True


def _command(state: ReplState, text: str) -> tuple[ReplState, str]:
    cmd, *args = text.split()
    if cmd == ":quit":
        return replace(state, done=True), "bye"
    if cmd == ":help":
        return state, HELP
    if cmd == ":atoms":
        if not args:
            return state, "atoms: " + " ".join(state.atoms)
        if len(args) < 2 or len(set(args)) != len(args):
            raise _Refused(":atoms needs at least two distinct names")
        for a in args:
            if a in KEYWORDS:
                raise _Refused(f"{a!r} is a keyword")
            try:
                mk_individual(a)
            except KernelError as exc:
                raise _Refused(str(exc)) from None
        new = replace(state, atoms=tuple(args), env={})
        return new, "atoms: " + " ".join(args) + " (bindings cleared)"
    if cmd == ":mode":
        if len(args) != 1 or args[0] not in ("raw", "abbr", "abbreviated"):
            raise _Refused("usage :mode raw|abbr")
        mode = "raw" if args[0] == "raw" else "abbreviated"
        return replace(state, mode=mode), f"mode: {'raw' if mode == 'raw' else 'abbr'}"
    if cmd == ":check":
        if not args or args[0] not in SUITES + ("all",) or len(args) > 2:
            raise _Refused(f"usage :check {'|'.join(('all',) + SUITES)} [max_n]")
        try:
            max_n = int(args[1]) if len(args) == 2 else 10
            report = run_suite(args[0], UniverseSpec(state.atoms), max_n)
        except (ValueError, KernelError) as exc:
            raise _Refused(str(exc)) from None
        lines = [report.summary()]
        lines += [
            f"  FAIL {o.id}: {o.counterexample}" for o in report.obligations if not o.passed
        ]
        return state, "\n".join(lines)
    raise _Refused(f"unknown command {cmd} (try :help)")


def transcript(lines: Iterable[str], state: ReplState | None = None) -> str:
    """Echo each line after a ``> `` prompt followed by its output."""
    state = state or ReplState()
    out = []
    for line in lines:
        line = line.rstrip("\n")
        out.append(f"> {line}")
        state, text = repl_step(state, line)
        if text:
            out.append(text)
        if state.done:
            break
    return "\n".join(out) + "\n"
