"""Command line front end: ``eval``, ``run``, ``repl`` and ``check``."""

from __future__ import annotations

import argparse
import sys

from .checker import MAX_N_LIMIT, SUITES, UniverseSpec, run_suite
from .errors import KernelError
from .dsl import DslError, eval_source, format_error, render
from .dsl.evaluator import Universe
from .dsl.repl import ReplState, execute_line, repl_step, transcript

EXIT_OK, EXIT_ERROR, EXIT_CHECK_FAILED = 0, 1, 2


def _cmd_eval(args) -> int:
    atoms = tuple(args.atoms)
    try:
        value = eval_source(args.expr, atoms=atoms)
    except DslError as err:
        print(format_error(args.expr, err), file=sys.stderr)
        return EXIT_ERROR
    print(render(value, "raw" if args.raw else "abbreviated", Universe(atoms).alpha))
    return EXIT_OK


def _cmd_run(args) -> int:
    state = ReplState()
    with open(args.file, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            state, text, ok = execute_line(state, line.rstrip("\n"))
            if not ok:
                print(f"{args.file}:{lineno}:\n{text}", file=sys.stderr)
                return EXIT_ERROR
            if text:
                print(text)
            if state.done:
                break
    return EXIT_OK


def _cmd_repl(args) -> int:
    if not sys.stdin.isatty():
        sys.stdout.write(transcript(sys.stdin))
        return EXIT_OK
    state = ReplState()
    print("urelset repl; :help for help, :quit to leave")
    while not state.done:
        try:
            line = input("> ")
        except EOFError:
            print()
            break
        state, text = repl_step(state, line)
        if text:
            print(text)
    return EXIT_OK


def _cmd_check(args) -> int:
    try:
        spec = UniverseSpec(tuple(args.atoms), args.max_rank, args.max_width)
        report = run_suite(args.suite, spec, args.max_n, seed=args.seed)
    except (ValueError, KernelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(report.to_json() if args.json else report.format_text())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="urelset", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one expression")
    p.add_argument("-e", "--expr", required=True)
    p.add_argument("--raw", action="store_true", help="print full set notation")
    p.add_argument("--atoms", nargs="+", default=["p", "q"])
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("run", help="run a file, one statement per line")
    p.add_argument("file")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("repl", help="interactive session")
    p.set_defaults(func=_cmd_repl)

    p = sub.add_parser("check", help="run a checker suite")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--max-n", type=int, default=10, help=f"largest number checked (<= {MAX_N_LIMIT})")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--atoms", nargs="+", default=["p", "q"])
    p.add_argument("--max-rank", type=int, default=3)
    p.add_argument("--max-width", type=int, default=4)
    p.set_defaults(func=_cmd_check)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
