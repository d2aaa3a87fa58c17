"""Expression language over the kernel: lexer, parser, evaluator, renderer, REPL."""

from .errors import DslError, EvalError, KernelFailure, LexError, ParseError, TypeMismatch, UnboundName, format_error
from .evaluator import Universe, Value, evaluate
from .lexer import Token, tokenize
from .parser import parse, parse_source
from .render import render
from .repl import ReplState, repl_step, transcript


def eval_source(text: str, env=None, atoms=("p", "q")) -> Value:
    """Tokenize, parse and evaluate one statement."""
    return evaluate(parse_source(text, atoms), env, Universe(tuple(atoms)))
