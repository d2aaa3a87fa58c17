import pytest
from hypothesis import given
from hypothesis import strategies as st

from urelset.dsl import (
    KernelFailure,
    LexError,
    ParseError,
    ReplState,
    TypeMismatch,
    UnboundName,
    eval_source,
    parse_source,
    render,
    repl_step,
    tokenize,
)
from urelset.dsl import parser as ast
from urelset.dsl.errors import DslError
from urelset.naturals import from_int
from urelset.objects import mk_set
from urelset.ordinals import SymOrd

from .conftest import objects


def kinds(text):
    return [(t.kind, t.lexeme) for t in tokenize(text)]


def test_tokenize_set():
    assert kinds("{p, q}") == [
        ("symbol", "{"), ("identifier", "p"), ("symbol", ","), ("identifier", "q"), ("symbol", "}"),
    ]


def test_tokenize_counts_and_spans():
    toks = tokenize("succ(0) + 1")
    assert len(toks) == 6
    assert [t.kind for t in toks].count("integer") == 2
    assert toks[0].span == (0, 4)


def test_tokenize_comment_and_aliases():
    assert kinds("ω·2 # trailing") == [("keyword", "omega"), ("symbol", "*"), ("integer", "2")]


def test_lex_error():
    with pytest.raises(LexError) as info:
        tokenize("{p @ q}")
    assert info.value.span == (3, 4)


def test_precedence():
    e = parse_source("a + b * c")
    assert isinstance(e, ast.Add)
    assert isinstance(e.right, ast.Mul)
    assert [e.left.name, e.right.left.name, e.right.right.name] == ["a", "b", "c"]


def test_empty_set_literal_rejected():
    with pytest.raises(ParseError) as info:
        parse_source("{}")
    assert info.value.span == (0, 2)


def test_spec_parse():
    e = parse_source("spec(S, x -> x in T)")
    assert isinstance(e, ast.Spec) and e.var == "x"
    assert isinstance(e.pred, ast.RelOp) and e.pred.op == "in"
    assert e.pred.left == ast.VarRef("x", (13, 14))


def test_atoms_versus_variables():
    e = parse_source("{p, r}")
    assert isinstance(e.elems[0], ast.AtomRef)
    assert isinstance(e.elems[1], ast.VarRef)
    assert isinstance(parse_source("{p, r}", ("p", "q", "r")).elems[1], ast.AtomRef)


@pytest.mark.parametrize("text", ["1 < 2 < 3", "succ(1", "let p = 1", "spec(1, p -> true)",
                                  "pair(1)", "1 +", ")"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_source(text)


def test_eval_examples(p, q, alpha):
    assert eval_source("0 + 1") is from_int(1, alpha).value
    assert eval_source("5 + omega") == SymOrd(1, 0)
    assert eval_source("union({p,q})") is mk_set([p, q])
    assert eval_source("omega * 0") is alpha.obj
    assert eval_source("omega * 2 + 3") == SymOrd(2, 3)
    assert eval_source("p in omega") is True
    assert eval_source("{p, q} in omega") is True
    assert eval_source("{{p, q}} in omega") is False


@pytest.mark.parametrize("text,error", [
    ("x", UnboundName),
    ("r", UnboundName),
    ("{p, {p, q}} + 1", TypeMismatch),
    ("omega + omega", TypeMismatch),
    ("2 * omega", TypeMismatch),
    ("omega < 3", TypeMismatch),
    ("{omega}", TypeMismatch),
    ("spec({p, q}, x -> x)", TypeMismatch),
    ("spec({p, q}, x -> is_set(x))", KernelFailure),
    ("spec(p, x -> true)", KernelFailure),
])
def test_eval_errors(text, error):
    with pytest.raises(error):
        eval_source(text)


def test_kernel_errors_keep_their_name():
    with pytest.raises(KernelFailure) as info:
        eval_source("spec({p, q}, x -> is_set(x))")
    assert info.value.kind == "NoWitness"


def test_render_modes(alpha):
    one = from_int(1, alpha).value
    assert render(one, "raw") == "{p, q, {p, q}}"
    assert render(one, "abbreviated") == "1"
    assert render(SymOrd(1, 0), "abbreviated") == "ω"
    assert render(SymOrd(2, 3), "raw") == "omega * 2 + 3"
    assert render(True) == "true"


@given(objects(atoms=("p", "q")))
def test_round_trip_objects(v):
    for mode in ("raw", "abbreviated"):
        assert eval_source(render(v, mode)) is v


@given(st.integers(1, 5), st.integers(0, 20))
def test_round_trip_ordinals(m, n):
    v = SymOrd(m, n)
    for mode in ("raw", "abbreviated"):
        assert eval_source(render(v, mode)) == v


@given(st.text(alphabet="{}(),+*=<pq01 xω@-spec>", max_size=20))
def test_error_spans_within_input(text):
    try:
        eval_source(text)
    except DslError as err:
        assert 0 <= err.span[0] <= len(text)
        assert err.span[1] <= len(text) + 1
    except RecursionError:
        pass


@given(st.text(alphabet="{}(),+*pq01 ", max_size=24))
def test_no_value_is_empty(text):
    try:
        v = eval_source(text)
    except DslError:
        return
    if not isinstance(v, (bool, SymOrd)):
        assert v.members


def test_repl_let_and_errors():
    s = ReplState()
    s, out = repl_step(s, "let two = succ(1)")
    assert out == "two = 2"
    assert "two" in s.env
    s2, out = repl_step(s, "{}")
    assert s2 is s
    assert "ParseError" in out and "^" in out


def test_repl_commands():
    s = ReplState()
    s, out = repl_step(s, ":check peano")
    assert out.startswith("peano: 5/5 obligations passed")
    s, out = repl_step(s, ":mode raw")
    assert s.mode == "raw"
    s, out = repl_step(s, "1")
    assert out == "{p, q, {p, q}}"
    s, out = repl_step(s, ":atoms a b")
    assert s.atoms == ("a", "b") and s.env == {}
    s, out = repl_step(s, ":mode abbr")
    s, out = repl_step(s, "{a, b}")
    assert out == "0"
    s2, out = repl_step(s, ":atoms a")
    assert s2 is s and out.startswith("error")
    s, out = repl_step(s, ":quit")
    assert s.done and out == "bye"
