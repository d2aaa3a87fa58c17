from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import LexError

KEYWORDS = frozenset(
    {
        "in", "subset", "succ", "union", "pair", "cup", "spec", "omega", "let",
        "true", "false", "is_number", "is_transitive", "is_individual", "is_set",
    }
)
PRED_NAMES = ("is_number", "is_transitive", "is_individual", "is_set")

# longest first so "->" wins over "-"
_SYMBOLS = ("->", "{", "}", "(", ")", ",", "+", "*", "·", "=", "<")

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"[0-9]+")


@dataclass(frozen=True)
class Token:
    kind: str  # identifier | integer | symbol | keyword
    lexeme: str
    start: int
    end: int

    @property
    def span(self) -> tuple[int, int]:
        return (self.start, self.end)


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into tokens; ``#`` starts a comment running to end of line.

    Offsets are character indices into ``text``.  ``ω`` is accepted as a
    spelling of ``omega`` and ``·`` as a spelling of ``*``.
    """
    out: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c == "#":
            nl = text.find("\n", i)
            i = n if nl < 0 else nl
            continue
        if c == "ω":
            out.append(Token("keyword", "omega", i, i + 1))
            i += 1
            continue
        m = _IDENT.match(text, i)
        if m:
            word = m.group()
            kind = "keyword" if word in KEYWORDS else "identifier"
            out.append(Token(kind, word, i, m.end()))
            i = m.end()
            continue
        m = _INT.match(text, i)
        if m:
            out.append(Token("integer", m.group(), i, m.end()))
            i = m.end()
            continue
        for sym in _SYMBOLS:
            if text.startswith(sym, i):
                lexeme = "*" if sym == "·" else sym
                out.append(Token("symbol", lexeme, i, i + len(sym)))
                i += len(sym)
                break
        else:
            raise LexError((i, i + 1), f"unexpected character {c!r}")
    return out
