from __future__ import annotations


class DslError(Exception):
    """An error tied to a span ``(start, end)`` of the source line."""

    kind = "Error"

    def __init__(self, span: tuple[int, int], message: str):
        self.span = span
        self.message = message
        super().__init__(f"{self.kind} at {span[0]}: {message}")


class LexError(DslError):
    kind = "LexError"


class ParseError(DslError):
    kind = "ParseError"

    def __init__(self, span, message, expected=()):
        self.expected = tuple(expected)
        super().__init__(span, message)


class EvalError(DslError):
    kind = "EvalError"


class UnboundName(EvalError):
    kind = "UnboundName"


class TypeMismatch(EvalError):
    kind = "TypeMismatch"


class KernelFailure(EvalError):
    """A kernel error raised while evaluating; ``kind`` names the kernel error."""

    def __init__(self, span, error: Exception):
        self.error = error
        self.kind = type(error).__name__
        super().__init__(span, str(error))


def format_error(source: str, err: DslError) -> str:
    """Render ``err`` with the source line and a caret under the span."""
    start, end = err.span
    start = max(0, min(start, len(source)))
    end = max(start + 1, min(end, len(source) + 1))
    return f"  {source}\n  {' ' * start}{'^' * (end - start)}\n{err.kind}: {err.message}"
