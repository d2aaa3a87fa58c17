"""Exception hierarchy shared by the kernel, the DSL and the checker."""


class KernelError(Exception):
    """Base class for every error raised by kernel operations."""


class InvalidName(KernelError, ValueError):
    pass


class EmptySet(KernelError):
    """Raised when a construction would produce an object with no members."""


class NotASet(KernelError):
    pass


class NoWitness(KernelError):
    """Specification found no member satisfying the predicate."""


class NoSetMember(KernelError):
    pass


class NotIndividuals(KernelError):
    pass


class EqualAtoms(KernelError):
    pass


class NotANumber(KernelError):
    pass


class FirstNumber(KernelError):
    """The first number has no predecessor."""


class MixedAlpha(KernelError):
    """Numbers built on different first numbers were combined."""


class NoNumberMember(KernelError):
    pass


class NonNumberSetMember(KernelError):
    pass


class PreconditionFailed(KernelError):
    """An induction premise does not hold.

    ``clause`` is ``"a"`` (base case) or ``"b"`` (step), ``witness`` the
    offending object.
    """

    def __init__(self, clause, witness, message=""):
        self.clause = clause
        self.witness = witness
        super().__init__(message or f"induction premise ({clause}) fails at {witness}")


class BudgetExceeded(KernelError):
    pass
