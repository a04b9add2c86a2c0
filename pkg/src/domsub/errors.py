"""Exception hierarchy shared by every module."""


class DomsubError(Exception):
    """Base class for all errors raised by domsub."""


class InputError(DomsubError, ValueError):
    """Malformed user input (edge lists, DIMACS files, scripts)."""


class PreconditionError(DomsubError, ValueError):
    """An argument is well formed but outside an operation's domain."""


class EdgeNotPresentError(PreconditionError, KeyError):
    pass


class NotConnectedError(PreconditionError):
    pass


class NotATreeError(PreconditionError):
    pass


class SolverTimeout(DomsubError):
    """The wall-clock budget given to an exact search ran out."""


class TheoremViolation(DomsubError, AssertionError):
    """A computed value contradicts a proven bound.

    Raised instead of returning a value so that a bug in the solver (or a
    counterexample) can never be reported silently.
    """
