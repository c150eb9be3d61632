"""Exception hierarchy shared by the library and the CLI."""


class ClusterTubeError(Exception):
    """Base class for all library errors."""


class PreconditionError(ClusterTubeError, ValueError):
    """Raised when an argument violates an operation's precondition."""


class InvariantViolation(ClusterTubeError, AssertionError):
    """A structural invariant failed at runtime.

    This never signals bad user input; it means either a bug or a
    counterexample to one of the combinatorial facts the code relies on.
    """
