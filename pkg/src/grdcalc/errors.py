"""Shared exception types."""


class PreconditionError(ValueError):
    """An operation was invoked outside its documented domain."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree.

    Raised by the dual-route operations (closed form vs. Schubert integral,
    closed form vs. assembled linear system).  Reaching this exception means
    an implementation bug, never bad user input.
    """
