"""Exception hierarchy shared by every module."""


class StellateError(Exception):
    """Base class for all library errors."""


class GraphParseError(StellateError, ValueError):
    """Malformed graph6 / JSON graph input."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class DomainError(StellateError, ValueError):
    """An argument lies outside the operation's domain (e.g. adjacent pair)."""


class BudgetExceeded(StellateError):
    """A configured resource budget or size cap was exceeded.

    ``lower_bound`` carries the count reached before giving up, when known.
    """

    def __init__(self, message, lower_bound=None):
        super().__init__(message)
        self.lower_bound = lower_bound


class InternalInconsistency(StellateError, AssertionError):
    """A self-check failed: either the input violated a precondition or there is a bug."""
