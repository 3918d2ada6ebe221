"""Exception hierarchy shared across the package."""

from __future__ import annotations


class PcOptError(Exception):
    """Base class for all library errors."""


class ParseError(PcOptError):
    """Malformed input: bad endpoint, self-loop, or an unreadable file."""


class ParameterError(ParseError):
    """Invalid generator or command parameters."""


class PreconditionError(PcOptError):
    """An operation was invoked outside its stated contract."""


class NoCutError(PreconditionError):
    """Raised when asked for a vertex cutset of a complete graph."""


class NotApplicableError(PcOptError):
    """A constructive routine does not apply to the given input."""


class BudgetError(PcOptError):
    """A search or enumeration exceeded its configured budget.

    ``partial_count`` carries how much work completed before the cutoff and
    ``best_upper_bound`` the best value bound known at that point, when any.
    """

    def __init__(
        self,
        message: str,
        *,
        partial_count: int | None = None,
        best_upper_bound: int | None = None,
    ) -> None:
        super().__init__(message)
        self.partial_count = partial_count
        self.best_upper_bound = best_upper_bound


class InternalConsistencyError(PcOptError):
    """A validated construction broke its own guarantee: a bug, not bad input."""
