"""Exception types shared across the toolkit."""


class EdgecutError(Exception):
    """Base class for all toolkit errors."""


class EmptyGraphError(EdgecutError, ValueError):
    """Raised when a graph would contain no edges."""


class LengthMismatchError(EdgecutError, ValueError):
    """Raised when an assignment does not align with the graph it claims to cover."""


class ParseError(EdgecutError, ValueError):
    """Malformed line in an edge-list file; carries the 1-based line number."""

    def __init__(self, line_number: int, message: str = ""):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}" if message else f"line {line_number}")


class SpreadTooLargeError(EdgecutError, ValueError):
    """Raised when spread exceeds the number of partitions."""


class InvalidStatsError(EdgecutError, ValueError):
    """Raised when decentral-hash counts are inconsistent with the degree table."""


class DomainError(EdgecutError, ValueError):
    """Parameter outside the mathematical domain of a calculator."""


class AlphaOneError(DomainError):
    """The integral bracket for the degree-power sum is undefined at exponent 1."""


class InvariantViolationError(EdgecutError, RuntimeError):
    """An always-true internal identity failed; this signals a bug, never bad input."""
