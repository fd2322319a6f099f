"""Exception hierarchy shared by every module in the package."""


class LogentError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LogentError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class InvalidPartitionError(LogentError, ValueError):
    """Blocks overlap, miss an element of the carrier, or are empty."""


class NotEquivalenceError(LogentError, ValueError):
    """A relation required to be an equivalence fails reflexivity, symmetry, or transitivity."""


class SizeMismatchError(LogentError, ValueError):
    """Operands are defined over carriers of different sizes."""


class LimitExceededError(LogentError, ValueError):
    """A combinatorial sweep was requested beyond the configured cap."""


class InvalidDistributionError(LogentError, ValueError):
    """Probabilities are negative or do not sum to one within tolerance."""


class InvalidDistanceMatrixError(LogentError, ValueError):
    """A distance matrix is not square and symmetric with a zero diagonal and nonnegative entries."""


class ParseError(LogentError, ValueError):
    """Text input could not be parsed."""
