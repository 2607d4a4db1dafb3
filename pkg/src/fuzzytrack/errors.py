"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """An argument violates its stated bounds (non-positive period, etc.)."""


class DomainError(ValueError):
    """A value lies outside the universe it must belong to."""


class SequencingError(RuntimeError):
    """A stateful operation was invoked before its prerequisites were met."""


class DegenerateAggregateError(ArithmeticError):
    """The aggregated rule output carries no mass to take a centroid of."""


class DataFormatError(ValueError):
    """An input file does not match the expected layout."""
