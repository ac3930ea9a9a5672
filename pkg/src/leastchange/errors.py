"""Exceptions shared across the package."""


class DimensionError(ValueError):
    """Matrix or table dimension outside the supported range."""


class PatternError(ValueError):
    """A matrix violates the fixed-element pattern of its family."""


class BudgetError(RuntimeError):
    """An exhaustive scan would exceed the configured enumeration budget."""
