"""
Errors module.

Every failure TauForge reports on purpose is a `TauForgeError`, itself a `ValueError`,
so callers can catch the whole family or a single condition.

Classes:
    TauForgeError: Root of the hierarchy.
    DomainError: An operation was asked for outside its domain.
    PoleAtContent: A weight generating function has a pole at a requested content.
    TruncationError: A result needs variables or degrees above a truncation cap.
    UnsupportedError: The request is representable but has no evaluator.
    BudgetError: An expansion order exceeds the configured budget.
    SpecParseError: A spec file or CLI argument could not be parsed.
"""


class TauForgeError(ValueError):
    """Base class for all TauForge errors."""


class DomainError(TauForgeError):
    """Raised when an argument lies outside the domain of an operation."""


class PoleAtContent(DomainError):
    """
    Raised when a weight factor vanishes in a denominator.

    Attributes:
        factor_index (int): Index of the offending factor in the generating function.
        content (int): The content at which the pole was hit.
    """
    def __init__(self, factor_index: int, content: int, message: str | None = None):
        self.factor_index = factor_index
        self.content = content
        super().__init__(
            message or f"pole of factor {factor_index} at content {content}"
        )


class TruncationError(TauForgeError):
    """Raised when a result cannot be represented below the requested caps."""


class UnsupportedError(TauForgeError):
    """Raised for plans or queries that have no evaluator."""


class BudgetError(TauForgeError):
    """Raised when an expansion would exceed the configured order budget."""


class SpecParseError(TauForgeError):
    """Raised for malformed spec files, monomials or CLI values."""
