"""
Exception hierarchy for polydec.

Validators return ValidationReport objects instead of raising; exceptions are
reserved for inputs that cannot be processed at all.
"""

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .models.decomposition import ValidationReport


class PolydecError(Exception):
    """Base exception for all polydec errors."""
    pass


class GraphError(PolydecError):
    """Raised for invalid graph construction or queries (unknown vertex, self-loop)."""
    pass


class GraphParseError(PolydecError):
    """Raised when graph or order text does not conform to its declared format."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class DecompositionError(PolydecError):
    """Raised when a decomposition or composition order cannot be used."""

    def __init__(self, message: str, report: Optional["ValidationReport"] = None):
        self.report = report
        super().__init__(message)


class EngineError(PolydecError):
    """Raised when a sweep ends in a state set that breaks the model contract."""
    pass


class OracleBudgetExceeded(PolydecError):
    """Raised when a brute-force oracle is asked for more than its budget allows."""
    pass


class PolynomialParseError(PolydecError):
    """Raised when polynomial text or JSON cannot be read back."""
    pass
