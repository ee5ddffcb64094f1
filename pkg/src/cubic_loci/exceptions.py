"""Domain exceptions for :mod:`cubic_loci`.

Every error raised on purpose by the library derives from
:class:`CubicLociError` so that callers (and the CLI) can separate contract
violations from genuine bugs.
"""

from typing import Any


class CubicLociError(Exception):
    """Base exception for all cubic_loci domain errors."""

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.details = details or {}


class DimensionError(CubicLociError):
    """Raised when matrix or vector shapes do not agree."""
    pass


class ContractError(CubicLociError):
    """Raised when an operation is called outside its documented preconditions."""
    pass


class ParameterRangeError(ContractError):
    """Raised when overlattice parameters fall outside ``0 <= x', y' < n``."""
    pass


class SingularMatrixError(CubicLociError):
    """Raised when an inverse is requested for a singular matrix."""
    pass


class DecompositionError(CubicLociError):
    """Raised when an LDL decomposition meets a non-positive pivot."""
    pass


class NotApplicableError(CubicLociError):
    """Raised when an operation does not apply to the given family."""
    pass


class UnknownFamilyError(CubicLociError):
    """Raised when a family name is not registered."""
    pass


class UnsupportedFormatError(CubicLociError):
    """Raised when a report format is not one of json, markdown or csv."""
    pass


class ConfigurationError(CubicLociError):
    """Raised when a family configuration file is invalid."""
    pass
