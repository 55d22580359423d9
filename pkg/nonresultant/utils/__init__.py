"""Utility functions and constants for the nonresultant package."""

from nonresultant.utils.constants import ExitCode, InvariantKind
from nonresultant.utils.validators import (
    validate_int_range,
    validate_not_none,
)

__all__ = [
    "ExitCode",
    "InvariantKind",
    "validate_not_none",
    "validate_int_range",
]
