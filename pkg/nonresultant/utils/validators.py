"""Validation utilities for the nonresultant package."""

from typing import Any, Optional, Type

from nonresultant.exceptions import ValidationError


def validate_not_none(value: Optional[Any], name: str) -> Any:
    """
    Validate that a value is not None.

    Args:
        value: The value to validate
        name: The name of the parameter (for error message)

    Returns:
        The validated value

    Raises:
        ValidationError: If the value is None
    """
    if value is None:
        raise ValidationError(f"{name} must not be None")
    return value


def validate_int_range(
    value: int,
    name: str,
    min_value: Optional[int] = None,
    max_value: Optional[int] = None,
    error_class: Type[ValidationError] = ValidationError,
) -> int:
    """
    Validate that an integer is within a range.

    Args:
        value: The integer to validate
        name: The name of the parameter (for error message)
        min_value: The minimum allowed value (inclusive)
        max_value: The maximum allowed value (inclusive)
        error_class: The ValidationError subclass to raise

    Returns:
        The validated integer

    Raises:
        ValidationError: If the value is not an integer or is outside the range
    """
    if value is None:
        raise error_class(f"{name} cannot be None")

    if isinstance(value, bool) or not isinstance(value, int):
        raise error_class(f"{name} must be an integer, got {value!r}")

    if min_value is not None and value < min_value:
        raise error_class(f"{name} must be at least {min_value}")

    if max_value is not None and value > max_value:
        raise error_class(f"{name} must be at most {max_value}")

    return value

