"""Custom exceptions for the nonresultant package."""


class ResultantError(Exception):
    """Base exception for all nonresultant errors."""

    def __init__(self, message, error_code=None, details=None):
        """
        Initialize a ResultantError.

        Args:
            message: Error message
            error_code: Optional short error code
            details: Optional structured data describing the failure
        """
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.details = details

    def __str__(self):
        """
        Get string representation of the error.

        Returns:
            String representation including error code if available
        """
        if self.error_code:
            return f"[Error {self.error_code}] {self.message}"
        return self.message


class ValidationError(ResultantError, ValueError):
    """Input validation errors."""

    pass


class EmptyProfileError(ValidationError):
    """A degree profile with no degrees."""

    pass


class NonPositiveDegreeError(ValidationError):
    """A degree profile containing a degree below 1."""

    pass


class InvalidMDiscError(ValidationError):
    """m-discriminant parameters outside m >= 2, d >= m."""

    pass


class IllegalIndexError(ValidationError):
    """A winding index that no system of the requested degrees can realize."""

    pass


class ParityMismatchError(ValidationError):
    """Form degrees of different parity where equal parity is required."""

    pass


class DegreeMismatchError(ValidationError):
    """Binary forms of different degrees combined additively."""

    pass


class ZeroFormError(ValidationError):
    """The identically zero form where a nonzero form is required."""

    pass


class UnsupportedProfileForCensusError(ValidationError):
    """A profile the sampling census has no separating invariant for."""

    pass


class ComplexComplementEmptyError(ResultantError):
    """The complex non-resultant space is empty (a single complex form)."""

    pass


class MalformedPageError(ResultantError):
    """A spectral page that does not have the shape its builder guarantees."""

    pass


class DualityOutOfRangeError(ResultantError):
    """Alexander duality would place a nonzero group in negative dimension."""

    pass


class NonSquarefreeError(ResultantError):
    """A form with a repeated real root where simple roots are required."""

    pass


class PredicateVanishesAtRootError(ResultantError):
    """The sign predicate vanishes at a root being classified."""

    pass


class OnResultantVarietyError(ResultantError):
    """A system with a common real root where a non-resultant one is required."""

    pass


class SignTrackingError(ResultantError):
    """Quadrant tracking observed a jump across two axes in one step."""

    pass
