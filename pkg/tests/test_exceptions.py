"""Tests for the exceptions module."""

import pytest

from nonresultant.exceptions import (
    ComplexComplementEmptyError,
    DegreeMismatchError,
    EmptyProfileError,
    IllegalIndexError,
    MalformedPageError,
    NonPositiveDegreeError,
    NonSquarefreeError,
    OnResultantVarietyError,
    ResultantError,
    SignTrackingError,
    UnsupportedProfileForCensusError,
    ValidationError,
)


class TestExceptions:
    """Tests for the custom exception classes."""

    def test_base_error(self):
        """Test the base ResultantError class."""
        error = ResultantError("Test error message")

        assert str(error) == "Test error message"
        assert error.message == "Test error message"
        assert error.error_code is None
        assert error.details is None

    def test_base_error_with_code(self):
        """Test ResultantError with an error code."""
        error = ResultantError("Test error message", error_code="complex-empty")

        assert str(error) == "[Error complex-empty] Test error message"
        assert error.error_code == "complex-empty"

    def test_base_error_with_details(self):
        """Test ResultantError carrying structured details."""
        error = OnResultantVarietyError("shared root", details={"line": [1, 1]})

        assert str(error) == "shared root"
        assert error.details == {"line": [1, 1]}

    def test_validation_errors_are_value_errors(self):
        """Test that input errors can be caught as ValueError."""
        for cls in (
            EmptyProfileError,
            NonPositiveDegreeError,
            DegreeMismatchError,
            IllegalIndexError,
            UnsupportedProfileForCensusError,
        ):
            error = cls("bad input")
            assert isinstance(error, ValidationError)
            assert isinstance(error, ValueError)
            assert isinstance(error, ResultantError)

    def test_computation_errors_are_not_validation_errors(self):
        """Test that failures of a computation are not reported as bad input."""
        for cls in (
            ComplexComplementEmptyError,
            MalformedPageError,
            NonSquarefreeError,
            SignTrackingError,
        ):
            error = cls("failure")
            assert isinstance(error, ResultantError)
            assert not isinstance(error, ValidationError)

    def test_raise_and_catch_as_base(self):
        """Test catching a specific error through the base class."""
        with pytest.raises(ResultantError) as excinfo:
            raise NonSquarefreeError("repeated root")
        assert "repeated root" in str(excinfo.value)
