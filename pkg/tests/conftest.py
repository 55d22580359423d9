"""Pytest configuration for nonresultant tests."""

import pytest

from nonresultant import HomologyClient, profile_new
from nonresultant.models.forms import BinaryForm, PolySystem


@pytest.fixture
def client():
    """
    Fixture for a client with small sampling defaults.

    Returns:
        HomologyClient: A client running 200-sample censuses on two workers.
    """
    return HomologyClient(samples=200, bound=12, seed=42, workers=2)


@pytest.fixture
def closed_form(client):
    """The client's closed-form service."""
    return client.closed_form


@pytest.fixture
def spectral(client):
    """The client's spectral service."""
    return client.spectral


@pytest.fixture
def oracle(client):
    """The client's oracle service."""
    return client.oracle


@pytest.fixture
def make_profile():
    """
    Fixture building profiles from degrees.

    Returns:
        callable: ``make_profile(7, 3)`` returns the profile (7,3).
    """

    def _make(*degrees):
        return profile_new(list(degrees))

    return _make


@pytest.fixture
def form():
    """
    Fixture building binary forms from coefficients a0..ad.

    Returns:
        callable: ``form(1, 0, 1)`` returns x^2 + y^2.
    """

    def _make(*coeffs):
        return BinaryForm(coeffs=tuple(coeffs))

    return _make


@pytest.fixture
def system():
    """
    Fixture building systems from coefficient rows.

    Returns:
        callable: ``system([1, 0, 1], [1, -1])`` returns (x^2 + y^2, x - y).
    """

    def _make(*rows):
        return PolySystem.from_coefficients([list(row) for row in rows])

    return _make
