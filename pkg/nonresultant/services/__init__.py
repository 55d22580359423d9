"""Service modules computing the cohomology of non-resultant spaces."""

from abc import ABC


class BaseService(ABC):
    """
    Base class for the client's services.

    All specific service classes inherit from this base class.
    """

    def __init__(self, client):
        """
        Initialize a service with a reference to the client.

        Args:
            client: The HomologyClient instance
        """
        self._client = client


# Import service classes after BaseService is defined to avoid circular imports
from nonresultant.services.closed_form import ClosedFormService  # noqa: E402
from nonresultant.services.oracle import OracleService  # noqa: E402
from nonresultant.services.spectral import SpectralService  # noqa: E402

__all__ = [
    "BaseService",
    "ClosedFormService",
    "OracleService",
    "SpectralService",
]
