"""Main client for non-resultant homology computations."""

import logging
import os
from typing import Optional

from nonresultant.exceptions import ValidationError
from nonresultant.services import ClosedFormService, OracleService, SpectralService
from nonresultant.utils.constants import (
    DEFAULT_BOUND,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_WORKERS,
    SEED_ENV_VAR,
)
from nonresultant.utils.validators import validate_int_range

logger = logging.getLogger(__name__)


class HomologyClient:
    """
    Entry point to the closed-form, spectral and oracle computations.

    The client holds the sampling defaults; every service keeps a reference to
    it, so a census run through ``client.oracle`` reads its predictions from
    ``client.closed_form``.
    """

    def __init__(
        self,
        samples: int = DEFAULT_SAMPLES,
        bound: int = DEFAULT_BOUND,
        seed: Optional[int] = None,
        workers: int = DEFAULT_WORKERS,
    ):
        """
        Initialize a new client.

        Args:
            samples: Default number of systems per census
            bound: Default coefficient bound of the sampler
            seed: Default root seed; falls back to the NRT_SEED environment
                variable, then to 42
            workers: Default number of sampling streams
        """
        if seed is None:
            raw = os.environ.get(SEED_ENV_VAR, str(DEFAULT_SEED))
            try:
                seed = int(raw)
            except ValueError:
                raise ValidationError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}")

        self.samples = validate_int_range(samples, "samples", min_value=0)
        self.bound = validate_int_range(bound, "bound", min_value=1)
        self.seed = validate_int_range(seed, "seed", min_value=0)
        self.workers = validate_int_range(workers, "workers", min_value=1)

        # Initialize services
        self.closed_form = ClosedFormService(self)
        self.spectral = SpectralService(self)
        self.oracle = OracleService(self)

        logger.debug(
            "HomologyClient ready: samples=%d bound=%d seed=%d workers=%d",
            self.samples,
            self.bound,
            self.seed,
            self.workers,
        )
