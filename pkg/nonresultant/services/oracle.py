"""Service running the sampling oracle against the closed form."""

import logging
from typing import Dict, Optional

from nonresultant.exceptions import SignTrackingError, UnsupportedProfileForCensusError
from nonresultant.models.forms import PolySystem
from nonresultant.models.profile import DegreeProfile
from nonresultant.models.report import ComponentReport
from nonresultant.oracle import component_census, winding_index, witness_system
from nonresultant.oracle.invariants import census_witnesses, classify, invariant_kind_for
from nonresultant.services import BaseService
from nonresultant.utils.constants import EMPTY

logger = logging.getLogger(__name__)


class OracleService(BaseService):
    """Randomized verification of component counts, with the client's sampling defaults."""

    def census(
        self,
        profile: DegreeProfile,
        samples: Optional[int] = None,
        bound: Optional[int] = None,
        seed: Optional[int] = None,
        workers: Optional[int] = None,
    ) -> ComponentReport:
        """
        Run a component census and compare it with the closed-form b0.

        Unset arguments fall back to the client's defaults.

        Args:
            profile: Degree profile with one or two forms
            samples: Number of systems to classify
            bound: Coefficient bound
            seed: Root seed
            workers: Number of sampling streams

        Returns:
            ComponentReport: The census report

        Raises:
            UnsupportedProfileForCensusError: For three or more forms or an empty complement
        """
        predicted = self._client.closed_form.predicted_b0_real(profile)
        if predicted == EMPTY:
            raise UnsupportedProfileForCensusError(
                f"{profile} has an empty complement", error_code="census-empty"
            )
        return component_census(
            profile,
            predicted_b0=predicted,
            seed=self._client.seed if seed is None else seed,
            bound=self._client.bound if bound is None else bound,
            count=self._client.samples if samples is None else samples,
            workers=self._client.workers if workers is None else workers,
        )

    def witness(self, d1: int, d2: int, k: int) -> PolySystem:
        """
        Build the canonical system with winding index k and check it.

        Raises:
            IllegalIndexError: If k is not realizable for (d1, d2)
            ParityMismatchError: If d1 and d2 have different parities
            SignTrackingError: If the witness does not reproduce k
        """
        system = witness_system(d1, d2, k)
        measured = winding_index(*system.forms)
        if measured != k:
            raise SignTrackingError(
                f"witness for k={k} measured winding {measured}",
                details={"d1": d1, "d2": d2, "k": k},
            )
        logger.debug("Witness (%d, %d, %d) verified", d1, d2, k)
        return system

    def witnesses(self, profile: DegreeProfile) -> Dict[int, PolySystem]:
        """
        Constructed witnesses for every legal invariant value, each verified.

        Raises:
            UnsupportedProfileForCensusError: For three or more forms or a single odd form
            SignTrackingError: If a witness does not re-classify to its value
        """
        kind = invariant_kind_for(profile)
        systems = census_witnesses(profile, kind)
        for value, system in systems.items():
            measured = classify(system, kind)
            if measured != value:
                raise SignTrackingError(
                    f"witness for {kind.value} value {value} measured {measured}",
                    details={
                        "profile": list(profile.degrees),
                        "kind": kind.value,
                        "value": value,
                        "measured": measured,
                    },
                )
        logger.debug("Witnesses for %s verified: %s", profile, sorted(systems))
        return systems

    def classify(self, system: PolySystem) -> int:
        """Evaluate the invariant matching the system's degrees."""
        profile = DegreeProfile(degrees=system.degrees)
        return classify(system, invariant_kind_for(profile))
