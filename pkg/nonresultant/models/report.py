"""Census report comparing sampled component invariants with the closed form."""

from typing import Dict, Tuple

from pydantic import Field

from nonresultant.models.base import BaseModel
from nonresultant.models.forms import PolySystem
from nonresultant.models.profile import DegreeProfile
from nonresultant.utils.constants import InvariantKind


class ComponentReport(BaseModel):
    """
    Outcome of a sampling census over the complement of Sigma.

    ``witnesses`` holds one system per realized invariant value: the first
    sample observed with that value, or a constructed system when sampling
    missed it. Each witness was re-classified and the check recorded in
    ``witness_verified``. The verdict counts sampled values only.
    """

    profile: DegreeProfile = Field(..., description="Degree profile of the sampled systems")
    invariant_kind: InvariantKind = Field(..., description="Invariant used to classify samples")
    legal_values: Tuple[int, ...] = Field(..., description="Values the invariant can take")
    observed: Dict[int, int] = Field(
        default_factory=dict, description="Sample count per observed invariant value"
    )
    witnesses: Dict[int, PolySystem] = Field(
        default_factory=dict, description="A system realizing each invariant value"
    )
    witness_verified: Dict[int, bool] = Field(
        default_factory=dict, description="Whether re-classifying each witness reproduced its value"
    )
    predicted_b0: int = Field(..., description="Component count from the closed form")
    accepted_samples: int = Field(0, ge=0, description="Samples classified")
    rejected_samples: int = Field(0, ge=0, description="Samples rejected as on or near Sigma")
    seed: int = Field(..., description="Root seed of the sampling streams")
    workers: int = Field(1, ge=1, description="Number of sampling workers")
    bound: int = Field(..., ge=1, description="Coefficient bound of the sampler")

    @property
    def observed_values(self) -> Tuple[int, ...]:
        """Invariant values seen among the samples."""
        return tuple(sorted(self.observed))

    @property
    def realized_values(self) -> Tuple[int, ...]:
        """Invariant values seen among the samples or realized by a witness."""
        return tuple(sorted(set(self.observed) | set(self.witnesses)))

    @property
    def illegal_values(self) -> Tuple[int, ...]:
        """Observed values outside the legal range, which would contradict the theory."""
        return tuple(v for v in self.observed_values if v not in self.legal_values)

    @property
    def rejection_ratio(self) -> float:
        """Fraction of draws rejected."""
        total = self.accepted_samples + self.rejected_samples
        return self.rejected_samples / total if total else 0.0

    @property
    def witnesses_complete(self) -> bool:
        """Whether every legal value has a witness and every witness re-classified correctly."""
        return set(self.legal_values) <= set(self.witnesses) and all(
            self.witness_verified.get(v, False) for v in self.witnesses
        )

    @property
    def passed(self) -> bool:
        """
        Whether the sampled classes match the predicted number of components.

        Only sampled values count towards b0. Constructed witnesses show that
        a class exists but cannot confirm the count, so they are checked
        separately through ``witnesses_complete``.
        """
        return (
            self.accepted_samples > 0
            and len(self.observed_values) == self.predicted_b0
            and not self.illegal_values
            and self.witnesses_complete
        )
