"""Result models for cohomology computations."""

from typing import Optional

from pydantic import Field, model_validator

from nonresultant.models.base import BaseModel
from nonresultant.models.groups import GradedGroup
from nonresultant.models.profile import DegreeProfile


class RealCohomologyResult(BaseModel):
    """
    Integer reduced cohomology of the space of real non-resultant systems.

    When the space is empty, ``reduced`` is the zero graded group and
    ``component_count`` is None.
    """

    profile: DegreeProfile = Field(..., description="Degree profile of the systems")
    reduced: GradedGroup = Field(
        default_factory=GradedGroup, description="Reduced integer cohomology"
    )
    complement_empty: bool = Field(False, description="Whether every system is resultant")
    component_count: Optional[int] = Field(
        None, description="Number of connected components, None when empty"
    )

    @model_validator(mode="after")
    def _consistent_component_count(self) -> "RealCohomologyResult":
        if self.complement_empty:
            if self.component_count is not None or len(self.reduced.entries) > 0:
                raise ValueError("an empty complement has no components and no cohomology")
            return self
        h0 = self.reduced[0]
        if h0.torsion:
            raise ValueError("H~^0 is free")
        if self.component_count != h0.free_rank + 1:
            raise ValueError("component_count must equal rank H~^0 + 1")
        return self

    @classmethod
    def empty(cls, profile: DegreeProfile) -> "RealCohomologyResult":
        """Result for a profile whose non-resultant space is empty."""
        return cls(profile=profile, complement_empty=True)

    @classmethod
    def from_reduced(cls, profile: DegreeProfile, reduced: GradedGroup) -> "RealCohomologyResult":
        """Result for a non-empty space, counting components from H~^0."""
        return cls(
            profile=profile,
            reduced=reduced,
            complement_empty=False,
            component_count=reduced[0].free_rank + 1,
        )
