"""Degree profiles and m-discriminant parameters."""

from typing import Tuple

from pydantic import Field, field_validator, model_validator

from nonresultant.models.base import BaseModel


class DegreeProfile(BaseModel):
    """
    The degrees d1 >= d2 >= ... >= dn of a system of binary forms.

    Build instances through ``nonresultant.algebra.profile_new`` to get the
    package's validation errors; direct construction sorts the degrees too.
    """

    degrees: Tuple[int, ...] = Field(..., description="Degrees sorted non-increasing")

    @field_validator("degrees")
    @classmethod
    def _sorted_degrees(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if not value:
            raise ValueError("a degree profile needs at least one degree")
        if min(value) < 1:
            raise ValueError("degrees must be at least 1")
        return tuple(sorted(value, reverse=True))

    @property
    def n(self) -> int:
        """Number of forms in the system."""
        return len(self.degrees)

    @property
    def total_dimension(self) -> int:
        """D, the dimension of the space of systems: sum of (d_i + 1)."""
        return sum(d + 1 for d in self.degrees)

    def d(self, k: int) -> int:
        """
        Return the k-th largest degree, 1-based.

        Degrees past the n-th are 0, which lets the closed formulas stated with
        d2 and d3 cover systems of one or two forms.

        Args:
            k: 1-based index

        Returns:
            int: d_k, or 0 when k > n
        """
        if k < 1:
            raise IndexError("degree indices start at 1")
        return self.degrees[k - 1] if k <= self.n else 0

    def label(self) -> str:
        """Return the profile as ``(d1,d2,...)``."""
        return "(" + ",".join(str(d) for d in self.degrees) + ")"

    def __str__(self):
        return self.label()


class MDiscParams(BaseModel):
    """Degree d and multiplicity bound m of an m-discriminant of complex binary forms."""

    d: int = Field(..., ge=1, description="Degree of the forms")
    m: int = Field(..., ge=2, description="Root multiplicity defining the discriminant")

    @model_validator(mode="after")
    def _degree_at_least_multiplicity(self) -> "MDiscParams":
        if self.d < self.m:
            raise ValueError(f"d must be at least m, got d={self.d}, m={self.m}")
        return self

    @property
    def stable_range(self) -> bool:
        """Whether d >= 2m, where the answer no longer depends on d."""
        return self.d >= 2 * self.m
