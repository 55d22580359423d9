"""Binary forms with exact integer coefficients and systems of them."""

from typing import List, Tuple

from pydantic import Field, field_validator, model_validator

from nonresultant.models.base import BaseModel
from nonresultant.models.profile import DegreeProfile


class BinaryForm(BaseModel):
    """
    Homogeneous form a0 x^d + a1 x^(d-1) y + ... + ad y^d in two variables.

    The zero form is representable; operations that need roots reject it.
    """

    coeffs: Tuple[int, ...] = Field(..., description="Coefficients a0..ad, x-power descending")

    @field_validator("coeffs")
    @classmethod
    def _at_least_constant(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if not value:
            raise ValueError("a form of degree d has d + 1 coefficients")
        return value

    @property
    def degree(self) -> int:
        """Formal degree d (the zero form keeps its formal degree)."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        """Whether every coefficient vanishes."""
        return not any(self.coeffs)

    def coefficient(self, j: int) -> int:
        """Coefficient of x^(d-j) y^j."""
        return self.coeffs[j]

    def __str__(self):
        terms = []
        d = self.degree
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            monomial = "*".join(
                part
                for part in (_power("x", d - j), _power("y", j))
                if part
            )
            if not monomial:
                terms.append(str(c))
            elif c == 1:
                terms.append(monomial)
            elif c == -1:
                terms.append(f"-{monomial}")
            else:
                terms.append(f"{c}*{monomial}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


class PolySystem(BaseModel):
    """A system (f1, ..., fn) of binary forms, listed in the order of its profile."""

    forms: Tuple[BinaryForm, ...] = Field(..., description="The forms f1..fn")

    @model_validator(mode="after")
    def _non_increasing_degrees(self) -> "PolySystem":
        if not self.forms:
            raise ValueError("a system needs at least one form")
        degrees = [form.degree for form in self.forms]
        if degrees != sorted(degrees, reverse=True):
            raise ValueError(f"form degrees must be non-increasing, got {degrees}")
        return self

    @classmethod
    def from_coefficients(cls, rows: List[List[int]]) -> "PolySystem":
        """Build a system from coefficient arrays."""
        return cls(forms=tuple(BinaryForm(coeffs=tuple(row)) for row in rows))

    @property
    def degrees(self) -> Tuple[int, ...]:
        """Degrees of the forms."""
        return tuple(form.degree for form in self.forms)

    def matches(self, profile: DegreeProfile) -> bool:
        """Whether the form degrees are exactly the profile's degrees."""
        return self.degrees == profile.degrees

    def coefficient_rows(self) -> List[List[int]]:
        """Coefficient arrays, one per form."""
        return [list(form.coeffs) for form in self.forms]


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"
