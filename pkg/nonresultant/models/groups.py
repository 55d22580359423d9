"""Finitely generated abelian groups and graded groups."""

from typing import Dict, Tuple

from pydantic import Field, field_validator

from nonresultant.models.base import BaseModel


class FinAbGroup(BaseModel):
    """
    Finitely generated abelian group Z^r + Z/t1 + ... + Z/tk.

    Torsion orders are kept sorted ascending, so the zero group is (0, ()).
    """

    free_rank: int = Field(0, ge=0, description="Rank of the free part")
    torsion: Tuple[int, ...] = Field((), description="Orders of the cyclic torsion factors")

    @field_validator("torsion")
    @classmethod
    def _canonical_torsion(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        for order in value:
            if order < 2:
                raise ValueError(f"cyclic torsion orders must be at least 2, got {order}")
        return tuple(sorted(value))

    @classmethod
    def free(cls, rank: int = 1) -> "FinAbGroup":
        """Return Z^rank."""
        return cls(free_rank=rank)

    @classmethod
    def cyclic(cls, order: int) -> "FinAbGroup":
        """Return Z/order."""
        return cls(torsion=(order,))

    @classmethod
    def zero(cls) -> "FinAbGroup":
        """Return the trivial group."""
        return cls()

    @property
    def is_zero(self) -> bool:
        """Whether this is the trivial group."""
        return self.free_rank == 0 and not self.torsion

    def render(self, symbol: str = "Z") -> str:
        """
        Render as text, e.g. ``Z^3``, ``Z/2``, ``Z + Z/2``.

        Args:
            symbol: Name of the free cyclic group (``Z`` or ``Q``)

        Returns:
            str: The rendering, ``0`` for the trivial group
        """
        parts = []
        if self.free_rank == 1:
            parts.append(symbol)
        elif self.free_rank > 1:
            parts.append(f"{symbol}^{self.free_rank}")
        parts.extend(f"Z/{order}" for order in self.torsion)
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        return self.render()


class GradedGroup(BaseModel):
    """A finitely supported map from dimension to FinAbGroup; zero groups are never stored."""

    entries: Dict[int, FinAbGroup] = Field(
        default_factory=dict, description="Nonzero groups keyed by dimension"
    )

    @field_validator("entries")
    @classmethod
    def _drop_zero_groups(cls, value: Dict[int, FinAbGroup]) -> Dict[int, FinAbGroup]:
        for dim in value:
            if dim < 0:
                raise ValueError(f"dimensions must be non-negative, got {dim}")
        return {dim: value[dim] for dim in sorted(value) if not value[dim].is_zero}

    def __getitem__(self, dim: int) -> FinAbGroup:
        return self.entries.get(dim, FinAbGroup.zero())

    def items(self):
        """Return (dimension, group) pairs in ascending dimension."""
        return sorted(self.entries.items())

    @property
    def support(self) -> Tuple[int, ...]:
        """Dimensions carrying a nonzero group, ascending."""
        return tuple(sorted(self.entries))

    @property
    def total_rank(self) -> int:
        """Sum of the free ranks over all dimensions."""
        return sum(group.free_rank for group in self.entries.values())
