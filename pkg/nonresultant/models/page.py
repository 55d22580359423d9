"""Spectral sequence pages and cascade audit records."""

from typing import Dict, List, Optional, Tuple

from pydantic import Field, model_validator

from nonresultant.models.base import BaseModel
from nonresultant.models.groups import FinAbGroup
from nonresultant.utils.constants import CascadeRule, EntryOrigin, PageKind

Position = Tuple[int, int]


class SpectralPage(BaseModel):
    """
    One leaf E^r of the spectral sequence of the filtered resolution.

    Entries are keyed by (p, q), p the filtration index; zero groups are not stored.
    ``leaf`` None stands for E^infinity.
    """

    kind: PageKind = Field(..., description="Real, complex or m-discriminant sequence")
    leaf: Optional[int] = Field(1, ge=1, description="Leaf index r; None for E^infinity")
    ambient_dim: int = Field(
        ..., ge=1, description="Real dimension of the ambient space, used by duality"
    )
    entries: Dict[Position, FinAbGroup] = Field(default_factory=dict)
    provenance: Dict[Position, EntryOrigin] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _sparse_and_labelled(self) -> "SpectralPage":
        for position, group in self.entries.items():
            if group.is_zero:
                raise ValueError(f"zero group stored at {position}")
            if position not in self.provenance:
                raise ValueError(f"entry {position} has no provenance label")
        if set(self.provenance) != set(self.entries):
            raise ValueError("provenance labels must match the entries")
        return self

    @property
    def is_final(self) -> bool:
        """Whether this is the E^infinity page."""
        return self.leaf is None

    @property
    def leaf_label(self) -> str:
        """``1``, ``2``, ... or ``inf``."""
        return "inf" if self.leaf is None else str(self.leaf)

    def column(self, p: int) -> Dict[int, FinAbGroup]:
        """Return the entries of column p keyed by q."""
        return {q: group for (col, q), group in self.entries.items() if col == p}

    def positions(self) -> List[Position]:
        """All occupied positions, sorted by (p, q)."""
        return sorted(self.entries)


class KilledEntry(BaseModel):
    """One application of a differential during a cascade."""

    rule: CascadeRule = Field(..., description="Rule that fired")
    leaf: int = Field(..., ge=1, description="Leaf r of the differential d_r")
    source: Position = Field(..., description="Position of the differential's source")
    target: Position = Field(..., description="Position of the differential's target")
    removed: Tuple[Position, ...] = Field(..., description="Positions that die")


class CascadeReport(BaseModel):
    """Audit trail of a cascade: the E1 page, the E^infinity page and every kill."""

    initial: SpectralPage
    final: SpectralPage
    killed: List[KilledEntry] = Field(default_factory=list)

    @model_validator(mode="after")
    def _accounts_for_every_entry(self) -> "CascadeReport":
        removed = [position for record in self.killed for position in record.removed]
        if len(removed) != len(set(removed)):
            raise ValueError("an entry was killed twice")
        survivors = set(self.final.entries)
        if survivors & set(removed):
            raise ValueError("a killed entry is still present")
        if survivors | set(removed) != set(self.initial.entries):
            raise ValueError("the cascade does not account for every E1 entry")
        return self
