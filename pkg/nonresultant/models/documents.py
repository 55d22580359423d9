"""JSON documents emitted by the ``nrt`` command line tool."""

from typing import List, Optional

from pydantic import BaseModel as PydanticBaseModel
from pydantic import Field

from nonresultant.algebra import unreduce
from nonresultant.models.base import BaseDocument
from nonresultant.models.forms import PolySystem
from nonresultant.models.groups import FinAbGroup, GradedGroup
from nonresultant.models.page import CascadeReport, SpectralPage
from nonresultant.models.profile import DegreeProfile, MDiscParams
from nonresultant.models.report import ComponentReport
from nonresultant.models.results import RealCohomologyResult
from nonresultant.utils.constants import CoefficientField


class GroupEntry(PydanticBaseModel):
    """One nonzero group of a graded group."""

    dim: int = Field(..., description="Cohomological dimension")
    rank: int = Field(..., description="Free rank")
    torsion: List[int] = Field(default_factory=list, description="Orders of the cyclic torsion")

    @classmethod
    def from_group(cls, dim: int, group: FinAbGroup) -> "GroupEntry":
        """Create an entry from a group placed in a dimension."""
        return cls(dim=dim, rank=group.free_rank, torsion=list(group.torsion))

    def to_group(self) -> FinAbGroup:
        """Convert back to a FinAbGroup."""
        return FinAbGroup(free_rank=self.rank, torsion=tuple(self.torsion))


def _entries(g: GradedGroup) -> List[GroupEntry]:
    return [GroupEntry.from_group(dim, group) for dim, group in g.items()]


class MDiscEntry(PydanticBaseModel):
    """Parameters of an m-discriminant."""

    d: int
    m: int


class CohomologyDocument(BaseDocument):
    """
    Reduced cohomology of a complement, as printed by ``real``, ``complex`` and ``mdisc``.

    ``profile`` is absent for m-discriminants, which carry ``mdisc`` instead;
    ``components`` is only reported for real results; ``unreduced`` only when
    requested.
    """

    profile: Optional[List[int]] = Field(None, description="Degree profile")
    mdisc: Optional[MDiscEntry] = Field(None, description="m-discriminant parameters")
    field: CoefficientField = Field(..., description="Coefficients: Z or Q")
    reduced: List[GroupEntry] = Field(default_factory=list, description="Nonzero groups")
    empty: bool = Field(False, description="Whether the complement is empty")
    components: Optional[int] = Field(None, description="Number of connected components")
    unreduced: Optional[List[GroupEntry]] = Field(None, description="Unreduced cohomology")

    @classmethod
    def from_real(
        cls, result: RealCohomologyResult, unreduced: bool = False
    ) -> "CohomologyDocument":
        """Document for a real integer result."""
        return cls(
            profile=list(result.profile.degrees),
            field=CoefficientField.INTEGERS,
            reduced=_entries(result.reduced),
            empty=result.complement_empty,
            components=result.component_count,
            unreduced=(
                _entries(unreduce(result.reduced))
                if unreduced and not result.complement_empty
                else None
            ),
        )

    @classmethod
    def from_complex(
        cls, profile: DegreeProfile, g: Optional[GradedGroup], unreduced: bool = False
    ) -> "CohomologyDocument":
        """Document for a complex rational result; None stands for the empty complement."""
        if g is None:
            return cls(profile=list(profile.degrees), field=CoefficientField.RATIONALS, empty=True)
        return cls(
            profile=list(profile.degrees),
            field=CoefficientField.RATIONALS,
            reduced=_entries(g),
            unreduced=_entries(unreduce(g)) if unreduced else None,
        )

    @classmethod
    def from_mdisc(
        cls, params: MDiscParams, g: GradedGroup, unreduced: bool = False
    ) -> "CohomologyDocument":
        """Document for an m-discriminant result."""
        return cls(
            mdisc=MDiscEntry(d=params.d, m=params.m),
            field=CoefficientField.RATIONALS,
            reduced=_entries(g),
            unreduced=_entries(unreduce(g)) if unreduced else None,
        )

    def to_graded(self) -> GradedGroup:
        """The reduced cohomology as a GradedGroup."""
        return GradedGroup(entries={entry.dim: entry.to_group() for entry in self.reduced})


class PageEntry(PydanticBaseModel):
    """One occupied cell of a spectral page."""

    p: int
    q: int
    rank: int
    torsion: List[int] = Field(default_factory=list)
    origin: str = Field(..., description="Provenance label of the entry")


class KilledDocument(PydanticBaseModel):
    """One differential applied by the cascade."""

    rule: str
    leaf: int
    source: List[int]
    target: List[int]
    removed: List[List[int]]


class PageDocument(BaseDocument):
    """A spectral page, as printed by ``page --json``."""

    kind: str = Field(..., description="real, complex or mdisc")
    profile: Optional[List[int]] = None
    mdisc: Optional[MDiscEntry] = None
    leaf: str = Field(..., description="1 or inf")
    ambient_dim: int
    entries: List[PageEntry] = Field(default_factory=list)
    killed: Optional[List[KilledDocument]] = None

    @classmethod
    def from_page(
        cls,
        page: SpectralPage,
        profile: Optional[DegreeProfile] = None,
        params: Optional[MDiscParams] = None,
        report: Optional[CascadeReport] = None,
    ) -> "PageDocument":
        """Document for a page, with the cascade's differentials when a report is given."""
        return cls(
            kind=page.kind.value,
            profile=list(profile.degrees) if profile else None,
            mdisc=MDiscEntry(d=params.d, m=params.m) if params else None,
            leaf=page.leaf_label,
            ambient_dim=page.ambient_dim,
            entries=[
                PageEntry(
                    p=p,
                    q=q,
                    rank=page.entries[(p, q)].free_rank,
                    torsion=list(page.entries[(p, q)].torsion),
                    origin=page.provenance[(p, q)].value,
                )
                for p, q in page.positions()
            ],
            killed=(
                [
                    KilledDocument(
                        rule=k.rule.value,
                        leaf=k.leaf,
                        source=list(k.source),
                        target=list(k.target),
                        removed=[list(position) for position in k.removed],
                    )
                    for k in report.killed
                ]
                if report
                else None
            ),
        )


class WitnessEntry(PydanticBaseModel):
    """A system realizing one invariant value."""

    value: int
    forms: List[List[int]] = Field(..., description="Coefficient arrays a0..ad per form")
    verified: bool


class WitnessDocument(BaseDocument):
    """A canonical winding witness, as printed by ``witness --json``."""

    profile: List[int]
    index: int
    forms: List[List[int]]
    winding: int = Field(..., description="Winding index measured on the witness")
    in_resultant_variety: bool

    @classmethod
    def from_system(
        cls, system: PolySystem, index: int, winding: int, in_sigma: bool
    ) -> "WitnessDocument":
        """Document for a witness and its re-check."""
        return cls(
            profile=list(system.degrees),
            index=index,
            forms=system.coefficient_rows(),
            winding=winding,
            in_resultant_variety=in_sigma,
        )


class ObservedEntry(PydanticBaseModel):
    """Sample count of one invariant value."""

    value: int
    count: int


class ReportDocument(BaseDocument):
    """A census report, as printed by ``verify --json``."""

    profile: List[int]
    invariant: str
    observed: List[ObservedEntry] = Field(default_factory=list)
    witnesses: List[WitnessEntry] = Field(default_factory=list)
    predicted_b0: int
    accepted_samples: int
    rejected_samples: int
    seed: int
    workers: int
    bound: int
    passed: bool

    @classmethod
    def from_report(cls, report: ComponentReport) -> "ReportDocument":
        """Document for a census report."""
        return cls(
            profile=list(report.profile.degrees),
            invariant=report.invariant_kind.value,
            observed=[ObservedEntry(value=v, count=c) for v, c in sorted(report.observed.items())],
            witnesses=[
                WitnessEntry(
                    value=v,
                    forms=system.coefficient_rows(),
                    verified=report.witness_verified.get(v, False),
                )
                for v, system in sorted(report.witnesses.items())
            ],
            predicted_b0=report.predicted_b0,
            accepted_samples=report.accepted_samples,
            rejected_samples=report.rejected_samples,
            seed=report.seed,
            workers=report.workers,
            bound=report.bound,
            passed=report.passed,
        )
