"""Tests for the value types and JSON documents."""

import json

import pytest
from pydantic import ValidationError as PydanticValidationError

from nonresultant.models.documents import (
    CohomologyDocument,
    PageDocument,
    ReportDocument,
    WitnessDocument,
)
from nonresultant.models.forms import BinaryForm, PolySystem
from nonresultant.models.groups import FinAbGroup, GradedGroup
from nonresultant.models.page import CascadeReport, KilledEntry, SpectralPage
from nonresultant.models.profile import DegreeProfile, MDiscParams
from nonresultant.models.report import ComponentReport
from nonresultant.models.results import RealCohomologyResult
from nonresultant.utils.constants import CascadeRule, EntryOrigin, InvariantKind, PageKind

Z = FinAbGroup.free(1)
Z2 = FinAbGroup.cyclic(2)


class TestFinAbGroup:
    """Tests for the FinAbGroup model."""

    def test_render(self):
        """Test text rendering of groups."""
        assert FinAbGroup.free(1).render() == "Z"
        assert FinAbGroup.free(3).render() == "Z^3"
        assert FinAbGroup.cyclic(2).render() == "Z/2"
        assert FinAbGroup(free_rank=1, torsion=(2,)).render() == "Z + Z/2"
        assert FinAbGroup.free(2).render("Q") == "Q^2"
        assert str(FinAbGroup.zero()) == "0"

    def test_torsion_is_canonical(self):
        """Test that torsion orders are sorted so equality is structural."""
        assert FinAbGroup(torsion=(3, 2)) == FinAbGroup(torsion=(2, 3))

    def test_invalid_torsion(self):
        """Test rejecting trivial cyclic factors."""
        with pytest.raises(PydanticValidationError):
            FinAbGroup(torsion=(1,))

    def test_frozen(self):
        """Test that groups are immutable."""
        group = FinAbGroup.free(2)
        with pytest.raises(PydanticValidationError):
            group.free_rank = 3


class TestDegreeProfile:
    """Tests for the DegreeProfile and MDiscParams models."""

    def test_label(self):
        """Test the profile label."""
        profile = DegreeProfile(degrees=(3, 6))
        assert profile.label() == "(6,3)"
        assert str(profile) == "(6,3)"

    def test_d_index(self):
        """Test that d(0) is rejected."""
        with pytest.raises(IndexError):
            DegreeProfile(degrees=(2,)).d(0)

    def test_mdisc_requires_d_at_least_m(self):
        """Test MDiscParams validation."""
        with pytest.raises(PydanticValidationError):
            MDiscParams(d=2, m=3)


class TestRealCohomologyResult:
    """Tests for the RealCohomologyResult model."""

    def test_from_reduced(self):
        """Test counting components from H~^0."""
        reduced = GradedGroup(entries={0: FinAbGroup.free(3), 1: FinAbGroup.free(4)})
        result = RealCohomologyResult.from_reduced(DegreeProfile(degrees=(7, 3)), reduced)
        assert result.component_count == 4
        assert not result.complement_empty

    def test_empty(self):
        """Test the empty result."""
        result = RealCohomologyResult.empty(DegreeProfile(degrees=(3,)))
        assert result.complement_empty
        assert result.component_count is None
        assert result.reduced == GradedGroup()

    def test_inconsistent_component_count(self):
        """Test rejecting a component count that disagrees with H~^0."""
        with pytest.raises(PydanticValidationError):
            RealCohomologyResult(
                profile=DegreeProfile(degrees=(4,)),
                reduced=GradedGroup(entries={0: Z}),
                component_count=3,
            )


class TestSpectralPage:
    """Tests for the SpectralPage and CascadeReport models."""

    def _page(self, entries, leaf=1):
        return SpectralPage(
            kind=PageKind.REAL,
            leaf=leaf,
            ambient_dim=5,
            entries=entries,
            provenance={position: EntryOrigin.EVEN_COLUMN for position in entries},
        )

    def test_columns_and_positions(self):
        """Test reading a page by column."""
        page = self._page({(1, 3): Z, (1, 4): Z, (2, 3): Z2})
        assert page.column(1) == {3: Z, 4: Z}
        assert page.positions() == [(1, 3), (1, 4), (2, 3)]
        assert page.leaf_label == "1"
        assert not page.is_final

    def test_missing_provenance(self):
        """Test that every entry needs a provenance label."""
        with pytest.raises(PydanticValidationError):
            SpectralPage(kind=PageKind.REAL, ambient_dim=5, entries={(1, 3): Z}, provenance={})

    def test_zero_entry_rejected(self):
        """Test that pages are sparse."""
        with pytest.raises(PydanticValidationError):
            self._page({(1, 3): FinAbGroup.zero()})

    def test_cascade_must_account_for_entries(self):
        """Test that a report whose kills do not explain the final page is rejected."""
        initial = self._page({(1, 3): Z, (2, 3): Z2})
        final = self._page({(1, 3): Z}, leaf=None)
        kill = KilledEntry(
            rule=CascadeRule.EPIMORPHISM, leaf=1, source=(3, 3), target=(2, 3), removed=((2, 3),)
        )
        report = CascadeReport(initial=initial, final=final, killed=[kill])
        assert report.final.leaf_label == "inf"

        with pytest.raises(PydanticValidationError):
            CascadeReport(initial=initial, final=final, killed=[])


class TestForms:
    """Tests for the BinaryForm and PolySystem models."""

    def test_degree_and_zero(self, form):
        """Test the formal degree and zero detection."""
        assert form(1, 0, 1).degree == 2
        assert form(0, 0, 0).is_zero
        assert form(0, 0, 0).degree == 2

    def test_str(self, form):
        """Test pretty printing."""
        assert str(form(1, 0, 1)) == "x^2 + y^2"
        assert str(form(1, 0, -3, 0)) == "x^3 - 3*x*y^2"
        assert str(form(0, 1)) == "y"
        assert str(form(0, 0)) == "0"

    def test_empty_coefficients(self):
        """Test that a form needs at least one coefficient."""
        with pytest.raises(PydanticValidationError):
            BinaryForm(coeffs=())

    def test_system_order(self, system, form):
        """Test that systems list forms by non-increasing degree."""
        sys_ = system([1, 0, 1], [1, -1])
        assert sys_.degrees == (2, 1)
        assert sys_.matches(DegreeProfile(degrees=(2, 1)))
        assert sys_.coefficient_rows() == [[1, 0, 1], [1, -1]]

        with pytest.raises(PydanticValidationError):
            PolySystem(forms=(form(1, -1), form(1, 0, 1)))


class TestComponentReport:
    """Tests for the ComponentReport model."""

    def _report(self, observed, verified=True):
        witness = PolySystem.from_coefficients([[1, 0, 1], [1, 0]])
        return ComponentReport(
            profile=DegreeProfile(degrees=(2, 1)),
            invariant_kind=InvariantKind.PARITY,
            legal_values=(0, 1),
            observed=observed,
            witnesses={0: witness, 1: witness},
            witness_verified={0: verified, 1: True},
            predicted_b0=2,
            accepted_samples=sum(observed.values()),
            rejected_samples=0,
            seed=42,
            bound=12,
        )

    def test_passed(self):
        """Test the verdict on a matching census."""
        report = self._report({0: 90, 1: 110})
        assert report.passed
        assert report.realized_values == (0, 1)
        assert report.rejection_ratio == 0.0

    def test_witness_does_not_stand_in_for_a_sample(self):
        """Test that a class realized only by a witness does not count towards b0."""
        report = self._report({1: 200})
        assert report.observed_values == (1,)
        assert report.realized_values == (0, 1)
        assert report.witnesses_complete
        assert not report.passed

    def test_zero_samples(self):
        """Test that an empty census never passes, even with verified witnesses."""
        report = self._report({})
        assert report.accepted_samples == 0
        assert report.realized_values == (0, 1)
        assert report.witnesses_complete
        assert not report.passed

    def test_missing_witness(self):
        """Test that a legal value without a witness fails the census."""
        report = self._report({0: 90, 1: 110}).model_copy(
            update={"witnesses": {1: PolySystem.from_coefficients([[1, 0, 1], [1, 0]])}}
        )
        assert not report.witnesses_complete
        assert not report.passed

    def test_failed_witness(self):
        """Test that an unverified witness fails the census."""
        assert not self._report({0: 1, 1: 1}, verified=False).passed

    def test_illegal_value(self):
        """Test that an illegal observed value fails the census."""
        report = self._report({0: 1, 1: 1, 2: 1})
        assert report.illegal_values == (2,)
        assert not report.passed


class TestDocuments:
    """Tests for the JSON documents."""

    def test_real_document_schema(self):
        """Test the exact JSON of the (7,3) result."""
        reduced = GradedGroup(entries={0: FinAbGroup.free(3), 1: FinAbGroup.free(4)})
        result = RealCohomologyResult.from_reduced(DegreeProfile(degrees=(7, 3)), reduced)
        document = CohomologyDocument.from_real(result)
        assert json.loads(document.model_dump_json(exclude_none=True)) == {
            "version": 1,
            "profile": [7, 3],
            "field": "Z",
            "reduced": [
                {"dim": 0, "rank": 3, "torsion": []},
                {"dim": 1, "rank": 4, "torsion": []},
            ],
            "empty": False,
            "components": 4,
        }
        assert document.to_graded() == reduced

    def test_unreduced_view(self):
        """Test the unreduced entries added on request."""
        result = RealCohomologyResult.from_reduced(
            DegreeProfile(degrees=(4,)), GradedGroup(entries={0: Z})
        )
        document = CohomologyDocument.from_real(result, unreduced=True)
        assert [entry.rank for entry in document.unreduced] == [2]

    def test_empty_document(self):
        """Test the document of an empty complement."""
        empty = RealCohomologyResult.empty(DegreeProfile(degrees=(3,)))
        document = CohomologyDocument.from_real(empty)
        payload = json.loads(document.model_dump_json(exclude_none=True))
        assert payload["empty"] is True
        assert payload["reduced"] == []
        assert "components" not in payload

    def test_round_trips(self):
        """Test parse(print(doc)) == doc for every document type."""
        g = GradedGroup(entries={1: Z, 3: Z, 4: Z})
        documents = [
            CohomologyDocument.from_mdisc(MDiscParams(d=5, m=2), g, unreduced=True),
            CohomologyDocument.from_complex(DegreeProfile(degrees=(3, 3)), g),
            PageDocument.from_page(
                SpectralPage(
                    kind=PageKind.COMPLEX,
                    ambient_dim=16,
                    entries={(1, 11): Z},
                    provenance={(1, 11): EntryOrigin.COMPLEX_CONFIG},
                ),
                profile=DegreeProfile(degrees=(3, 3)),
            ),
            WitnessDocument.from_system(
                PolySystem.from_coefficients([[1, 0, -3, 0], [0, 3, 0, -1]]), 3, 3, False
            ),
        ]
        for document in documents:
            text = document.model_dump_json(exclude_none=True)
            assert type(document).model_validate_json(text) == document

    def test_report_document(self):
        """Test the census document."""
        witness = PolySystem.from_coefficients([[1, 0, 1], [1, 0]])
        report = ComponentReport(
            profile=DegreeProfile(degrees=(2, 1)),
            invariant_kind=InvariantKind.PARITY,
            legal_values=(0, 1),
            observed={1: 5},
            witnesses={1: witness},
            witness_verified={1: True},
            predicted_b0=2,
            accepted_samples=5,
            seed=1,
            bound=3,
        )
        document = ReportDocument.from_report(report)
        assert document.invariant == "parity"
        assert document.witnesses[0].forms == [[1, 0, 1], [1, 0]]
        assert not document.passed
        assert ReportDocument.model_validate_json(document.model_dump_json()) == document
