"""Tests for the complement sampler and the component census."""

import pytest

from nonresultant.exceptions import (
    SignTrackingError,
    UnsupportedProfileForCensusError,
    ValidationError,
)
from nonresultant.oracle import (
    ComplementSampler,
    census_witnesses,
    classify,
    component_census,
    in_resultant_variety,
    invariant_kind_for,
    legal_values,
    sample_complement,
)
from nonresultant.oracle.invariants import parity_witness, sign_witness
from nonresultant.utils.constants import InvariantKind


class TestComplementSampler:
    """Tests for the seeded rejection sampler."""

    def test_deterministic(self, make_profile):
        """Test that a fixed seed reproduces the same stream."""
        profile = make_profile(3, 3)
        first = list(sample_complement(profile, seed=42, bound=12, count=20))
        second = list(sample_complement(profile, seed=42, bound=12, count=20))
        assert first == second
        assert len(first) == 20

    def test_workers_draw_different_streams(self, make_profile):
        """Test that the children of one seed differ."""
        profile = make_profile(3, 3)
        a = list(sample_complement(profile, seed=42, bound=12, count=10, worker=0, workers=2))
        b = list(sample_complement(profile, seed=42, bound=12, count=10, worker=1, workers=2))
        assert a != b

    def test_samples_are_off_sigma(self, make_profile):
        """Test that every accepted system has the profile and avoids Sigma."""
        profile = make_profile(4, 2)
        for system in sample_complement(profile, seed=7, bound=3, count=50):
            assert system.matches(profile)
            assert not in_resultant_variety(system)
            assert all(not form.is_zero for form in system.forms)

    def test_coefficient_bound(self, make_profile):
        """Test that coefficients stay within [-bound, bound]."""
        sampler = ComplementSampler(make_profile(2, 2), seed=1, bound=2, count=0)
        for _ in range(50):
            for row in sampler.draw().coefficient_rows():
                assert all(-2 <= c <= 2 for c in row)

    def test_gives_up_on_empty_complement(self, make_profile):
        """Test that a profile with every system on Sigma stops after the draw limit."""
        sampler = sample_complement(make_profile(3), seed=42, bound=5, count=3)
        assert list(sampler) == []
        assert sampler.accepted == 0
        assert sampler.rejected == 150
        assert sampler.rejection_ratio == 1.0

    def test_rejection_ratio_near_zero(self, make_profile):
        """Test that Sigma is rarely hit when n = 2."""
        sampler = sample_complement(make_profile(3, 3), seed=42, bound=12, count=200)
        list(sampler)
        assert sampler.accepted == 200
        assert sampler.rejection_ratio < 0.1

    @pytest.mark.parametrize(
        "kwargs",
        [{"seed": -1}, {"bound": 0}, {"count": -1}, {"workers": 0}, {"worker": 2, "workers": 2}],
    )
    def test_invalid_arguments(self, make_profile, kwargs):
        """Test validation of the sampler arguments."""
        arguments = {"seed": 42, "bound": 12, "count": 1, **kwargs}
        with pytest.raises(ValidationError):
            ComplementSampler(make_profile(2, 2), **arguments)


class TestInvariantSelection:
    """Tests for choosing the separating invariant."""

    @pytest.mark.parametrize(
        "degrees, kind",
        [
            ((3, 3), InvariantKind.WINDING),
            ((4, 2), InvariantKind.WINDING),
            ((2, 1), InvariantKind.PARITY),
            ((5, 2), InvariantKind.PARITY),
            ((4,), InvariantKind.SIGN),
        ],
    )
    def test_kind(self, make_profile, degrees, kind):
        """Test the invariant chosen for one and two forms."""
        assert invariant_kind_for(make_profile(*degrees)) == kind

    def test_three_forms_unsupported(self, make_profile):
        """Test that (2,2,2) has no census."""
        with pytest.raises(UnsupportedProfileForCensusError):
            invariant_kind_for(make_profile(2, 2, 2))

    def test_odd_single_form_unsupported(self, make_profile):
        """Test that (3) has an empty complement."""
        with pytest.raises(UnsupportedProfileForCensusError) as excinfo:
            invariant_kind_for(make_profile(3))
        assert excinfo.value.error_code == "census-empty"

    def test_legal_winding_values(self, make_profile):
        """Test that winding values run over -d2..d2 in steps of 2."""
        assert legal_values(make_profile(5, 3), InvariantKind.WINDING) == (-3, -1, 1, 3)
        assert legal_values(make_profile(4, 2), InvariantKind.WINDING) == (-2, 0, 2)


class TestHandBuiltWitnesses:
    """Tests for the parity and sign witnesses."""

    def test_parity_witnesses(self, system):
        """Test (x^2 + y^2, x) -> 1 and (-x^2 - y^2, x) -> 0."""
        positive = system([1, 0, 1], [1, 0])
        negative = system([-1, 0, -1], [1, 0])
        assert parity_witness(2, 1, 1) == positive
        assert parity_witness(2, 1, 0) == negative
        assert classify(positive, InvariantKind.PARITY) == 1
        assert classify(negative, InvariantKind.PARITY) == 0

    def test_parity_witness_odd_first(self):
        """Test that the odd form comes first when d1 is odd."""
        witness = parity_witness(5, 2, 1)
        assert witness.degrees == (5, 2)
        assert classify(witness, InvariantKind.PARITY) == 1

    def test_sign_witnesses(self, system):
        """Test the witnesses +-(x^2 + y^2)^2 of the profile (4)."""
        assert sign_witness(4, 1) == system([1, 0, 2, 0, 1])
        assert sign_witness(4, 0) == system([-1, 0, -2, 0, -1])

    @pytest.mark.parametrize("degrees", [(3, 3), (4, 2), (2, 1), (4, 3), (6,)])
    def test_census_witnesses_verify(self, make_profile, degrees):
        """Test that every constructed witness classifies to its own value."""
        profile = make_profile(*degrees)
        kind = invariant_kind_for(profile)
        witnesses = census_witnesses(profile, kind)
        assert tuple(witnesses) == legal_values(profile, kind)
        for value, witness in witnesses.items():
            assert witness.matches(profile)
            assert classify(witness, kind) == value


class TestComponentCensus:
    """Tests for small censuses."""

    def test_same_parity(self, oracle, make_profile):
        """Test (2,2): winding values {-2,0,2} all sampled, predicted b0 = 3."""
        report = oracle.census(make_profile(2, 2))
        assert report.invariant_kind == InvariantKind.WINDING
        assert report.predicted_b0 == 3
        assert report.observed_values == (-2, 0, 2)
        assert report.accepted_samples == 200
        assert report.passed

    def test_rare_classes_stay_within_legal_range(self, oracle, make_profile):
        """Test (3,3): every sampled winding value is legal and witnesses cover all four."""
        report = oracle.census(make_profile(3, 3))
        assert report.predicted_b0 == 4
        assert not report.illegal_values
        assert report.realized_values == (-3, -1, 1, 3)
        assert report.witnesses_complete

    def test_zero_samples_fail(self, make_profile):
        """Test that a census without samples fails although every witness verifies."""
        report = component_census(make_profile(2, 2), predicted_b0=3, seed=42, bound=12, count=0)
        assert report.accepted_samples == 0
        assert report.observed_values == ()
        assert report.realized_values == (-2, 0, 2)
        assert report.witnesses_complete
        assert not report.passed

    def test_different_parity(self, oracle, make_profile):
        """Test (2,1): parity classes {0, 1}, predicted b0 = 2."""
        report = oracle.census(make_profile(2, 1))
        assert report.invariant_kind == InvariantKind.PARITY
        assert report.predicted_b0 == 2
        assert report.realized_values == (0, 1)
        assert report.passed

    def test_single_form(self, oracle, make_profile):
        """Test (4): both signs, predicted b0 = 2."""
        report = oracle.census(make_profile(4), samples=50)
        assert report.invariant_kind == InvariantKind.SIGN
        assert report.realized_values == (0, 1)
        assert report.passed

    def test_deterministic(self, make_profile):
        """Test that a fixed seed and worker layout reproduce the report."""
        profile = make_profile(2, 2)
        first = component_census(profile, predicted_b0=3, seed=5, bound=12, count=60, workers=3)
        second = component_census(profile, predicted_b0=3, seed=5, bound=12, count=60, workers=3)
        assert first == second

    def test_wrong_prediction_fails(self, make_profile):
        """Test that a census against a wrong b0 does not pass."""
        report = component_census(make_profile(2, 2), predicted_b0=2, seed=42, bound=12, count=40)
        assert not report.passed

    def test_witnesses_verified(self, oracle, make_profile):
        """Test that every stored witness was re-classified successfully."""
        report = oracle.census(make_profile(4, 2), samples=40)
        assert set(report.witness_verified) == set(report.witnesses)
        assert all(report.witness_verified.values())

    def test_three_forms(self, oracle, make_profile):
        """Test that (2,2,2) is rejected."""
        with pytest.raises(UnsupportedProfileForCensusError):
            oracle.census(make_profile(2, 2, 2))

    def test_empty_complement(self, oracle, make_profile):
        """Test that (3) is rejected before sampling."""
        with pytest.raises(UnsupportedProfileForCensusError):
            oracle.census(make_profile(3))


class TestOracleService:
    """Tests for the service helpers."""

    def test_witness(self, oracle):
        """Test that the service re-checks the winding of a witness."""
        system = oracle.witness(5, 3, -1)
        assert system.degrees == (5, 3)
        assert oracle.classify(system) == -1

    def test_witnesses(self, oracle, make_profile):
        """Test one witness per legal value."""
        assert set(oracle.witnesses(make_profile(2, 2))) == {-2, 0, 2}

    def test_witnesses_failed_recheck(self, oracle, make_profile, mocker):
        """Test that a witness re-classifying to the wrong value raises with details."""
        mocker.patch("nonresultant.services.oracle.classify", return_value=99)
        with pytest.raises(SignTrackingError) as exc_info:
            oracle.witnesses(make_profile(2, 2))
        assert exc_info.value.details == {
            "profile": [2, 2],
            "kind": InvariantKind.WINDING.value,
            "value": -2,
            "measured": 99,
        }


@pytest.mark.slow
class TestAcceptanceCensus:
    """Censuses with 2000 samples, bound 12 and seed 42."""

    @pytest.mark.parametrize("degrees", [(2, 2), (3, 3), (4, 2), (5, 3), (6, 2)])
    def test_same_parity(self, closed_form, make_profile, degrees):
        """Test that d2 + 1 winding classes are realized and match the closed form."""
        profile = make_profile(*degrees)
        report = component_census(
            profile,
            predicted_b0=closed_form.predicted_b0_real(profile),
            seed=42,
            bound=12,
            count=2000,
        )
        assert report.predicted_b0 == degrees[1] + 1
        assert report.realized_values == tuple(range(-degrees[1], degrees[1] + 1, 2))
        assert not report.illegal_values
        assert report.passed

    @pytest.mark.parametrize("degrees", [(2, 1), (3, 2), (4, 3), (5, 2)])
    def test_different_parity(self, closed_form, make_profile, degrees):
        """Test that exactly two parity classes are observed."""
        profile = make_profile(*degrees)
        report = component_census(
            profile,
            predicted_b0=closed_form.predicted_b0_real(profile),
            seed=42,
            bound=12,
            count=2000,
        )
        assert report.observed_values == (0, 1)
        assert report.passed

    @pytest.mark.parametrize("degrees", [(4,), (6,)])
    def test_single_form(self, closed_form, make_profile, degrees):
        """Test the two sign classes of a single even form."""
        profile = make_profile(*degrees)
        report = component_census(
            profile,
            predicted_b0=closed_form.predicted_b0_real(profile),
            seed=42,
            bound=12,
            count=2000,
        )
        assert report.observed_values == (0, 1)
        assert report.passed
