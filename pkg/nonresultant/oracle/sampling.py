"""Randomized census of the components of the complement of Sigma."""

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterator, List

import numpy as np
from pydantic import Field

from nonresultant.exceptions import NonSquarefreeError
from nonresultant.models.base import BaseModel
from nonresultant.models.forms import BinaryForm, PolySystem
from nonresultant.models.profile import DegreeProfile
from nonresultant.models.report import ComponentReport
from nonresultant.oracle.forms import in_resultant_variety
from nonresultant.oracle.invariants import (
    census_witnesses,
    classify,
    invariant_kind_for,
    legal_values,
)
from nonresultant.utils.constants import MAX_DRAWS_PER_SAMPLE, InvariantKind
from nonresultant.utils.validators import validate_int_range, validate_not_none

logger = logging.getLogger(__name__)


class ComplementSampler:
    """
    Stream of random systems off Sigma with uniform integer coefficients.

    Worker ``w`` of ``workers`` draws from the w-th child of
    ``SeedSequence(seed)``, so a fixed (seed, workers) layout always produces
    the same streams. Systems on Sigma and systems containing a zero form are
    rejected and counted.
    """

    def __init__(
        self,
        profile: DegreeProfile,
        seed: int,
        bound: int,
        count: int,
        worker: int = 0,
        workers: int = 1,
    ):
        validate_not_none(profile, "profile")
        validate_int_range(seed, "seed", min_value=0)
        validate_int_range(bound, "bound", min_value=1)
        validate_int_range(count, "count", min_value=0)
        validate_int_range(workers, "workers", min_value=1)
        validate_int_range(worker, "worker", min_value=0, max_value=workers - 1)
        self.profile = profile
        self.bound = bound
        self.count = count
        self.accepted = 0
        self.rejected = 0
        stream = np.random.SeedSequence(seed).spawn(workers)[worker]
        self._rng = np.random.default_rng(stream)

    def draw(self) -> PolySystem:
        """Draw one system of the profile, without rejection."""
        return PolySystem(
            forms=tuple(
                BinaryForm(
                    coeffs=tuple(
                        int(c)
                        for c in self._rng.integers(
                            -self.bound, self.bound, size=d + 1, endpoint=True
                        )
                    )
                )
                for d in self.profile.degrees
            )
        )

    def __iter__(self) -> Iterator[PolySystem]:
        max_draws = MAX_DRAWS_PER_SAMPLE * max(self.count, 1)
        while self.accepted < self.count:
            if self.accepted + self.rejected >= max_draws:
                logger.warning(
                    "Sampler for %s gave up after %d draws with %d accepted",
                    self.profile,
                    max_draws,
                    self.accepted,
                )
                return
            system = self.draw()
            if any(form.is_zero for form in system.forms) or in_resultant_variety(system):
                self.rejected += 1
                logger.debug("Rejected draw %s", system.coefficient_rows())
                continue
            self.accepted += 1
            yield system

    @property
    def rejection_ratio(self) -> float:
        """Fraction of draws rejected so far."""
        total = self.accepted + self.rejected
        return self.rejected / total if total else 0.0


def sample_complement(
    profile: DegreeProfile,
    seed: int,
    bound: int,
    count: int,
    worker: int = 0,
    workers: int = 1,
) -> ComplementSampler:
    """
    Create a sampler yielding ``count`` systems off Sigma.

    Args:
        profile: Degree profile of the systems
        seed: Root seed
        bound: Coefficients are drawn uniformly from [-bound, bound]
        count: Number of accepted systems to yield
        worker: Index of this worker's stream
        workers: Number of streams the seed is split into

    Returns:
        ComplementSampler: An iterable over the accepted systems
    """
    return ComplementSampler(profile, seed, bound, count, worker=worker, workers=workers)


class _PartialCensus(BaseModel):
    """Counts and first samples of one worker's stream."""

    observed: Dict[int, int] = Field(default_factory=dict)
    first_seen: Dict[int, PolySystem] = Field(default_factory=dict)
    accepted: int = Field(0, ge=0)
    rejected: int = Field(0, ge=0)


def _census_worker(
    profile: DegreeProfile,
    kind: InvariantKind,
    seed: int,
    bound: int,
    count: int,
    worker: int,
    workers: int,
) -> _PartialCensus:
    sampler = sample_complement(profile, seed, bound, count, worker=worker, workers=workers)
    observed: Counter = Counter()
    first_seen: Dict[int, PolySystem] = {}
    skipped = 0
    for system in sampler:
        try:
            value = classify(system, kind)
        except NonSquarefreeError as e:
            skipped += 1
            logger.warning("Rejected sample %s: %s", system.coefficient_rows(), e)
            continue
        observed[value] += 1
        first_seen.setdefault(value, system)
    partial = _PartialCensus(
        observed=dict(observed),
        first_seen=first_seen,
        accepted=sampler.accepted - skipped,
        rejected=sampler.rejected + skipped,
    )
    logger.debug(
        "Worker %d/%d classified %d samples, rejected %d",
        worker,
        workers,
        partial.accepted,
        partial.rejected,
    )
    return partial


def _shares(count: int, workers: int) -> List[int]:
    return [count // workers + (1 if w < count % workers else 0) for w in range(workers)]


def component_census(
    profile: DegreeProfile,
    predicted_b0: int,
    seed: int,
    bound: int,
    count: int,
    workers: int = 1,
) -> ComponentReport:
    """
    Classify random systems by their component invariant and compare with b0.

    The samples are split over ``workers`` independent streams evaluated in a
    thread pool; partial results are merged in worker order, so the report is
    deterministic for a fixed (seed, workers). Every legal invariant value not
    met by a sample gets a constructed witness, and every witness is
    re-classified.

    Args:
        profile: Degree profile with one or two forms and a non-empty complement
        predicted_b0: Number of components predicted by the closed form
        seed: Root seed
        bound: Coefficient bound
        count: Total number of samples to classify
        workers: Number of sampling streams

    Returns:
        ComponentReport: Observed classes, witnesses and verdict

    Raises:
        UnsupportedProfileForCensusError: For three or more forms or an empty complement
    """
    kind = invariant_kind_for(profile)
    validate_int_range(workers, "workers", min_value=1)

    shares = _shares(count, workers)
    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="census") as executor:
        futures = [
            executor.submit(_census_worker, profile, kind, seed, bound, share, w, workers)
            for w, share in enumerate(shares)
        ]
        partials = [future.result() for future in futures]

    observed: Counter = Counter()
    witnesses: Dict[int, PolySystem] = {}
    accepted = rejected = 0
    for partial in partials:
        observed.update(partial.observed)
        for value, system in partial.first_seen.items():
            witnesses.setdefault(value, system)
        accepted += partial.accepted
        rejected += partial.rejected

    for value, system in census_witnesses(profile, kind).items():
        witnesses.setdefault(value, system)
    verified = {value: classify(system, kind) == value for value, system in witnesses.items()}

    report = ComponentReport(
        profile=profile,
        invariant_kind=kind,
        legal_values=legal_values(profile, kind),
        observed=dict(sorted(observed.items())),
        witnesses=dict(sorted(witnesses.items())),
        witness_verified=dict(sorted(verified.items())),
        predicted_b0=predicted_b0,
        accepted_samples=accepted,
        rejected_samples=rejected,
        seed=seed,
        workers=workers,
        bound=bound,
    )
    logger.info(
        "Census of %s: observed %s, predicted b0 = %d, %s",
        profile,
        list(report.observed_values),
        predicted_b0,
        "passed" if report.passed else "FAILED",
    )
    return report
