"""Service evaluating the closed formulas for non-resultant cohomology."""

import logging
from typing import Union

from nonresultant.algebra import graded_from_pairs, graded_put, n_of_p, upsilon
from nonresultant.exceptions import ComplexComplementEmptyError, InvalidMDiscError
from nonresultant.models.groups import FinAbGroup, GradedGroup
from nonresultant.models.profile import DegreeProfile, MDiscParams
from nonresultant.models.results import RealCohomologyResult
from nonresultant.services import BaseService
from nonresultant.utils.constants import EMPTY

logger = logging.getLogger(__name__)


class ClosedFormService(BaseService):
    """Direct evaluation of the real, complex and m-discriminant answers."""

    def real_cohomology(self, profile: DegreeProfile) -> RealCohomologyResult:
        """
        Integer reduced cohomology of R^D minus the real resultant variety.

        For p = 1..d3 every column contributes Z in dimensions N(p)-2p and
        N(p)-2p+1 when Upsilon(p) is even, or Z/2 in dimension N(p)-2p+1 when it
        is odd. On top of that, if d1 - d2 is odd there is one Z in dimension
        D-d1-d2-2; if it is even there is Z^(d2-d3+1) in dimension D-d1-d2-1 and,
        when d2 != d3, Z^(d2-d3) in dimension D-d1-d2-2. Missing degrees count
        as 0.

        Args:
            profile: The degree profile

        Returns:
            RealCohomologyResult: The reduced cohomology and component count
        """
        d1, d2, d3 = profile.d(1), profile.d(2), profile.d(3)
        if profile.n == 1 and d1 % 2 == 1:
            return RealCohomologyResult.empty(profile)

        pairs = []
        for p in range(1, d3 + 1):
            base = n_of_p(profile, p) - 2 * p
            if upsilon(profile, p) % 2 == 0:
                pairs.append((base, FinAbGroup.free(1)))
                pairs.append((base + 1, FinAbGroup.free(1)))
            else:
                pairs.append((base + 1, FinAbGroup.cyclic(2)))

        top = profile.total_dimension - d1 - d2
        if (d1 - d2) % 2 == 1:
            pairs.append((top - 2, FinAbGroup.free(1)))
        else:
            pairs.append((top - 1, FinAbGroup.free(d2 - d3 + 1)))
            if d2 != d3:
                pairs.append((top - 2, FinAbGroup.free(d2 - d3)))

        reduced = graded_from_pairs(pairs)
        logger.debug("Closed form for %s: %s", profile, reduced.entries)
        return RealCohomologyResult.from_reduced(profile, reduced)

    def complex_cohomology(self, profile: DegreeProfile) -> GradedGroup:
        """
        Reduced rational cohomology of C^D minus the complex resultant variety.

        Args:
            profile: The degree profile, with at least two forms

        Returns:
            GradedGroup: Q in dimensions 2n-3, 2n-1 and 4n-4

        Raises:
            ComplexComplementEmptyError: For a single form, which always has a root
        """
        n = profile.n
        if n == 1:
            raise ComplexComplementEmptyError(
                f"every complex binary form of degree {profile.d(1)} has a root",
                error_code="complex-empty",
            )
        return _rational_line(2 * n - 3, 2 * n - 1, 4 * n - 4)

    def m_discriminant_cohomology(self, params: MDiscParams) -> GradedGroup:
        """
        Reduced rational cohomology of the complement of the m-discriminant.

        For d >= 2m the answer is Q in dimensions 2m-3, 2m-1, 4m-4; for
        m <= d <= 2m-1 it is Q in dimensions 2m-3, 2m-1, 2d-2. At d = 2m-1 both
        descriptions agree.

        Args:
            params: Degree and multiplicity bound

        Returns:
            GradedGroup: The reduced rational cohomology

        Raises:
            InvalidMDiscError: If m < 2 or d < m
        """
        d, m = params.d, params.m
        if m < 2 or d < m:
            raise InvalidMDiscError(f"need m >= 2 and d >= m, got d={d}, m={m}")
        top = 4 * m - 4 if params.stable_range else 2 * d - 2
        return _rational_line(2 * m - 3, 2 * m - 1, top)

    def predicted_b0_real(self, profile: DegreeProfile) -> Union[int, str]:
        """
        Number of connected components of the real non-resultant space.

        Args:
            profile: The degree profile

        Returns:
            The component count, or ``"empty"`` when there are no non-resultant systems
        """
        result = self.real_cohomology(profile)
        if result.complement_empty:
            return EMPTY
        return result.component_count  # type: ignore


def _rational_line(*dims: int) -> GradedGroup:
    result = GradedGroup()
    for dim in dims:
        result = graded_put(result, dim, FinAbGroup.free(1))
    return result
