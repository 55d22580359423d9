"""
Service recomputing non-resultant cohomology through the filtration spectral sequence.

The resolution of the resultant variety is never built geometrically; its E1
page is written down column by column from the known fibre bundle structure of
the filtration strata, the differentials are applied by rule, and the surviving
Borel-Moore homology is turned into cohomology by Alexander duality.
"""

import logging
from typing import Dict, List

from nonresultant.algebra import graded_put, n_of_p, upsilon
from nonresultant.exceptions import (
    ComplexComplementEmptyError,
    DualityOutOfRangeError,
    MalformedPageError,
)
from nonresultant.models.groups import FinAbGroup, GradedGroup
from nonresultant.models.page import CascadeReport, KilledEntry, Position, SpectralPage
from nonresultant.models.profile import DegreeProfile, MDiscParams
from nonresultant.models.results import RealCohomologyResult
from nonresultant.services import BaseService
from nonresultant.utils.constants import (
    SIGN_LOCAL_SYSTEM_HOMOLOGY,
    CascadeRule,
    EntryOrigin,
    PageKind,
)

logger = logging.getLogger(__name__)

Z = FinAbGroup.free(1)
Z2 = FinAbGroup.cyclic(2)
Q = FinAbGroup.free(1)


class SpectralService(BaseService):
    """Spectral sequence computations for the real, complex and m-discriminant cases."""

    # Real case

    def build_real_e1(self, profile: DegreeProfile) -> SpectralPage:
        """
        Build the E1 page of the real resolution.

        Column p <= d1 carries Z at q = D-N(p)+p-1 and q = D-N(p)+p-2 when
        Upsilon(p) is even, and a single Z/2 at q = D-N(p)+p-2 when it is odd.
        The last column d1+1 carries Z at q = d1-1.

        Args:
            profile: The degree profile

        Returns:
            SpectralPage: The E1 page
        """
        total = profile.total_dimension
        d1 = profile.d(1)
        entries: Dict[Position, FinAbGroup] = {}
        provenance: Dict[Position, EntryOrigin] = {}

        for p in range(1, d1 + 1):
            low = total - n_of_p(profile, p) + p - 2
            if upsilon(profile, p) % 2 == 0:
                for q in (low, low + 1):
                    entries[(p, q)] = Z
                    provenance[(p, q)] = EntryOrigin.EVEN_COLUMN
            else:
                entries[(p, low)] = Z2
                provenance[(p, low)] = EntryOrigin.ODD_COLUMN

        entries[(d1 + 1, d1 - 1)] = Z
        provenance[(d1 + 1, d1 - 1)] = EntryOrigin.LAST_COLUMN

        return SpectralPage(
            kind=PageKind.REAL,
            leaf=1,
            ambient_dim=total,
            entries=entries,
            provenance=provenance,
        )

    def run_real_cascade(self, page: SpectralPage, profile: DegreeProfile) -> CascadeReport:
        """
        Run the differentials of the real spectral sequence down to E^infinity.

        Columns p <= d3 never support or receive a differential. Columns p > d2
        behave as for a single form of degree d1: each Z at (p, d1-1) maps onto
        the Z/2 at (p-1, d1-1) on leaf 1 and isomorphically onto the Z at
        (p-2, d1) on leaf 2. When d1 - d2 is odd the Z left at (d2+2, d1-1)
        maps onto every Z/2 on the diagonal p + q = d1 + d2 with p > d3, one
        leaf at a time, starting with (d2+1, d1-1) on leaf 1; when d1 - d2 is
        even nothing else moves.

        Args:
            page: The E1 page built by ``build_real_e1`` for this profile
            profile: The degree profile

        Returns:
            CascadeReport: The E1 page, the E^infinity page and every application

        Raises:
            MalformedPageError: If the page is not the E1 page of the profile
        """
        self._check_real_e1(page, profile)
        d1, d2, d3 = profile.d(1), profile.d(2), profile.d(3)
        live = dict(page.entries)
        killed: List[KilledEntry] = []

        def kill(rule, leaf, source, target, removed):
            for position in removed:
                del live[position]
            killed.append(
                KilledEntry(rule=rule, leaf=leaf, source=source, target=target, removed=removed)
            )
            logger.debug("%s: d_%d %s -> %s (%s)", profile, leaf, source, target, rule.value)

        tail_sources = [
            p for p in range(d1 + 1, d2, -1) if live.get((p, d1 - 1)) == Z
        ]
        diagonal_source = d2 + 2 if (d1 - d2) % 2 == 1 else None
        for p in tail_sources:
            target = (p - 1, d1 - 1)
            if p - 1 > d2 and live.get(target) == Z2:
                # first step of the diagonal series when d1 - d2 is odd
                rule = (
                    CascadeRule.DIAGONAL_EPIMORPHISM
                    if p == diagonal_source
                    else CascadeRule.EPIMORPHISM
                )
                kill(rule, 1, (p, d1 - 1), target, (target,))
        for p in tail_sources:
            source, target = (p, d1 - 1), (p - 2, d1)
            if p - 2 > d2 and live.get(target) == Z:
                kill(CascadeRule.ISOMORPHISM, 2, source, target, (source, target))

        if (d1 - d2) % 2 == 1:
            source = (d2 + 2, d1 - 1)
            if live.get(source) != Z:
                raise MalformedPageError(f"expected a surviving Z at {source} for {profile}")
            for r in range(2, d2 + 2 - d3):
                target = (d2 + 2 - r, d1 - 2 + r)
                if live.get(target) != Z2:
                    raise MalformedPageError(f"expected Z/2 at {target} for {profile}")
                kill(CascadeRule.DIAGONAL_EPIMORPHISM, r, source, target, (target,))

        final = SpectralPage(
            kind=page.kind,
            leaf=None,
            ambient_dim=page.ambient_dim,
            entries=live,
            provenance={position: EntryOrigin.SURVIVOR for position in live},
        )
        return CascadeReport(initial=page, final=final, killed=killed)

    def assemble_borel_moore(self, report: CascadeReport) -> GradedGroup:
        """
        Borel-Moore homology of the resultant variety from the E^infinity page.

        Each diagonal p + q = k is summed directly; extensions are taken to split.

        Args:
            report: A finished cascade

        Returns:
            GradedGroup: H-bar_k as the direct sum of E^infinity_{p,q} with p + q = k
        """
        result = GradedGroup()
        for (p, q), group in sorted(report.final.entries.items()):
            result = graded_put(result, p + q, group)
        return result

    def alexander_dual(self, bm: GradedGroup, ambient_dim: int) -> GradedGroup:
        """
        Reduced cohomology of the complement from Borel-Moore homology.

        H~^i(R^D minus X) = H-bar_{D-i-1}(X).

        Args:
            bm: Borel-Moore homology of the closed subset
            ambient_dim: Real dimension D of the ambient space

        Returns:
            GradedGroup: The reduced cohomology of the complement

        Raises:
            DualityOutOfRangeError: If a nonzero group would land in negative dimension
        """
        result = GradedGroup()
        for dim, group in bm.items():
            i = ambient_dim - dim - 1
            if i < 0:
                raise DualityOutOfRangeError(
                    f"H-bar_{dim} is nonzero but the ambient dimension is {ambient_dim}",
                    details={"dim": dim, "ambient_dim": ambient_dim},
                )
            result = graded_put(result, i, group)
        return result

    def real_cohomology(self, profile: DegreeProfile) -> RealCohomologyResult:
        """
        Full real pipeline: E1 page, cascade, assembly and duality.

        A nonzero H-bar_D means the resultant variety is all of R^D, which is how
        the empty complement shows up on this side.

        Args:
            profile: The degree profile

        Returns:
            RealCohomologyResult: Same shape as the closed form result
        """
        report = self.run_real_cascade(self.build_real_e1(profile), profile)
        bm = self.assemble_borel_moore(report)
        total = profile.total_dimension
        if total in bm.entries:
            logger.debug("H-bar_%d of the resultant variety is nonzero for %s", total, profile)
            return RealCohomologyResult.empty(profile)
        return RealCohomologyResult.from_reduced(profile, self.alexander_dual(bm, total))

    # Complex case

    def build_complex_e1(self, profile: DegreeProfile) -> SpectralPage:
        """
        Build the rational E1 page of the complex resolution.

        E1_{p,q} is H-bar_{q-2(D-N(p))+1}(B(CP^1, p); sign system) for p <= d1,
        which leaves Q at (1, 2(D-n)-1), (1, 2(D-n)+1) and, when d1 > 1,
        (2, 2(D-2n)+1). The last column is trivial unless d1 = 1, where it is
        Q at (2, 1).

        Args:
            profile: The degree profile, at least two forms

        Returns:
            SpectralPage: The E1 page, ambient dimension 2D

        Raises:
            ComplexComplementEmptyError: For a single form
        """
        if profile.n == 1:
            raise ComplexComplementEmptyError(
                "a single complex form always has a root", error_code="complex-empty"
            )
        total = profile.total_dimension
        d1 = profile.d(1)
        return _configuration_page(
            PageKind.COMPLEX,
            fibre_dims={p: total - n_of_p(profile, p) for p in range(1, d1 + 1)},
            last_column=d1 + 1,
            ambient_dim=2 * total,
        )

    def finish_rational_page(self, page: SpectralPage) -> CascadeReport:
        """
        Degenerate a rational E1 page: every differential vanishes.

        Args:
            page: A complex or m-discriminant E1 page

        Returns:
            CascadeReport: E1, the identical E^infinity page and no applications

        Raises:
            MalformedPageError: For a real page
        """
        if page.kind == PageKind.REAL:
            raise MalformedPageError("the real sequence has nontrivial differentials")
        final = page.model_copy(
            update={
                "leaf": None,
                "provenance": {position: EntryOrigin.SURVIVOR for position in page.entries},
            }
        )
        return CascadeReport(initial=page, final=final, killed=[])

    def run_complex_cascade(self, page: SpectralPage) -> GradedGroup:
        """
        Finish a rational page with trivial differentials and dualize.

        Args:
            page: A complex or m-discriminant E1 page

        Returns:
            GradedGroup: Reduced rational cohomology of the complement
        """
        report = self.finish_rational_page(page)
        return self.alexander_dual(self.assemble_borel_moore(report), page.ambient_dim)

    def complex_cohomology(self, profile: DegreeProfile) -> GradedGroup:
        """Reduced rational cohomology of the complex complement via the spectral sequence."""
        return self.run_complex_cascade(self.build_complex_e1(profile))

    # m-discriminants

    def build_mdisc_e1(self, params: MDiscParams) -> SpectralPage:
        """
        Build the rational E1 page for the m-discriminant in C^(d+1).

        Column p <= d // m parametrizes p lines of multiplicity m, codimension
        m*p; the last column d // m + 1 carries Q at (2, 1) only when d // m = 1.

        Args:
            params: Degree and multiplicity bound

        Returns:
            SpectralPage: The E1 page, ambient dimension 2(d+1)
        """
        max_points = params.d // params.m
        space = params.d + 1
        return _configuration_page(
            PageKind.MDISC,
            fibre_dims={p: space - params.m * p for p in range(1, max_points + 1)},
            last_column=max_points + 1,
            ambient_dim=2 * space,
        )

    def mdisc_cohomology(self, params: MDiscParams) -> GradedGroup:
        """Reduced rational cohomology of the m-discriminant complement via the spectral sequence."""
        return self.run_complex_cascade(self.build_mdisc_e1(params))

    def _check_real_e1(self, page: SpectralPage, profile: DegreeProfile):
        if page.kind != PageKind.REAL or page.leaf != 1:
            raise MalformedPageError(f"expected a real E1 page, got {page.kind} E^{page.leaf_label}")
        expected = self.build_real_e1(profile)
        if page.entries != expected.entries or page.ambient_dim != expected.ambient_dim:
            raise MalformedPageError(f"page is not the E1 page of {profile}")


def _configuration_page(
    kind: PageKind, fibre_dims: Dict[int, int], last_column: int, ambient_dim: int
) -> SpectralPage:
    entries: Dict[Position, FinAbGroup] = {}
    provenance: Dict[Position, EntryOrigin] = {}
    for p, fibre in fibre_dims.items():
        for i, rank in SIGN_LOCAL_SYSTEM_HOMOLOGY.get(p, {}).items():
            position = (p, i + 2 * fibre - 1)
            entries[position] = FinAbGroup.free(rank)
            provenance[position] = EntryOrigin.COMPLEX_CONFIG
    # cone over the join of a single CP^1, base removed: an open 3-ball
    if last_column == 2:
        entries[(2, 1)] = Q
        provenance[(2, 1)] = EntryOrigin.LAST_COLUMN
    return SpectralPage(
        kind=kind, leaf=1, ambient_dim=ambient_dim, entries=entries, provenance=provenance
    )
