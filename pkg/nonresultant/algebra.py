"""
Combinatorics of degree profiles and arithmetic of graded abelian groups.

Every function here is pure; inputs and outputs are frozen models.
"""

from typing import Iterable, List, Tuple

from nonresultant.exceptions import EmptyProfileError, InvalidMDiscError, NonPositiveDegreeError
from nonresultant.models.groups import FinAbGroup, GradedGroup
from nonresultant.models.page import SpectralPage
from nonresultant.models.profile import DegreeProfile, MDiscParams
from nonresultant.utils.validators import validate_int_range


def profile_new(raw: Iterable[int]) -> DegreeProfile:
    """
    Build a DegreeProfile from degrees in any order.

    Args:
        raw: The degrees

    Returns:
        DegreeProfile: The profile with degrees sorted non-increasing

    Raises:
        EmptyProfileError: If no degrees are given
        NonPositiveDegreeError: If a degree is below 1
    """
    degrees = list(raw)
    if not degrees:
        raise EmptyProfileError("a degree profile needs at least one degree")
    for degree in degrees:
        validate_int_range(degree, "degree", min_value=1, error_class=NonPositiveDegreeError)
    return DegreeProfile(degrees=tuple(degrees))


def mdisc_new(d: int, m: int) -> MDiscParams:
    """
    Build MDiscParams, raising InvalidMDiscError unless m >= 2 and d >= m.

    Args:
        d: Degree of the forms
        m: Multiplicity bound

    Returns:
        MDiscParams: The validated parameters
    """
    validate_int_range(m, "m", min_value=2, error_class=InvalidMDiscError)
    validate_int_range(d, "d", min_value=m, error_class=InvalidMDiscError)
    return MDiscParams(d=d, m=m)


def n_of_p(profile: DegreeProfile, p: int) -> int:
    """
    Return N(p) = sum of min(d_i + 1, p).

    N(p) is the codimension of the space of systems vanishing on p given lines,
    the area of the Young diagram (d1+1, ..., dn+1) left of column p + 1.

    Args:
        profile: The degree profile
        p: Number of lines, at least 1

    Returns:
        int: N(p)
    """
    validate_int_range(p, "p", min_value=1)
    return sum(min(d + 1, p) for d in profile.degrees)


def upsilon(profile: DegreeProfile, p: int) -> int:
    """
    Return the number of degrees d_i >= p with d_i of the same parity as p.

    Its parity decides whether column p of the real E1 page carries two Z
    or a single Z/2.

    Args:
        profile: The degree profile
        p: Column index, at least 1

    Returns:
        int: The index, between 0 and n
    """
    validate_int_range(p, "p", min_value=1)
    return sum(1 for d in profile.degrees if d >= p and (d - p) % 2 == 0)


def group_direct_sum(a: FinAbGroup, b: FinAbGroup) -> FinAbGroup:
    """Return a + b; ranks add and torsion multisets merge."""
    return FinAbGroup(free_rank=a.free_rank + b.free_rank, torsion=a.torsion + b.torsion)


def graded_put(g: GradedGroup, dim: int, group: FinAbGroup) -> GradedGroup:
    """
    Add a group in one dimension.

    Args:
        g: The graded group
        dim: Target dimension
        group: Group added (direct sum) to g[dim]

    Returns:
        GradedGroup: A new graded group
    """
    entries = dict(g.entries)
    entries[dim] = group_direct_sum(g[dim], group)
    return GradedGroup(entries=entries)


def graded_sum(a: GradedGroup, b: GradedGroup) -> GradedGroup:
    """Dimension-wise direct sum of two graded groups."""
    result = a
    for dim, group in b.items():
        result = graded_put(result, dim, group)
    return result


def graded_from_pairs(pairs: Iterable[Tuple[int, FinAbGroup]]) -> GradedGroup:
    """Assemble a graded group from (dimension, group) pairs, summing repeats."""
    result = GradedGroup()
    for dim, group in pairs:
        result = graded_put(result, dim, group)
    return result


def euler_char_q(g: GradedGroup) -> int:
    """Rational Euler characteristic: sum of (-1)^dim * free rank; torsion counts 0."""
    return sum((-1) ** dim * group.free_rank for dim, group in g.items())


def poincare_polynomial(g: GradedGroup) -> List[Tuple[int, int]]:
    """Return the rational ranks as sorted (dim, rank) pairs, omitting rank 0."""
    return [(dim, group.free_rank) for dim, group in g.items() if group.free_rank > 0]


def unreduce(g: GradedGroup) -> GradedGroup:
    """Turn the reduced cohomology of a non-empty space into the unreduced one."""
    return graded_put(g, 0, FinAbGroup.free(1))


def page_euler_char(page: SpectralPage) -> int:
    """
    Rational Euler characteristic of a spectral page.

    Each entry counts its free rank with sign (-1)^(p+q). The value is the
    same on every page, since each differential lowers p + q by one.
    """
    return sum((-1) ** (p + q) * group.free_rank for (p, q), group in page.entries.items())
