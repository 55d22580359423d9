"""Component-separating invariants of non-resultant systems and hand-built witnesses."""

from typing import Dict, Tuple

from nonresultant.exceptions import (
    IllegalIndexError,
    ParityMismatchError,
    UnsupportedProfileForCensusError,
)
from nonresultant.models.forms import BinaryForm, PolySystem
from nonresultant.models.profile import DegreeProfile
from nonresultant.oracle.forms import form_mul, form_scale, radius_power
from nonresultant.oracle.roots import real_root_count
from nonresultant.oracle.winding import winding_index, witness_system
from nonresultant.utils.constants import InvariantKind


def invariant_kind_for(profile: DegreeProfile) -> InvariantKind:
    """
    Pick the invariant separating the components for a profile.

    Raises:
        UnsupportedProfileForCensusError: For three or more forms, or a single
            form of odd degree (empty complement)
    """
    if profile.n == 1:
        if profile.d(1) % 2:
            raise UnsupportedProfileForCensusError(
                f"{profile} has an empty complement", error_code="census-empty"
            )
        return InvariantKind.SIGN
    if profile.n == 2:
        if (profile.d(1) - profile.d(2)) % 2:
            return InvariantKind.PARITY
        return InvariantKind.WINDING
    raise UnsupportedProfileForCensusError(
        f"no separating invariant is available for {profile.n} forms",
        error_code="census-unsupported",
    )


def legal_values(profile: DegreeProfile, kind: InvariantKind) -> Tuple[int, ...]:
    """Values an invariant can take on systems of the given profile."""
    if kind == InvariantKind.WINDING:
        d2 = profile.d(2)
        return tuple(range(-d2, d2 + 1, 2))
    return (0, 1)


def sign_invariant(system: PolySystem) -> int:
    """1 when the single rootless form is positive, 0 when negative."""
    return 1 if system.forms[0].coeffs[0] > 0 else 0


def _split_by_parity(system: PolySystem) -> Tuple[BinaryForm, BinaryForm]:
    f1, f2 = system.forms
    if (f1.degree - f2.degree) % 2 == 0:
        raise ParityMismatchError("the parity invariant needs degrees of different parities")
    return (f1, f2) if f1.degree % 2 else (f2, f1)


def parity_invariant(system: PolySystem) -> int:
    """
    Parity of the number of real roots of the odd form where the even form is positive.

    Raises:
        ParityMismatchError: If the degrees have the same parity
        NonSquarefreeError: If the odd form has a repeated real root
    """
    odd, even = _split_by_parity(system)
    return real_root_count(odd, predicate=even) % 2


def winding_invariant(system: PolySystem) -> int:
    """Winding index of a two-form system."""
    f1, f2 = system.forms
    return winding_index(f1, f2)


def classify(system: PolySystem, kind: InvariantKind) -> int:
    """Evaluate the invariant of the given kind on a system off Sigma."""
    if kind == InvariantKind.SIGN:
        return sign_invariant(system)
    if kind == InvariantKind.PARITY:
        return parity_invariant(system)
    return winding_invariant(system)


def sign_witness(d: int, value: int) -> PolySystem:
    """The system +(x^2 + y^2)^(d/2) for value 1, its negative for value 0."""
    if d % 2 or value not in (0, 1):
        raise IllegalIndexError(f"no sign witness of value {value} in degree {d}")
    form = radius_power(d // 2)
    return PolySystem(forms=(form if value else form_scale(form, -1),))


def parity_witness(d1: int, d2: int, value: int) -> PolySystem:
    """
    A system of profile (d1, d2) with parity invariant ``value``.

    The odd form x (x^2 + y^2)^k has the single root line x = 0; the even form
    +-(x^2 + y^2)^j is positive there exactly when the sign is +.
    """
    if (d1 - d2) % 2 == 0:
        raise ParityMismatchError(f"degrees {d1} and {d2} have the same parity")
    if value not in (0, 1):
        raise IllegalIndexError(f"parity value must be 0 or 1, got {value}")
    odd_degree, even_degree = (d1, d2) if d1 % 2 else (d2, d1)
    odd = form_mul(BinaryForm(coeffs=(1, 0)), radius_power((odd_degree - 1) // 2))
    even = radius_power(even_degree // 2)
    if not value:
        even = form_scale(even, -1)
    forms = (odd, even) if d1 % 2 else (even, odd)
    return PolySystem(forms=forms)


def census_witnesses(profile: DegreeProfile, kind: InvariantKind) -> Dict[int, PolySystem]:
    """One constructed witness for every legal value of the invariant."""
    values = legal_values(profile, kind)
    if kind == InvariantKind.SIGN:
        return {v: sign_witness(profile.d(1), v) for v in values}
    if kind == InvariantKind.PARITY:
        return {v: parity_witness(profile.d(1), profile.d(2), v) for v in values}
    return {v: witness_system(profile.d(1), profile.d(2), v) for v in values}
