"""Real root counting and signed counting on the projective line."""

from typing import List, Optional, Sequence, Tuple

import sympy as sp
from sympy import Poly, Rational

from nonresultant.exceptions import (
    NonSquarefreeError,
    PredicateVanishesAtRootError,
    ZeroFormError,
)
from nonresultant.models.forms import BinaryForm


T = sp.Symbol("t")

Interval = Tuple[Rational, Rational]


def sign(value) -> int:
    """Sign of an exact number as -1, 0 or 1."""
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def dehomogenize(form: BinaryForm) -> Poly:
    """
    Return f(1, t) as a polynomial in t.

    The coefficient of t^j is a_j, so the line x = 0 is a root exactly when
    a_d = 0, and its multiplicity is d minus the degree of the result.

    Args:
        form: The binary form

    Returns:
        Poly: f(1, t) over the integers
    """
    return Poly(list(reversed(form.coeffs)), T, domain="ZZ")


def _sign_variations(signs: Sequence[int]) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def sturm_root_count(poly: Poly) -> int:
    """
    Number of distinct real roots of a univariate polynomial.

    Counts sign variations of the Sturm chain at minus and plus infinity,
    read off the leading coefficients and degrees.

    Args:
        poly: A nonzero polynomial in t

    Returns:
        int: Number of distinct real roots

    Raises:
        ZeroFormError: If the polynomial is zero
    """
    if poly.is_zero:
        raise ZeroFormError("the zero polynomial vanishes everywhere")
    if poly.degree() < 1:
        return 0
    chain = sp.sturm(poly)
    at_plus = [sign(p.LC()) for p in chain]
    at_minus = [sign(p.LC()) * (-1) ** p.degree() for p in chain]
    return _sign_variations(at_minus) - _sign_variations(at_plus)


def isolate_real_roots(poly: Poly, eps: Optional[Rational] = None) -> List[Interval]:
    """
    Disjoint isolating intervals for the distinct real roots, left to right.

    An interval may degenerate to a single rational root.
    """
    if poly.degree() < 1:
        return []
    return sorted(interval for interval, _ in poly.sqf_part().intervals(eps=eps))


def _has_real_root(poly: Poly) -> bool:
    return poly.degree() >= 1 and sturm_root_count(poly) > 0


def _check_simple_real_roots(poly: Poly, root_at_x_zero: int) -> None:
    if root_at_x_zero >= 2:
        raise NonSquarefreeError(
            "the form has a repeated root on the line x = 0",
            details={"multiplicity": root_at_x_zero},
        )
    if poly.degree() >= 2 and _has_real_root(poly.gcd(poly.diff(T))):
        raise NonSquarefreeError("the form has a repeated real root")


def _predicate_sign_at_root(predicate: Poly, squarefree: Poly, interval: Interval) -> int:
    a, b = interval
    while a != b and predicate.degree() >= 1 and predicate.count_roots(a, b) > 0:
        a, b = squarefree.refine_root(a, b, eps=(b - a) / 4)
    return sign(predicate.eval(a if a == b else (a + b) / 2))


def real_root_count(form: BinaryForm, predicate: Optional[BinaryForm] = None) -> int:
    """
    Count the real projective roots of a form.

    With a predicate, count only the roots at which the predicate is positive.
    Roots are taken as lines through the origin: t = y / x on the chart x = 1,
    plus the line x = 0 when the y^d coefficient vanishes.

    Args:
        form: The form whose roots are counted, with simple real roots
        predicate: Optional form whose sign selects roots

    Returns:
        int: The (signed-selected) number of real roots

    Raises:
        ZeroFormError: If the form is zero
        NonSquarefreeError: If the form has a repeated real root
        PredicateVanishesAtRootError: If the predicate vanishes at a counted root
    """
    if form.is_zero:
        raise ZeroFormError("the zero form vanishes on every line")
    poly = dehomogenize(form)
    root_at_x_zero = form.degree - poly.degree()
    _check_simple_real_roots(poly, root_at_x_zero)

    if predicate is None:
        return sturm_root_count(poly) + root_at_x_zero

    if predicate.is_zero:
        raise PredicateVanishesAtRootError("the zero predicate vanishes at every root")
    count = 0
    if root_at_x_zero:
        value = predicate.coeffs[-1]
        if value == 0:
            raise PredicateVanishesAtRootError("the predicate vanishes on the line x = 0")
        count += value > 0
    pred = dehomogenize(predicate)
    if _has_real_root(poly.gcd(pred)):
        raise PredicateVanishesAtRootError("the predicate vanishes at a real root of the form")

    squarefree = poly.sqf_part() if poly.degree() >= 1 else poly
    for interval in isolate_real_roots(poly):
        count += _predicate_sign_at_root(pred, squarefree, interval) > 0
    return count
