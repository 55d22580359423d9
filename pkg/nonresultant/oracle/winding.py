"""Winding index of a pair of forms around the unit circle, and canonical witnesses."""

import logging
from typing import List

import sympy as sp
from sympy import Poly, Rational

from nonresultant.exceptions import (
    IllegalIndexError,
    OnResultantVarietyError,
    ParityMismatchError,
    SignTrackingError,
    ZeroFormError,
)
from nonresultant.models.forms import BinaryForm, PolySystem
from nonresultant.oracle.forms import form_mul, in_resultant_variety, radius_power
from nonresultant.oracle.roots import T, isolate_real_roots, sign

logger = logging.getLogger(__name__)

# Quadrant of (F1, F2) by sign pattern, counter-clockwise from the open first quadrant
QUADRANT = {(1, 1): 0, (-1, 1): 1, (-1, -1): 2, (1, -1): 3}


def circle_pullback(form: BinaryForm) -> Poly:
    """
    Pull a form back along the rational parametrization of the circle.

    The point (1 - t^2, 2t) / (1 + t^2) runs once around the unit circle as t
    runs over the real line, reaching (-1, 0) only in the limit. Positive
    scaling does not change signs, so F(t) = f(1 - t^2, 2t) is used.

    Args:
        form: The form f

    Returns:
        Poly: F(t)
    """
    u = Poly(1 - T**2, T)
    v = Poly(2 * T, T)
    d = form.degree
    result = Poly(0, T)
    for j, c in enumerate(form.coeffs):
        if c:
            result += c * u ** (d - j) * v**j
    return result


def arc_sample_points(poly: Poly) -> List[Rational]:
    """
    One rational point in each open arc between consecutive real roots.

    The points are increasing, avoid the roots, and include one point below
    the first root and one above the last. A polynomial without real roots
    gets the single point 0.
    """
    if poly.degree() < 1:
        return [Rational(0)]
    eps = None
    while True:
        intervals = isolate_real_roots(poly, eps=eps)
        if not intervals:
            return [Rational(0)]
        disjoint = all(b0 <= a1 for (_, b0), (a1, _) in zip(intervals, intervals[1:]))
        points = (
            [intervals[0][0] - 1]
            + [(b0 + a1) / 2 for (_, b0), (a1, _) in zip(intervals, intervals[1:])]
            + [intervals[-1][1] + 1]
        )
        if disjoint and all(poly.eval(s) != 0 for s in points):
            return points
        eps = Rational(1, 4) if eps is None else eps / 4
        logger.debug("refining root isolation to eps=%s", eps)


def winding_index(f1: BinaryForm, f2: BinaryForm) -> int:
    """
    Winding number of the circle map v -> (f1(v), f2(v)) around the origin.

    The count is exact: the circle is cut at the real roots of F1 * F2 and the
    quadrant of (F1, F2) is tracked across the arcs.

    Args:
        f1: First form
        f2: Second form, of the same degree parity as f1

    Returns:
        int: The winding index

    Raises:
        ZeroFormError: If either form is zero
        ParityMismatchError: If the degrees have different parities
        OnResultantVarietyError: If the forms share a real root
        SignTrackingError: If the quadrant sequence is inconsistent
    """
    if f1.is_zero or f2.is_zero:
        raise ZeroFormError("the winding index needs two nonzero forms")
    if (f1.degree - f2.degree) % 2:
        raise ParityMismatchError(
            f"degrees {f1.degree} and {f2.degree} have different parities",
            details={"degrees": [f1.degree, f2.degree]},
        )
    ordered = tuple(sorted((f1, f2), key=lambda form: form.degree, reverse=True))
    if in_resultant_variety(PolySystem(forms=ordered)):
        raise OnResultantVarietyError("the forms share a real root")

    g1, g2 = circle_pullback(f1), circle_pullback(f2)
    points = arc_sample_points((g1 * g2).sqf_part())
    quadrants = []
    for s in points:
        pattern = (sign(g1.eval(s)), sign(g2.eval(s)))
        if pattern not in QUADRANT:
            raise SignTrackingError(f"sample point {s} lies on an axis")
        quadrants.append(QUADRANT[pattern])

    quarter_turns = 0
    for before, after in zip(quadrants, quadrants[1:] + quadrants[:1]):
        step = (after - before) % 4
        if step == 1:
            quarter_turns += 1
        elif step == 3:
            quarter_turns -= 1
        elif step == 2:
            raise SignTrackingError("both forms changed sign between adjacent sample points")
    if quarter_turns % 4:
        raise SignTrackingError(f"loop closed after {quarter_turns} quarter turns")
    return quarter_turns // 4


def _gaussian_parts(a: int, b: int) -> List[BinaryForm]:
    x, y = sp.symbols("x y")
    product = Poly(sp.expand((x + sp.I * y) ** a * (x - sp.I * y) ** b), x, y)
    d = a + b
    coeffs = [product.coeff_monomial(x ** (d - j) * y**j) for j in range(d + 1)]
    return [
        BinaryForm(coeffs=tuple(int(sp.re(c)) for c in coeffs)),
        BinaryForm(coeffs=tuple(int(sp.im(c)) for c in coeffs)),
    ]


def witness_system(d1: int, d2: int, k: int) -> PolySystem:
    """
    Canonical system of profile (d1, d2) with winding index k.

    With h = (x + iy)^a (x - iy)^b, a = (d2 + k) / 2 and b = (d2 - k) / 2, the
    pair (Re h * (x^2 + y^2)^((d1 - d2) / 2), Im h) winds k times. For k = 0
    the imaginary part vanishes and the pair of radius powers is used instead.

    Args:
        d1: Degree of the first form
        d2: Degree of the second form, d2 <= d1 and d1 = d2 mod 2
        k: Target winding index, |k| <= d2 and k = d2 mod 2

    Returns:
        PolySystem: The witness

    Raises:
        ParityMismatchError: If d1 and d2 have different parities
        IllegalIndexError: If k is not a legal winding index for (d1, d2)
    """
    if (d1 - d2) % 2:
        raise ParityMismatchError(f"degrees {d1} and {d2} have different parities")
    if d2 < 1 or d1 < d2:
        raise IllegalIndexError(f"({d1}, {d2}) is not a degree profile")
    if abs(k) > d2 or (k - d2) % 2:
        raise IllegalIndexError(
            f"winding index {k} is not realizable in degree {d2}",
            details={"d1": d1, "d2": d2, "k": k},
        )
    if k == 0:
        return PolySystem(forms=(radius_power(d1 // 2), radius_power(d2 // 2)))
    real_part, imaginary_part = _gaussian_parts((d2 + k) // 2, (d2 - k) // 2)
    first = form_mul(real_part, radius_power((d1 - d2) // 2))
    return PolySystem(forms=(first, imaginary_part))
