"""Exact arithmetic on binary forms: evaluation, products, resultants, membership in Sigma."""

from functools import reduce
from typing import Union

from sympy import Matrix, Poly, Rational

from nonresultant.exceptions import DegreeMismatchError, ZeroFormError
from nonresultant.models.forms import BinaryForm, PolySystem
from nonresultant.oracle.roots import T, dehomogenize, sturm_root_count

Number = Union[int, Rational]


def form_from_poly(poly: Poly, degree: int) -> BinaryForm:
    """Inverse of ``dehomogenize`` for a given formal degree."""
    return BinaryForm(coeffs=tuple(int(poly.coeff_monomial(T**j)) for j in range(degree + 1)))


def form_eval(form: BinaryForm, x: Number, y: Number) -> Rational:
    """
    Evaluate a form at a rational point, exactly.

    Args:
        form: The binary form
        x: First coordinate
        y: Second coordinate

    Returns:
        Rational: f(x, y)
    """
    x, y = Rational(x), Rational(y)
    d = form.degree
    return sum(
        (Rational(c) * x ** (d - j) * y**j for j, c in enumerate(form.coeffs)), Rational(0)
    )


def form_mul(a: BinaryForm, b: BinaryForm) -> BinaryForm:
    """Product of two forms; degrees add."""
    return form_from_poly(dehomogenize(a) * dehomogenize(b), a.degree + b.degree)


def form_scale(form: BinaryForm, factor: int) -> BinaryForm:
    """Multiply every coefficient by an integer."""
    return BinaryForm(coeffs=tuple(factor * c for c in form.coeffs))


def form_add(a: BinaryForm, b: BinaryForm) -> BinaryForm:
    """
    Sum of two forms of the same degree.

    Raises:
        DegreeMismatchError: If the degrees differ
    """
    if a.degree != b.degree:
        raise DegreeMismatchError(f"cannot add forms of degrees {a.degree} and {b.degree}")
    return BinaryForm(coeffs=tuple(p + q for p, q in zip(a.coeffs, b.coeffs)))


def radius_power(k: int) -> BinaryForm:
    """The positive definite form (x^2 + y^2)^k."""
    result = BinaryForm(coeffs=(1,))
    for _ in range(k):
        result = form_mul(result, BinaryForm(coeffs=(1, 0, 1)))
    return result


def sylvester_resultant(f: BinaryForm, g: BinaryForm) -> int:
    """
    Resultant of two binary forms as the Sylvester determinant.

    Rows are deg g shifts of the coefficients of f followed by deg f shifts of
    the coefficients of g. The result vanishes exactly when f and g share a
    complex projective root.

    Args:
        f: First form, degree at least 1
        g: Second form, degree at least 1

    Returns:
        int: The resultant

    Raises:
        ZeroFormError: If either form is zero or constant
    """
    for form in (f, g):
        if form.is_zero:
            raise ZeroFormError("the resultant of the zero form is undefined")
        if form.degree < 1:
            raise ZeroFormError("resultants need forms of degree at least 1")
    m, n = f.degree, g.degree
    rows = [[0] * i + list(f.coeffs) + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + list(g.coeffs) + [0] * (m - 1 - i) for i in range(m)]
    return int(Matrix(rows).det(method="bareiss"))


def in_resultant_variety(system: PolySystem) -> bool:
    """
    Whether the forms of a system share a real projective root.

    Identically zero forms impose no condition; a system made only of zero
    forms lies in Sigma. The line x = 0 is tested on the y^d coefficients, the
    other lines through the gcd of the dehomogenized forms and a Sturm count of
    its real roots.

    Args:
        system: The system

    Returns:
        bool: True when the system lies in the real resultant variety
    """
    live = [form for form in system.forms if not form.is_zero]
    if not live:
        return True
    if all(form.coeffs[-1] == 0 for form in live):
        return True
    common = reduce(lambda a, b: a.gcd(b), (dehomogenize(form) for form in live))
    if common.degree() < 1:
        return False
    return sturm_root_count(common) > 0

