"""
Helpers for exact rational numbers.
"""

from fractions import Fraction
from math import prod

from sympy import factorint, integer_nthroot


class MalformedRationalError(Exception):
    """
    Raised when a string is not a rational literal.
    """


def parse_rational(literal: str) -> Fraction:
    """
    Parse a "p/q" literal, q may be omitted.

    Args:
        literal (str): Rational literal

    Returns:
        Fraction: Parsed value
    """
    text = literal.strip()
    if not text or any(symbol in text for symbol in ".eE_"):
        raise MalformedRationalError(f"Not a rational literal: {literal!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as error:
        raise MalformedRationalError(f"Not a rational literal: {literal!r}") from error


def format_rational(value: Fraction | int) -> str:
    """
    Serialize a rational as "p/q", omitting q when it equals 1.

    Args:
        value (Fraction | int): Value to format

    Returns:
        str: Literal
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def squarefree_kernel(value: Fraction | int) -> int:
    """
    Signed squarefree integer d with value = d * r^2 for a rational r.

    Args:
        value (Fraction | int): Nonzero rational

    Returns:
        int: Squarefree kernel, 0 for 0
    """
    value = Fraction(value)
    if value == 0:
        return 0
    factors = factorint(abs(value.numerator * value.denominator))
    kernel = prod(prime for prime, exponent in factors.items() if exponent % 2)
    return kernel if value > 0 else -kernel


def rational_root(value: Fraction | int, degree: int) -> Fraction | None:
    """
    Exact rational n-th root.

    Args:
        value (Fraction | int): Radicand
        degree (int): Root degree, positive

    Returns:
        Fraction | None: A real rational root, or None if none exists
    """
    value = Fraction(value)
    if value < 0:
        if degree % 2 == 0:
            return None
        root = rational_root(-value, degree)
        return None if root is None else -root
    numerator, exact_numerator = integer_nthroot(value.numerator, degree)
    denominator, exact_denominator = integer_nthroot(value.denominator, degree)
    if not (exact_numerator and exact_denominator):
        return None
    return Fraction(int(numerator), int(denominator))


def is_rational_square(value: Fraction | int) -> bool:
    """
    Check whether a rational is a square of a rational.

    Args:
        value (Fraction | int): Value to test

    Returns:
        bool: True for squares, including 0
    """
    return rational_root(value, 2) is not None


def rational_reconstruction(
    residue: int, modulus: int, bound: int, denominator_bound: int
) -> Fraction | None:
    """
    Find a/b with |a| <= bound, 0 < b <= denominator_bound and a = residue * b modulo modulus.

    Args:
        residue (int): Residue modulo modulus
        modulus (int): Modulus, greater than 2 * bound * denominator_bound
        bound (int): Numerator bound
        denominator_bound (int): Denominator bound

    Returns:
        Fraction | None: The unique candidate, or None
    """
    r_prev, r_curr = modulus, residue % modulus
    s_prev, s_curr = 0, 1
    while r_curr > bound:
        quotient = r_prev // r_curr
        r_prev, r_curr = r_curr, r_prev - quotient * r_curr
        s_prev, s_curr = s_curr, s_prev - quotient * s_curr
    if s_curr == 0 or abs(s_curr) > denominator_bound:
        return None
    return Fraction(r_curr, s_curr)
