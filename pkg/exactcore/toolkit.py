"""
Gcd, squarefree decomposition, resultants and rational roots.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Any

from sympy import divisors, nextprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_ddf_zassenhaus,
    gf_from_int_poly,
    gf_irreducible_p,
    gf_monic,
    gf_sqf_p,
)

from config.console_logging import get_child_logger
from config.constants import EXACTCORE_SETTINGS_PATH
from config.settings import PackageSettings
from exactcore.fields import RATIONALS, Field, PrimeFieldCtx
from exactcore.polynomial import UniPoly, ZeroPolynomialError
from exactcore.rationals import rational_reconstruction

logger = get_child_logger(__file__)

DIVISOR_SEARCH_LIMIT = PackageSettings(EXACTCORE_SETTINGS_PATH).arithmetic.divisor_search_limit


def _strip(values: list[int]) -> list[int]:
    while values and values[-1] == 0:
        values.pop()
    return values


def _primitive(values: list[int]) -> list[int]:
    content = gcd(*values)
    if values[-1] < 0:
        content = -content
    return [value // content for value in values]


def _pseudo_remainder(dividend: list[int], divisor: list[int]) -> list[int]:
    remainder = list(dividend)
    lead = divisor[-1]
    size = len(divisor)
    while len(remainder) >= size:
        top = remainder[-1]
        shift = len(remainder) - size
        remainder = [lead * value for value in remainder]
        for index, value in enumerate(divisor):
            remainder[shift + index] -= top * value
        _strip(remainder)
    return remainder


def _integer_gcd(first: list[int], second: list[int]) -> list[int]:
    first, second = _primitive(first), _primitive(second)
    if len(first) < len(second):
        first, second = second, first
    while second:
        remainder = _pseudo_remainder(first, second)
        first, second = second, _primitive(remainder) if remainder else []
    return first


def poly_gcd(first: UniPoly, second: UniPoly) -> UniPoly:
    """
    Monic greatest common divisor.

    Rational inputs are handled on primitive integer models (primitive pseudo-remainder
    sequence); prime-field inputs use the Euclidean algorithm.

    Args:
        first (UniPoly): First polynomial
        second (UniPoly): Second polynomial

    Returns:
        UniPoly: Monic gcd, zero when both inputs are zero
    """
    if first.is_zero():
        return second.monic()
    if second.is_zero():
        return first.monic()
    if first.field is RATIONALS:
        _, first_integers = first.primitive_integer_model()
        _, second_integers = second.primitive_integer_model()
        return UniPoly(_integer_gcd(first_integers, second_integers), RATIONALS, first.var).monic()
    while not second.is_zero():
        first, second = second, first % second
    return first.monic()


def squarefree_decompose(polynomial: UniPoly) -> list[tuple[UniPoly, int]]:
    """
    Yun's squarefree decomposition.

    The product of factor**multiplicity equals polynomial / polynomial.leading.

    Args:
        polynomial (UniPoly): Nonzero polynomial over a field of characteristic 0 or p > degree

    Returns:
        list[tuple[UniPoly, int]]: Monic, pairwise coprime, squarefree factors sorted by
            multiplicity; constant factors are omitted
    """
    if polynomial.is_zero():
        raise ZeroPolynomialError("The zero polynomial has no squarefree decomposition")
    monic = polynomial.monic()
    if monic.degree == 0:
        return []
    derivative = monic.derivative()
    common = poly_gcd(monic, derivative)
    remaining = monic.exact_quotient(common)
    cofactor = derivative.exact_quotient(common) - remaining.derivative()
    factors = []
    multiplicity = 1
    while remaining.degree > 0:
        factor = poly_gcd(remaining, cofactor)
        remaining = remaining.exact_quotient(factor)
        cofactor = cofactor.exact_quotient(factor) - remaining.derivative()
        if factor.degree > 0:
            factors.append((factor, multiplicity))
        multiplicity += 1
    return factors


def squarefree_part(polynomial: UniPoly) -> UniPoly:
    """
    Product of the distinct monic irreducible factors.

    Args:
        polynomial (UniPoly): Nonzero polynomial

    Returns:
        UniPoly: Monic squarefree kernel
    """
    kernel = UniPoly.constant(1, polynomial.field, polynomial.var)
    for factor, _ in squarefree_decompose(polynomial):
        kernel = kernel * factor
    return kernel


def _determinant(matrix: list[list[Any]], field: Field) -> Any:
    rows = [list(row) for row in matrix]
    size = len(rows)
    result = field.one
    for column in range(size):
        pivot = next((row for row in range(column, size) if rows[row][column] != 0), None)
        if pivot is None:
            return field.zero
        if pivot != column:
            rows[column], rows[pivot] = rows[pivot], rows[column]
            result = -result
        pivot_value = rows[column][column]
        result = result * pivot_value
        for row in range(column + 1, size):
            factor = rows[row][column] / pivot_value
            if factor == 0:
                continue
            for index in range(column, size):
                rows[row][index] = rows[row][index] - factor * rows[column][index]
    return result


def sylvester_matrix(first: UniPoly, second: UniPoly) -> list[list[Any]]:
    """
    Sylvester matrix with the rows of first on top, coefficients in descending degree.

    Args:
        first (UniPoly): Polynomial of degree m
        second (UniPoly): Polynomial of degree n

    Returns:
        list[list[Any]]: (m + n) x (m + n) matrix
    """
    first_degree, second_degree = first.degree, second.degree
    size = first_degree + second_degree
    zero = first.field.zero
    rows = []
    for polynomial, copies in ((first, second_degree), (second, first_degree)):
        descending = list(reversed(polynomial.coefficients))
        for shift in range(copies):
            rows.append([zero] * shift + descending + [zero] * (size - shift - len(descending)))
    return rows


def resultant(first: UniPoly, second: UniPoly) -> Any:
    """
    Resultant as the Sylvester determinant; Res(t - 1, t - 2) = -1.

    Args:
        first (UniPoly): Nonzero polynomial
        second (UniPoly): Nonzero polynomial

    Returns:
        Any: Field element, zero iff the inputs share a root
    """
    if first.is_zero() or second.is_zero():
        raise ZeroPolynomialError("Resultant with the zero polynomial is undefined")
    if first.degree == 0 and second.degree == 0:
        return first.field.one
    return _determinant(sylvester_matrix(first, second), first.field)


def discriminant(polynomial: UniPoly) -> Any:
    """
    Discriminant (-1)^(n(n-1)/2) Res(f, f') / lc(f).

    Args:
        polynomial (UniPoly): Polynomial of degree at least 1

    Returns:
        Any: Field element
    """
    degree = polynomial.degree
    if degree < 1:
        raise ZeroPolynomialError("Discriminant needs a nonconstant polynomial")
    if degree == 1:
        return polynomial.field.one
    value = resultant(polynomial, polynomial.derivative()) / polynomial.leading
    return -value if (degree * (degree - 1) // 2) % 2 else value


def _integer_value(coefficients: list[int], numerator: int, denominator: int) -> int:
    # denominator^deg * f(numerator / denominator)
    degree = len(coefficients) - 1
    return sum(
        value * numerator**index * denominator ** (degree - index)
        for index, value in enumerate(coefficients)
    )


def _divisor_candidates(coefficients: list[int]) -> list[Fraction]:
    numerators = divisors(abs(coefficients[0]))
    denominators = divisors(abs(coefficients[-1]))
    return [
        Fraction(sign * numerator, denominator)
        for numerator in numerators
        for denominator in denominators
        if gcd(numerator, denominator) == 1
        for sign in (1, -1)
    ]


def _good_lifting_prime(coefficients: list[int]) -> int:
    prime = 2
    while True:
        prime = nextprime(prime)
        if coefficients[-1] % prime == 0:
            continue
        reduced = gf_from_int_poly(coefficients[::-1], prime)
        if gf_sqf_p(gf_monic(reduced, prime, ZZ)[1], prime, ZZ):
            return prime


def _lifted_candidates(coefficients: list[int]) -> list[Fraction]:
    prime = _good_lifting_prime(coefficients)
    bound = abs(coefficients[0])
    denominator_bound = abs(coefficients[-1])
    target = 2 * bound * denominator_bound + 1
    derivative = [index * value for index, value in enumerate(coefficients)][1:]
    logger.debug(f"Lifting rational root candidates from p = {prime}")
    candidates = []
    for residue in range(prime):
        if _integer_value(coefficients, residue, 1) % prime:
            continue
        modulus = prime
        while modulus < target:
            modulus *= modulus
            slope = _integer_value(derivative, residue, 1)
            residue = (
                residue - _integer_value(coefficients, residue, 1) * pow(slope, -1, modulus)
            ) % modulus
        candidate = rational_reconstruction(residue, modulus, bound, denominator_bound)
        if candidate is not None:
            candidates.append(candidate)
    return candidates


def _simple_rational_roots(factor: UniPoly) -> list[Fraction]:
    _, coefficients = factor.primitive_integer_model()
    roots = []
    if coefficients[0] == 0:
        roots.append(Fraction(0))
        coefficients = coefficients[1:]
    if len(coefficients) == 1:
        return roots
    if abs(coefficients[0]) * abs(coefficients[-1]) <= DIVISOR_SEARCH_LIMIT:
        candidates = _divisor_candidates(coefficients)
    else:
        candidates = _lifted_candidates(coefficients)
    for candidate in candidates:
        if candidate not in roots and _integer_value(
            coefficients, candidate.numerator, candidate.denominator
        ) == 0:
            roots.append(candidate)
    return roots


def rational_roots(polynomial: UniPoly) -> list[Fraction]:
    """
    All rational roots, repeated by multiplicity, in ascending order.

    Args:
        polynomial (UniPoly): Nonzero rational polynomial

    Returns:
        list[Fraction]: Roots
    """
    if polynomial.is_zero():
        raise ZeroPolynomialError("The zero polynomial has every rational root")
    roots = []
    for factor, multiplicity in squarefree_decompose(polynomial):
        for root in _simple_rational_roots(factor):
            roots.extend([root] * multiplicity)
    return sorted(roots)


def integer_reduction(polynomial: UniPoly, prime: int) -> list[int] | None:
    """
    Reduce a rational polynomial modulo p, high degree first, for the galoistools routines.

    Args:
        polynomial (UniPoly): Rational polynomial
        prime (int): Prime

    Returns:
        list[int] | None: Monic reduction, or None when p divides a denominator or the
            leading coefficient
    """
    ctx = PrimeFieldCtx(prime)
    if any(value.denominator % prime == 0 for value in polynomial.coefficients):
        return None
    if polynomial.leading.numerator % prime == 0:
        return None
    reduced = [ctx.residue(value) for value in reversed(polynomial.coefficients)]
    return gf_monic(reduced, prime, ZZ)[1]


def is_irreducible_mod_p(polynomial: UniPoly, prime: int) -> bool:
    """
    Irreducibility of the reduction modulo p (degree preserved).

    Args:
        polynomial (UniPoly): Rational polynomial
        prime (int): Prime

    Returns:
        bool: False also when the reduction is undefined or drops degree
    """
    reduced = integer_reduction(polynomial, prime)
    if reduced is None:
        return False
    return bool(gf_irreducible_p(reduced, prime, ZZ))


def degree_pattern_mod_p(polynomial: UniPoly, prime: int) -> tuple[int, ...] | None:
    """
    Degrees of the irreducible factors modulo p.

    Args:
        polynomial (UniPoly): Rational polynomial
        prime (int): Prime

    Returns:
        tuple[int, ...] | None: Sorted degrees, None when the reduction is undefined or
            not squarefree
    """
    reduced = integer_reduction(polynomial, prime)
    if reduced is None or not gf_sqf_p(reduced, prime, ZZ):
        return None
    pattern: list[int] = []
    for factor, degree in gf_ddf_zassenhaus(reduced, prime, ZZ):
        pattern.extend([degree] * ((len(factor) - 1) // degree))
    return tuple(sorted(pattern))
