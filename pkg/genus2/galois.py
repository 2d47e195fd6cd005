"""
Galois groups of quartics and real quadratic subfields of Weil fields.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

from sympy import divisors

from exactcore.polynomial import UniPoly
from exactcore.rationals import is_rational_square, squarefree_kernel
from exactcore.toolkit import discriminant, rational_roots
from genus2.counting import WeilPolynomial


class NotAQuarticError(Exception):
    """
    Raised when a Galois class is requested for a polynomial of degree other than 4.
    """


class GaloisClass(enum.Enum):
    """
    Galois group of the splitting field of a quartic.
    """

    REDUCIBLE = "reducible"
    S4 = "S4"
    A4 = "A4"
    D4 = "D4"
    C4 = "C4"
    V4 = "V4"

    def __str__(self) -> str:
        """
        String representation of a class.

        Returns:
             str: Name of the group
        """
        return self.value


@dataclass(frozen=True)
class RealWeilQuadratic:
    """
    Minimal polynomial of pi + p/pi and the kernel of its discriminant.
    """

    polynomial: UniPoly
    discriminant: int
    kernel: int

    @property
    def degenerate(self) -> bool:
        """
        Property for a vanishing discriminant.

        Returns:
            bool: True when the kernel is 0
        """
        return self.kernel == 0


def _integral_quartic(quartic: UniPoly) -> list[int]:
    # x -> x/k turns the monic quartic into a monic integral one
    monic = quartic.monic()
    scale = lcm(*(value.denominator for value in monic.coefficients))
    return [int(monic.coefficient(index) * scale ** (4 - index)) for index in range(5)]


def _has_quadratic_factor(coefficients: list[int]) -> bool:
    # (x^2 + u x + v)(x^2 + (b - u) x + e/v) with integers u, v
    e, d, c, b = coefficients[0], coefficients[1], coefficients[2], coefficients[3]
    for magnitude in divisors(abs(e)):
        for v in (magnitude, -magnitude):
            companion = e // v
            square = b * b - 4 * (c - v - companion)
            if square < 0 or isqrt(square) ** 2 != square:
                continue
            for root in {isqrt(square), -isqrt(square)}:
                if (b + root) % 2:
                    continue
                u = (b + root) // 2
                if u * companion + (b - u) * v == d:
                    return True
    return False


def resolvent_cubic(quartic: UniPoly) -> UniPoly:
    """
    Resolvent cubic y^3 - c*y^2 + (b*d - 4e)*y - (b^2*e - 4c*e + d^2).

    The quartic is x^4 + b*x^3 + c*x^2 + d*x + e.

    Args:
        quartic (UniPoly): Quartic, made monic first

    Returns:
        UniPoly: Monic cubic in y
    """
    monic = quartic.monic()
    e, d, c, b = (monic.coefficient(index) for index in range(4))
    return UniPoly([-(b * b * e - 4 * c * e + d * d), b * d - 4 * e, -c, 1], var="y")


def _splits_over(beta: Fraction, gamma: Fraction, field_discriminant: Fraction) -> bool:
    delta = beta * beta - 4 * gamma
    return (
        delta == 0
        or is_rational_square(delta)
        or is_rational_square(delta * field_discriminant)
    )


def quartic_galois_class(quartic: UniPoly) -> GaloisClass:
    """
    Galois group of a rational quartic.

    Args:
        quartic (UniPoly): Polynomial of degree 4

    Returns:
        GaloisClass: REDUCIBLE or one of S4, A4, D4, C4, V4
    """
    if quartic.degree != 4:
        raise NotAQuarticError(f"{quartic} has degree {quartic.degree}, expected 4")
    coefficients = _integral_quartic(quartic)
    integral = UniPoly(coefficients, var=quartic.var)
    if rational_roots(integral) or _has_quadratic_factor(coefficients):
        return GaloisClass.REDUCIBLE
    cubic_roots = sorted(set(rational_roots(resolvent_cubic(integral))))
    quartic_discriminant = discriminant(integral)
    if not cubic_roots:
        return GaloisClass.A4 if is_rational_square(quartic_discriminant) else GaloisClass.S4
    if len(cubic_roots) == 3:
        return GaloisClass.V4
    root = cubic_roots[0]
    e, _, c, b = (Fraction(value) for value in coefficients[:4])
    if _splits_over(-root, e, quartic_discriminant) and _splits_over(
        b, c - root, quartic_discriminant
    ):
        return GaloisClass.C4
    return GaloisClass.D4


def real_weil_quadratic(weil: WeilPolynomial) -> RealWeilQuadratic:
    """
    Quadratic x^2 - a1*x + (a2 - 2p) satisfied by pi + p/pi.

    Args:
        weil (WeilPolynomial): Frobenius charpoly

    Returns:
        RealWeilQuadratic: The quadratic with discriminant a1^2 - 4a2 + 8p and its kernel
    """
    value = weil.a1**2 - 4 * weil.a2 + 8 * weil.p
    return RealWeilQuadratic(
        polynomial=UniPoly([weil.a2 - 2 * weil.p, -weil.a1, 1], var="x"),
        discriminant=value,
        kernel=squarefree_kernel(value),
    )
