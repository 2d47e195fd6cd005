"""
Naive point counting over F_p and F_{p^2} and Frobenius characteristic polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass

from config.console_logging import get_child_logger
from config.constants import GENUS2_SETTINGS_PATH
from config.settings import PackageSettings
from exactcore.fields import Fp2Element, PrimeFieldCtx
from exactcore.polynomial import UniPoly
from genus2.curve import Genus2Curve, reduction_obstruction

logger = get_child_logger(__file__)

MAX_FIELD_SIZE = PackageSettings(GENUS2_SETTINGS_PATH).counting.max_field_size


class BadReductionError(Exception):
    """
    Raised when a curve is counted modulo a prime of bad reduction.
    """


class UnsupportedPrimeError(Exception):
    """
    Raised for characteristic 2 or for fields beyond the enumeration cap.
    """


class CountingConsistencyError(Exception):
    """
    Raised when point counts do not fit the shape of a Weil polynomial.
    """


@dataclass(frozen=True)
class WeilPolynomial:
    """
    x^4 - a1*x^3 + a2*x^2 - p*a1*x + p^2.
    """

    p: int
    a1: int
    a2: int

    @property
    def polynomial(self) -> UniPoly:
        """
        Property for the quartic itself.

        Returns:
            UniPoly: Monic quartic in x
        """
        return UniPoly([self.p**2, -self.p * self.a1, self.a2, -self.a1, 1], var="x")

    def satisfies_reciprocity(self) -> bool:
        """
        Check x^4 * P(p/x) = p^2 * P(x).

        Returns:
            bool: True for a Weil-shaped quartic
        """
        coefficients = self.polynomial.coefficients
        return all(
            coefficients[4 - index] * self.p ** (4 - index) == self.p**2 * coefficients[index]
            for index in range(5)
        )

    def to_strings(self) -> dict[str, object]:
        """
        Serialize for reports.

        Returns:
            dict[str, object]: prime, a1, a2 and the expanded quartic
        """
        return {"p": self.p, "a1": self.a1, "a2": self.a2, "polynomial": str(self.polynomial)}


def _validate_prime(curve: Genus2Curve, ctx: PrimeFieldCtx, extension_degree: int) -> None:
    if ctx.p == 2:
        raise UnsupportedPrimeError("Point counting in characteristic 2 is not supported")
    if extension_degree not in (1, 2):
        raise UnsupportedPrimeError(f"Extension degree {extension_degree} is not 1 or 2")
    if ctx.p**extension_degree > MAX_FIELD_SIZE:
        raise UnsupportedPrimeError(
            f"F_{ctx.p}^{extension_degree} exceeds the enumeration cap {MAX_FIELD_SIZE}"
        )
    obstruction = reduction_obstruction(curve, ctx.p)
    if obstruction is not None:
        raise BadReductionError(f"Bad reduction at {ctx.p}: {obstruction}")


def _count_prime_field(residues: list[int], ctx: PrimeFieldCtx) -> int:
    prime = ctx.p
    total = 0
    for point in range(prime):
        value = 0
        for coefficient in reversed(residues):
            value = (value * point + coefficient) % prime
        total += 1 + ctx.legendre(value)
    return total


def _count_extension_field(residues: list[int], ctx: PrimeFieldCtx) -> int:
    total = 0
    for point in ctx.extension_elements():
        value = Fp2Element(0, 0, ctx)
        for coefficient in reversed(residues):
            value = value * point + coefficient
        total += 1 + value.quadratic_character()
    return total


def count_points(curve: Genus2Curve, ctx: PrimeFieldCtx, extension_degree: int = 1) -> int:
    """
    Number of points on the smooth projective model over F_p or F_{p^2}.

    Args:
        curve (Genus2Curve): Curve with good reduction at p
        ctx (PrimeFieldCtx): Prime field, its non-residue defines F_{p^2}
        extension_degree (int): 1 or 2

    Returns:
        int: Affine points plus points at infinity
    """
    _validate_prime(curve, ctx, extension_degree)
    residues = [ctx.residue(value) for value in curve.f.coefficients]
    if extension_degree == 1:
        affine = _count_prime_field(residues, ctx)
        at_infinity = 1 if curve.degree == 5 else 1 + ctx.legendre(residues[6])
    else:
        affine = _count_extension_field(residues, ctx)
        at_infinity = 1 if curve.degree == 5 else 2
    return affine + at_infinity


def frobenius_charpoly(curve: Genus2Curve, prime: int) -> WeilPolynomial:
    """
    Characteristic polynomial of Frobenius from the counts over F_p and F_{p^2}.

    Args:
        curve (Genus2Curve): Curve with good reduction at p
        prime (int): Odd prime

    Returns:
        WeilPolynomial: Frobenius charpoly of the Jacobian
    """
    ctx = PrimeFieldCtx(prime)
    first_count = count_points(curve, ctx, 1)
    second_count = count_points(curve, ctx, 2)
    a1 = prime + 1 - first_count
    power_sum = prime**2 + 1 - second_count
    if (a1**2 - power_sum) % 2:
        raise CountingConsistencyError(
            f"Counts N1 = {first_count}, N2 = {second_count} at {prime} give a non-integral a2"
        )
    weil = WeilPolynomial(prime, a1, (a1**2 - power_sum) // 2)
    logger.info(f"Frobenius at {prime}: N1 = {first_count}, N2 = {second_count}, {weil.polynomial}")
    return weil
