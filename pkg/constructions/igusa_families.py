"""
Elliptic fibrations on Kummer surfaces built from Igusa-Clebsch invariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any

from config.console_logging import get_child_logger
from config.constants import CONSTRUCTIONS_SETTINGS_PATH
from config.settings import PackageSettings
from ellsurf.weierstrass import WeierstrassSurface
from exactcore.rational_function import RationalFunction
from genus2.curve import IgusaClebsch

logger = get_child_logger(__file__)

Monomial = tuple[int, int, int, int]

G_DEGREES = range(1, 5)


class NonK3BaseChangeError(Exception):
    """
    Raised when a base change degree outside the K3 range is requested.
    """


def _constant_terms(ic: IgusaClebsch) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """
    Coefficients shared by every family: I4/12, I10/4, (I2*I4 - 3*I6)/108 and I2/24.

    Args:
        ic (IgusaClebsch): Invariants of the curve

    Returns:
        tuple[Fraction, Fraction, Fraction, Fraction]: The four constants
    """
    return (
        ic.i4 / 12,
        ic.i10 / 4,
        (ic.i2 * ic.i4 - 3 * ic.i6) / 108,
        ic.i2 / 24,
    )


def shioda_inose_surface(ic: IgusaClebsch) -> WeierstrassSurface:
    """
    Fibration with II* at infinity and III* at 0 whose Shioda-Inose quotient is Km(J(C)).

    y^2 = x^3 - t^3*(I4/12*t + 1)*x + t^5*(I10/4*t^2 + (I2*I4 - 3*I6)/108*t + I2/24)

    Args:
        ic (IgusaClebsch): Invariants of the curve

    Returns:
        WeierstrassSurface: The surface over Q(t)
    """
    quarter_i4, quarter_i10, middle, i2_term = _constant_terms(ic)
    a4 = RationalFunction.laurent({3: -1, 4: -quarter_i4})
    a6 = RationalFunction.laurent({5: i2_term, 6: middle, 7: quarter_i10})
    return WeierstrassSurface.short(a4, a6)


def g_surface(ic: IgusaClebsch, n: int) -> WeierstrassSurface:
    """
    Base change of degree n of the Kummer fibration.

    y^2 = x^3 - (I4/12 + 1/t^n)*x + (I10/4*t^n + (I2*I4 - 3*I6)/108 + I2/(24*t^n))

    Args:
        ic (IgusaClebsch): Invariants of the curve
        n (int): Degree in 1..4

    Returns:
        WeierstrassSurface: The K3 surface G^(n)
    """
    if n not in G_DEGREES:
        raise NonK3BaseChangeError(f"G^(n) is a K3 surface only for n <= 4, got n = {n}")
    quarter_i4, quarter_i10, middle, i2_term = _constant_terms(ic)
    a4 = RationalFunction.laurent({0: -quarter_i4, -n: -1})
    a6 = RationalFunction.laurent({n: quarter_i10, 0: middle, -n: i2_term})
    surface = WeierstrassSurface.short(a4, a6)
    logger.info(f"Built G^({n}): {surface}")
    return surface


def kummer_fibration13(ic: IgusaClebsch) -> WeierstrassSurface:
    """
    Fibration with IV* and I0* fibers on the Kummer surface.

    y^2 = x^3 - 108*t^4*(48*t^2 + I4)*x + 108*t^4*(72*I2*t^4 + (4*I2*I4 - 12*I6)*t^2 + 27*I10)

    Args:
        ic (IgusaClebsch): Invariants of the curve

    Returns:
        WeierstrassSurface: The surface over Q(t)
    """
    a4 = RationalFunction.laurent({4: -108 * ic.i4, 6: -108 * 48})
    a6 = RationalFunction.laurent(
        {
            4: 108 * 27 * ic.i10,
            6: 108 * (4 * ic.i2 * ic.i4 - 12 * ic.i6),
            8: 108 * 72 * ic.i2,
        }
    )
    return WeierstrassSurface.short(a4, a6)


@dataclass(frozen=True)
class HomogeneousQuartic:
    """
    Quartic form in (x, y, z, w) stored as exponent tuples mapped to coefficients.
    """

    terms: dict[Monomial, Fraction]

    def is_homogeneous(self) -> bool:
        """
        Check that every monomial has total degree 4.

        Returns:
            bool: True for a quartic form
        """
        return all(sum(monomial) == 4 for monomial in self.terms)

    def evaluate(self, x: Any, y: Any, z: Any, w: Any) -> Any:
        """
        Value of the form at a point.

        Args:
            x (Any): x coordinate
            y (Any): y coordinate
            z (Any): z coordinate
            w (Any): w coordinate

        Returns:
            Any: Sum of the terms
        """
        total: Any = 0
        for (ex, ey, ez, ew), coefficient in self.terms.items():
            total += coefficient * x**ex * y**ey * z**ez * w**ew
        return total

    def to_dict(self) -> dict[str, str]:
        """
        Serialize as "x^a y^b z^c w^d" keys.

        Returns:
            dict[str, str]: Monomials mapped to rational strings
        """
        return {
            f"x^{ex} y^{ey} z^{ez} w^{ew}": str(coefficient)
            for (ex, ey, ez, ew), coefficient in sorted(self.terms.items(), reverse=True)
        }


def inose_quartic(ic: IgusaClebsch) -> HomogeneousQuartic:
    """
    Quartic surface model of the Shioda-Inose surface.

    y^2*z*w - x^3*z + (I4/12*w + z)*x*z*w - (I10/4*w^2 + I2/24*z^2)*w^2
        - (I2*I4 - 3*I6)/108*z*w^3

    Args:
        ic (IgusaClebsch): Invariants of the curve

    Returns:
        HomogeneousQuartic: The form
    """
    quarter_i4, quarter_i10, middle, i2_term = _constant_terms(ic)
    terms = {
        (0, 2, 1, 1): Fraction(1),
        (3, 0, 1, 0): Fraction(-1),
        (1, 0, 1, 2): quarter_i4,
        (1, 0, 2, 1): Fraction(1),
        (0, 0, 0, 4): -quarter_i10,
        (0, 0, 2, 2): -i2_term,
        (0, 0, 1, 3): -middle,
    }
    return HomogeneousQuartic({monomial: value for monomial, value in terms.items() if value})


@dataclass(frozen=True)
class QuarticIdentification:
    """
    Substitution x -> alpha*x*t^x_exponent, y -> beta*y*t^y_exponent, (z, w) -> (1, t).
    """

    alpha: int
    beta: int
    x_exponent: int
    y_exponent: int

    def describe(self) -> str:
        """
        Human readable map.

        Returns:
            str: The substitution
        """
        return (
            f"x -> {self.alpha}*x*t^{self.x_exponent}, "
            f"y -> {self.beta}*y*t^{self.y_exponent}, (z, w) -> (1, t)"
        )

    def to_dict(self) -> dict[str, int]:
        """
        Serialize for reports.

        Returns:
            dict[str, int]: Signs and exponents
        """
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "x_exponent": self.x_exponent,
            "y_exponent": self.y_exponent,
        }


def _affine_equation(
    quartic: HomogeneousQuartic, candidate: QuarticIdentification
) -> WeierstrassSurface | None:
    collected: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (ex, ey, _, ew), coefficient in quartic.terms.items():
        sign = candidate.alpha**ex * candidate.beta**ey
        power = candidate.x_exponent * ex + candidate.y_exponent * ey + ew
        laurent = collected.setdefault((ex, ey), {})
        laurent[power] = laurent.get(power, Fraction(0)) + sign * coefficient
    functions = {
        key: RationalFunction.laurent(laurent)
        for key, laurent in collected.items()
        if any(laurent.values())
    }
    if set(functions) - {(0, 2), (3, 0), (1, 0), (0, 0)}:
        return None
    leading = functions.get((0, 2))
    if leading is None or functions.get((3, 0)) != -leading:
        return None
    zero = RationalFunction(0)
    a4 = -functions.get((1, 0), zero) / leading
    a6 = -functions.get((0, 0), zero) / leading
    if (4 * a4**3 + 27 * a6**2).is_zero():
        return None
    return WeierstrassSurface.short(a4, a6)


def find_quartic_identification(ic: IgusaClebsch) -> QuarticIdentification | None:
    """
    Bounded search for a monomial map turning the quartic into the G^(1) equation.

    Args:
        ic (IgusaClebsch): Invariants of the curve

    Returns:
        QuarticIdentification | None: First map found, None when the search is exhausted
    """
    bound = PackageSettings(CONSTRUCTIONS_SETTINGS_PATH).constructions.quartic_search_exponent_bound
    quartic = inose_quartic(ic)
    target = g_surface(ic, 1)
    exponents = range(-bound, bound + 1)
    for alpha, beta, x_exponent, y_exponent in product((1, -1), (1, -1), exponents, exponents):
        candidate = QuarticIdentification(alpha, beta, x_exponent, y_exponent)
        if _affine_equation(quartic, candidate) == target:
            logger.info(f"Quartic identified with G^(1): {candidate.describe()}")
            return candidate
    logger.info(f"No monomial map with exponents up to {bound} identifies the quartic")
    return None
