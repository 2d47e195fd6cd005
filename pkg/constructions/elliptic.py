"""
Elliptic curves over Q: invariants, twists, torsion and degree-3 covers by genus-2 curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from config.console_logging import get_child_logger
from core_utils.io import CoverRecord, EllipticCurveRecord, parse_rationals
from ellsurf.weierstrass import SingularEquationError, WeierstrassSurface
from exactcore.polynomial import UniPoly
from exactcore.rational_function import RationalFunction
from exactcore.rationals import format_rational, is_rational_square, rational_root
from exactcore.toolkit import rational_roots
from genus2.curve import Genus2Curve

logger = get_child_logger(__file__)

Point = Optional[tuple[Fraction, Fraction]]

TORSION_ORDERS = range(2, 7)


class SingularCurveError(Exception):
    """
    Raised when a Weierstrass equation over Q has zero discriminant.
    """


class UnsupportedTorsionOrderError(Exception):
    """
    Raised when torsion of order outside 2..6 is requested.
    """


class EllipticCurveQ:
    """
    y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6 with rational coefficients.
    """

    __slots__ = ("_model",)

    def __init__(self, a1: Any = 0, a2: Any = 0, a3: Any = 0, a4: Any = 0, a6: Any = 0) -> None:
        """
        Initialize EllipticCurveQ.

        Args:
            a1 (Any): Coefficient a1
            a2 (Any): Coefficient a2
            a3 (Any): Coefficient a3
            a4 (Any): Coefficient a4
            a6 (Any): Coefficient a6
        """
        try:
            self._model = WeierstrassSurface(
                *(Fraction(value) for value in (a1, a2, a3, a4, a6))
            )
        except SingularEquationError as error:
            raise SingularCurveError(f"Singular curve {[a1, a2, a3, a4, a6]}") from error

    @classmethod
    def from_record(cls, record: EllipticCurveRecord) -> EllipticCurveQ:
        """
        Build from a data file record.

        Args:
            record (EllipticCurveRecord): Five coefficients a1, a2, a3, a4, a6

        Returns:
            EllipticCurveQ: The curve
        """
        return cls(*parse_rationals(record.coefficients, record.label or "elliptic curve"))

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """
        Property for a1, a2, a3, a4, a6.

        Returns:
            tuple[Fraction, ...]: Five rationals
        """
        return tuple(value.constant_value() for value in self._model.coefficients)

    def invariants(self) -> tuple[Fraction, Fraction, Fraction]:
        """
        c4, c6 and the discriminant.

        Returns:
            tuple[Fraction, Fraction, Fraction]: (c4, c6, Delta)
        """
        c4, c6, delta = self._model.c4_c6_disc()
        return c4.constant_value(), c6.constant_value(), delta.constant_value()

    def to_strings(self) -> list[str]:
        """
        Serialize the coefficients.

        Returns:
            list[str]: Rational strings
        """
        return [format_rational(value) for value in self.coefficients]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EllipticCurveQ):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"EllipticCurveQ({self.to_strings()})"


def ec_j_invariant(e: EllipticCurveQ) -> Fraction:
    """
    j = c4^3 / Delta.

    Args:
        e (EllipticCurveQ): Curve

    Returns:
        Fraction: j-invariant
    """
    c4, _, delta = e.invariants()
    return c4**3 / delta


def short_model(e: EllipticCurveQ) -> EllipticCurveQ:
    """
    The isomorphic model y^2 = x^3 - 27*c4*x - 54*c6.

    Args:
        e (EllipticCurveQ): Curve

    Returns:
        EllipticCurveQ: Short model
    """
    c4, c6, _ = e.invariants()
    return EllipticCurveQ(0, 0, 0, -27 * c4, -54 * c6)


def _as_short(e: EllipticCurveQ) -> EllipticCurveQ:
    a1, a2, a3, _, _ = e.coefficients
    if a1 == 0 and a2 == 0 and a3 == 0:
        return e
    return short_model(e)


def _short_coefficients(e: EllipticCurveQ) -> tuple[Fraction, Fraction]:
    _, _, _, a4, a6 = _as_short(e).coefficients
    return a4, a6


def ec_quadratic_twist(e: EllipticCurveQ, d: Fraction | int) -> EllipticCurveQ:
    """
    Twist by d on the short model: (A, B) -> (d^2*A, d^3*B).

    Args:
        e (EllipticCurveQ): Curve
        d (Fraction | int): Nonzero rational

    Returns:
        EllipticCurveQ: Twisted short model
    """
    d = Fraction(d)
    if d == 0:
        raise SingularCurveError("The twist by 0 is singular")
    a4, a6 = _short_coefficients(e)
    return EllipticCurveQ(0, 0, 0, a4 * d**2, a6 * d**3)


def ec_is_isomorphic(first: EllipticCurveQ, second: EllipticCurveQ) -> bool:
    """
    Isomorphism over Q: (c4', c6') = (c4 / u^4, c6 / u^6) for a rational u.

    Args:
        first (EllipticCurveQ): Curve
        second (EllipticCurveQ): Curve

    Returns:
        bool: True for isomorphic curves
    """
    if ec_j_invariant(first) != ec_j_invariant(second):
        return False
    c4, c6, _ = first.invariants()
    c4_other, c6_other, _ = second.invariants()
    if c4 == 0:
        return rational_root(c6_other / c6, 6) is not None
    if c6 == 0:
        return rational_root(c4_other / c4, 4) is not None
    return is_rational_square((c6_other / c6) / (c4_other / c4))


def division_polynomial(e: EllipticCurveQ, n: int) -> UniPoly:
    """
    Polynomial f_n in x with psi_n = f_n for odd n and psi_n = 2y*f_n for even n.

    Args:
        e (EllipticCurveQ): Curve, used through its short model
        n (int): Index n >= 1

    Returns:
        UniPoly: f_n(x)
    """
    a, b = _short_coefficients(e)
    x = UniPoly([0, 1], var="x")
    cubic = 4 * (x**3 + a * x + b)
    values = {
        0: UniPoly([], var="x"),
        1: UniPoly([1], var="x"),
        2: UniPoly([1], var="x"),
        3: 3 * x**4 + 6 * a * x**2 + 12 * b * x - a**2,
        4: 2
        * (
            x**6 + 5 * a * x**4 + 20 * b * x**3 - 5 * a**2 * x**2 - 4 * a * b * x - 8 * b**2
            - a**3
        ),
    }
    for index in range(5, n + 1):
        m = index // 2
        if index % 2:
            first = values[m + 2] * values[m] ** 3
            second = values[m - 1] * values[m + 1] ** 3
            if m % 2:
                second = second * cubic**2
            else:
                first = first * cubic**2
            values[index] = first - second
        else:
            values[index] = values[m] * (
                values[m + 2] * values[m - 1] ** 2 - values[m - 2] * values[m + 1] ** 2
            )
    return values[n]


def add_points(e: EllipticCurveQ, first: Point, second: Point) -> Point:
    """
    Chord and tangent addition on the short model, None is the point at infinity.

    Args:
        e (EllipticCurveQ): Curve in short form
        first (Point): Point
        second (Point): Point

    Returns:
        Point: Sum
    """
    if first is None:
        return second
    if second is None:
        return first
    a, _ = _short_coefficients(e)
    (x1, y1), (x2, y2) = first, second
    if x1 == x2 and (y1 != y2 or y1 == 0):
        return None
    if x1 == x2:
        slope = (3 * x1**2 + a) / (2 * y1)
    else:
        slope = (y2 - y1) / (x2 - x1)
    x3 = slope**2 - x1 - x2
    return x3, slope * (x1 - x3) - y1


def multiply_point(e: EllipticCurveQ, point: Point, k: int) -> Point:
    """
    Double and add.

    Args:
        e (EllipticCurveQ): Curve in short form
        point (Point): Point
        k (int): Non-negative multiplier

    Returns:
        Point: k * point
    """
    result: Point = None
    addend = point
    while k:
        if k & 1:
            result = add_points(e, result, addend)
        addend = add_points(e, addend, addend)
        k >>= 1
    return result


def _has_exact_order(e: EllipticCurveQ, point: Point, n: int) -> bool:
    if multiply_point(e, point, n) is not None:
        return False
    return all(multiply_point(e, point, d) is not None for d in range(1, n) if n % d == 0)


def rational_torsion_points(e: EllipticCurveQ, n: int) -> list[tuple[Fraction, Fraction]]:
    """
    Rational points of exact order n on the short model.

    Args:
        e (EllipticCurveQ): Curve
        n (int): Order in 2..6

    Returns:
        list[tuple[Fraction, Fraction]]: Points with both signs of y
    """
    if n not in TORSION_ORDERS:
        raise UnsupportedTorsionOrderError(f"Torsion order must be in 2..6, got {n}")
    model = _as_short(e)
    a, b = _short_coefficients(model)
    x = UniPoly([0, 1], var="x")
    cubic = x**3 + a * x + b
    if n == 2:
        return [(root, Fraction(0)) for root in sorted(set(rational_roots(cubic)))]
    points = []
    for root in sorted(set(rational_roots(division_polynomial(model, n)))):
        y = rational_root(cubic(root), 2)
        if y is None or y == 0:
            continue
        for candidate in ((root, y), (root, -y)):
            if _has_exact_order(model, candidate, n):
                points.append(candidate)
    return points


def has_rational_n_torsion(e: EllipticCurveQ, n: int) -> bool:
    """
    Existence of a rational point of exact order n.

    Args:
        e (EllipticCurveQ): Curve
        n (int): Order in 2..6

    Returns:
        bool: True when such a point exists
    """
    points = rational_torsion_points(e, n)
    logger.info(f"{len(points)} rational points of order {n} on {e}")
    return bool(points)


@dataclass(frozen=True)
class CoverMap:
    """
    (x, y) -> (x_numerator/x_denominator, y * y_numerator/y_denominator).
    """

    name: str
    x_numerator: UniPoly
    x_denominator: UniPoly
    y_numerator: UniPoly
    y_denominator: UniPoly

    @classmethod
    def from_record(cls, record: CoverRecord) -> CoverMap:
        """
        Build from a data file record.

        Args:
            record (CoverRecord): Coefficient lists in ascending degree

        Returns:
            CoverMap: The map
        """

        def polynomial(literals: list[str], part: str) -> UniPoly:
            return UniPoly(parse_rationals(literals, f"{record.name}.{part}"), var="x")

        return cls(
            name=record.name,
            x_numerator=polynomial(record.x_numerator, "x_numerator"),
            x_denominator=polynomial(record.x_denominator, "x_denominator"),
            y_numerator=polynomial(record.y_numerator, "y_numerator"),
            y_denominator=polynomial(record.y_denominator, "y_denominator"),
        )

    @property
    def x_component(self) -> RationalFunction:
        """
        Property for the image of x.

        Returns:
            RationalFunction: X(x)
        """
        return RationalFunction(self.x_numerator, self.x_denominator)

    @property
    def y_factor(self) -> RationalFunction:
        """
        Property for the image of y divided by y.

        Returns:
            RationalFunction: Y(x, y) / y
        """
        return RationalFunction(self.y_numerator, self.y_denominator)

    def with_x_numerator(self, x_numerator: UniPoly) -> CoverMap:
        """
        Copy with another x numerator.

        Args:
            x_numerator (UniPoly): Replacement

        Returns:
            CoverMap: Modified map
        """
        return CoverMap(
            self.name, x_numerator, self.x_denominator, self.y_numerator, self.y_denominator
        )


@dataclass(frozen=True)
class CoverVerification:
    """
    Outcome of substituting a map into the target equation modulo y^2 = f(x).

    The residue is even_residue + y * odd_residue, zero for a genuine cover.
    """

    name: str
    degree: int
    even_residue: RationalFunction
    odd_residue: RationalFunction

    @property
    def verified(self) -> bool:
        """
        Property for the vanishing of the residue.

        Returns:
            bool: True when the map lands on the curve
        """
        return self.even_residue.is_zero() and self.odd_residue.is_zero()

    def to_dict(self) -> dict[str, Any]:
        """
        Serialize for reports.

        Returns:
            dict[str, Any]: Degree on success, residue otherwise
        """
        if self.verified:
            return {"map": self.name, "verified": True, "degree": self.degree}
        return {
            "map": self.name,
            "verified": False,
            "even_residue": self.even_residue.to_string(),
            "odd_residue": self.odd_residue.to_string(),
        }


def verify_cover(c: Genus2Curve, e: EllipticCurveQ, m: CoverMap) -> CoverVerification:
    """
    Check that a map sends y^2 = f(x) into the Weierstrass equation of e.

    Args:
        c (Genus2Curve): Source curve
        e (EllipticCurveQ): Target curve
        m (CoverMap): Map

    Returns:
        CoverVerification: Degree max(deg x_numerator, deg x_denominator) and the residue
    """
    a1, a2, a3, a4, a6 = e.coefficients
    big_x, factor = m.x_component, m.y_factor
    f = RationalFunction(c.f)
    even = f * factor**2 - (big_x**3 + a2 * big_x**2 + a4 * big_x + a6)
    odd = (a1 * big_x + a3) * factor
    degree = max(m.x_numerator.degree, m.x_denominator.degree)
    result = CoverVerification(m.name, degree, even, odd)
    if result.verified:
        logger.info(f"Cover {m.name} verified, degree {degree}")
    else:
        logger.warning(f"Cover {m.name} does not land on {e}")
    return result
