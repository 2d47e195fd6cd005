"""
Weierstrass equations over the rational function field Q(t).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from exactcore.polynomial import UniPoly
from exactcore.rational_function import RationalFunction

COEFFICIENT_NAMES = ("a1", "a2", "a3", "a4", "a6")


class SingularEquationError(Exception):
    """
    Raised when the discriminant of a Weierstrass equation vanishes identically.
    """


class InvalidBaseChangeError(Exception):
    """
    Raised when a base change t -> t^n is requested for n < 1.
    """


class InvalidTwistError(Exception):
    """
    Raised when a quadratic twist is requested by 0 or for an equation with a1 or a3.
    """


def as_function(value: Any, var: str = "t") -> RationalFunction:
    """
    Coerce a coefficient into Q(t).

    Args:
        value (Any): RationalFunction, UniPoly, rational constant or "[num]/[den]" string
        var (str): Variable label

    Returns:
        RationalFunction: The coefficient
    """
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, UniPoly):
        return RationalFunction(value.with_var(var))
    if isinstance(value, str) and "[" in value:
        return RationalFunction.from_string(value, var)
    return RationalFunction(Fraction(value), 1, var)


class WeierstrassSurface:
    """
    y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6 with coefficients in Q(t).
    """

    __slots__ = ("_coefficients",)

    def __init__(
        self, a1: Any = 0, a2: Any = 0, a3: Any = 0, a4: Any = 0, a6: Any = 0
    ) -> None:
        """
        Initialize WeierstrassSurface.

        Args:
            a1 (Any): Coefficient of x*y
            a2 (Any): Coefficient of x^2
            a3 (Any): Coefficient of y
            a4 (Any): Coefficient of x
            a6 (Any): Constant term
        """
        self._coefficients = tuple(as_function(value) for value in (a1, a2, a3, a4, a6))
        if self.discriminant().is_zero():
            raise SingularEquationError(f"Singular equation {self}: discriminant is 0")

    @classmethod
    def short(cls, a4: Any, a6: Any, a2: Any = 0) -> WeierstrassSurface:
        """
        Equation y^2 = x^3 + a2*x^2 + a4*x + a6.

        Args:
            a4 (Any): Coefficient of x
            a6 (Any): Constant term
            a2 (Any): Coefficient of x^2

        Returns:
            WeierstrassSurface: The surface
        """
        return cls(0, a2, 0, a4, a6)

    @property
    def a1(self) -> RationalFunction:
        """
        Property for a1.

        Returns:
            RationalFunction: a1
        """
        return self._coefficients[0]

    @property
    def a2(self) -> RationalFunction:
        """
        Property for a2.

        Returns:
            RationalFunction: a2
        """
        return self._coefficients[1]

    @property
    def a3(self) -> RationalFunction:
        """
        Property for a3.

        Returns:
            RationalFunction: a3
        """
        return self._coefficients[2]

    @property
    def a4(self) -> RationalFunction:
        """
        Property for a4.

        Returns:
            RationalFunction: a4
        """
        return self._coefficients[3]

    @property
    def a6(self) -> RationalFunction:
        """
        Property for a6.

        Returns:
            RationalFunction: a6
        """
        return self._coefficients[4]

    @property
    def coefficients(self) -> tuple[RationalFunction, ...]:
        """
        Property for (a1, a2, a3, a4, a6).

        Returns:
            tuple[RationalFunction, ...]: Coefficients
        """
        return self._coefficients

    def has_short_shape(self) -> bool:
        """
        Check for a1 = a3 = 0.

        Returns:
            bool: True when x*y and y terms are absent
        """
        return self.a1.is_zero() and self.a3.is_zero()

    def _b_invariants(self) -> tuple[RationalFunction, ...]:
        a1, a2, a3, a4, a6 = self._coefficients
        b2 = a1 * a1 + a2 * 4
        b4 = a4 * 2 + a1 * a3
        b6 = a3 * a3 + a6 * 4
        b8 = a1 * a1 * a6 + a2 * a6 * 4 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def discriminant(self) -> RationalFunction:
        """
        Discriminant -b2^2*b8 - 8*b4^3 - 27*b6^2 + 9*b2*b4*b6.

        Returns:
            RationalFunction: Delta
        """
        b2, b4, b6, b8 = self._b_invariants()
        return -(b2 * b2 * b8) - b4**3 * 8 - b6 * b6 * 27 + b2 * b4 * b6 * 9

    def c4_c6_disc(self) -> tuple[RationalFunction, RationalFunction, RationalFunction]:
        """
        Standard invariants with 1728*Delta = c4^3 - c6^2.

        Returns:
            tuple[RationalFunction, RationalFunction, RationalFunction]: c4, c6, Delta
        """
        b2, b4, b6, _ = self._b_invariants()
        c4 = b2 * b2 - b4 * 24
        c6 = -(b2**3) + b2 * b4 * 36 - b6 * 216
        return c4, c6, self.discriminant()

    def j_invariant(self) -> RationalFunction:
        """
        j = c4^3 / Delta, so that y^2 = x^3 + x has j = 1728.

        Returns:
            RationalFunction: j(t)
        """
        c4, _, delta = self.c4_c6_disc()
        return c4**3 / delta

    def substitute(self, u: Any, t_image: Any) -> WeierstrassSurface:
        """
        Change of variables x = u^2*x', y = u^3*y', t = t_image(t').

        Args:
            u (Any): Nonzero scaling, a constant or a function of t'
            t_image (Any): Image of t as a function of t'

        Returns:
            WeierstrassSurface: Equation with a_i' = a_i(t_image) / u^i
        """
        scale = as_function(u)
        inner = as_function(t_image)
        exponents = (1, 2, 3, 4, 6)
        return WeierstrassSurface(
            *(
                value.compose(inner) / scale**exponent
                for value, exponent in zip(self._coefficients, exponents)
            )
        )

    def base_change(self, degree: int) -> WeierstrassSurface:
        """
        Pull back along t -> t^degree.

        Args:
            degree (int): Positive integer n

        Returns:
            WeierstrassSurface: Surface with every a_i(t^n)
        """
        if degree < 1:
            raise InvalidBaseChangeError(f"Base change degree must be positive, got {degree}")
        if degree == 1:
            return self
        return WeierstrassSurface(*(value.substitute_power(degree) for value in self._coefficients))

    def quadratic_twist(self, d: Fraction | int) -> WeierstrassSurface:
        """
        Twist (a2, a4, a6) -> (d*a2, d^2*a4, d^3*a6).

        Args:
            d (Fraction | int): Nonzero rational

        Returns:
            WeierstrassSurface: Twisted surface
        """
        d = Fraction(d)
        if d == 0:
            raise InvalidTwistError("Quadratic twist by 0")
        if not self.has_short_shape():
            raise InvalidTwistError(f"Twists need a1 = a3 = 0, got {self}")
        return WeierstrassSurface.short(self.a4 * d**2, self.a6 * d**3, self.a2 * d)

    def to_dict(self) -> dict[str, Any]:
        """
        Serialize with "[num]/[den]" strings.

        Returns:
            dict[str, Any]: {"weierstrass": {"a1": ..., ...}}
        """
        return {
            "weierstrass": {
                name: value.to_string()
                for name, value in zip(COEFFICIENT_NAMES, self._coefficients)
            }
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> WeierstrassSurface:
        """
        Parse the serialized form.

        Args:
            data (dict[str, Any]): Output of to_dict

        Returns:
            WeierstrassSurface: The surface
        """
        values = data["weierstrass"]
        return cls(*(values.get(name, 0) for name in COEFFICIENT_NAMES))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeierstrassSurface):
            return NotImplemented
        return self._coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self._coefficients)

    def __repr__(self) -> str:
        return f"WeierstrassSurface({self})"

    def __str__(self) -> str:
        terms = ", ".join(
            f"{name}={value}"
            for name, value in zip(COEFFICIENT_NAMES, self._coefficients)
            if not value.is_zero()
        )
        return f"[{terms}]"
