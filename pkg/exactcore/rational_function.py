"""
Rational functions in one variable over the rationals.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any

from exactcore.fields import RATIONALS
from exactcore.polynomial import UniPoly, ZeroPolynomialError
from exactcore.rationals import MalformedRationalError, rational_root
from exactcore.toolkit import poly_gcd, squarefree_decompose


class IncompatibleScalingError(Exception):
    """
    Raised when t -> mu*t needs a power of mu that is not determined by mu^g.
    """


_SERIALIZED = re.compile(r"^\s*\[(?P<num>[^\]]*)\]\s*/\s*\[(?P<den>[^\]]*)\]\s*$")


class RationalFunction:
    """
    Quotient numerator / denominator in lowest terms with a monic denominator.
    """

    __slots__ = ("_numerator", "_denominator")

    def __init__(
        self, numerator: UniPoly | Any, denominator: UniPoly | Any = 1, var: str = "t"
    ) -> None:
        """
        Initialize RationalFunction.

        Args:
            numerator (UniPoly | Any): Numerator polynomial or rational constant
            denominator (UniPoly | Any): Denominator polynomial or rational constant
            var (str): Variable label used for constant inputs
        """
        if not isinstance(numerator, UniPoly):
            numerator = UniPoly.constant(numerator, RATIONALS, var)
        if not isinstance(denominator, UniPoly):
            denominator = UniPoly.constant(denominator, RATIONALS, numerator.var)
        if denominator.is_zero():
            raise ZeroPolynomialError("Rational function with zero denominator")
        if numerator.is_zero():
            self._numerator = numerator
            self._denominator = UniPoly.constant(1, RATIONALS, numerator.var)
            return
        if denominator.degree > 0:
            common = poly_gcd(numerator, denominator)
            if common.degree > 0:
                numerator = numerator.exact_quotient(common)
                denominator = denominator.exact_quotient(common)
        lead = denominator.leading
        self._numerator = numerator * (1 / lead)
        self._denominator = denominator.monic()

    @classmethod
    def variable(cls, var: str = "t") -> RationalFunction:
        """
        The function t.

        Args:
            var (str): Variable label

        Returns:
            RationalFunction: t / 1
        """
        return cls(UniPoly([0, 1], RATIONALS, var))

    @classmethod
    def laurent(cls, coefficients: dict[int, Any], var: str = "t") -> RationalFunction:
        """
        Build sum of c * t^k for integer exponents k.

        Args:
            coefficients (dict[int, Any]): Exponent to coefficient
            var (str): Variable label

        Returns:
            RationalFunction: The Laurent polynomial
        """
        shift = max(0, -min(coefficients, default=0))
        size = max(coefficients, default=0) + shift + 1
        dense = [Fraction(0)] * size
        for exponent, value in coefficients.items():
            dense[exponent + shift] = dense[exponent + shift] + RATIONALS.coerce(value)
        return cls(UniPoly(dense, RATIONALS, var), UniPoly.monomial(shift, 1, RATIONALS, var))

    @property
    def numerator(self) -> UniPoly:
        """
        Property for the numerator.

        Returns:
            UniPoly: Numerator
        """
        return self._numerator

    @property
    def denominator(self) -> UniPoly:
        """
        Property for the monic denominator.

        Returns:
            UniPoly: Denominator
        """
        return self._denominator

    @property
    def var(self) -> str:
        """
        Property for the variable label.

        Returns:
            str: Label
        """
        return self._numerator.var

    def is_zero(self) -> bool:
        """
        Check for zero.

        Returns:
            bool: True if zero
        """
        return self._numerator.is_zero()

    def is_constant(self) -> bool:
        """
        Check for a constant function.

        Returns:
            bool: True if both parts are constant
        """
        return self._numerator.is_constant() and self._denominator.degree == 0

    def is_polynomial(self) -> bool:
        """
        Check for a polynomial.

        Returns:
            bool: True if the denominator is 1
        """
        return self._denominator.degree == 0

    def constant_value(self) -> Fraction:
        """
        Value of a constant function.

        Returns:
            Fraction: The constant
        """
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._numerator.coefficient(0)

    def valuation_at_infinity(self) -> int:
        """
        Order of vanishing at t = infinity.

        Returns:
            int: deg(denominator) - deg(numerator)
        """
        if self.is_zero():
            raise ZeroPolynomialError("Zero has infinite valuation")
        return self._denominator.degree - self._numerator.degree

    def valuation_at(self, point: Any) -> int:
        """
        Order of vanishing at a rational point.

        Args:
            point (Any): Rational point

        Returns:
            int: Multiplicity of (t - point) in numerator minus in denominator
        """
        if self.is_zero():
            raise ZeroPolynomialError("Zero has infinite valuation")
        linear = UniPoly([-RATIONALS.coerce(point), 1], RATIONALS, self.var)

        def multiplicity(polynomial: UniPoly) -> int:
            count = 0
            quotient, remainder = divmod(polynomial, linear)
            while remainder.is_zero():
                count += 1
                polynomial = quotient
                quotient, remainder = divmod(polynomial, linear)
            return count

        return multiplicity(self._numerator) - multiplicity(self._denominator)

    def _operand(self, other: Any) -> RationalFunction:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, UniPoly):
            return RationalFunction(other)
        return RationalFunction(other, 1, self.var)

    def __add__(self, other: Any) -> RationalFunction:
        other = self._operand(other)
        if self._denominator == other.denominator:
            return RationalFunction(self._numerator + other.numerator, self._denominator)
        return RationalFunction(
            self._numerator * other.denominator + other.numerator * self._denominator,
            self._denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        result = RationalFunction.__new__(RationalFunction)
        result._numerator = -self._numerator
        result._denominator = self._denominator
        return result

    def __sub__(self, other: Any) -> RationalFunction:
        return self + (-self._operand(other))

    def __rsub__(self, other: Any) -> RationalFunction:
        return self._operand(other) - self

    def __mul__(self, other: Any) -> RationalFunction:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RationalFunction(0, 1, self.var)
            result = RationalFunction.__new__(RationalFunction)
            result._numerator = self._numerator * other
            result._denominator = self._denominator
            return result
        other = self._operand(other)
        return RationalFunction(
            self._numerator * other.numerator, self._denominator * other.denominator
        )

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        """
        Multiplicative inverse.

        Returns:
            RationalFunction: 1 / self
        """
        if self.is_zero():
            raise ZeroDivisionError("Zero rational function has no inverse")
        return RationalFunction(self._denominator, self._numerator)

    def __truediv__(self, other: Any) -> RationalFunction:
        return self * self._operand(other).inverse()

    def __rtruediv__(self, other: Any) -> RationalFunction:
        return self._operand(other) * self.inverse()

    def __pow__(self, exponent: int) -> RationalFunction:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = RationalFunction.__new__(RationalFunction)
        result._numerator = self._numerator**exponent
        result._denominator = self._denominator**exponent
        return result

    def __call__(self, point: Any) -> Any:
        """
        Evaluate at a rational point or substitute a rational function.

        Args:
            point (Any): Rational value or RationalFunction

        Returns:
            Any: Fraction or RationalFunction
        """
        if isinstance(point, (RationalFunction, UniPoly)):
            return self.compose(self._operand(point))
        denominator = self._denominator(RATIONALS.coerce(point))
        if denominator == 0:
            raise ZeroDivisionError(f"{self} has a pole at {point}")
        return self._numerator(RATIONALS.coerce(point)) / denominator

    @staticmethod
    def _homogenized(polynomial: UniPoly, top: UniPoly, bottom: UniPoly, degree: int) -> UniPoly:
        # sum c_i top^i bottom^(degree - i)
        result = UniPoly([], RATIONALS, top.var)
        for index, value in enumerate(polynomial.coefficients):
            if value != 0:
                result = result + top**index * bottom ** (degree - index) * value
        return result

    def compose(self, inner: RationalFunction) -> RationalFunction:
        """
        Substitute a rational function for the variable.

        Args:
            inner (RationalFunction): Inner function

        Returns:
            RationalFunction: self(inner)
        """
        top, bottom = inner.numerator, inner.denominator
        numerator_degree = max(self._numerator.degree, 0)
        denominator_degree = self._denominator.degree
        numerator = self._homogenized(self._numerator, top, bottom, numerator_degree)
        denominator = self._homogenized(self._denominator, top, bottom, denominator_degree)
        if denominator_degree > numerator_degree:
            numerator = numerator * bottom ** (denominator_degree - numerator_degree)
        else:
            denominator = denominator * bottom ** (numerator_degree - denominator_degree)
        return RationalFunction(numerator, denominator)

    def substitute_power(self, exponent: int) -> RationalFunction:
        """
        Substitute t^exponent for t, exponent may be negative.

        Args:
            exponent (int): Nonzero exponent

        Returns:
            RationalFunction: self(t^exponent)
        """
        if exponent == 0:
            raise ValueError("Exponent must be nonzero")
        if exponent > 0:
            return RationalFunction(
                self._numerator.substitute_power(exponent),
                self._denominator.substitute_power(exponent),
            )
        return self.compose(RationalFunction.variable(self.var) ** exponent)

    def rescale(self, power: Fraction, root_degree: int) -> RationalFunction:
        """
        Substitute mu*t for t, where only mu^root_degree = power is known.

        Args:
            power (Fraction): Value of mu^root_degree
            root_degree (int): Positive integer g

        Returns:
            RationalFunction: self(mu*t)
        """
        offset = self._denominator.degree

        def scaled(polynomial: UniPoly) -> UniPoly:
            values = []
            for index, value in enumerate(polynomial.coefficients):
                if value == 0:
                    values.append(value)
                    continue
                if (index - offset) % root_degree:
                    raise IncompatibleScalingError(
                        f"mu^{index - offset} is not determined by mu^{root_degree}"
                    )
                values.append(value * power ** ((index - offset) // root_degree))
            return UniPoly(values, RATIONALS, polynomial.var)

        return RationalFunction(scaled(self._numerator), scaled(self._denominator))

    def nth_root(self, degree: int) -> RationalFunction | None:
        """
        Exact n-th root in Q(t).

        Args:
            degree (int): Root degree, positive

        Returns:
            RationalFunction | None: A root with positive-leading monic parts, None if none exists
        """
        if self.is_zero():
            return self

        def polynomial_root(polynomial: UniPoly) -> UniPoly | None:
            root = UniPoly.constant(1, RATIONALS, self.var)
            for factor, multiplicity in squarefree_decompose(polynomial):
                if multiplicity % degree:
                    return None
                root = root * factor ** (multiplicity // degree)
            return root

        leading = rational_root(self._numerator.leading, degree)
        numerator = polynomial_root(self._numerator)
        denominator = polynomial_root(self._denominator)
        if leading is None or numerator is None or denominator is None:
            return None
        return RationalFunction(numerator * leading, denominator)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalFunction):
            return (
                self._numerator == other.numerator and self._denominator == other.denominator
            )
        if isinstance(other, (int, Fraction, UniPoly)):
            return self == self._operand(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._numerator, self._denominator))

    def __repr__(self) -> str:
        return f"RationalFunction({self.to_string()!r})"

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self._numerator)
        return f"({self._numerator}) / ({self._denominator})"

    def to_string(self) -> str:
        """
        Serialize as "[num coefficients]/[den coefficients]", ascending degree.

        Returns:
            str: Serialized form
        """
        numerator = ", ".join(self._numerator.to_strings()) or "0"
        denominator = ", ".join(self._denominator.to_strings())
        return f"[{numerator}]/[{denominator}]"

    @classmethod
    def from_string(cls, text: str, var: str = "t") -> RationalFunction:
        """
        Parse the serialized form.

        Args:
            text (str): "[num coefficients]/[den coefficients]"
            var (str): Variable label

        Returns:
            RationalFunction: Parsed function
        """
        match = _SERIALIZED.match(text)
        if match is None:
            raise MalformedRationalError(f"Not a serialized rational function: {text!r}")

        def parse(part: str) -> UniPoly:
            literals = [item for item in (piece.strip() for piece in part.split(",")) if item]
            return UniPoly.from_strings(literals, var)

        return cls(parse(match.group("num")), parse(match.group("den")))
