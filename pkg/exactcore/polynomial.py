"""
Dense univariate polynomials over a coefficient field.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Any, Iterable, Sequence

from exactcore.fields import RATIONALS, Field, FieldMismatchError, PrimeFieldCtx
from exactcore.rationals import format_rational


class ZeroPolynomialError(Exception):
    """
    Raised when an operation is undefined for the zero polynomial.
    """


class InexactDivisionError(Exception):
    """
    Raised when an exact quotient leaves a remainder.
    """


class UniPoly:
    """
    Polynomial in one variable, coefficients stored in ascending degree.

    The leading stored coefficient is nonzero unless the polynomial is zero.
    Instances are immutable.
    """

    __slots__ = ("_coefficients", "_field", "_var")

    def __init__(
        self, coefficients: Iterable[Any] = (), field: Field = RATIONALS, var: str = "t"
    ) -> None:
        """
        Initialize UniPoly.

        Args:
            coefficients (Iterable[Any]): Coefficients, index = degree
            field (Field): Coefficient field
            var (str): Variable label
        """
        coerced = [field.coerce(value) for value in coefficients]
        while coerced and coerced[-1] == 0:
            coerced.pop()
        self._coefficients = tuple(coerced)
        self._field = field
        self._var = var

    @classmethod
    def constant(cls, value: Any, field: Field = RATIONALS, var: str = "t") -> UniPoly:
        """
        Constant polynomial.

        Args:
            value (Any): Constant
            field (Field): Coefficient field
            var (str): Variable label

        Returns:
            UniPoly: The constant
        """
        return cls([value], field, var)

    @classmethod
    def monomial(
        cls, degree: int, coefficient: Any = 1, field: Field = RATIONALS, var: str = "t"
    ) -> UniPoly:
        """
        Polynomial coefficient * var^degree.

        Args:
            degree (int): Exponent
            coefficient (Any): Coefficient
            field (Field): Coefficient field
            var (str): Variable label

        Returns:
            UniPoly: The monomial
        """
        return cls([0] * degree + [coefficient], field, var)

    @classmethod
    def from_roots(cls, roots: Iterable[Any], field: Field = RATIONALS, var: str = "t") -> UniPoly:
        """
        Monic polynomial with the given roots.

        Args:
            roots (Iterable[Any]): Roots with multiplicity
            field (Field): Coefficient field
            var (str): Variable label

        Returns:
            UniPoly: Product of (var - root)
        """
        result = cls.constant(1, field, var)
        for root in roots:
            result = result * cls([-field.coerce(root), 1], field, var)
        return result

    def _wrap(self, coefficients: list[Any]) -> UniPoly:
        result = UniPoly.__new__(UniPoly)
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        result._coefficients = tuple(coefficients)
        result._field = self._field
        result._var = self._var
        return result

    def _operand(self, other: Any) -> UniPoly:
        if isinstance(other, UniPoly):
            if other.field != self._field:
                raise FieldMismatchError(f"Cannot combine {self._field} and {other.field}")
            return other
        return self._wrap([self._field.coerce(other)])

    @property
    def coefficients(self) -> tuple[Any, ...]:
        """
        Property for the coefficients.

        Returns:
            tuple[Any, ...]: Coefficients in ascending degree
        """
        return self._coefficients

    @property
    def field(self) -> Field:
        """
        Property for the coefficient field.

        Returns:
            Field: The field
        """
        return self._field

    @property
    def var(self) -> str:
        """
        Property for the variable label.

        Returns:
            str: Label
        """
        return self._var

    @property
    def degree(self) -> int:
        """
        Degree, -1 for the zero polynomial.

        Returns:
            int: Degree
        """
        return len(self._coefficients) - 1

    @property
    def leading(self) -> Any:
        """
        Leading coefficient, zero for the zero polynomial.

        Returns:
            Any: Field element
        """
        return self._coefficients[-1] if self._coefficients else self._field.zero

    def coefficient(self, index: int) -> Any:
        """
        Coefficient of var^index.

        Args:
            index (int): Exponent

        Returns:
            Any: Field element, zero beyond the degree
        """
        if 0 <= index < len(self._coefficients):
            return self._coefficients[index]
        return self._field.zero

    def is_zero(self) -> bool:
        """
        Check for the zero polynomial.

        Returns:
            bool: True if zero
        """
        return not self._coefficients

    def is_constant(self) -> bool:
        """
        Check for a constant, including zero.

        Returns:
            bool: True if degree <= 0
        """
        return len(self._coefficients) <= 1

    def with_var(self, var: str) -> UniPoly:
        """
        Same coefficients under another label.

        Args:
            var (str): New label

        Returns:
            UniPoly: Relabelled polynomial
        """
        result = self._wrap(list(self._coefficients))
        result._var = var
        return result

    def __add__(self, other: Any) -> UniPoly:
        right = self._operand(other).coefficients
        left = self._coefficients
        size = max(len(left), len(right))
        zero = self._field.zero
        return self._wrap(
            [
                (left[i] if i < len(left) else zero) + (right[i] if i < len(right) else zero)
                for i in range(size)
            ]
        )

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return self._wrap([-value for value in self._coefficients])

    def __sub__(self, other: Any) -> UniPoly:
        return self + (-self._operand(other))

    def __rsub__(self, other: Any) -> UniPoly:
        return self._operand(other) - self

    def __mul__(self, other: Any) -> UniPoly:
        if not isinstance(other, UniPoly):
            scalar = self._field.coerce(other)
            return self._wrap([value * scalar for value in self._coefficients])
        right = self._operand(other).coefficients
        left = self._coefficients
        if not left or not right:
            return self._wrap([])
        product = [self._field.zero] * (len(left) + len(right) - 1)
        for i, left_value in enumerate(left):
            if left_value == 0:
                continue
            for j, right_value in enumerate(right):
                product[i + j] = product[i + j] + left_value * right_value
        return self._wrap(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> UniPoly:
        if exponent < 0:
            raise ValueError("Negative powers of polynomials are not polynomials")
        result = self._wrap([self._field.one])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: Any) -> tuple[UniPoly, UniPoly]:
        divisor = self._operand(other)
        if divisor.is_zero():
            raise ZeroPolynomialError("Division by the zero polynomial")
        remainder = list(self._coefficients)
        divisor_coefficients = divisor.coefficients
        shift_count = len(remainder) - len(divisor_coefficients)
        if shift_count < 0:
            return self._wrap([]), self
        quotient = [self._field.zero] * (shift_count + 1)
        inverse_lead = self._field.one / divisor.leading
        for shift in range(shift_count, -1, -1):
            factor = remainder[shift + len(divisor_coefficients) - 1] * inverse_lead
            quotient[shift] = factor
            if factor == 0:
                continue
            for index, value in enumerate(divisor_coefficients):
                remainder[shift + index] = remainder[shift + index] - factor * value
        return self._wrap(quotient), self._wrap(remainder[: len(divisor_coefficients) - 1])

    def __floordiv__(self, other: Any) -> UniPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: Any) -> UniPoly:
        return divmod(self, other)[1]

    def exact_quotient(self, other: Any) -> UniPoly:
        """
        Quotient of a division known to be exact.

        Args:
            other (Any): Divisor

        Returns:
            UniPoly: self / other
        """
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero():
            raise InexactDivisionError(f"{other} does not divide {self}")
        return quotient

    def __call__(self, point: Any) -> Any:
        """
        Evaluate by Horner's rule; point may be a field element or a polynomial-like value.

        Args:
            point (Any): Evaluation point

        Returns:
            Any: The value
        """
        result: Any = self._field.zero
        for value in reversed(self._coefficients):
            result = result * point + value
        return result

    def compose(self, inner: UniPoly) -> UniPoly:
        """
        Substitute a polynomial for the variable.

        Args:
            inner (UniPoly): Inner polynomial

        Returns:
            UniPoly: self(inner), labelled like inner
        """
        result = inner._wrap([])
        for value in reversed(self._coefficients):
            result = result * inner + value
        return result

    def derivative(self) -> UniPoly:
        """
        Formal derivative.

        Returns:
            UniPoly: d/dvar
        """
        return self._wrap([index * value for index, value in enumerate(self._coefficients)][1:])

    def monic(self) -> UniPoly:
        """
        Divide by the leading coefficient.

        Returns:
            UniPoly: Monic associate, zero stays zero
        """
        if self.is_zero():
            return self
        inverse_lead = self._field.one / self.leading
        return self._wrap([value * inverse_lead for value in self._coefficients])

    def scale_variable(self, factor: Any) -> UniPoly:
        """
        Substitute factor * var for var.

        Args:
            factor (Any): Scaling constant

        Returns:
            UniPoly: self(factor * var)
        """
        factor = self._field.coerce(factor)
        power = self._field.one
        scaled = []
        for value in self._coefficients:
            scaled.append(value * power)
            power = power * factor
        return self._wrap(scaled)

    def reverse(self, degree: int | None = None) -> UniPoly:
        """
        Reciprocal polynomial var^degree * self(1/var).

        Args:
            degree (int | None): Target degree, at least the actual degree

        Returns:
            UniPoly: Reversed polynomial
        """
        degree = self.degree if degree is None else degree
        if degree < self.degree:
            raise ValueError("Reversal degree is smaller than the polynomial degree")
        missing = degree + 1 - len(self._coefficients)
        padded = list(self._coefficients) + [self._field.zero] * missing
        return self._wrap(padded[::-1])

    def substitute_power(self, exponent: int) -> UniPoly:
        """
        Substitute var^exponent for var.

        Args:
            exponent (int): Positive exponent

        Returns:
            UniPoly: self(var^exponent)
        """
        if exponent < 1:
            raise ValueError("Exponent must be positive")
        spread = [self._field.zero] * (exponent * self.degree + 1) if self._coefficients else []
        for index, value in enumerate(self._coefficients):
            spread[index * exponent] = value
        return self._wrap(spread)

    def to_field(self, field: Field) -> UniPoly:
        """
        Map the coefficients into another field, e.g. reduce modulo p.

        Args:
            field (Field): Target field

        Returns:
            UniPoly: Image polynomial
        """
        return UniPoly(self._coefficients, field, self._var)

    def primitive_integer_model(self) -> tuple[Fraction, list[int]]:
        """
        Split a rational polynomial as content * primitive integer polynomial.

        The integer polynomial has positive leading coefficient.

        Returns:
            tuple[Fraction, list[int]]: content and integer coefficients, ascending
        """
        if self._field is not RATIONALS:
            raise FieldMismatchError("Integer models exist only for rational polynomials")
        if self.is_zero():
            raise ZeroPolynomialError("The zero polynomial has no primitive model")
        common_denominator = lcm(*(value.denominator for value in self._coefficients))
        integers = [int(value * common_denominator) for value in self._coefficients]
        content = gcd(*integers)
        if integers[-1] < 0:
            content = -content
        return Fraction(content, common_denominator), [value // content for value in integers]

    def to_strings(self) -> list[str]:
        """
        Serialize rational coefficients, ascending degree.

        Returns:
            list[str]: Rational literals
        """
        if isinstance(self._field, PrimeFieldCtx):
            return [str(int(value)) for value in self._coefficients]
        return [format_rational(value) for value in self._coefficients]

    @classmethod
    def from_strings(cls, literals: Sequence[str], var: str = "t") -> UniPoly:
        """
        Parse rational literals, ascending degree.

        Args:
            literals (Sequence[str]): Coefficient literals
            var (str): Variable label

        Returns:
            UniPoly: Rational polynomial
        """
        return cls(literals, RATIONALS, var)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self._field == other.field and self._coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self._coefficients == self._operand(other).coefficients
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coefficients)

    def __bool__(self) -> bool:
        return bool(self._coefficients)

    def __repr__(self) -> str:
        return f"UniPoly({self.to_strings()}, var={self._var!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for index in range(self.degree, -1, -1):
            value = self._coefficients[index]
            if value == 0:
                continue
            if isinstance(self._field, PrimeFieldCtx):
                literal = str(int(value))
            else:
                literal = format_rational(value)
            if index == 0:
                terms.append(literal)
                continue
            power = self._var if index == 1 else f"{self._var}^{index}"
            if literal == "1":
                terms.append(power)
            elif literal == "-1":
                terms.append(f"-{power}")
            else:
                terms.append(f"{literal}*{power}")
        return " + ".join(terms).replace("+ -", "- ")
