"""
Coefficient fields: the rationals, prime fields and their quadratic extensions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterator, Protocol

from sympy import isprime

from exactcore.rationals import parse_rational


class NotAPrimeError(Exception):
    """
    Raised when a prime field is requested for a composite modulus.
    """


class FieldMismatchError(Exception):
    """
    Raised when elements of different fields are combined.
    """


class NonInvertibleError(Exception):
    """
    Raised when a value has no image in a prime field.
    """


class NotAnExtensionModulusError(Exception):
    """
    Raised when the chosen extension constant is a square modulo p.
    """


class Field(Protocol):
    """
    Interface shared by the coefficient fields.
    """

    @property
    def zero(self) -> Any:
        """
        Additive identity.
        """

    @property
    def one(self) -> Any:
        """
        Multiplicative identity.
        """

    @property
    def characteristic(self) -> int:
        """
        Characteristic of the field.
        """

    def coerce(self, value: Any) -> Any:
        """
        Bring a value into the field.
        """


class RationalField:
    """
    The field of rational numbers, elements are fractions.Fraction.
    """

    zero = Fraction(0)
    one = Fraction(1)
    characteristic = 0

    def coerce(self, value: Any) -> Fraction:
        """
        Bring a value into the rationals.

        Args:
            value (Any): int, Fraction or a "p/q" string

        Returns:
            Fraction: Rational value
        """
        if isinstance(value, Fraction):
            return value
        if isinstance(value, str):
            return parse_rational(value)
        if isinstance(value, FpElement):
            raise FieldMismatchError("A prime field element cannot be coerced to a rational")
        return Fraction(value)

    def __repr__(self) -> str:
        return "QQ"


RATIONALS = RationalField()


class PrimeFieldCtx:
    """
    Arithmetic context for F_p and F_{p^2} = F_p[u]/(u^2 - n).

    The extension constant n defaults to the least quadratic non-residue modulo p.
    """

    __slots__ = ("_p", "_nonresidue")

    def __init__(self, p: int, nonresidue: int | None = None) -> None:
        """
        Initialize PrimeFieldCtx.

        Args:
            p (int): Prime modulus
            nonresidue (int | None): Constant n of the extension modulus u^2 - n
        """
        if not isinstance(p, int) or p < 2 or not isprime(p):
            raise NotAPrimeError(f"{p} is not a prime")
        self._p = p
        if nonresidue is None:
            nonresidue = self._least_nonresidue() if p > 2 else 1
        elif p > 2 and self.legendre(nonresidue) != -1:
            raise NotAnExtensionModulusError(f"u^2 - {nonresidue} is reducible over F_{p}")
        self._nonresidue = nonresidue % p

    def _least_nonresidue(self) -> int:
        candidate = 2
        while self.legendre(candidate) != -1:
            candidate += 1
        return candidate

    @property
    def p(self) -> int:
        """
        Property for the prime.

        Returns:
            int: The characteristic
        """
        return self._p

    @property
    def characteristic(self) -> int:
        """
        Characteristic of the field.

        Returns:
            int: The prime p
        """
        return self._p

    @property
    def nonresidue(self) -> int:
        """
        Property for the extension constant.

        Returns:
            int: n with u^2 = n in F_{p^2}
        """
        return self._nonresidue

    @property
    def zero(self) -> FpElement:
        """
        Additive identity.

        Returns:
            FpElement: zero of F_p
        """
        return FpElement(0, self)

    @property
    def one(self) -> FpElement:
        """
        Multiplicative identity.

        Returns:
            FpElement: one of F_p
        """
        return FpElement(1, self)

    def residue(self, value: Any) -> int:
        """
        Reduce an integer or a rational with p-free denominator modulo p.

        Args:
            value (Any): int, Fraction, "p/q" string or FpElement

        Returns:
            int: Representative in [0, p)
        """
        if isinstance(value, FpElement):
            self._check_same(value.ctx)
            return value.value
        fraction = RATIONALS.coerce(value)
        if fraction.denominator % self._p == 0:
            raise NonInvertibleError(f"Denominator of {fraction} vanishes modulo {self._p}")
        return fraction.numerator * pow(fraction.denominator, -1, self._p) % self._p

    def coerce(self, value: Any) -> FpElement:
        """
        Bring a value into F_p.

        Args:
            value (Any): int, Fraction, "p/q" string or FpElement

        Returns:
            FpElement: Element of F_p
        """
        if isinstance(value, FpElement) and value.ctx is self:
            return value
        return FpElement(self.residue(value), self)

    def element(self, value: Any) -> FpElement:
        """
        Alias of coerce.

        Args:
            value (Any): Value to reduce

        Returns:
            FpElement: Element of F_p
        """
        return self.coerce(value)

    def extension_element(self, real: Any, imaginary: Any = 0) -> Fp2Element:
        """
        Build real + imaginary*u in F_{p^2}.

        Args:
            real (Any): Coordinate at 1
            imaginary (Any): Coordinate at u

        Returns:
            Fp2Element: Element of the quadratic extension
        """
        return Fp2Element(self.residue(real), self.residue(imaginary), self)

    def legendre(self, value: int) -> int:
        """
        Quadratic character on F_p with the convention chi(0) = 0.

        Args:
            value (int): Integer representative

        Returns:
            int: -1, 0 or 1
        """
        value %= self._p
        if value == 0:
            return 0
        return 1 if pow(value, (self._p - 1) // 2, self._p) == 1 else -1

    def elements(self) -> Iterator[FpElement]:
        """
        Enumerate F_p.

        Yields:
            FpElement: every element once
        """
        for value in range(self._p):
            yield FpElement(value, self)

    def extension_elements(self) -> Iterator[Fp2Element]:
        """
        Enumerate F_{p^2}.

        Yields:
            Fp2Element: every element once
        """
        for real in range(self._p):
            for imaginary in range(self._p):
                yield Fp2Element(real, imaginary, self)

    def _check_same(self, other: PrimeFieldCtx) -> None:
        if other != self:
            raise FieldMismatchError(f"F_{other.p} element used in F_{self._p}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PrimeFieldCtx):
            return NotImplemented
        return self._p == other.p and self._nonresidue == other.nonresidue

    def __hash__(self) -> int:
        return hash((self._p, self._nonresidue))

    def __repr__(self) -> str:
        return f"PrimeFieldCtx(p={self._p}, nonresidue={self._nonresidue})"


class FpElement:
    """
    Element of a prime field.
    """

    __slots__ = ("value", "ctx")

    def __init__(self, value: int, ctx: PrimeFieldCtx) -> None:
        self.value = value % ctx.p
        self.ctx = ctx

    def _other(self, other: Any) -> int:
        if isinstance(other, FpElement):
            if other.ctx is not self.ctx:
                self.ctx._check_same(other.ctx)  # pylint: disable=protected-access
            return other.value
        return self.ctx.residue(other)

    def __add__(self, other: Any) -> FpElement:
        if isinstance(other, Fp2Element):
            return NotImplemented
        return FpElement(self.value + self._other(other), self.ctx)

    __radd__ = __add__

    def __sub__(self, other: Any) -> FpElement:
        if isinstance(other, Fp2Element):
            return NotImplemented
        return FpElement(self.value - self._other(other), self.ctx)

    def __rsub__(self, other: Any) -> FpElement:
        if isinstance(other, Fp2Element):
            return NotImplemented
        return FpElement(self._other(other) - self.value, self.ctx)

    def __mul__(self, other: Any) -> FpElement:
        if isinstance(other, Fp2Element):
            return NotImplemented
        return FpElement(self.value * self._other(other), self.ctx)

    __rmul__ = __mul__

    def __neg__(self) -> FpElement:
        return FpElement(-self.value, self.ctx)

    def inverse(self) -> FpElement:
        """
        Multiplicative inverse.

        Returns:
            FpElement: 1/self
        """
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.ctx.p}")
        return FpElement(pow(self.value, -1, self.ctx.p), self.ctx)

    def __truediv__(self, other: Any) -> FpElement:
        if isinstance(other, Fp2Element):
            return NotImplemented
        return self * FpElement(self._other(other), self.ctx).inverse()

    def __rtruediv__(self, other: Any) -> FpElement:
        return FpElement(self._other(other), self.ctx) * self.inverse()

    def __pow__(self, exponent: int) -> FpElement:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FpElement(pow(self.value, exponent, self.ctx.p), self.ctx)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FpElement):
            return self.ctx.p == other.ctx.p and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.ctx.residue(other)
            except NonInvertibleError:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.ctx.p))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} mod {self.ctx.p}"


class Fp2Element:
    """
    Element real + imaginary*u of F_p[u]/(u^2 - n).
    """

    __slots__ = ("real", "imaginary", "ctx")

    def __init__(self, real: int, imaginary: int, ctx: PrimeFieldCtx) -> None:
        self.real = real % ctx.p
        self.imaginary = imaginary % ctx.p
        self.ctx = ctx

    def _other(self, other: Any) -> tuple[int, int]:
        if isinstance(other, Fp2Element):
            self.ctx._check_same(other.ctx)  # pylint: disable=protected-access
            return other.real, other.imaginary
        return self.ctx.residue(other), 0

    def __add__(self, other: Any) -> Fp2Element:
        real, imaginary = self._other(other)
        return Fp2Element(self.real + real, self.imaginary + imaginary, self.ctx)

    __radd__ = __add__

    def __sub__(self, other: Any) -> Fp2Element:
        real, imaginary = self._other(other)
        return Fp2Element(self.real - real, self.imaginary - imaginary, self.ctx)

    def __rsub__(self, other: Any) -> Fp2Element:
        return -(self - other)

    def __mul__(self, other: Any) -> Fp2Element:
        real, imaginary = self._other(other)
        return Fp2Element(
            self.real * real + self.ctx.nonresidue * self.imaginary * imaginary,
            self.real * imaginary + self.imaginary * real,
            self.ctx,
        )

    __rmul__ = __mul__

    def __neg__(self) -> Fp2Element:
        return Fp2Element(-self.real, -self.imaginary, self.ctx)

    def norm(self) -> int:
        """
        Norm to F_p.

        Returns:
            int: real^2 - n*imaginary^2 modulo p
        """
        return (self.real**2 - self.ctx.nonresidue * self.imaginary**2) % self.ctx.p

    def quadratic_character(self) -> int:
        """
        Quadratic character of F_{p^2}, computed through the norm.

        Returns:
            int: -1, 0 or 1
        """
        return self.ctx.legendre(self.norm())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Fp2Element):
            return (self.real, self.imaginary, self.ctx) == (other.real, other.imaginary, other.ctx)
        if isinstance(other, (int, Fraction)):
            return self.imaginary == 0 and self.real == self.ctx.residue(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.real, self.imaginary, self.ctx.p))

    def __repr__(self) -> str:
        return f"{self.real} + {self.imaginary}*u mod {self.ctx.p}"
