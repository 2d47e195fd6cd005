"""
Genus-2 curves y^2 = f(x), their Igusa-Clebsch invariants and reduction types.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Any, Sequence

from sympy import primerange
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_sqf_p

from config.console_logging import get_child_logger
from exactcore.polynomial import UniPoly
from exactcore.rationals import format_rational
from exactcore.toolkit import integer_reduction, poly_gcd

logger = get_child_logger(__file__)

BinaryForm = list[Fraction]


class NotAGenus2CurveError(Exception):
    """
    Raised when f is not a squarefree polynomial of degree 5 or 6.
    """


class Genus2Curve:
    """
    The curve y^2 = f(x) with rational coefficients.
    """

    __slots__ = ("_f",)

    def __init__(self, f: UniPoly | Sequence[Any]) -> None:
        """
        Initialize Genus2Curve.

        Args:
            f (UniPoly | Sequence[Any]): f or its coefficients f_0, ..., f_6 in ascending degree
        """
        if not isinstance(f, UniPoly):
            f = UniPoly(list(f), var="x")
        if f.degree not in (5, 6):
            raise NotAGenus2CurveError(
                f"Not a genus-2 curve: f has degree {f.degree}, expected 5 or 6"
            )
        if poly_gcd(f, f.derivative()).degree > 0:
            raise NotAGenus2CurveError(f"Not a genus-2 curve: {f} is not squarefree")
        self._f = f.with_var("x")

    @property
    def f(self) -> UniPoly:
        """
        Property for the defining polynomial.

        Returns:
            UniPoly: f(x)
        """
        return self._f

    @property
    def degree(self) -> int:
        """
        Property for deg f.

        Returns:
            int: 5 or 6
        """
        return self._f.degree

    def sextic_coefficients(self) -> list[Fraction]:
        """
        Coefficients f_0, ..., f_6 of the binary sextic, f_6 = 0 for quintics.

        Returns:
            list[Fraction]: Seven coefficients
        """
        return [self._f.coefficient(index) for index in range(7)]

    def to_strings(self) -> list[str]:
        """
        Serialize the seven coefficients as rational strings.

        Returns:
            list[str]: "f0", ..., "f6"
        """
        return [format_rational(value) for value in self.sextic_coefficients()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Genus2Curve):
            return NotImplemented
        return self._f == other.f

    def __hash__(self) -> int:
        return hash(self._f)

    def __repr__(self) -> str:
        return f"Genus2Curve(y^2 = {self._f})"


@dataclass(frozen=True)
class IgusaClebsch:
    """
    Igusa-Clebsch invariants (I2, I4, I6, I10).
    """

    i2: Fraction
    i4: Fraction
    i6: Fraction
    i10: Fraction

    def absolute_invariants(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """
        Weight-zero ratios that do not depend on the model of the curve.

        Returns:
            tuple[Fraction, Fraction, Fraction, Fraction]: I2^5/I10, I2^3*I4/I10,
                I2^2*I6/I10, I4*I6/I10
        """
        return (
            self.i2**5 / self.i10,
            self.i2**3 * self.i4 / self.i10,
            self.i2**2 * self.i6 / self.i10,
            self.i4 * self.i6 / self.i10,
        )

    def to_strings(self) -> dict[str, str]:
        """
        Serialize as rational strings.

        Returns:
            dict[str, str]: I2, I4, I6, I10
        """
        return {
            "I2": format_rational(self.i2),
            "I4": format_rational(self.i4),
            "I6": format_rational(self.i6),
            "I10": format_rational(self.i10),
        }


def _partial_x(form: BinaryForm) -> BinaryForm:
    return [index * value for index, value in enumerate(form)][1:]


def _partial_y(form: BinaryForm) -> BinaryForm:
    degree = len(form) - 1
    return [(degree - index) * value for index, value in enumerate(form)][:-1]


def _differentiate(form: BinaryForm, x_order: int, y_order: int) -> BinaryForm:
    for _ in range(x_order):
        form = _partial_x(form)
    for _ in range(y_order):
        form = _partial_y(form)
    return form


def _multiply(first: BinaryForm, second: BinaryForm) -> BinaryForm:
    result = [Fraction(0)] * (len(first) + len(second) - 1)
    for index, left in enumerate(first):
        if left:
            for offset, right in enumerate(second):
                result[index + offset] += left * right
    return result


def transvectant(first: BinaryForm, second: BinaryForm, order: int) -> BinaryForm:
    """
    Transvectant of two binary forms.

    A form of degree m is stored as its coefficients at x^i * y^(m - i), i = 0..m.

    Args:
        first (BinaryForm): Form of degree m
        second (BinaryForm): Form of degree n
        order (int): k <= min(m, n)

    Returns:
        BinaryForm: Form of degree m + n - 2k
    """
    first_degree, second_degree = len(first) - 1, len(second) - 1
    scale = Fraction(
        factorial(first_degree - order) * factorial(second_degree - order),
        factorial(first_degree) * factorial(second_degree),
    )
    total = [Fraction(0)] * (first_degree + second_degree - 2 * order + 1)
    for index in range(order + 1):
        term = _multiply(
            _differentiate(first, order - index, index),
            _differentiate(second, index, order - index),
        )
        weight = (-1) ** index * comb(order, index)
        total = [value + weight * addition for value, addition in zip(total, term)]
    return [scale * value for value in total]


def clebsch_invariants(curve: Genus2Curve) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """
    Clebsch invariants A, B, C, D of the binary sextic of the curve.

    Args:
        curve (Genus2Curve): The curve

    Returns:
        tuple[Fraction, Fraction, Fraction, Fraction]: A, B, C, D
    """
    sextic = curve.sextic_coefficients()
    quartic_i = transvectant(sextic, sextic, 4)
    quartic_delta = transvectant(quartic_i, quartic_i, 2)
    quadratic_1 = transvectant(sextic, quartic_i, 4)
    quadratic_2 = transvectant(quartic_i, quadratic_1, 2)
    quadratic_3 = transvectant(quartic_i, quadratic_2, 2)
    return (
        transvectant(sextic, sextic, 6)[0],
        transvectant(quartic_i, quartic_i, 4)[0],
        transvectant(quartic_i, quartic_delta, 4)[0],
        transvectant(quadratic_3, quadratic_1, 2)[0],
    )


def igusa_clebsch(curve: Genus2Curve) -> IgusaClebsch:
    """
    Igusa-Clebsch invariants from the Clebsch invariants.

    Args:
        curve (Genus2Curve): The curve

    Returns:
        IgusaClebsch: (I2, I4, I6, I10)
    """
    a, b, c, d = clebsch_invariants(curve)
    invariants = IgusaClebsch(
        i2=-120 * a,
        i4=-720 * a**2 + 6750 * b,
        i6=8640 * a**3 - 108000 * a * b + 202500 * c,
        i10=(
            -62208 * a**5
            + 972000 * a**3 * b
            + 1620000 * a**2 * c
            - 3037500 * a * b**2
            - 6075000 * b * c
            - 4556250 * d
        ),
    )
    logger.debug(f"Igusa-Clebsch invariants of {curve}: {invariants.to_strings()}")
    return invariants


def reduction_obstruction(curve: Genus2Curve, prime: int) -> str | None:
    """
    Describe why the model has bad reduction at p.

    Args:
        curve (Genus2Curve): The curve
        prime (int): Prime

    Returns:
        str | None: The obstruction, None for good reduction
    """
    if prime == 2:
        return "characteristic 2 is not supported"
    if any(value.denominator % prime == 0 for value in curve.f.coefficients):
        return f"{prime} divides a coefficient denominator"
    reduced = integer_reduction(curve.f, prime)
    if reduced is None:
        return f"{prime} divides the leading coefficient"
    if not gf_sqf_p(reduced, prime, ZZ):
        return f"f is not squarefree modulo {prime}"
    return None


def has_good_reduction(curve: Genus2Curve, prime: int) -> bool:
    """
    Check whether y^2 = f(x) stays a genus-2 curve modulo p.

    Args:
        curve (Genus2Curve): The curve
        prime (int): Prime

    Returns:
        bool: True when the reduction is defined, of the same degree and squarefree
    """
    return reduction_obstruction(curve, prime) is None


def bad_primes_up_to(curve: Genus2Curve, bound: int) -> list[int]:
    """
    Primes up to a bound at which the model has bad reduction, 2 included.

    Args:
        curve (Genus2Curve): The curve
        bound (int): Inclusive bound

    Returns:
        list[int]: Bad primes in ascending order
    """
    return [prime for prime in primerange(2, bound + 1) if not has_good_reduction(curve, prime)]
