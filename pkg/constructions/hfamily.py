"""
The H^(n) family on Kummer surfaces of curves y^2 = x(x - 1)(x - a)(x - b)(x - c).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from config.console_logging import get_child_logger
from constructions.igusa_families import NonK3BaseChangeError
from ellsurf.weierstrass import WeierstrassSurface
from exactcore.polynomial import UniPoly
from exactcore.rational_function import RationalFunction
from exactcore.rationals import format_rational, parse_rational
from genus2.curve import Genus2Curve

logger = get_child_logger(__file__)

H_DEGREES = range(1, 4)

# coefficient, exponent of a, exponent of b, exponent of c; B2 = -16 * sum
B2_TERMS: tuple[tuple[int, int, int, int], ...] = (
    (1, 1, 2, 4), (-1, 2, 1, 4), (-1, 1, 1, 4), (1, 2, 0, 4),
    (1, 2, 3, 3), (-1, 1, 3, 3), (-1, 0, 3, 3), (-1, 3, 2, 3), (2, 2, 2, 3),
    (-2, 1, 2, 3), (1, 0, 2, 3), (1, 2, 1, 3), (2, 1, 1, 3), (-2, 2, 0, 3),
    (-1, 1, 4, 2), (1, 0, 4, 2), (-1, 3, 3, 2), (-2, 2, 3, 2), (6, 1, 3, 2),
    (-1, 0, 3, 2), (1, 4, 2, 2), (1, 3, 2, 2), (-3, 2, 2, 2), (-2, 1, 2, 2),
    (1, 2, 1, 2), (-1, 1, 1, 2), (1, 2, 0, 2),
    (1, 2, 4, 1), (-1, 1, 4, 1), (2, 3, 3, 1), (-2, 2, 3, 1), (-1, 1, 3, 1),
    (-2, 4, 2, 1), (1, 3, 2, 1), (2, 2, 2, 1), (1, 1, 2, 1), (-1, 2, 1, 1),
    (-1, 3, 3, 0), (1, 2, 3, 0), (1, 4, 2, 0), (-1, 3, 2, 0),
)  # fmt: skip

T1_DOCUMENTATION = "t1 = (1/(t - a)) * ((y + y_s)/(x - x_s) - 2a(b - 1)(c - a))"
T2_DOCUMENTATION = "t2 = x1/(t1 + 2(b - a)c)"


class DegenerateParametersError(Exception):
    """
    Raised when 0, 1, a, b, c are not pairwise distinct.
    """


@dataclass(frozen=True)
class HParams:
    """
    Parameters (a, b, c) of the curve y^2 = x(x - 1)(x - a)(x - b)(x - c).
    """

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self) -> None:
        """
        Coerce to rationals and validate distinctness.
        """
        values = [Fraction(value) for value in (self.a, self.b, self.c)]
        for name, value in zip(("a", "b", "c"), values):
            object.__setattr__(self, name, value)
        if len({Fraction(0), Fraction(1), *values}) != 5:
            raise DegenerateParametersError(
                f"0, 1, a, b, c must be pairwise distinct, got a = {values[0]}, "
                f"b = {values[1]}, c = {values[2]}"
            )

    @classmethod
    def from_strings(cls, literals: list[str]) -> HParams:
        """
        Parse "p/q" literals.

        Args:
            literals (list[str]): Three rational strings

        Returns:
            HParams: Validated parameters
        """
        a, b, c = (parse_rational(literal) for literal in literals)
        return cls(a, b, c)

    def to_strings(self) -> list[str]:
        """
        Serialize as rational strings.

        Returns:
            list[str]: a, b, c
        """
        return [format_rational(value) for value in (self.a, self.b, self.c)]


@dataclass(frozen=True)
class HCoefficients:
    """
    Coefficients A, B1, B2, B3, C1, C2 of H^(n).
    """

    a: Fraction
    b1: Fraction
    b2: Fraction
    b3: Fraction
    c1: Fraction
    c2: Fraction

    def to_strings(self) -> dict[str, str]:
        """
        Serialize as rational strings.

        Returns:
            dict[str, str]: Named coefficients
        """
        return {
            "A": format_rational(self.a),
            "B1": format_rational(self.b1),
            "B2": format_rational(self.b2),
            "B3": format_rational(self.b3),
            "C1": format_rational(self.c1),
            "C2": format_rational(self.c2),
        }


def b2_from_terms(p: HParams) -> Fraction:
    """
    B2 from the term table.

    Args:
        p (HParams): Parameters

    Returns:
        Fraction: B2
    """
    total = sum(
        (coefficient * p.a**ea * p.b**eb * p.c**ec for coefficient, ea, eb, ec in B2_TERMS),
        Fraction(0),
    )
    return -16 * total


def b2_by_powers_of_c(p: HParams) -> Fraction:
    """
    B2 grouped by powers of c, an independent transcription of b2_from_terms.

    Args:
        p (HParams): Parameters

    Returns:
        Fraction: B2
    """
    a, b, c = p.a, p.b, p.c
    by_power = (
        -(a**3) * b**3 + a**2 * b**3 + a**4 * b**2 - a**3 * b**2,
        a**2 * b**4 - a * b**4 + 2 * a**3 * b**3 - 2 * a**2 * b**3 - a * b**3
        - 2 * a**4 * b**2 + a**3 * b**2 + 2 * a**2 * b**2 + a * b**2 - a**2 * b,
        -a * b**4 + b**4 - a**3 * b**3 - 2 * a**2 * b**3 + 6 * a * b**3 - b**3
        + a**4 * b**2 + a**3 * b**2 - 3 * a**2 * b**2 - 2 * a * b**2 + a**2 * b - a * b + a**2,
        a**2 * b**3 - a * b**3 - b**3 - a**3 * b**2 + 2 * a**2 * b**2 - 2 * a * b**2 + b**2
        + a**2 * b + 2 * a * b - 2 * a**2,
        a * b**2 - a**2 * b - a * b + a**2,
    )  # fmt: skip
    return -16 * sum((value * c**power for power, value in enumerate(by_power)), Fraction(0))


def h_coefficients(p: HParams) -> HCoefficients:
    """
    Evaluate A, B1, B2, B3, C1, C2 at the parameters.

    Args:
        p (HParams): Parameters

    Returns:
        HCoefficients: Exact values
    """
    a, b, c = p.a, p.b, p.c
    big_a = 4 * (
        a * b * c**2 + b * c**2 - 2 * a * c**2 + a * b**2 * c - 2 * b**2 * c
        - 2 * a**2 * b * c + b * c + 4 * a**2 * c - 2 * a * c + a * b**2 - 2 * a**2 * b + a * b
    )  # fmt: skip
    b1 = (a - 1) * c - a * (b - 1)
    c2 = a * b**2 * c * (a - 1) * (b - 1) * (c - 1) ** 2 * (a - b) * (b - c) * (c - a)
    return HCoefficients(
        a=big_a, b1=b1, b2=b2_from_terms(p), b3=-b1 * c2, c1=Fraction(1), c2=c2
    )


def h_surface(p: HParams, n: int) -> WeierstrassSurface:
    """
    Y^2 = X^3 + A*X^2 + (B1*t^n + B2 + B3/t^n)*X + (C1*t^n + C2/t^n)^2.

    Args:
        p (HParams): Parameters
        n (int): Degree in 1..3

    Returns:
        WeierstrassSurface: The K3 surface H^(n)
    """
    if n not in H_DEGREES:
        raise NonK3BaseChangeError(f"H^(n) is a K3 surface only for n <= 3, got n = {n}")
    values = h_coefficients(p)
    a4 = RationalFunction.laurent({n: values.b1, 0: values.b2, -n: values.b3})
    root = RationalFunction.laurent({n: values.c1, -n: values.c2})
    surface = WeierstrassSurface.short(a4, root**2, values.a)
    logger.info(f"Built H^({n}) at a, b, c = {p.to_strings()}: {surface}")
    return surface


@dataclass(frozen=True)
class IntermediateFibration:
    """
    Fibration y1^2 = x1^3 + P(t1)*x1^2 - Q(t1)*x1 reached from H^(1) by a 2-neighbor step.

    The section (x_s, y_s) lives on H^(1), the elliptic parameters t1 and t2 are recorded as text.
    """

    surface: WeierstrassSurface
    section_x: RationalFunction
    section_y: RationalFunction
    t1: str = T1_DOCUMENTATION
    t2: str = T2_DOCUMENTATION

    def to_dict(self) -> dict[str, Any]:
        """
        Serialize for reports.

        Returns:
            dict[str, Any]: Equation, section and parameters
        """
        return {
            **self.surface.to_dict(),
            "section": {"x": self.section_x.to_string(), "y": self.section_y.to_string()},
            "t1": self.t1,
            "t2": self.t2,
        }


def intermediate_fibration(p: HParams) -> IntermediateFibration:
    """
    Fibration with I6 at t1 = 0 and I2 at t1 = -2(b - a)c, t1 = -2b(c - 1).

    Args:
        p (HParams): Parameters

    Returns:
        IntermediateFibration: Equation and documented section data
    """
    a, b, c = p.a, p.b, p.c
    quadratic = (
        3 * b**2 * c**2 - a * b * c**2 - 4 * b * c**2 + 2 * a * c**2 - 4 * a * b**2 * c
        - b**2 * c + 2 * a**2 * b * c + 3 * a * b * c + 2 * b * c - 4 * a**2 * c + 2 * a * c
        + 2 * a * b**2 + 2 * a**2 * b - 4 * a * b
    ) / 2  # fmt: skip
    a2 = RationalFunction(
        UniPoly(
            [
                b**2 * (b - a) ** 2 * c**2 * (c - 1) ** 2,
                2 * (b - 1) * b * (b - a) * (c - 1) * c * (c - a),
                quadratic,
                (b - 1) * (c - a) / 2,
                Fraction(1, 16),
            ]
        )
    )
    scale = (a - 1) * a * (b - 1) * (c - a) * (c - b) / 2
    q = UniPoly.monomial(3, scale) * UniPoly.from_roots([2 * b - 2 * b * c, 2 * a * c - 2 * b * c])
    t = RationalFunction.variable()
    section_x = -4 * (a - 1) * (b - 1) * t * (t - c) * (c * t - a * b)
    section_y = -8 * (a - 1) * (b - 1) * (c - a) * (c - b) * t**2 * (t - a * b) * (t - c)
    surface = WeierstrassSurface(0, a2, 0, RationalFunction(-q), 0)
    logger.info(f"Built the intermediate fibration: {surface}")
    return IntermediateFibration(surface, section_x, section_y)


def genus2_from_hparams(p: HParams) -> Genus2Curve:
    """
    The curve y^2 = x(x - 1)(x - a)(x - b)(x - c).

    Args:
        p (HParams): Parameters

    Returns:
        Genus2Curve: Quintic model
    """
    return Genus2Curve(UniPoly.from_roots([0, 1, p.a, p.b, p.c], var="x"))
