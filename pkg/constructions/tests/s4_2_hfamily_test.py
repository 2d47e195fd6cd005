"""
Checks for the H^(n) family and the intermediate fibration.
"""

import random
import unittest
from fractions import Fraction

import pytest

from admin_utils.test_params import RANDOM_SEED
from constructions.hfamily import (
    b2_by_powers_of_c,
    b2_from_terms,
    DegenerateParametersError,
    genus2_from_hparams,
    h_coefficients,
    h_surface,
    HParams,
    intermediate_fibration,
)
from constructions.igusa_families import NonK3BaseChangeError
from constructions.tables import expected_h_fibers, h_rank_offset
from core_utils.constants import EXAMPLE43_PATH
from core_utils.io import curve_coefficients, load_curve_record
from core_utils.tests.utils import ExtendedTestCase, random_rational
from ellsurf.fibers import classify_fibers, FiberType, is_k3, Place, shioda_tate_rank
from exactcore.polynomial import UniPoly
from exactcore.rational_function import RationalFunction
from genus2.curve import Genus2Curve

EXAMPLE = HParams(Fraction(-1), Fraction(1, 7), Fraction(-6, 7))

GENERAL_PARAMETERS = (
    EXAMPLE,
    HParams(Fraction(2), Fraction(3), Fraction(-5)),
    HParams(Fraction(3, 2), Fraction(-2), Fraction(5, 3)),
)


def random_parameters(generator: random.Random) -> HParams:
    """
    Random valid parameters.

    Args:
        generator (random.Random): Seeded generator

    Returns:
        HParams: Parameters with 0, 1, a, b, c distinct
    """
    while True:
        try:
            return HParams(
                random_rational(generator), random_rational(generator), random_rational(generator)
            )
        except DegenerateParametersError:
            continue


class HParamsTest(ExtendedTestCase):
    """
    Parameters and the curve they define.
    """

    @pytest.mark.stage_4_2_hfamily_checks
    @pytest.mark.constructions
    def test_degenerate(self) -> None:
        """
        0, 1, a, b, c must be distinct.
        """
        self.assertRaisesWithMessage("a = 1", DegenerateParametersError, HParams, 1, 2, 3)
        self.assertRaisesWithMessage("b = c", DegenerateParametersError, HParams, 2, 3, 3)
        self.assertRaisesWithMessage("c = 0", DegenerateParametersError, HParams, 2, 3, 0)

    @pytest.mark.stage_4_2_hfamily_checks
    @pytest.mark.constructions
    def test_from_strings(self) -> None:
        """
        The shipped parameters of the worked example.
        """
        record = load_curve_record(EXAMPLE43_PATH)
        params = HParams.from_strings(record.hparams)
        self.assertEqual(EXAMPLE, params)
        self.assertEqual(["-1", "1/7", "-6/7"], params.to_strings())

    @pytest.mark.stage_4_2_hfamily_checks
    @pytest.mark.constructions
    def test_genus2_curve(self) -> None:
        """
        y^2 = x(x - 1)(x + 1)(x - 1/7)(x + 6/7), independent of the parameter order.
        """
        record = load_curve_record(EXAMPLE43_PATH)
        curve = genus2_from_hparams(EXAMPLE)
        self.assertEqual(Genus2Curve(curve_coefficients(record)), curve)
        self.assertEqual(5, curve.degree)
        swapped = HParams(EXAMPLE.c, EXAMPLE.a, EXAMPLE.b)
        self.assertEqual(curve, genus2_from_hparams(swapped))


class HCoefficientsTest(ExtendedTestCase):
    """
    A, B1, B2, B3, C1, C2.
    """

    @pytest.mark.stage_4_2_hfamily_checks
    @pytest.mark.constructions
    def test_example_values(self) -> None:
        """
        Exact values at (-1, 1/7, -6/7).
        """
        values = h_coefficients(EXAMPLE)
        self.assertEqual(
            {
                "A": "-5416/343",
                "B1": "6/7",
                "B2": "-5502592/117649",
                "B3": "584064/40353607",
                "C1": "1",
                "C2": "-97344/5764801",
            },
            values.to_strings(),
        )

    @pytest.mark.stage_4_2_hfamily_checks
    @pytest.mark.constructions
    def test_b2_transcriptions_agree(self) -> None:
        """
        The term table and the grouping by powers of c give the same B2.
        """
        generator = random.Random(RANDOM_SEED + 41)
        for _ in range(20):
            params = random_parameters(generator)
            self.assertEqual(b2_from_terms(params), b2_by_powers_of_c(params))

    @pytest.mark.stage_4_2_hfamily_checks
    @pytest.mark.constructions
    def test_b3_identity(self) -> None:
        """
        B3 = -B1 * C2.
        """
        generator = random.Random(RANDOM_SEED + 42)
        for _ in range(50):
            values = h_coefficients(random_parameters(generator))
            self.assertEqual(-values.b1 * values.c2, values.b3)
            self.assertEqual(1, values.c1)


class HSurfaceTest(ExtendedTestCase):
    """
    H^(n) and its fibers.
    """

    def setUp(self) -> None:
        """
        Define start instructions for HSurfaceTest class.
        """
        self.t = RationalFunction.variable()

    @pytest.mark.stage_4_2_hfamily_checks
    @pytest.mark.constructions
    def test_equation(self) -> None:
        """
        a2 = A, a4 = B1 t^n + B2 + B3/t^n, a6 = (t^n + C2/t^n)^2.
        """
        values = h_coefficients(EXAMPLE)
        surface = h_surface(EXAMPLE, 2)
        self.assertEqual(values.a, surface.a2)
        self.assertEqual(
            self.t**2 * values.b1 + values.b2 + values.b3 / self.t**2, surface.a4
        )
        self.assertEqual((self.t**2 + values.c2 / self.t**2) ** 2, surface.a6)
        self.assertRaisesWithMessage("n = 4", NonK3BaseChangeError, h_surface, EXAMPLE, 4)

    @pytest.mark.stage_4_2_hfamily_checks
    @pytest.mark.constructions
    def test_h_table(self) -> None:
        """
        2IV* + 8I1, 2IV + 12I1 and 24I1.
        """
        for params in GENERAL_PARAMETERS:
            for n in range(1, 4):
                fibers = classify_fibers(h_surface(params, n))
                self.assertTrue(expected_h_fibers(n).matches(fibers), f"n = {n}, {params}")
                self.assertTrue(is_k3(fibers))

    @pytest.mark.stage_4_2_hfamily_checks
    @pytest.mark.constructions
    def test_h_ranks(self) -> None:
        """
        Shioda-Tate gives 2 + rho, 10 + rho, 14 + rho; rank 15 for rho = 1 and n = 3.
        """
        for n in range(1, 4):
            fibers = classify_fibers(h_surface(EXAMPLE, n))
            for rho in range(1, 5):
                self.assertEqual(h_rank_offset(n) + rho, shioda_tate_rank(fibers, 16 + rho))
        self.assertEqual(15, shioda_tate_rank(classify_fibers(h_surface(EXAMPLE, 3)), 17))


class IntermediateFibrationTest(ExtendedTestCase):
    """
    The fibration with I6 fibers at t1 = 0 and infinity.
    """

    def setUp(self) -> None:
        """
        Define start instructions for IntermediateFibrationTest class.
        """
        self.t = RationalFunction.variable()
        self.fibration = intermediate_fibration(EXAMPLE)

    @pytest.mark.stage_4_2_hfamily_checks
    @pytest.mark.constructions
    def test_equation(self) -> None:
        """
        P and Q at the example parameters.
        """
        surface = self.fibration.surface
        expected_p = UniPoly(
            [
                Fraction(389376, 5764801),
                Fraction(-7488, 117649),
                Fraction(4856, 2401),
                Fraction(-3, 49),
                Fraction(1, 16),
            ]
        )
        self.assertEqual(RationalFunction(expected_p), surface.a2)
        self.assertTrue(surface.a6.is_zero())
        self.assertEqual(0, surface.a4(Fraction(26, 49)))
        self.assertEqual(0, surface.a4(Fraction(96, 49)))
        self.assertEqual(3, surface.a4.valuation_at(0))

    @pytest.mark.stage_4_2_hfamily_checks
    @pytest.mark.constructions
    def test_fibers(self) -> None:
        """
        I6 at 0 and infinity, I2 at -2(b - a)c and -2b(c - 1), eight I1.
        """
        fibers = classify_fibers(self.fibration.surface)
        self.assertEqual(FiberType.from_name("I6"), fibers.at(Place.finite(0)))
        self.assertEqual(FiberType.from_name("I6"), fibers.at(Place.infinity()))
        self.assertEqual(FiberType.from_name("I2"), fibers.at(Place.finite(Fraction(96, 49))))
        self.assertEqual(FiberType.from_name("I2"), fibers.at(Place.finite(Fraction(26, 49))))
        self.assertEqual({"I1": 8, "I2": 2, "I6": 2}, fibers.type_counts())
        self.assertEqual(24, fibers.euler_total)

    @pytest.mark.stage_4_2_hfamily_checks
    @pytest.mark.constructions
    def test_section_metadata(self) -> None:
        """
        x_s = -4(a - 1)(b - 1)t(t - c)(ct - ab) and the documented parameters.
        """
        x_s = self.fibration.section_x
        self.assertEqual(0, x_s(Fraction(-6, 7)))
        self.assertEqual(0, x_s(Fraction(1, 6)))
        self.assertEqual(Fraction(3120, 343), x_s(1))
        self.assertEqual(0, self.fibration.section_y(Fraction(-1, 7)))
        data = self.fibration.to_dict()
        self.assertEqual({"x", "y"}, set(data["section"]))
        self.assertTrue(data["t1"].startswith("t1 = "))
        self.assertTrue(data["t2"].startswith("t2 = "))


if __name__ == "__main__":
    unittest.main()
