"""
Checks for rational functions in one variable.
"""

import unittest
from fractions import Fraction

import pytest

from core_utils.tests.utils import ExtendedTestCase
from exactcore.polynomial import UniPoly, ZeroPolynomialError
from exactcore.rational_function import IncompatibleScalingError, RationalFunction


class RationalFunctionTest(ExtendedTestCase):
    """
    Arithmetic, substitutions and valuations of rational functions.
    """

    def setUp(self) -> None:
        """
        Define start instructions for RationalFunctionTest class.
        """
        self.t = RationalFunction.variable()
        self.poly_t = UniPoly([0, 1])

    @pytest.mark.stage_1_3_rational_function_checks
    @pytest.mark.exactcore
    def test_lowest_terms(self) -> None:
        """
        Common factors cancel and the denominator becomes monic.
        """
        t = self.poly_t
        reduced = RationalFunction(t**2 - 1, 2 * t - 2)
        self.assertTrue(reduced.is_polynomial())
        self.assertEqual(UniPoly([Fraction(1, 2), Fraction(1, 2)]), reduced.numerator)
        scaled = RationalFunction(UniPoly([3]), 3 * t + 6)
        self.assertEqual(UniPoly([2, 1]), scaled.denominator)
        self.assertEqual(UniPoly([1]), scaled.numerator)
        self.assertRaisesWithMessage(
            "zero denominator", ZeroPolynomialError, RationalFunction, t, UniPoly([])
        )

    @pytest.mark.stage_1_3_rational_function_checks
    @pytest.mark.exactcore
    def test_field_operations(self) -> None:
        """
        Sums, quotients and negative powers.
        """
        t = self.t
        self.assertEqual(2 / t, 1 / t + 1 / t)
        self.assertEqual(1, t * t**-1)
        self.assertEqual(RationalFunction(UniPoly([1]), self.poly_t**2), t**-2)
        self.assertTrue((t - t).is_zero())
        self.assertEqual(Fraction(5), ((t**2 + 1) / (t - 1))(3))
        self.assertRaisesWithMessage(
            "pole at 1", ZeroDivisionError, (1 / (t - 1)).__call__, 1
        )
        self.assertRaisesWithMessage("t is not constant", ValueError, t.constant_value)

    @pytest.mark.stage_1_3_rational_function_checks
    @pytest.mark.exactcore
    def test_composition(self) -> None:
        """
        Substituting 1/(2t) and powers of t.
        """
        t = self.t
        outer = t**2 / (t + 1)
        self.assertEqual(1 / (4 * t**2 + 2 * t), outer.compose(1 / (2 * t)))
        self.assertEqual(outer(1 / (2 * t)), outer.compose(1 / (2 * t)))
        moebius = (t + 1) / (t - 2)
        self.assertEqual((1 + t) / (1 - 2 * t), moebius.substitute_power(-1))
        self.assertEqual((t**3 + 1) / (t**3 - 2), moebius.substitute_power(3))

    @pytest.mark.stage_1_3_rational_function_checks
    @pytest.mark.exactcore
    def test_rescaling_by_known_power(self) -> None:
        """
        t -> mu*t with only mu^g known.
        """
        t = self.t
        self.assertEqual(4 * t**2 + 3, (t**2 + 3).rescale(Fraction(4), 2))
        laurent = (t**4 + 1) / t**2
        self.assertEqual(laurent.compose(3 * t), laurent.rescale(Fraction(9), 2))
        self.assertRaisesWithMessage(
            "odd exponent with g = 2",
            IncompatibleScalingError,
            (t + 1).rescale,
            Fraction(4),
            2,
        )

    @pytest.mark.stage_1_3_rational_function_checks
    @pytest.mark.exactcore
    def test_valuations(self) -> None:
        """
        Orders of vanishing at finite points and at infinity.
        """
        t = self.t
        function = t**3 / (t - 1)
        self.assertEqual(3, function.valuation_at(0))
        self.assertEqual(-1, function.valuation_at(1))
        self.assertEqual(0, function.valuation_at(5))
        self.assertEqual(-2, function.valuation_at_infinity())

    @pytest.mark.stage_1_3_rational_function_checks
    @pytest.mark.exactcore
    def test_serialized_form(self) -> None:
        """
        Coefficient-list serialization reads back to the same function.
        """
        t = self.t
        function = (t + 1) / (t**2 - 2)
        self.assertEqual("[1, 1]/[-2, 0, 1]", function.to_string())
        self.assertEqual(function, RationalFunction.from_string(function.to_string()))
        self.assertEqual(
            (3 * t**3 + 1) / t**2, RationalFunction.laurent({-2: 1, 1: 3})
        )


if __name__ == "__main__":
    unittest.main()
