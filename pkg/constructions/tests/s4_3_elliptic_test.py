"""
Checks for elliptic curves over Q and the degree-3 covers of the split example.
"""

import unittest
from fractions import Fraction

import pytest

from constructions.elliptic import (
    CoverMap,
    division_polynomial,
    ec_is_isomorphic,
    ec_j_invariant,
    ec_quadratic_twist,
    EllipticCurveQ,
    has_rational_n_torsion,
    multiply_point,
    rational_torsion_points,
    short_model,
    SingularCurveError,
    UnsupportedTorsionOrderError,
    verify_cover,
)
from core_utils.constants import SPLIT_CURVE_PATH
from core_utils.io import curve_coefficients, load_curve_record
from core_utils.tests.utils import ExtendedTestCase
from exactcore.polynomial import UniPoly
from genus2.curve import Genus2Curve


class EllipticCurveTest(ExtendedTestCase):
    """
    Invariants, models and twists of 14a1 and 14a2.
    """

    def setUp(self) -> None:
        """
        Define start instructions for EllipticCurveTest class.
        """
        self.record = load_curve_record(SPLIT_CURVE_PATH)
        self.e1 = EllipticCurveQ.from_record(self.record.elliptic_curves["E1"])
        self.e2 = EllipticCurveQ.from_record(self.record.elliptic_curves["E2"])

    @pytest.mark.stage_4_3_elliptic_checks
    @pytest.mark.constructions
    def test_invariants(self) -> None:
        """
        c4, c6, Delta and j of 14a1; j of 14a2.
        """
        self.assertEqual((-215, 5291, -21952), self.e1.invariants())
        self.assertEqual(Fraction(215, 28) ** 3, ec_j_invariant(self.e1))
        self.assertEqual(Fraction(1705, 98) ** 3, ec_j_invariant(self.e2))

    @pytest.mark.stage_4_3_elliptic_checks
    @pytest.mark.constructions
    def test_short_models(self) -> None:
        """
        y^2 = x^3 - 27*c4*x - 54*c6.
        """
        self.assertEqual(EllipticCurveQ(0, 0, 0, 5805, -285714), short_model(self.e1))
        self.assertEqual(EllipticCurveQ(0, 0, 0, -46035, -3116178), short_model(self.e2))
        expected = EllipticCurveQ.from_record(self.record.elliptic_curves["E1_short"])
        self.assertEqual(expected, short_model(self.e1))
        self.assertTrue(ec_is_isomorphic(self.e1, short_model(self.e1)))

    @pytest.mark.stage_4_3_elliptic_checks
    @pytest.mark.constructions
    def test_twist_of_e2(self) -> None:
        """
        The twist of 14a2 by -3 is y^2 = x^3 - 5115x + 115414 up to (x, y) -> (9x, 27y).
        """
        twisted = ec_quadratic_twist(self.e2, -3)
        self.assertEqual(EllipticCurveQ(0, 0, 0, -414315, 84136806), twisted)
        target = EllipticCurveQ.from_record(self.record.elliptic_curves["E2_twist_short"])
        self.assertTrue(ec_is_isomorphic(twisted, target))
        self.assertFalse(ec_is_isomorphic(short_model(self.e2), target))
        self.assertFalse(ec_is_isomorphic(self.e1, self.e2))

    @pytest.mark.stage_4_3_elliptic_checks
    @pytest.mark.constructions
    def test_special_j(self) -> None:
        """
        j = 1728 needs a fourth power, j = 0 a sixth power.
        """
        self.assertTrue(ec_is_isomorphic(EllipticCurveQ(a4=1), EllipticCurveQ(a4=16)))
        self.assertFalse(ec_is_isomorphic(EllipticCurveQ(a4=1), EllipticCurveQ(a4=4)))
        self.assertTrue(ec_is_isomorphic(EllipticCurveQ(a6=1), EllipticCurveQ(a6=64)))
        self.assertFalse(ec_is_isomorphic(EllipticCurveQ(a6=1), EllipticCurveQ(a6=8)))

    @pytest.mark.stage_4_3_elliptic_checks
    @pytest.mark.constructions
    def test_singular(self) -> None:
        """
        Nodes and cusps are refused.
        """
        self.assertRaisesWithMessage("cusp", SingularCurveError, EllipticCurveQ)
        self.assertRaisesWithMessage("node", SingularCurveError, EllipticCurveQ, 0, 0, 0, -3, 2)
        self.assertRaisesWithMessage(
            "d = 0", SingularCurveError, ec_quadratic_twist, self.e1, 0
        )


class TorsionTest(ExtendedTestCase):
    """
    Division polynomials and rational torsion.
    """

    def setUp(self) -> None:
        """
        Define start instructions for TorsionTest class.
        """
        record = load_curve_record(SPLIT_CURVE_PATH)
        self.e1 = EllipticCurveQ.from_record(record.elliptic_curves["E1"])
        self.e2 = EllipticCurveQ.from_record(record.elliptic_curves["E2"])

    @pytest.mark.stage_4_3_elliptic_checks
    @pytest.mark.constructions
    def test_division_polynomials(self) -> None:
        """
        f3 and f4 on y^2 = x^3 + x + 1; f6 contains f3.
        """
        curve = EllipticCurveQ(a4=1, a6=1)
        self.assertEqual(UniPoly([-1, 12, 6, 0, 3], var="x"), division_polynomial(curve, 3))
        self.assertEqual(
            UniPoly([-18, -8, -10, 40, 10, 0, 2], var="x"), division_polynomial(curve, 4)
        )
        self.assertEqual(12, division_polynomial(curve, 5).degree)
        sixth = division_polynomial(curve, 6)
        self.assertEqual(16, sixth.degree)
        self.assertTrue((sixth % division_polynomial(curve, 3)).is_zero())
        self.assertEqual(24, division_polynomial(curve, 7).degree)

    @pytest.mark.stage_4_3_elliptic_checks
    @pytest.mark.constructions
    def test_six_torsion(self) -> None:
        """
        Both curves have a rational point of order 6.
        """
        self.assertTrue(has_rational_n_torsion(self.e1, 6))
        self.assertTrue(has_rational_n_torsion(self.e2, 6))
        self.assertEqual(
            [(Fraction(327), Fraction(6048)), (Fraction(327), Fraction(-6048))],
            rational_torsion_points(self.e1, 6),
        )
        self.assertEqual(
            [(Fraction(-141), Fraction(756)), (Fraction(-141), Fraction(-756))],
            rational_torsion_points(self.e2, 6),
        )

    @pytest.mark.stage_4_3_elliptic_checks
    @pytest.mark.constructions
    def test_small_orders(self) -> None:
        """
        Points of order 2 and 3 on 14a1, none of order 4 or 5.
        """
        self.assertEqual([(Fraction(39), Fraction(0))], rational_torsion_points(self.e1, 2))
        points = rational_torsion_points(self.e1, 3)
        self.assertEqual([(Fraction(75), Fraction(756)), (Fraction(75), Fraction(-756))], points)
        model = short_model(self.e1)
        self.assertIsNone(multiply_point(model, points[0], 3))
        self.assertFalse(has_rational_n_torsion(self.e1, 4))
        self.assertFalse(has_rational_n_torsion(self.e1, 5))

    @pytest.mark.stage_4_3_elliptic_checks
    @pytest.mark.constructions
    def test_unsupported_order(self) -> None:
        """
        Orders outside 2..6.
        """
        self.assertRaisesWithMessage(
            "n = 7", UnsupportedTorsionOrderError, has_rational_n_torsion, self.e1, 7
        )
        self.assertRaisesWithMessage(
            "n = 1", UnsupportedTorsionOrderError, has_rational_n_torsion, self.e1, 1
        )


class CoverTest(ExtendedTestCase):
    """
    The maps from the split curve to E1 and to the twist of E2.
    """

    def setUp(self) -> None:
        """
        Define start instructions for CoverTest class.
        """
        self.record = load_curve_record(SPLIT_CURVE_PATH)
        self.curve = Genus2Curve(curve_coefficients(self.record))
        self.covers = {record.name: CoverMap.from_record(record) for record in self.record.covers}

    def target(self, name: str) -> EllipticCurveQ:
        """
        Target curve of a cover.

        Args:
            name (str): Map name

        Returns:
            EllipticCurveQ: The curve from the record
        """
        cover = next(record for record in self.record.covers if record.name == name)
        return EllipticCurveQ.from_record(self.record.elliptic_curves[cover.target])

    @pytest.mark.stage_4_3_elliptic_checks
    @pytest.mark.constructions
    def test_covers_verified(self) -> None:
        """
        Both maps land on their targets with degree 3.
        """
        for name in ("phi1", "phi2"):
            result = verify_cover(self.curve, self.target(name), self.covers[name])
            self.assertTrue(result.verified, name)
            self.assertEqual(3, result.degree)
            self.assertEqual({"map": name, "verified": True, "degree": 3}, result.to_dict())

    @pytest.mark.stage_4_3_elliptic_checks
    @pytest.mark.constructions
    def test_perturbed_cover(self) -> None:
        """
        Adding 1 to the constant term of the x numerator breaks the identity.
        """
        cover = self.covers["phi1"]
        broken = cover.with_x_numerator(cover.x_numerator + 1)
        result = verify_cover(self.curve, self.target("phi1"), broken)
        self.assertFalse(result.verified)
        self.assertFalse(result.even_residue.is_zero())
        self.assertFalse(result.to_dict()["verified"])
        self.assertIn("even_residue", result.to_dict())

    @pytest.mark.stage_4_3_elliptic_checks
    @pytest.mark.constructions
    def test_wrong_target(self) -> None:
        """
        phi1 does not land on the twist of E2.
        """
        result = verify_cover(self.curve, self.target("phi2"), self.covers["phi1"])
        self.assertFalse(result.verified)


if __name__ == "__main__":
    unittest.main()
