"""
Checks for the isomorphism search over monomial reparameterizations.
"""

import unittest
from fractions import Fraction

import pytest

from core_utils.tests.utils import ExtendedTestCase
from ellsurf.isomorphism import same_surface_up_to_iso
from ellsurf.weierstrass import WeierstrassSurface
from exactcore.rational_function import RationalFunction


class SameSurfaceTest(ExtendedTestCase):
    """
    Matches on y^2 = x^3 + t*x + 1 and its transforms.
    """

    def setUp(self) -> None:
        """
        Define start instructions for SameSurfaceTest class.
        """
        self.t = RationalFunction.variable()
        self.surface = WeierstrassSurface.short(self.t, 1)

    @pytest.mark.stage_3_3_isomorphism_checks
    @pytest.mark.ellsurf
    def test_identity(self) -> None:
        """
        A surface matches itself with trivial parameters.
        """
        match = same_surface_up_to_iso(self.surface, self.surface)
        self.assertIsNotNone(match)
        self.assertEqual((1, Fraction(1), 1, 1), (match.exponent, match.lam, match.d, match.u))

    @pytest.mark.stage_3_3_isomorphism_checks
    @pytest.mark.ellsurf
    def test_quadratic_twist(self) -> None:
        """
        The twist by 3 is reported as d = 3.
        """
        match = same_surface_up_to_iso(self.surface, self.surface.quadratic_twist(3))
        self.assertEqual((Fraction(1), 3, 1), (match.lam, match.d, match.u))
        self.assertEqual(3, match.k)

    @pytest.mark.stage_3_3_isomorphism_checks
    @pytest.mark.ellsurf
    def test_rescaled_parameter(self) -> None:
        """
        t -> 5t together with (x, y) -> (4x, 8y).
        """
        match = same_surface_up_to_iso(self.surface, self.surface.substitute(2, self.t * 5))
        self.assertEqual((1, Fraction(5), 1, 2), (match.exponent, match.lam, match.d, match.u))
        self.assertEqual(
            {
                "exponent": 1,
                "lambda": "5",
                "mu": "5",
                "root_degree": 1,
                "k": "[1/4]/[1]",
                "d": 1,
                "u": "[2]/[1]",
            },
            match.to_dict(),
        )

    @pytest.mark.stage_3_3_isomorphism_checks
    @pytest.mark.ellsurf
    def test_inverted_parameter(self) -> None:
        """
        t -> 1/t needs the exponent -1.
        """
        match = same_surface_up_to_iso(self.surface, self.surface.substitute(1, 1 / self.t))
        self.assertEqual((-1, Fraction(1), 1), (match.exponent, match.lam, match.d))

    @pytest.mark.stage_3_3_isomorphism_checks
    @pytest.mark.ellsurf
    def test_constant_j(self) -> None:
        """
        y^2 = x^3 + 4t*x is the twist by 2 of y^2 = x^3 + t*x.
        """
        match = same_surface_up_to_iso(
            WeierstrassSurface.short(self.t, 0), WeierstrassSurface.short(self.t * 4, 0)
        )
        self.assertEqual((Fraction(1), 2, 1), (match.lam, match.d, match.u))

    @pytest.mark.stage_3_3_isomorphism_checks
    @pytest.mark.ellsurf
    def test_no_match(self) -> None:
        """
        Different j-invariant degrees cannot match.
        """
        self.assertIsNone(
            same_surface_up_to_iso(self.surface, WeierstrassSurface.short(self.t**2, 1))
        )


if __name__ == "__main__":
    unittest.main()
