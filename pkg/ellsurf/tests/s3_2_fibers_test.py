"""
Checks for Kodaira fiber classification and Shioda-Tate arithmetic.
"""

import random
import unittest
from fractions import Fraction

import pytest

from admin_utils.test_params import RANDOM_SEED
from core_utils.tests.utils import ExtendedTestCase, random_rational
from ellsurf.fibers import (
    classify_fibers,
    FiberConfiguration,
    FiberFamily,
    FiberType,
    InconsistentPicardInputError,
    is_k3,
    kodaira_type,
    KodairaFiber,
    Place,
    PlaceKind,
    shioda_tate_rank,
    UnknownValuationPatternError,
)
from ellsurf.weierstrass import WeierstrassSurface
from exactcore.polynomial import UniPoly
from exactcore.rational_function import RationalFunction


def configuration(*names: str) -> FiberConfiguration:
    """
    Configuration with one fiber per name; "5I1" bundles five I1 fibers into one cluster.

    Args:
        *names (str): Type names, optionally prefixed by a count

    Returns:
        FiberConfiguration: Configuration on arbitrary places
    """
    fibers = []
    for position, name in enumerate(names):
        count = 1
        if name[0].isdigit():
            prefix = name.split("I", 1)[0]
            count, name = int(prefix), name[len(prefix) :]
        roots = [Fraction(100 * position + offset) for offset in range(count)]
        place = (
            Place.finite(roots[0])
            if count == 1
            else Place(PlaceKind.CLUSTER, cluster=UniPoly.from_roots(roots))
        )
        fibers.append(KodairaFiber(FiberType.from_name(name), place))
    return FiberConfiguration(tuple(fibers))


class KodairaTableTest(ExtendedTestCase):
    """
    Types from minimal valuations.
    """

    @pytest.mark.stage_3_2_fibers_checks
    @pytest.mark.ellsurf
    def test_valuation_table(self) -> None:
        """
        Every row of the characteristic 0 table.
        """
        expected = {
            (0, 0, 5): "I5",
            (1, 1, 2): "II",
            (1, 2, 3): "III",
            (2, 2, 4): "IV",
            (2, 3, 6): "I0*",
            (2, 3, 9): "I3*",
            (3, 4, 8): "IV*",
            (3, 5, 9): "III*",
            (4, 5, 10): "II*",
            (None, 1, 2): "II",
            (1, None, 3): "III",
        }
        for valuations, name in expected.items():
            self.assertEqual(name, kodaira_type(*valuations).name)

    @pytest.mark.stage_3_2_fibers_checks
    @pytest.mark.ellsurf
    def test_minimalization(self) -> None:
        """
        Non-minimal and pole valuations are shifted by (4k, 6k, 12k).
        """
        self.assertIsNone(kodaira_type(0, 0, 0))
        self.assertIsNone(kodaira_type(4, 6, 12))
        self.assertEqual("I0*", kodaira_type(6, 9, 18).name)
        self.assertEqual("III*", kodaira_type(-1, None, -3).name)
        self.assertEqual("I2", kodaira_type(-4, -6, -10).name)

    @pytest.mark.stage_3_2_fibers_checks
    @pytest.mark.ellsurf
    def test_unknown_pattern(self) -> None:
        """
        Additive valuations outside the table.
        """
        self.assertRaisesWithMessage(
            "v(Delta) = 5", UnknownValuationPatternError, kodaira_type, 1, 1, 5
        )

    @pytest.mark.stage_3_2_fibers_checks
    @pytest.mark.ellsurf
    def test_fiber_type_numbers(self) -> None:
        """
        Components and Euler numbers per type.
        """
        expected = {
            "I1": (1, 1),
            "I6": (6, 6),
            "I0*": (5, 6),
            "I2*": (7, 8),
            "II": (1, 2),
            "III": (2, 3),
            "IV": (3, 4),
            "IV*": (7, 8),
            "III*": (8, 9),
            "II*": (9, 10),
        }
        for name, numbers in expected.items():
            fiber_type = FiberType.from_name(name)
            self.assertEqual(name, fiber_type.name)
            self.assertEqual(numbers, (fiber_type.components, fiber_type.euler))
        self.assertEqual(FiberType(FiberFamily.I_STAR, 0), FiberType.from_name("I0*"))


class ClassifyFibersTest(ExtendedTestCase):
    """
    Fibers of explicit surfaces.
    """

    def setUp(self) -> None:
        """
        Define start instructions for ClassifyFibersTest class.
        """
        self.t = RationalFunction.variable()

    @pytest.mark.stage_3_2_fibers_checks
    @pytest.mark.ellsurf
    def test_linear_a4(self) -> None:
        """
        y^2 = x^3 + t*x has III at 0 and III* at infinity.
        """
        fibers = classify_fibers(WeierstrassSurface.short(self.t, 0))
        self.assertEqual(FiberType.from_name("III"), fibers.at(Place.finite(0)))
        self.assertEqual(FiberType.from_name("III*"), fibers.at(Place.infinity()))
        self.assertEqual(12, fibers.euler_total)
        self.assertFalse(is_k3(fibers))

    @pytest.mark.stage_3_2_fibers_checks
    @pytest.mark.ellsurf
    def test_cluster_place(self) -> None:
        """
        y^2 = x^3 - 3x + t^2 + 2 has I2 at 0, two I1 at t^2 = -4 and IV* at infinity.
        """
        fibers = classify_fibers(WeierstrassSurface.short(-3, self.t**2 + 2))
        self.assertEqual(3, len(fibers.fibers))
        first, cluster, last = fibers.fibers
        self.assertEqual(("I2", Place.finite(0)), (first.fiber_type.name, first.place))
        self.assertEqual(PlaceKind.CLUSTER, cluster.place.kind)
        self.assertEqual(UniPoly([4, 0, 1]), cluster.place.cluster)
        self.assertEqual(("I1", 2), (cluster.fiber_type.name, cluster.count))
        self.assertEqual(("IV*", Place.infinity()), (last.fiber_type.name, last.place))
        self.assertEqual({"I1": 2, "I2": 1, "IV*": 1}, fibers.type_counts())
        self.assertEqual(12, fibers.euler_total)

    @pytest.mark.stage_3_2_fibers_checks
    @pytest.mark.ellsurf
    def test_invariance_under_rescaling(self) -> None:
        """
        (x, y) -> (u^2 x, u^3 y) leaves the fibers unchanged, for constant u and for u = t.
        """
        generator = random.Random(RANDOM_SEED + 31)
        surface = WeierstrassSurface.short(self.t**3 - 2, self.t * 3 + 1)
        expected = classify_fibers(surface)
        for _ in range(3):
            scale = random_rational(generator, nonzero=True)
            self.assertEqual(expected, classify_fibers(surface.substitute(scale, self.t)))
        self.assertEqual(expected, classify_fibers(surface.substitute(self.t, self.t)))
        self.assertEqual(
            expected, classify_fibers(surface.substitute(self.t**2 + 1, self.t))
        )

    @pytest.mark.stage_3_2_fibers_checks
    @pytest.mark.ellsurf
    def test_k3_base_change(self) -> None:
        """
        y^2 = x^3 - 3x + t is rational with II* at infinity, its pullback by t^8 is K3.
        """
        rational = WeierstrassSurface.short(-3, self.t)
        fibers = classify_fibers(rational)
        self.assertEqual({"I1": 2, "II*": 1}, fibers.type_counts())
        self.assertEqual(FiberType.from_name("I1"), fibers.at(Place.finite(-2)))
        self.assertEqual(12, fibers.euler_total)
        fibers = classify_fibers(rational.base_change(8))
        self.assertEqual({"I1": 16, "IV*": 1}, fibers.type_counts())
        self.assertEqual(FiberType.from_name("IV*"), fibers.at(Place.infinity()))
        self.assertIsNone(fibers.at(Place.finite(0)))
        self.assertTrue(is_k3(fibers))
        fibers = classify_fibers(WeierstrassSurface.short(self.t**3, 0))
        self.assertEqual(FiberType.from_name("III*"), fibers.at(Place.finite(0)))
        self.assertEqual(FiberType.from_name("III"), fibers.at(Place.infinity()))


class ShiodaTateTest(ExtendedTestCase):
    """
    Mordell-Weil rank from the Picard number.
    """

    @pytest.mark.stage_3_2_fibers_checks
    @pytest.mark.ellsurf
    def test_ranks(self) -> None:
        """
        Ranks of fiber configurations met in the constructions.
        """
        self.assertEqual(0, shioda_tate_rank(configuration("II*", "III*", "5I1"), 17))
        self.assertEqual(15, shioda_tate_rank(configuration("IV", "20I1"), 19))
        self.assertEqual(15, shioda_tate_rank(configuration("24I1"), 17))
        self.assertEqual(0, shioda_tate_rank(configuration(), 2))

    @pytest.mark.stage_3_2_fibers_checks
    @pytest.mark.ellsurf
    def test_k3_by_euler_number(self) -> None:
        """
        Euler number 24 exactly.
        """
        self.assertTrue(is_k3(configuration("II*", "III*", "5I1")))
        self.assertTrue(is_k3(configuration("24I1")))
        self.assertFalse(is_k3(configuration("III", "III*")))

    @pytest.mark.stage_3_2_fibers_checks
    @pytest.mark.ellsurf
    def test_inconsistent_input(self) -> None:
        """
        rho below 2 or below the trivial lattice.
        """
        self.assertRaisesWithMessage(
            "rho = 1", InconsistentPicardInputError, shioda_tate_rank, configuration(), 1
        )
        self.assertRaisesWithMessage(
            "too many components",
            InconsistentPicardInputError,
            shioda_tate_rank,
            configuration("II*", "III*"),
            10,
        )


if __name__ == "__main__":
    unittest.main()
