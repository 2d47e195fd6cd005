"""
Checks for genus-2 curves and their Igusa-Clebsch invariants.
"""

import itertools
import random
import unittest
from fractions import Fraction

import pytest

from admin_utils.test_params import RANDOM_SEED
from core_utils.constants import EXAMPLE43_PATH, QM_CURVE_PATH, SPLIT_CURVE_PATH
from core_utils.io import curve_coefficients, load_curve_record
from core_utils.tests.utils import ExtendedTestCase, random_polynomial, random_rational
from exactcore.polynomial import UniPoly
from genus2.curve import (
    bad_primes_up_to,
    Genus2Curve,
    has_good_reduction,
    igusa_clebsch,
    IgusaClebsch,
    NotAGenus2CurveError,
)


def load_curve(path) -> Genus2Curve:  # type: ignore[no-untyped-def]
    """
    Read a shipped curve.

    Args:
        path: Path to the record

    Returns:
        Genus2Curve: The curve
    """
    return Genus2Curve(curve_coefficients(load_curve_record(path)))


def root_difference_invariants(roots: list[Fraction]) -> IgusaClebsch:
    """
    Classical root-difference sums for a monic sextic with the given roots.

    Args:
        roots (list[Fraction]): Six distinct roots

    Returns:
        IgusaClebsch: Invariants
    """

    def square(first: int, second: int) -> Fraction:
        return (roots[first] - roots[second]) ** 2

    def triangle(triple: tuple[int, ...]) -> Fraction:
        return square(triple[0], triple[1]) * square(triple[1], triple[2]) * square(
            triple[2], triple[0]
        )

    def matchings(indices: list[int]) -> list[list[tuple[int, int]]]:
        if not indices:
            return [[]]
        head, rest = indices[0], indices[1:]
        found = []
        for position, partner in enumerate(rest):
            remaining = rest[:position] + rest[position + 1 :]
            for matching in matchings(remaining):
                found.append([(head, partner)] + matching)
        return found

    i2 = sum(
        (
            square(*pairs[0]) * square(*pairs[1]) * square(*pairs[2])
            for pairs in matchings(list(range(6)))
        ),
        Fraction(0),
    )
    i4 = Fraction(0)
    i6 = Fraction(0)
    for triple in itertools.combinations(range(1, 6), 2):
        first = (0,) + triple
        second = tuple(index for index in range(6) if index not in first)
        base = triangle(first) * triangle(second)
        i4 += base
        for image in itertools.permutations(second):
            i6 += base * square(first[0], image[0]) * square(first[1], image[1]) * square(
                first[2], image[2]
            )
    i10 = Fraction(1)
    for first_index, second_index in itertools.combinations(range(6), 2):
        i10 *= square(first_index, second_index)
    return IgusaClebsch(i2, i4, i6, i10)


def moebius_model(curve: Genus2Curve, matrix: tuple[Fraction, ...]) -> Genus2Curve:
    """
    Model (cx + d)^6 f((ax + b)/(cx + d)) of the same curve.

    Args:
        curve (Genus2Curve): Curve
        matrix (tuple[Fraction, ...]): a, b, c, d with ad - bc != 0

    Returns:
        Genus2Curve: Transformed model
    """
    a, b, c, d = matrix
    x = UniPoly([0, 1], var="x")
    transformed = UniPoly([], var="x")
    for index, value in enumerate(curve.sextic_coefficients()):
        transformed = transformed + (a * x + b) ** index * (c * x + d) ** (6 - index) * value
    return Genus2Curve(transformed)


class Genus2CurveTest(ExtendedTestCase):
    """
    Validation and reduction of curve models.
    """

    @pytest.mark.stage_2_1_curve_checks
    @pytest.mark.genus2
    def test_rejects_invalid_polynomials(self) -> None:
        """
        Repeated roots and wrong degrees are not genus-2 curves.
        """
        x = UniPoly([0, 1], var="x")
        self.assertRaisesWithMessage(
            "square factor", NotAGenus2CurveError, Genus2Curve, (x - 1) ** 2 * (x**4 + 1)
        )
        self.assertRaisesWithMessage("quartic", NotAGenus2CurveError, Genus2Curve, x**4 + 1)
        self.assertRaisesWithMessage(
            "degree 7", NotAGenus2CurveError, Genus2Curve, x**7 + 1
        )
        self.assertEqual(5, Genus2Curve([1, 0, 0, 0, 0, 1, 0]).degree)

    @pytest.mark.stage_2_1_curve_checks
    @pytest.mark.genus2
    def test_shipped_curves_load(self) -> None:
        """
        The three example curves parse to the expected models.
        """
        example = load_curve(EXAMPLE43_PATH)
        x = UniPoly([0, 1], var="x")
        expected = x * (x - 1) * (x + 1) * (x - Fraction(1, 7)) * (x + Fraction(6, 7))
        self.assertEqual(expected, example.f)
        self.assertEqual(6, load_curve(QM_CURVE_PATH).degree)
        self.assertEqual(Fraction(-52560403896), load_curve(SPLIT_CURVE_PATH).f.leading)

    @pytest.mark.stage_2_1_curve_checks
    @pytest.mark.genus2
    def test_reduction_types(self) -> None:
        """
        Bad primes of the example curves.
        """
        example = load_curve(EXAMPLE43_PATH)
        self.assertFalse(has_good_reduction(example, 7))
        self.assertTrue(has_good_reduction(example, 37))
        self.assertTrue(has_good_reduction(example, 41))
        self.assertFalse(has_good_reduction(example, 3))
        self.assertEqual(
            [2, 3, 7, 11, 13, 23], bad_primes_up_to(load_curve(SPLIT_CURVE_PATH), 43)
        )


class IgusaClebschTest(ExtendedTestCase):
    """
    Normalization and invariance of the Igusa-Clebsch invariants.
    """

    def setUp(self) -> None:
        """
        Define start instructions for IgusaClebschTest class.
        """
        self.generator = random.Random(RANDOM_SEED + 10)

    def _random_curve(self) -> Genus2Curve:
        while True:
            try:
                return Genus2Curve(random_polynomial(self.generator, 6, "x"))
            except NotAGenus2CurveError:
                continue

    @pytest.mark.stage_2_1_curve_checks
    @pytest.mark.genus2
    def test_known_values(self) -> None:
        """
        y^2 = x^6 + 1 and the quaternionic multiplication curve.
        """
        self.assertEqual(
            IgusaClebsch(Fraction(-240), Fraction(1620), Fraction(-119880), Fraction(-46656)),
            igusa_clebsch(Genus2Curve([1, 0, 0, 0, 0, 0, 1])),
        )
        self.assertEqual(
            IgusaClebsch(
                Fraction(4707332, 75),
                Fraction(-45177216, 25),
                Fraction(-70758919973504, 1875),
                Fraction(-9723005972363264, 50625),
            ),
            igusa_clebsch(load_curve(QM_CURVE_PATH)),
        )

    @pytest.mark.stage_2_1_curve_checks
    @pytest.mark.genus2
    def test_root_difference_oracle(self) -> None:
        """
        Coefficient formulas agree with the classical root-difference sums.
        """
        roots = [Fraction(value) for value in (0, 1, -1, 2, -2, 3)]
        curve = Genus2Curve(UniPoly.from_roots(roots, var="x"))
        expected = root_difference_invariants(roots)
        self.assertEqual(
            IgusaClebsch(
                Fraction(3110), Fraction(165952), Fraction(159056000), Fraction(1194393600)
            ),
            expected,
        )
        self.assertEqual(expected, igusa_clebsch(curve))

    @pytest.mark.stage_2_1_curve_checks
    @pytest.mark.genus2
    def test_quintic_with_root_at_infinity(self) -> None:
        """
        The quintic x(x-1)(x+1)(x-2)(x+2) against the image of its roots under x -> 1/(x - 3).
        """
        quintic_roots = [Fraction(value) for value in (0, 1, -1, 2, -2)]
        quintic = Genus2Curve(UniPoly.from_roots(quintic_roots, var="x"))
        invariants = igusa_clebsch(quintic)
        self.assertEqual(
            IgusaClebsch(Fraction(310), Fraction(2320), Fraction(229920), Fraction(82944)),
            invariants,
        )
        moved = [1 / (root - 3) for root in quintic_roots] + [Fraction(0)]
        self.assertEqual(
            root_difference_invariants(moved).absolute_invariants(),
            invariants.absolute_invariants(),
        )

    @pytest.mark.stage_2_1_curve_checks
    @pytest.mark.genus2
    def test_homogeneity(self) -> None:
        """
        Scaling f by lambda scales I_k by lambda^k.
        """
        for _ in range(5):
            curve = self._random_curve()
            scale = random_rational(self.generator, nonzero=True)
            base = igusa_clebsch(curve)
            scaled = igusa_clebsch(Genus2Curve(curve.f * scale))
            self.assertEqual(
                IgusaClebsch(
                    base.i2 * scale**2,
                    base.i4 * scale**4,
                    base.i6 * scale**6,
                    base.i10 * scale**10,
                ),
                scaled,
            )

    @pytest.mark.stage_2_1_curve_checks
    @pytest.mark.genus2
    def test_absolute_invariants_under_model_changes(self) -> None:
        """
        Twenty random Moebius changes of model keep the absolute invariants.
        """
        curve = self._random_curve()
        expected = igusa_clebsch(curve).absolute_invariants()
        changes = 0
        while changes < 20:
            matrix = tuple(random_rational(self.generator) for _ in range(4))
            if matrix[0] * matrix[3] == matrix[1] * matrix[2]:
                continue
            changed = igusa_clebsch(moebius_model(curve, matrix))
            self.assertEqual(expected, changed.absolute_invariants())
            changes += 1


if __name__ == "__main__":
    unittest.main()
