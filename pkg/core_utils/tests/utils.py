"""
Utils for the package tests.
"""

import random
import shutil
import unittest
from fractions import Fraction
from typing import Any

from admin_utils.test_params import TEST_PATH
from exactcore.polynomial import UniPoly


class ExceptionIsNotRaised(Exception):
    """
    No exception was raised.
    """


class ExtendedTestCase(unittest.TestCase):
    """
    Enable messaging when assertRaises is triggered.
    """

    # pylint: disable=invalid-name
    def assertRaisesWithMessage(
        self, msg: str, exception: Any, func: Any, *args: Any, **kwargs: Any
    ) -> None:
        """
        Method assertRaises counterparts with enabled messaging.

        Args:
            msg (str): Error message
            exception (Any): Exception
            func (Any): Function
            *args (Any): Arguments
            **kwargs (Any): Options
        """
        try:
            func(*args, **kwargs)
            print(msg)
            raise ExceptionIsNotRaised
        except ExceptionIsNotRaised:
            raise AssertionError(msg) from ExceptionIsNotRaised
        except Exception as inst:  # pylint: disable=broad-except
            self.assertEqual(exception, type(inst), msg)


def random_rational(generator: random.Random, bound: int = 9, nonzero: bool = False) -> Fraction:
    """
    Small random rational.

    Args:
        generator (random.Random): Seeded generator
        bound (int): Bound for numerator and denominator
        nonzero (bool): Exclude zero

    Returns:
        Fraction: Random value
    """
    while True:
        value = Fraction(generator.randint(-bound, bound), generator.randint(1, bound))
        if value or not nonzero:
            return value


def random_polynomial(generator: random.Random, degree: int, var: str = "t") -> UniPoly:
    """
    Random rational polynomial of exact degree.

    Args:
        generator (random.Random): Seeded generator
        degree (int): Degree
        var (str): Variable label

    Returns:
        UniPoly: Random polynomial
    """
    coefficients = [random_rational(generator) for _ in range(degree)]
    coefficients.append(random_rational(generator, nonzero=True))
    return UniPoly(coefficients, var=var)


def prepare_test_folder() -> None:
    """
    Create an empty folder for files written by tests.
    """
    shutil.rmtree(TEST_PATH, ignore_errors=True)
    TEST_PATH.mkdir(exist_ok=True)


def cleanup_test_folder() -> None:
    """
    Remove the folder for files written by tests.
    """
    shutil.rmtree(TEST_PATH, ignore_errors=True)
