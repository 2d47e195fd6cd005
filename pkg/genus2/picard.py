"""
Simplicity and Picard number certificates for Jacobians of genus-2 curves.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Sequence

from sympy import isprime, primerange

from config.console_logging import get_child_logger
from config.constants import GENUS2_SETTINGS_PATH
from config.settings import PackageSettings
from exactcore.fields import NotAPrimeError
from exactcore.polynomial import UniPoly
from exactcore.toolkit import degree_pattern_mod_p, is_irreducible_mod_p
from genus2.counting import WeilPolynomial, frobenius_charpoly
from genus2.curve import Genus2Curve, reduction_obstruction
from genus2.galois import GaloisClass, quartic_galois_class, real_weil_quadratic

logger = get_child_logger(__file__)

_COUNTING = PackageSettings(GENUS2_SETTINGS_PATH).counting

INCONCLUSIVE = "inconclusive"


class EmptyPrimeListError(Exception):
    """
    Raised when no primes are given to a certification routine.
    """


class InsufficientPrimesError(Exception):
    """
    Raised when fewer than two distinct primes of good reduction remain.
    """


class UnknownEndomorphismClassError(Exception):
    """
    Raised when a Picard number is requested for an unknown endomorphism class.
    """


class EndomorphismClass(enum.Enum):
    """
    Endomorphism type of an abelian surface over the algebraic closure.
    """

    SIMPLE_Q = "simple-Q"
    SIMPLE_REAL_QUADRATIC = "simple-real-quadratic"
    SIMPLE_QUATERNION = "simple-quaternion"
    SIMPLE_CM_QUARTIC = "simple-CM-quartic"
    SPLIT_NONISOGENOUS = "split-nonisogenous"
    SPLIT_ISOGENOUS_NO_CM = "split-isogenous-noCM"
    SPLIT_ISOGENOUS_CM = "split-isogenous-CM"

    def __str__(self) -> str:
        """
        String representation of a class.

        Returns:
             str: Class label
        """
        return self.value


PICARD_TABLE: dict[EndomorphismClass, tuple[int, str]] = {
    EndomorphismClass.SIMPLE_Q: (1, "simple, endomorphism algebra Q"),
    EndomorphismClass.SIMPLE_REAL_QUADRATIC: (
        2,
        "simple, real multiplication by a real quadratic field",
    ),
    EndomorphismClass.SIMPLE_QUATERNION: (3, "simple, indefinite quaternion algebra over Q"),
    EndomorphismClass.SIMPLE_CM_QUARTIC: (2, "simple, CM by a quartic CM field"),
    EndomorphismClass.SPLIT_NONISOGENOUS: (2, "E1 x E2 with E1, E2 not isogenous"),
    EndomorphismClass.SPLIT_ISOGENOUS_NO_CM: (3, "E1 x E2 with E1 ~ E2 without CM"),
    EndomorphismClass.SPLIT_ISOGENOUS_CM: (4, "E1 x E2 with E1 ~ E2 with CM"),
}


def picard_from_endomorphism_class(value: EndomorphismClass | str) -> int:
    """
    Picard number of an abelian surface of the given endomorphism class.

    Args:
        value (EndomorphismClass | str): Class or its label

    Returns:
        int: rho of the abelian surface
    """
    try:
        key = value if isinstance(value, EndomorphismClass) else EndomorphismClass(value)
    except ValueError as error:
        raise UnknownEndomorphismClassError(f"Unknown endomorphism class {value!r}") from error
    return PICARD_TABLE[key][0]


def _power_sums(polynomial: UniPoly, count: int) -> list[Fraction]:
    monic = polynomial.monic()
    degree = monic.degree
    elementary = [(-1) ** index * monic.coefficient(degree - index) for index in range(degree + 1)]
    sums = [Fraction(degree)]
    for order in range(1, count + 1):
        value = sum(
            (
                (-1) ** (index - 1) * elementary[index] * sums[order - index]
                for index in range(1, min(order - 1, degree) + 1)
            ),
            Fraction(0),
        )
        if order <= degree:
            value += (-1) ** (order - 1) * order * elementary[order]
        sums.append(value)
    return sums


def shifted_sum_resultant(first: UniPoly, second: UniPoly) -> UniPoly:
    """
    Res_y(first(y), second(x - y)) for monic inputs, whose roots are all sums alpha + beta.

    Args:
        first (UniPoly): Monic polynomial
        second (UniPoly): Monic polynomial

    Returns:
        UniPoly: Monic polynomial of degree deg(first) * deg(second) in x
    """
    degree = first.degree * second.degree
    first_sums = _power_sums(first, degree)
    second_sums = _power_sums(second, degree)
    sums = [
        sum(
            (
                comb(order, index) * first_sums[index] * second_sums[order - index]
                for index in range(order + 1)
            ),
            Fraction(0),
        )
        for order in range(degree + 1)
    ]
    elementary = [Fraction(1)]
    for order in range(1, degree + 1):
        total = sum(
            (
                (-1) ** (index - 1) * elementary[order - index] * sums[index]
                for index in range(1, order + 1)
            ),
            Fraction(0),
        )
        elementary.append(total / order)
    return UniPoly(
        [(-1) ** (degree - index) * elementary[degree - index] for index in range(degree + 1)],
        var="x",
    )


@dataclass(frozen=True)
class DisjointnessWitness:
    """
    Evidence that two Weil fields intersect only in the rationals.
    """

    route: str
    weil_primes: tuple[int, int]
    modulus: int | None
    kernels: tuple[int, int] | None = None
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        """
        Serialize for reports.

        Returns:
            dict[str, Any]: Route and witnesses
        """
        return {
            "route": self.route,
            "weil_primes": list(self.weil_primes),
            "modulus": self.modulus,
            "kernels": list(self.kernels) if self.kernels else None,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class PicardCertificate:
    """
    Certificate for rho(J(C)) = 1, or the components gathered before giving up.
    """

    curve: Genus2Curve
    primes: tuple[int, ...]
    weil_polynomials: tuple[WeilPolynomial, ...]
    galois_classes: tuple[GaloisClass, ...]
    simplicity_witness: int | None
    disjointness: DisjointnessWitness | None
    skipped_primes: tuple[int, ...] = field(default_factory=tuple)

    @property
    def conclusion(self) -> int | None:
        """
        Property for the certified Picard number.

        Returns:
            int | None: 1 when every component verifies, None when inconclusive
        """
        if self.simplicity_witness is None or self.disjointness is None:
            return None
        return 1

    def to_dict(self) -> dict[str, Any]:
        """
        Serialize with every witness embedded.

        Returns:
            dict[str, Any]: Certificate
        """
        return {
            "curve": self.curve.to_strings(),
            "primes": list(self.primes),
            "skipped_primes": list(self.skipped_primes),
            "weil_polynomials": [weil.to_strings() for weil in self.weil_polynomials],
            "galois_classes": [str(value) for value in self.galois_classes],
            "real_quadratic_kernels": [
                real_weil_quadratic(weil).kernel for weil in self.weil_polynomials
            ],
            "simplicity_witness": self.simplicity_witness,
            "disjointness": self.disjointness.to_dict() if self.disjointness else None,
            "conclusion": (
                f"rho = {self.conclusion}" if self.conclusion is not None else INCONCLUSIVE
            ),
        }


def _usable_primes(curve: Genus2Curve, primes: Sequence[int]) -> tuple[list[int], list[int]]:
    composite = [prime for prime in primes if not isprime(prime)]
    if composite:
        raise NotAPrimeError(f"Not primes: {composite}")
    usable: list[int] = []
    skipped: list[int] = []
    for prime in primes:
        if prime in usable or prime in skipped:
            continue
        obstruction = reduction_obstruction(curve, prime)
        if obstruction is None:
            usable.append(prime)
        else:
            logger.warning(f"Skipping {prime}: {obstruction}")
            skipped.append(prime)
    return usable, skipped


def certify_simple(curve: Genus2Curve, primes: Sequence[int]) -> int | None:
    """
    Search for a prime whose Frobenius charpoly has Galois group D4.

    Args:
        curve (Genus2Curve): The curve
        primes (Sequence[int]): Candidate primes

    Returns:
        int | None: Witness prime, None when inconclusive
    """
    if not primes:
        raise EmptyPrimeListError("No primes given for the simplicity test")
    usable, _ = _usable_primes(curve, primes)
    for prime in usable:
        weil = frobenius_charpoly(curve, prime)
        if quartic_galois_class(weil.polynomial) is GaloisClass.D4:
            logger.info(f"Simple Jacobian: Frobenius at {prime} has Galois group D4")
            return prime
    logger.info("Simplicity test inconclusive")
    return None


def _resultant_witness(first: WeilPolynomial, second: WeilPolynomial) -> DisjointnessWitness | None:
    combined = shifted_sum_resultant(first.polynomial, second.polynomial)
    for modulus in primerange(3, _COUNTING.resultant_prime_bound + 1):
        if is_irreducible_mod_p(combined, modulus):
            return DisjointnessWitness(
                route="resultant",
                weil_primes=(first.p, second.p),
                modulus=modulus,
                detail=(
                    f"Res_y(P_{first.p}(y), P_{second.p}(x - y)) is irreducible modulo {modulus}"
                ),
            )
    logger.warning(
        f"Resultant of P_{first.p} and P_{second.p} is reducible modulo every prime up to "
        f"{_COUNTING.resultant_prime_bound}, using the subfield route"
    )
    return None


def _non_isomorphism_detail(
    first: WeilPolynomial, second: WeilPolynomial, classes: tuple[GaloisClass, GaloisClass]
) -> tuple[int | None, str] | None:
    if classes[0] is not classes[1]:
        return None, f"Galois groups {classes[0]} and {classes[1]} differ"
    for modulus in primerange(3, _COUNTING.pattern_prime_bound + 1):
        first_pattern = degree_pattern_mod_p(first.polynomial, modulus)
        second_pattern = degree_pattern_mod_p(second.polynomial, modulus)
        if first_pattern and second_pattern and first_pattern != second_pattern:
            return (
                modulus,
                f"factorization patterns {first_pattern} and {second_pattern} modulo {modulus}",
            )
    return None


def _subfield_witness(
    first: WeilPolynomial, second: WeilPolynomial, classes: tuple[GaloisClass, GaloisClass]
) -> DisjointnessWitness | None:
    if any(value not in (GaloisClass.D4, GaloisClass.C4) for value in classes):
        return None
    kernels = (real_weil_quadratic(first).kernel, real_weil_quadratic(second).kernel)
    if 0 in kernels or 1 in kernels or kernels[0] == kernels[1]:
        return None
    found = _non_isomorphism_detail(first, second, classes)
    if found is None:
        return None
    modulus, detail = found
    return DisjointnessWitness(
        route="subfield-kernels",
        weil_primes=(first.p, second.p),
        modulus=modulus,
        kernels=kernels,
        detail=(
            f"real quadratic subfields Q(sqrt({kernels[0]})) and Q(sqrt({kernels[1]})); "
            f"{detail}"
        ),
    )


def certify_picard_one(curve: Genus2Curve, primes: Sequence[int]) -> PicardCertificate:
    """
    Certify rho(J(C)) = 1 from Frobenius charpolys at several primes.

    Args:
        curve (Genus2Curve): The curve
        primes (Sequence[int]): Candidate primes

    Returns:
        PicardCertificate: Certificate, inconclusive when some component is missing
    """
    usable, skipped = _usable_primes(curve, primes)
    if len(usable) < 2:
        raise InsufficientPrimesError(
            f"Need two distinct primes of good reduction, got {usable} from {list(primes)}"
        )
    weil_polynomials = [frobenius_charpoly(curve, prime) for prime in usable]
    classes = [quartic_galois_class(weil.polynomial) for weil in weil_polynomials]
    simplicity = next(
        (weil.p for weil, value in zip(weil_polynomials, classes) if value is GaloisClass.D4),
        None,
    )
    disjointness = None
    for index, first in enumerate(weil_polynomials):
        for offset in range(index + 1, len(weil_polynomials)):
            second = weil_polynomials[offset]
            pair = (classes[index], classes[offset])
            if GaloisClass.REDUCIBLE in pair:
                continue
            logger.info(f"Trying the resultant route for {first.p} and {second.p}")
            disjointness = _resultant_witness(first, second) or _subfield_witness(
                first, second, pair
            )
            if disjointness is not None:
                break
        if disjointness is not None:
            break
    certificate = PicardCertificate(
        curve=curve,
        primes=tuple(usable),
        weil_polynomials=tuple(weil_polynomials),
        galois_classes=tuple(classes),
        simplicity_witness=simplicity,
        disjointness=disjointness,
        skipped_primes=tuple(skipped),
    )
    logger.info(f"Picard certificate: {certificate.to_dict()['conclusion']}")
    return certificate
