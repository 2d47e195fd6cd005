"""
Kodaira fibers of elliptic surfaces over Q(t).

Every place has residue characteristic 0, so the type is read from the valuations of
(c4, c6, Delta) on a locally minimal model.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from config.console_logging import get_child_logger
from ellsurf.weierstrass import WeierstrassSurface
from exactcore.polynomial import UniPoly
from exactcore.rational_function import RationalFunction
from exactcore.rationals import format_rational
from exactcore.toolkit import poly_gcd, rational_roots, squarefree_part

logger = get_child_logger(__file__)


class UnknownValuationPatternError(Exception):
    """
    Raised when minimal valuations of (c4, c6, Delta) match no Kodaira type.
    """


class InconsistentPicardInputError(Exception):
    """
    Raised when a Neron-Severi rank is too small for the reducible fibers of a surface.
    """


class NeedsFactorizationError(Exception):
    """
    Raised when gcd refinement leaves a cluster whose roots have different valuations.
    """


class PlaceKind(enum.Enum):
    """
    Kind of a place of Q(t).
    """

    FINITE = "finite"
    CLUSTER = "cluster"
    INFINITY = "infinity"


@dataclass(frozen=True)
class Place:
    """
    A rational point, the point at infinity, or all roots of a squarefree polynomial.
    """

    kind: PlaceKind
    point: Fraction | None = None
    cluster: UniPoly | None = None

    @classmethod
    def finite(cls, point: Fraction | int) -> Place:
        """
        Rational place t = point.

        Args:
            point (Fraction | int): Location

        Returns:
            Place: The place
        """
        return cls(PlaceKind.FINITE, point=Fraction(point))

    @classmethod
    def infinity(cls) -> Place:
        """
        Place t = infinity.

        Returns:
            Place: The place
        """
        return cls(PlaceKind.INFINITY)

    @property
    def degree(self) -> int:
        """
        Property for the number of geometric points bundled in the place.

        Returns:
            int: 1, or the degree of the cluster polynomial
        """
        if self.kind is PlaceKind.CLUSTER and self.cluster is not None:
            return self.cluster.degree
        return 1

    def sort_key(self) -> tuple[Any, ...]:
        """
        Finite rational places ascending, then clusters by degree and coefficients, infinity last.

        Returns:
            tuple[Any, ...]: Key
        """
        if self.kind is PlaceKind.FINITE:
            return (0, self.point)
        if self.kind is PlaceKind.CLUSTER and self.cluster is not None:
            return (1, self.cluster.degree, self.cluster.coefficients)
        return (2,)

    def __str__(self) -> str:
        if self.kind is PlaceKind.FINITE and self.point is not None:
            return f"t={format_rational(self.point)}"
        if self.kind is PlaceKind.CLUSTER:
            return f"roots of {self.cluster}"
        return "t=inf"


class FiberFamily(enum.Enum):
    """
    Kodaira families; I and I* carry an index.
    """

    I = "I"  # noqa: E741
    I_STAR = "I*"
    II = "II"
    III = "III"
    IV = "IV"
    II_STAR = "II*"
    III_STAR = "III*"
    IV_STAR = "IV*"


_COMPONENTS_AND_EULER = {
    FiberFamily.II: (1, 2),
    FiberFamily.III: (2, 3),
    FiberFamily.IV: (3, 4),
    FiberFamily.IV_STAR: (7, 8),
    FiberFamily.III_STAR: (8, 9),
    FiberFamily.II_STAR: (9, 10),
}

_INDEXED_NAME = re.compile(r"^I(?P<index>\d+)(?P<star>\*?)$")


@dataclass(frozen=True)
class FiberType:
    """
    Kodaira type such as I6, I0*, III or II*.
    """

    family: FiberFamily
    index: int = 0

    @classmethod
    def from_name(cls, name: str) -> FiberType:
        """
        Parse a type name.

        Args:
            name (str): "I6", "I0*", "IV*", ...

        Returns:
            FiberType: The type
        """
        match = _INDEXED_NAME.match(name)
        if match:
            family = FiberFamily.I_STAR if match.group("star") else FiberFamily.I
            return cls(family, int(match.group("index")))
        return cls(FiberFamily(name))

    @property
    def name(self) -> str:
        """
        Property for the printed name.

        Returns:
            str: Name with the index inlined
        """
        if self.family is FiberFamily.I:
            return f"I{self.index}"
        if self.family is FiberFamily.I_STAR:
            return f"I{self.index}*"
        return self.family.value

    @property
    def components(self) -> int:
        """
        Property for the number of irreducible components m_P.

        Returns:
            int: m_P
        """
        if self.family is FiberFamily.I:
            return self.index
        if self.family is FiberFamily.I_STAR:
            return self.index + 5
        return _COMPONENTS_AND_EULER[self.family][0]

    @property
    def euler(self) -> int:
        """
        Property for the Euler number of the fiber.

        Returns:
            int: Euler number
        """
        if self.family is FiberFamily.I:
            return self.index
        if self.family is FiberFamily.I_STAR:
            return self.index + 6
        return _COMPONENTS_AND_EULER[self.family][1]

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class KodairaFiber:
    """
    Fiber type at a place; a cluster place stands for place.degree fibers.
    """

    fiber_type: FiberType
    place: Place

    @property
    def count(self) -> int:
        """
        Property for the number of geometric fibers.

        Returns:
            int: Degree of the place
        """
        return self.place.degree

    def to_dict(self) -> dict[str, Any]:
        """
        Serialize for reports.

        Returns:
            dict[str, Any]: Type, place and count
        """
        return {"type": self.fiber_type.name, "place": str(self.place), "count": self.count}


@dataclass(frozen=True)
class FiberConfiguration:
    """
    Singular fibers of a surface in place order.
    """

    fibers: tuple[KodairaFiber, ...]

    @property
    def euler_total(self) -> int:
        """
        Property for the Euler number of the surface.

        Returns:
            int: Sum of euler * count
        """
        return sum(fiber.fiber_type.euler * fiber.count for fiber in self.fibers)

    def type_counts(self) -> dict[str, int]:
        """
        Number of geometric fibers of each type.

        Returns:
            dict[str, int]: Type name to count, sorted by name
        """
        counts: dict[str, int] = {}
        for fiber in self.fibers:
            counts[fiber.fiber_type.name] = counts.get(fiber.fiber_type.name, 0) + fiber.count
        return dict(sorted(counts.items()))

    def at(self, place: Place) -> FiberType | None:
        """
        Fiber type at a place.

        Args:
            place (Place): Finite rational place or infinity

        Returns:
            FiberType | None: The type, None for a smooth fiber
        """
        for fiber in self.fibers:
            if fiber.place == place:
                return fiber.fiber_type
        return None

    def to_dict(self) -> dict[str, Any]:
        """
        Serialize for reports.

        Returns:
            dict[str, Any]: Fibers, type counts and the Euler number
        """
        return {
            "fibers": [fiber.to_dict() for fiber in self.fibers],
            "type_counts": self.type_counts(),
            "euler_total": self.euler_total,
        }


def _minimal_valuations(
    v4: int | None, v6: int | None, v_delta: int
) -> tuple[int | None, int | None, int]:
    # None marks an identically vanishing invariant
    shift = min(
        [v_delta // 12]
        + [value // weight for value, weight in ((v4, 4), (v6, 6)) if value is not None]
    )
    return (
        None if v4 is None else v4 - 4 * shift,
        None if v6 is None else v6 - 6 * shift,
        v_delta - 12 * shift,
    )


def kodaira_type(v4: int | None, v6: int | None, v_delta: int) -> FiberType | None:
    """
    Kodaira type from valuations of (c4, c6, Delta) in residue characteristic 0.

    Args:
        v4 (int | None): Valuation of c4, None if c4 = 0
        v6 (int | None): Valuation of c6, None if c6 = 0
        v_delta (int): Valuation of Delta

    Returns:
        FiberType | None: The type, None for good reduction
    """
    v4, v6, v_delta = _minimal_valuations(v4, v6, v_delta)
    if v_delta == 0:
        return None
    if v4 == 0:
        return FiberType(FiberFamily.I, v_delta)
    if v4 == 2 and v6 == 3 and v_delta >= 6:
        return FiberType(FiberFamily.I_STAR, v_delta - 6)
    by_discriminant = {
        2: FiberType(FiberFamily.II),
        3: FiberType(FiberFamily.III),
        4: FiberType(FiberFamily.IV),
        6: FiberType(FiberFamily.I_STAR, 0),
        8: FiberType(FiberFamily.IV_STAR),
        9: FiberType(FiberFamily.III_STAR),
        10: FiberType(FiberFamily.II_STAR),
    }
    if v_delta not in by_discriminant:
        raise UnknownValuationPatternError(
            f"No Kodaira type for minimal valuations (c4, c6, Delta) = ({v4}, {v6}, {v_delta})"
        )
    return by_discriminant[v_delta]


def _polynomial_valuation(polynomial: UniPoly, cluster: UniPoly) -> int:
    # multiplicity of every root of the squarefree cluster
    count = 0
    remaining = polynomial
    while not remaining.is_zero() and (remaining % cluster).is_zero():
        remaining = remaining.exact_quotient(cluster)
        count += 1
    if poly_gcd(remaining, cluster).degree > 0:
        raise NeedsFactorizationError(
            f"Roots of {cluster} divide {polynomial} with different multiplicities"
        )
    return count


def _cluster_valuation(function: RationalFunction, cluster: UniPoly) -> int | None:
    if function.is_zero():
        return None
    return _polynomial_valuation(function.numerator, cluster) - _polynomial_valuation(
        function.denominator, cluster
    )


def _refine(parts: list[UniPoly], polynomial: UniPoly) -> list[UniPoly]:
    # split each part into layers of roots with equal multiplicity in polynomial
    refined = []
    for part in parts:
        remaining_part, remaining_polynomial = part, polynomial
        while remaining_part.degree > 0:
            common = poly_gcd(remaining_part, remaining_polynomial)
            outside = remaining_part.exact_quotient(common)
            if outside.degree > 0:
                refined.append(outside)
            if common.degree == 0:
                break
            remaining_part = common
            remaining_polynomial = remaining_polynomial.exact_quotient(common)
    return refined


def _point_valuation(function: RationalFunction, point: Fraction) -> int | None:
    return None if function.is_zero() else function.valuation_at(point)


def _infinity_valuation(function: RationalFunction) -> int | None:
    return None if function.is_zero() else function.valuation_at_infinity()


def classify_fibers(surface: WeierstrassSurface) -> FiberConfiguration:
    """
    Singular fibers at every place of bad reduction.

    Args:
        surface (WeierstrassSurface): The surface

    Returns:
        FiberConfiguration: Fibers in place order
    """
    c4, c6, delta = surface.c4_c6_disc()
    invariants = (c4, c6, delta)
    polynomials = [delta.numerator, delta.denominator]
    for value in (c4, c6):
        if not value.is_zero():
            polynomials.extend((value.numerator, value.denominator))
    candidates = UniPoly.constant(1, var=delta.var)
    for polynomial in polynomials:
        if polynomial.degree > 0:
            candidates = candidates * polynomial
    candidates = squarefree_part(candidates) if candidates.degree > 0 else candidates

    fibers = []
    remainder = candidates
    for point in sorted(set(rational_roots(candidates))) if candidates.degree > 0 else []:
        remainder = remainder.exact_quotient(UniPoly([-point, 1], var=delta.var))
        valuations = [_point_valuation(value, point) for value in invariants]
        fiber_type = kodaira_type(*valuations)  # type: ignore[arg-type]
        if fiber_type is not None:
            fibers.append(KodairaFiber(fiber_type, Place.finite(point)))

    parts = [remainder] if remainder.degree > 0 else []
    for polynomial in polynomials:
        if polynomial.degree > 0:
            parts = _refine(parts, polynomial)
    for part in parts:
        valuations = [_cluster_valuation(value, part) for value in invariants]
        fiber_type = kodaira_type(*valuations)  # type: ignore[arg-type]
        if fiber_type is not None:
            fibers.append(KodairaFiber(fiber_type, Place(PlaceKind.CLUSTER, cluster=part)))

    valuations = [_infinity_valuation(value) for value in invariants]
    fiber_type = kodaira_type(*valuations)  # type: ignore[arg-type]
    if fiber_type is not None:
        fibers.append(KodairaFiber(fiber_type, Place.infinity()))

    configuration = FiberConfiguration(
        tuple(sorted(fibers, key=lambda fiber: fiber.place.sort_key()))
    )
    logger.info(
        f"Fibers {configuration.type_counts()} with Euler number {configuration.euler_total}"
    )
    return configuration


def is_k3(configuration: FiberConfiguration) -> bool:
    """
    K3 test on a relatively minimal model.

    Args:
        configuration (FiberConfiguration): Singular fibers

    Returns:
        bool: True iff the Euler number is 24
    """
    return configuration.euler_total == 24


def shioda_tate_rank(configuration: FiberConfiguration, rho_ns: int) -> int:
    """
    Mordell-Weil rank rho - 2 - sum(m_P - 1).

    Args:
        configuration (FiberConfiguration): Singular fibers
        rho_ns (int): Picard number of the surface

    Returns:
        int: Rank of the group of sections
    """
    if rho_ns < 2:
        raise InconsistentPicardInputError(f"A fibered surface has rho >= 2, got {rho_ns}")
    trivial_lattice = sum(
        (fiber.fiber_type.components - 1) * fiber.count for fiber in configuration.fibers
    )
    rank = rho_ns - 2 - trivial_lattice
    if rank < 0:
        raise InconsistentPicardInputError(
            f"rho = {rho_ns} is smaller than 2 + {trivial_lattice} from reducible fibers"
        )
    return rank
