"""
Fiber configurations and Mordell-Weil ranks expected for general members of G^(n) and H^(n).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from constructions.hfamily import H_DEGREES
from constructions.igusa_families import G_DEGREES, NonK3BaseChangeError
from ellsurf.fibers import FiberConfiguration, FiberType, Place


@dataclass(frozen=True)
class ExpectedFibers:
    """
    Row of a fiber table: types at t = 0 and t = infinity, all other fibers I1.
    """

    at_zero: Optional[str]
    at_infinity: Optional[str]
    i1_count: int

    def type_counts(self) -> dict[str, int]:
        """
        Fiber types with multiplicities.

        Returns:
            dict[str, int]: Type name to count, sorted by name
        """
        counts: dict[str, int] = {"I1": self.i1_count}
        for name in (self.at_zero, self.at_infinity):
            if name is not None:
                counts[name] = counts.get(name, 0) + 1
        return dict(sorted(counts.items()))

    def matches(self, configuration: FiberConfiguration) -> bool:
        """
        Compare with a classified configuration.

        Args:
            configuration (FiberConfiguration): Output of classify_fibers

        Returns:
            bool: True when the surface is general in the sense of the table
        """
        expected_zero = FiberType.from_name(self.at_zero) if self.at_zero else None
        expected_infinity = FiberType.from_name(self.at_infinity) if self.at_infinity else None
        return (
            configuration.at(Place.finite(0)) == expected_zero
            and configuration.at(Place.infinity()) == expected_infinity
            and configuration.type_counts() == self.type_counts()
        )

    def to_dict(self) -> dict[str, Any]:
        """
        Serialize for reports.

        Returns:
            dict[str, Any]: Row content
        """
        return {
            "t=0": self.at_zero,
            "t=inf": self.at_infinity,
            "type_counts": self.type_counts(),
        }


G_FIBERS = {
    1: ExpectedFibers("III*", "II*", 5),
    2: ExpectedFibers("I0*", "IV*", 10),
    3: ExpectedFibers("III", "I0*", 15),
    4: ExpectedFibers(None, "IV", 20),
}

H_FIBERS = {
    1: ExpectedFibers("IV*", "IV*", 8),
    2: ExpectedFibers("IV", "IV", 12),
    3: ExpectedFibers(None, None, 24),
}

G_RANK_OFFSETS = {1: -1, 2: 4, 3: 9, 4: 12}

H_RANK_OFFSETS = {1: 2, 2: 10, 3: 14}

# fibration 13 is G^(2) with t -> 1/(2t)
KUMMER13_FIBERS = ExpectedFibers("IV*", "I0*", 10)

KUMMER13_RANK_OFFSET = 4


def _row(table: dict[int, Any], degrees: range, n: int, family: str) -> Any:
    if n not in degrees:
        raise NonK3BaseChangeError(
            f"{family}^({n}) is not in the K3 range {degrees.start}..{degrees.stop - 1}"
        )
    return table[n]


def expected_g_fibers(n: int) -> ExpectedFibers:
    """
    Fibers of a general G^(n).

    Args:
        n (int): Degree in 1..4

    Returns:
        ExpectedFibers: Table row
    """
    return _row(G_FIBERS, G_DEGREES, n, "G")


def expected_h_fibers(n: int) -> ExpectedFibers:
    """
    Fibers of a general H^(n).

    Args:
        n (int): Degree in 1..3

    Returns:
        ExpectedFibers: Table row
    """
    return _row(H_FIBERS, H_DEGREES, n, "H")


def g_rank_offset(n: int) -> int:
    """
    k such that the Mordell-Weil rank of G^(n) is k + rho.

    Args:
        n (int): Degree in 1..4

    Returns:
        int: Offset
    """
    return _row(G_RANK_OFFSETS, G_DEGREES, n, "G")


def h_rank_offset(n: int) -> int:
    """
    k such that the Mordell-Weil rank of H^(n) is k + rho.

    Args:
        n (int): Degree in 1..3

    Returns:
        int: Offset
    """
    return _row(H_RANK_OFFSETS, H_DEGREES, n, "H")


def rank_formula(offset: int) -> str:
    """
    Closed form "k + rho".

    Args:
        offset (int): k

    Returns:
        str: Formula text
    """
    if offset < 0:
        return f"rho - {-offset}"
    return f"{offset} + rho"
