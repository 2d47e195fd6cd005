"""
Settings manager.
"""

# pylint: disable=no-name-in-module
from dataclasses import field
from pathlib import Path
from typing import Optional

from pydantic.dataclasses import dataclass


@dataclass
class ArithmeticParameters:
    """
    Exact arithmetic parameters.
    """

    divisor_search_limit: int = 10**12


@dataclass
class CountingParameters:
    """
    Point counting and certification parameters.

    resultant_prime_bound stays small. Both Weil quartics have Galois groups inside D4, so the
    degree-16 resultant has no Frobenius of order 16 and is reducible modulo every prime.
    """

    max_field_size: int = 2**22
    resultant_prime_bound: int = 50
    pattern_prime_bound: int = 1000


@dataclass
class SurfaceParameters:
    """
    Elliptic surface parameters.
    """

    iso_search_exponents: list[int] = field(default_factory=lambda: [1, -1])


@dataclass
class ConstructionParameters:
    """
    Construction parameters.
    """

    quartic_search_exponent_bound: int = 2


@dataclass
class ReportParameters:
    """
    Command-line report parameters.
    """

    default_rho_values: list[int] = field(default_factory=lambda: [1, 2, 3, 4])


@dataclass
class PackageParameters:
    """
    DTO for storing parameters of a specific package.
    """

    arithmetic: Optional[ArithmeticParameters] = None
    counting: Optional[CountingParameters] = None
    surfaces: Optional[SurfaceParameters] = None
    constructions: Optional[ConstructionParameters] = None
    reports: Optional[ReportParameters] = None


@dataclass
class PackageSettingsModel:
    """
    DTO for storing package settings.
    """

    parameters: PackageParameters = field(default_factory=PackageParameters)


class PackageSettings:
    """
    Main model for working with settings.
    """

    _dto: PackageSettingsModel

    def __init__(self, config_path: Path) -> None:
        """
        Initialize PackageSettings.

        Args:
            config_path (pathlib.Path): Path to configuration
        """
        super().__init__()
        with config_path.open(encoding="utf-8") as config_file:
            # pylint: disable=no-member
            self._dto = PackageSettingsModel.__pydantic_validator__.validate_json(
                config_file.read()
            )

    @property
    def arithmetic(self) -> ArithmeticParameters:
        """
        Property for exact arithmetic parameters.

        Returns:
            ArithmeticParameters: Parameters, defaults when absent
        """
        return self._dto.parameters.arithmetic or ArithmeticParameters()

    @property
    def counting(self) -> CountingParameters:
        """
        Property for point counting parameters.

        Returns:
            CountingParameters: Parameters, defaults when absent
        """
        return self._dto.parameters.counting or CountingParameters()

    @property
    def surfaces(self) -> SurfaceParameters:
        """
        Property for elliptic surface parameters.

        Returns:
            SurfaceParameters: Parameters, defaults when absent
        """
        return self._dto.parameters.surfaces or SurfaceParameters()

    @property
    def constructions(self) -> ConstructionParameters:
        """
        Property for construction parameters.

        Returns:
            ConstructionParameters: Parameters, defaults when absent
        """
        return self._dto.parameters.constructions or ConstructionParameters()

    @property
    def reports(self) -> ReportParameters:
        """
        Property for report parameters.

        Returns:
            ReportParameters: Parameters, defaults when absent
        """
        return self._dto.parameters.reports or ReportParameters()
