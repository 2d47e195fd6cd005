"""
Config class implementation: stores the configuration information.
"""

import json
from dataclasses import field
from pathlib import Path
from typing import Optional

from pydantic import TypeAdapter

# pylint: disable=no-name-in-module
from pydantic.dataclasses import dataclass


class UnknownPackageError(Exception):
    """
    Raised when a package is not listed in the project config.
    """


@dataclass
class Package:
    """
    BaseModel for packages and addons.
    """

    name: str = field(default_factory=str)
    coverage: Optional[int] = None


@dataclass
class ProjectConfigDTO:
    """
    BaseModel for ProjectConfig.
    """

    packages: list[Package] = field(default_factory=list[Package])
    addons: list[Package] = field(default_factory=list[Package])


class ProjectConfig:
    """
    Project Config implementation.
    """

    def __init__(self, config_path: Path) -> None:
        """
        Initialize ProjectConfig.

        Args:
             config_path (Path): Path to config
        """
        with config_path.open(encoding="utf-8", mode="r") as config_file:
            json_content = json.load(config_file)
        self._dto = TypeAdapter(ProjectConfigDTO).validate_python(json_content)

    def get_thresholds(self) -> dict[str, int]:
        """
        Get coverage thresholds of packages and addons that declare one.

        Returns:
            dict[str, int]: Package name to minimal coverage in percent
        """
        return {
            package.name: package.coverage
            for package in (*self._dto.packages, *self._dto.addons)
            if package.coverage is not None
        }

    def get_threshold(self, name: str) -> Optional[int]:
        """
        Get the coverage threshold of one package.

        Args:
            name (str): Package name

        Returns:
            Optional[int]: Threshold, None when the package declares none
        """
        if name not in self.get_packages_names(include_addons=True):
            raise UnknownPackageError(f"{name} is not listed in the project config")
        return self.get_thresholds().get(name)

    def get_packages_names(self, include_addons: bool = False) -> list[str]:
        """
        Get packages names.

        Args:
            include_addons (bool): Include addons or not

        Returns:
            list[str]: Packages names in dependency order
        """
        names = [package.name for package in self._dto.packages]
        if include_addons:
            names.extend(addon.name for addon in self._dto.addons)
        return names

    def __str__(self) -> str:
        """
        Get a string with fields.

        Returns:
            str: A string with fields
        """
        return f"{self._dto}"
