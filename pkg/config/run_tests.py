"""
Run tests for each package using pytest, optionally checking coverage.
"""

import io
import sys
from typing import Optional

import coverage
import pytest
from tap import Tap

from config.console_logging import get_child_logger
from config.constants import PROJECT_CONFIG_PATH, PROJECT_ROOT
from config.project_config import ProjectConfig

logger = get_child_logger(__file__)

OK_CODES = (pytest.ExitCode.OK, pytest.ExitCode.NO_TESTS_COLLECTED)


class CommandLineInterface(Tap):
    """
    Types for the argument parser.
    """

    package: Optional[str] = None  # Package to test, every package when omitted
    pytest_label: Optional[str] = None  # Extra marker, e.g. stage_2_4_picard_checks
    check_coverage: bool = False  # Fail when coverage is below the project threshold


def prepare_pytest_args(package: str, pytest_label: Optional[str] = None) -> list[str]:
    """
    Build the arguments for running pytest.

    Args:
        package (str): Package name, also its marker
        pytest_label (Optional[str]): Additional marker

    Returns:
        list[str]: List of arguments for pytest
    """
    mark = f"{package} and {pytest_label}" if pytest_label else package
    pytest_args = ["-m", mark, "--capture=no", str(PROJECT_ROOT / package)]
    logger.info(pytest_args)
    return pytest_args


def run_pytest(pytest_args: list[str]) -> int:
    """
    Run pytest in this interpreter.

    Args:
        pytest_args (list[str]): Arguments for pytest

    Returns:
        int: pytest exit code
    """
    return int(pytest.main(pytest_args))


def run_with_coverage(package: str, pytest_args: list[str]) -> tuple[int, float]:
    """
    Run pytest while measuring the coverage of one package.

    Args:
        package (str): Package to measure
        pytest_args (list[str]): Arguments for pytest

    Returns:
        tuple[int, float]: pytest exit code and covered percentage
    """
    measurement = coverage.Coverage(source=[package], omit=["*/tests/*"])
    measurement.start()
    try:
        return_code = run_pytest(pytest_args)
    finally:
        measurement.stop()
    percentage = measurement.report(file=io.StringIO())
    logger.info(f"Coverage of {package}: {percentage:.1f}%")
    return return_code, percentage


def check_package(
    package: str, project_config: ProjectConfig, pytest_label: Optional[str], check_coverage: bool
) -> bool:
    """
    Test one package.

    Args:
        package (str): Package name
        project_config (ProjectConfig): Project config with thresholds
        pytest_label (Optional[str]): Additional marker
        check_coverage (bool): Compare coverage with the threshold

    Returns:
        bool: True when the tests pass and coverage is sufficient
    """
    pytest_args = prepare_pytest_args(package, pytest_label)
    threshold = project_config.get_threshold(package)
    if not check_coverage or threshold is None:
        return_code = run_pytest(pytest_args)
    else:
        return_code, percentage = run_with_coverage(package, pytest_args)
        if percentage < threshold:
            logger.error(f"Coverage of {package} is {percentage:.1f}%, expected {threshold}%")
            return False
    if return_code == pytest.ExitCode.NO_TESTS_COLLECTED:
        logger.info(f"This combination of marks doesn't match any tests for {package}.")
    return return_code in OK_CODES


def main() -> None:
    """
    Main function to run tests for one package or for each package one by one.
    """
    args = CommandLineInterface(underscores_to_dashes=True).parse_args()
    project_config = ProjectConfig(PROJECT_CONFIG_PATH)

    if args.package:
        packages = [args.package]
    else:
        packages = [
            name
            for name in project_config.get_packages_names(include_addons=True)
            if (PROJECT_ROOT / name / "tests").is_dir()
        ]
        logger.info(f"Current scope: {packages}")

    failed = [
        package
        for package in packages
        if not check_package(package, project_config, args.pytest_label, args.check_coverage)
    ]
    if failed:
        logger.error(f"Failed packages: {failed}")
        sys.exit(1)


if __name__ == "__main__":
    main()
