"""
I/O operations for curve records and reports.
"""

import json
from dataclasses import field
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from pydantic import field_validator, ValidationError

# pylint: disable=no-name-in-module
from pydantic.dataclasses import dataclass
from sympy import isprime

from exactcore.rationals import MalformedRationalError, parse_rational


class MalformedCurveFileError(Exception):
    """
    Raised when a data file cannot be read or does not follow the record schema.
    """


@dataclass
class EllipticCurveRecord:
    """
    Long Weierstrass coefficients a1, a2, a3, a4, a6 with a label.
    """

    coefficients: list[str]
    label: str = ""


@dataclass
class CoverRecord:
    """
    Map (x, y) -> (x_numerator/x_denominator, y * y_numerator/y_denominator).
    """

    name: str
    target: str
    x_numerator: list[str]
    x_denominator: list[str]
    y_numerator: list[str]
    y_denominator: list[str]


@dataclass
class TwistRecord:
    """
    Quadratic twist of a named curve with its expected model.
    """

    curve: str
    d: str
    target: str


@dataclass
class CurveRecord:
    """
    DTO for a genus-2 curve file and its optional example data.
    """

    genus2: list[str]
    label: str = ""
    description: str = ""
    endomorphism_class: Optional[str] = None
    hparams: Optional[list[str]] = None
    primes: list[int] = field(default_factory=list)
    elliptic_curves: dict[str, EllipticCurveRecord] = field(default_factory=dict)
    covers: list[CoverRecord] = field(default_factory=list)
    twist: Optional[TwistRecord] = None
    documentation: dict[str, str] = field(default_factory=dict)

    @field_validator("primes")
    @classmethod
    def check_primes(cls, primes: list[int]) -> list[int]:
        """
        Reject entries of primes that are not prime numbers.

        Args:
            primes (list[int]): Stored primes

        Returns:
            list[int]: The same primes
        """
        composite = [value for value in primes if not isprime(value)]
        if composite:
            raise ValueError(f"primes holds non-primes {composite}")
        return primes


def parse_rationals(literals: list[str], origin: str = "record") -> list[Fraction]:
    """
    Parse rational literals, reporting the origin on failure.

    Args:
        literals (list[str]): "p/q" strings
        origin (str): Name of the field for messages

    Returns:
        list[Fraction]: Parsed values
    """
    try:
        return [parse_rational(literal) for literal in literals]
    except MalformedRationalError as error:
        raise MalformedCurveFileError(f"Bad rational in {origin}: {error}") from error


def load_curve_record(path: Union[Path, str]) -> CurveRecord:
    """
    Load and validate a curve file.

    Args:
        path (Union[Path, str]): Path to the JSON record

    Returns:
        CurveRecord: Validated record
    """
    try:
        with open(path, encoding="utf-8") as record_file:
            content = record_file.read()
    except OSError as error:
        raise MalformedCurveFileError(f"Cannot read {path}: {error}") from error
    try:
        # pylint: disable=no-member
        record = CurveRecord.__pydantic_validator__.validate_json(content)
    except ValidationError as error:
        raise MalformedCurveFileError(f"{path} is not a curve record: {error}") from error
    if len(record.genus2) != 7:
        raise MalformedCurveFileError(
            f"{path}: expected 7 coefficients f0..f6, got {len(record.genus2)}"
        )
    if record.hparams is not None and len(record.hparams) != 3:
        raise MalformedCurveFileError(f"{path}: expected 3 parameters a, b, c")
    parse_rationals(record.genus2, "genus2")
    return record


def curve_coefficients(record: CurveRecord) -> list[Fraction]:
    """
    Coefficients f0, ..., f6 of a record.

    Args:
        record (CurveRecord): Validated record

    Returns:
        list[Fraction]: Seven coefficients
    """
    return parse_rationals(record.genus2, "genus2")


def save_report(report: dict[str, Any], path: Union[Path, str]) -> None:
    """
    Save a report as deterministic JSON.

    Args:
        report (dict[str, Any]): Report content
        path (Union[Path, str]): Target file
    """
    with open(path, "w", encoding="utf-8") as report_file:
        json.dump(report, report_file, indent=4, ensure_ascii=False, separators=(",", ": "))
        report_file.write("\n")
