"""
Command-line entry point: invariants, construct, certify and reproduce.
"""

import functools
import logging
import re
import sys
import time
from typing import Any, Callable, Literal, Optional, Sequence

from tap import Tap

from cli.commands import (
    cmd_certify,
    cmd_construct,
    cmd_invariants,
    cmd_reproduce,
    InconclusiveCertificateError,
    UsageError,
)
from cli.reports import Report
from config.console_logging import get_child_logger, set_console_level
from constructions.elliptic import SingularCurveError, UnsupportedTorsionOrderError
from constructions.hfamily import DegenerateParametersError
from constructions.igusa_families import NonK3BaseChangeError
from core_utils.io import MalformedCurveFileError, save_report
from ellsurf.fibers import (
    InconsistentPicardInputError,
    NeedsFactorizationError,
    UnknownValuationPatternError,
)
from ellsurf.weierstrass import InvalidBaseChangeError, InvalidTwistError, SingularEquationError
from exactcore.fields import (
    FieldMismatchError,
    NonInvertibleError,
    NotAnExtensionModulusError,
    NotAPrimeError,
)
from exactcore.polynomial import InexactDivisionError, ZeroPolynomialError
from exactcore.rational_function import IncompatibleScalingError
from exactcore.rationals import MalformedRationalError
from genus2.counting import BadReductionError, CountingConsistencyError, UnsupportedPrimeError
from genus2.curve import NotAGenus2CurveError
from genus2.galois import NotAQuarticError
from genus2.picard import (
    EmptyPrimeListError,
    InsufficientPrimesError,
    UnknownEndomorphismClassError,
)

logger = get_child_logger(__file__)

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

USAGE_ERRORS = (MalformedCurveFileError, MalformedRationalError, UsageError)

MATH_ERRORS = (
    BadReductionError,
    CountingConsistencyError,
    DegenerateParametersError,
    EmptyPrimeListError,
    FieldMismatchError,
    InconclusiveCertificateError,
    IncompatibleScalingError,
    InconsistentPicardInputError,
    InexactDivisionError,
    InsufficientPrimesError,
    InvalidBaseChangeError,
    InvalidTwistError,
    NeedsFactorizationError,
    NonInvertibleError,
    NonK3BaseChangeError,
    NotAGenus2CurveError,
    NotAnExtensionModulusError,
    NotAPrimeError,
    NotAQuarticError,
    SingularCurveError,
    SingularEquationError,
    UnknownEndomorphismClassError,
    UnknownValuationPatternError,
    UnsupportedPrimeError,
    UnsupportedTorsionOrderError,
    ZeroPolynomialError,
)


class RationalArguments(Tap):
    """
    Parser that reads negative rationals such as -6/7 as values.
    """

    def configure(self) -> None:
        """
        Extend the negative number pattern of argparse to fractions.
        """
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")


class CommandArguments(RationalArguments):
    """
    Options shared by every command.
    """

    json: Optional[str] = None  # Write the report to this file instead of printing it
    verbose: bool = False  # Log search steps and per-prime counts


class InvariantsArguments(CommandArguments):
    """
    Igusa-Clebsch invariants of a curve file.
    """

    curve: str  # Curve file


class ConstructArguments(CommandArguments):
    """
    Build a surface and classify its singular fibers.
    """

    kind: Literal["g", "h", "eq1", "fib13"]
    curve: Optional[str] = None  # Curve file, for g, eq1 and fib13
    abc: Optional[list[str]] = None  # Parameters a b c of H^(n)
    n: Optional[int] = None  # Base change degree
    rho: Optional[int] = None  # Picard number of the Jacobian

    def configure(self) -> None:
        """
        Make the kind of surface positional.
        """
        super().configure()
        self.add_argument("kind")


class CertifyArguments(CommandArguments):
    """
    Certify that the Jacobian has Picard number 1.
    """

    curve: str  # Curve file
    primes: Optional[list[int]] = None  # Primes of good reduction


class ReproduceArguments(CommandArguments):
    """
    Reproduce a worked example.
    """

    example: Literal["qm", "split", "example43"]

    def configure(self) -> None:
        """
        Make the example name positional.
        """
        super().configure()
        self.add_argument("example")


class CommandLineInterface(RationalArguments):
    """
    Elliptic K3 surfaces from genus-2 curves.
    """

    def configure(self) -> None:
        """
        Register the commands.
        """
        super().configure()
        self.add_subparsers(dest="command", required=True, help="Command to run")
        self.add_subparser("invariants", InvariantsArguments, help="Igusa-Clebsch invariants")
        self.add_subparser("construct", ConstructArguments, help="Build a surface")
        self.add_subparser("certify", CertifyArguments, help="Certify rho(J(C)) = 1")
        self.add_subparser("reproduce", ReproduceArguments, help="Reproduce a worked example")


def handles_cli_error(
    usage_exit_code: int = EXIT_USAGE, failure_exit_code: int = EXIT_FAILURE
) -> Callable:
    """
    Decorator to turn command errors into exit codes.

    Args:
        usage_exit_code (int): Exit code for unreadable inputs and missing options
        failure_exit_code (int): Exit code for mathematical failures

    Returns:
        Callable: The wrapped function
    """

    def decorator(func: Callable[..., int]) -> Callable[..., int]:
        """
        Decorator to turn command errors into exit codes.

        Args:
            func (Callable[..., int]): Command runner returning an exit code

        Returns:
            Callable[..., int]: The wrapped function
        """

        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> int:
            """
            Wrapper function to handle command errors.

            Args:
                *args (Any): Variable length argument list to pass to the decorated function.
                **kwargs (Any): Arbitrary keyword arguments to pass to the decorated function.

            Returns:
                int: Exit code
            """
            try:
                logger.info(f"Call to {func.__name__}")
                return func(*args, **kwargs)
            except USAGE_ERRORS as error:
                logger.error(f"Usage error: {error}")
                return usage_exit_code
            except MATH_ERRORS as error:
                logger.error(f"{type(error).__name__}: {error}")
                return failure_exit_code

        return wrapper

    return decorator


def build_report(arguments: Tap) -> Report:
    """
    Dispatch parsed arguments to a command.

    Args:
        arguments (Tap): Parsed command line

    Returns:
        Report: Output of the command
    """
    command = getattr(arguments, "command")
    if command == "invariants":
        return cmd_invariants(getattr(arguments, "curve"))
    if command == "construct":
        return cmd_construct(
            getattr(arguments, "kind"),
            curve=getattr(arguments, "curve", None),
            abc=getattr(arguments, "abc", None),
            n=getattr(arguments, "n", None),
            rho=getattr(arguments, "rho", None),
        )
    if command == "certify":
        return cmd_certify(getattr(arguments, "curve"), getattr(arguments, "primes", None) or ())
    return cmd_reproduce(getattr(arguments, "example"))


@handles_cli_error()
def execute(arguments: Tap) -> int:
    """
    Run a command and emit its report.

    Args:
        arguments (Tap): Parsed command line

    Returns:
        int: 0 when every check passed, 1 otherwise
    """
    if getattr(arguments, "verbose", False):
        set_console_level(logging.DEBUG)
    started = time.perf_counter()
    report = build_report(arguments)
    logger.info(f"{report.command} took {time.perf_counter() - started:.1f} s")
    json_path = getattr(arguments, "json", None)
    if json_path:
        save_report(report.to_dict(), json_path)
        logger.info(f"Report saved to {json_path}")
    else:
        print(report.render())
    if not report.passed:
        logger.error("Some checks failed")
        return EXIT_FAILURE
    return EXIT_SUCCESS


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse the command line and run the command.

    Args:
        argv (Optional[Sequence[str]]): Arguments, sys.argv[1:] when None

    Returns:
        int: Exit code
    """
    arguments = CommandLineInterface().parse_args(argv)
    return execute(arguments)


def main() -> None:
    """
    Entry point.
    """
    sys.exit(run())


if __name__ == "__main__":
    main()
