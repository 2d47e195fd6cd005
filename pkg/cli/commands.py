"""
Commands of the command-line tool, each one assembling a Report.
"""

from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, TypeVar, Union

from sympy import isprime

from cli.reports import Report
from config.console_logging import get_child_logger
from config.constants import CLI_SETTINGS_PATH
from config.settings import PackageSettings
from constructions.elliptic import (
    CoverMap,
    ec_is_isomorphic,
    ec_j_invariant,
    ec_quadratic_twist,
    EllipticCurveQ,
    has_rational_n_torsion,
    verify_cover,
)
from constructions.hfamily import (
    genus2_from_hparams,
    h_coefficients,
    h_surface,
    HParams,
    intermediate_fibration,
)
from constructions.igusa_families import g_surface, kummer_fibration13, shioda_inose_surface
from constructions.printed import (
    printed_example43_h3,
    printed_qm_g4,
    printed_split_g4,
    qm_twisted_g4,
)
from constructions.tables import (
    expected_g_fibers,
    expected_h_fibers,
    ExpectedFibers,
    g_rank_offset,
    h_rank_offset,
    KUMMER13_FIBERS,
    KUMMER13_RANK_OFFSET,
    rank_formula,
)
from core_utils.constants import EXAMPLE_PATHS
from core_utils.io import curve_coefficients, CurveRecord, load_curve_record
from ellsurf.fibers import (
    classify_fibers,
    FiberConfiguration,
    FiberType,
    InconsistentPicardInputError,
    is_k3,
    Place,
    shioda_tate_rank,
)
from ellsurf.isomorphism import IsomorphismMatch, NO_MATCH, same_surface_up_to_iso
from ellsurf.weierstrass import WeierstrassSurface
from exactcore.rationals import format_rational
from genus2.curve import Genus2Curve, igusa_clebsch
from genus2.picard import (
    certify_picard_one,
    EndomorphismClass,
    picard_from_endomorphism_class,
    PICARD_TABLE,
)

logger = get_child_logger(__file__)

CONSTRUCTION_KINDS = ("g", "h", "eq1", "fib13")

MAX_RHO = 4

PICARD_RANGE = range(1, MAX_RHO + 1)

PICARD_REASONS = {
    "qm": "quaternionic multiplication",
    "split": "Jacobian isogenous to E1 x E2 without CM",
}

EXPECTED_RANK = 15

# rho(X) = 16 + rho(J(C)) for the surfaces built here
KUMMER_PICARD_SHIFT = 16

Value = TypeVar("Value")


class UsageError(Exception):
    """
    Raised when a command is called without the inputs it needs.
    """


class InconclusiveCertificateError(Exception):
    """
    Raised when a Picard certificate is required and the primes do not give one.
    """


def _require(value: Optional[Value], flag: str, kind: str) -> Value:
    if value is None:
        raise UsageError(f"construct {kind} needs {flag}")
    return value


def _load_curve(path: Union[Path, str]) -> tuple[CurveRecord, Genus2Curve]:
    record = load_curve_record(path)
    return record, Genus2Curve(curve_coefficients(record))


def _rank_or_note(fibers: FiberConfiguration, rho: int) -> Union[int, str]:
    try:
        return shioda_tate_rank(fibers, KUMMER_PICARD_SHIFT + rho)
    except InconsistentPicardInputError:
        return "inconsistent"


def _describe_surface(
    report: Report,
    name: str,
    surface: WeierstrassSurface,
    expected: Optional[ExpectedFibers] = None,
    offset: Optional[int] = None,
) -> FiberConfiguration:
    """
    Classify the fibers of a surface and record them with the rank formula.

    Args:
        report (Report): Report to fill
        name (str): Surface name, used as the section key
        surface (WeierstrassSurface): The surface
        expected (Optional[ExpectedFibers]): Table row of a general member
        offset (Optional[int]): k in the closed rank form k + rho

    Returns:
        FiberConfiguration: Singular fibers
    """
    fibers = classify_fibers(surface)
    rho_values = PackageSettings(CLI_SETTINGS_PATH).reports.default_rho_values
    found_offset = shioda_tate_rank(fibers, KUMMER_PICARD_SHIFT + MAX_RHO) - MAX_RHO
    report.results[name] = {
        **surface.to_dict(),
        "fibers": fibers.to_dict(),
        "is_k3": is_k3(fibers),
        "rank_formula": rank_formula(found_offset),
        "ranks": {str(rho): _rank_or_note(fibers, rho) for rho in rho_values},
    }
    report.add_check(f"{name} is K3", is_k3(fibers), f"Euler number {fibers.euler_total}")
    if expected is not None:
        counts = ", ".join(f"{count} {kind}" for kind, count in fibers.type_counts().items())
        report.add_check(f"{name} fibers as in the table", expected.matches(fibers), counts)
    if offset is not None:
        report.add_check(
            f"{name} rank formula", found_offset == offset, rank_formula(found_offset)
        )
    return fibers


def cmd_invariants(curve: Union[Path, str]) -> Report:
    """
    Igusa-Clebsch invariants of a curve file.

    Args:
        curve (Union[Path, str]): Curve file

    Returns:
        Report: Curve and invariants
    """
    report = Report("invariants", inputs={"curve": str(curve)})
    _, genus2_curve = _load_curve(curve)
    invariants = igusa_clebsch(genus2_curve)
    report.results = {
        "curve": genus2_curve.to_strings(),
        "igusa_clebsch": invariants.to_strings(),
    }
    report.summary = [f"{name} = {value}" for name, value in invariants.to_strings().items()]
    return report


def cmd_construct(
    kind: str,
    curve: Optional[Union[Path, str]] = None,
    abc: Optional[Sequence[str]] = None,
    n: Optional[int] = None,
    rho: Optional[int] = None,
) -> Report:
    """
    Build one of the surfaces and classify its fibers.

    Args:
        kind (str): g, h, eq1 or fib13
        curve (Optional[Union[Path, str]]): Curve file for g, eq1 and fib13
        abc (Optional[Sequence[str]]): Parameters a, b, c for h
        n (Optional[int]): Base change degree for g and h
        rho (Optional[int]): Picard number of the Jacobian, when known

    Returns:
        Report: Surface, fibers and ranks
    """
    if kind not in CONSTRUCTION_KINDS:
        raise UsageError(f"Unknown construction {kind!r}, expected one of {CONSTRUCTION_KINDS}")
    if rho is not None and rho not in PICARD_RANGE:
        raise UsageError(f"The Picard number of an abelian surface is 1..4, got {rho}")
    if kind in ("eq1", "fib13") and n is not None:
        raise UsageError(f"--n applies to g and h, not to {kind}")
    inputs: dict[str, object] = {"kind": kind}
    if curve is not None:
        inputs["curve"] = str(curve)
    if abc is not None:
        inputs["abc"] = list(abc)
    if n is not None:
        inputs["n"] = n
    if rho is not None:
        inputs["rho"] = rho
    report = Report("construct", inputs=inputs)

    if kind == "h":
        degree = _require(n, "--n", kind)
        expected, offset = expected_h_fibers(degree), h_rank_offset(degree)
        literals = list(_require(abc, "--abc", kind))
        if len(literals) != 3:
            raise UsageError(f"--abc takes three rationals, got {len(literals)}")
        params = HParams.from_strings(literals)
        name, surface = f"H^({degree})", h_surface(params, degree)
        report.results["h_coefficients"] = h_coefficients(params).to_strings()
    elif kind == "g":
        degree = _require(n, "--n", kind)
        expected, offset = expected_g_fibers(degree), g_rank_offset(degree)
        _, genus2_curve = _load_curve(_require(curve, "--curve", kind))
        name, surface = f"G^({degree})", g_surface(igusa_clebsch(genus2_curve), degree)
    else:
        _, genus2_curve = _load_curve(_require(curve, "--curve", kind))
        invariants = igusa_clebsch(genus2_curve)
        if kind == "eq1":
            name, surface = "Shioda-Inose", shioda_inose_surface(invariants)
            expected, offset = expected_g_fibers(1), g_rank_offset(1)
        else:
            name, surface = "fibration 13", kummer_fibration13(invariants)
            expected, offset = KUMMER13_FIBERS, KUMMER13_RANK_OFFSET

    fibers = _describe_surface(report, name, surface, expected, offset)
    if rho is None:
        report.summary.append(f"rank of {name}: {report.results[name]['rank_formula']}")
    else:
        rank = shioda_tate_rank(fibers, KUMMER_PICARD_SHIFT + rho)
        report.summary.append(
            f"MW rank of {name} over the algebraic closure: {rank} (given ρ = {rho})"
        )
    return report


def cmd_certify(curve: Union[Path, str], primes: Sequence[int] = ()) -> Report:
    """
    Certify rho(J(C)) = 1 by point counting.

    Args:
        curve (Union[Path, str]): Curve file
        primes (Sequence[int]): Primes, the ones stored in the file when empty

    Returns:
        Report: Certificate, possibly inconclusive
    """
    composite = [prime for prime in primes if not isprime(prime)]
    if composite:
        raise UsageError(f"--primes takes prime numbers, got {composite}")
    record, genus2_curve = _load_curve(curve)
    chosen = list(primes) or list(record.primes)
    report = Report("certify", inputs={"curve": str(curve), "primes": chosen})
    certificate = certify_picard_one(genus2_curve, chosen)
    serialized = certificate.to_dict()
    report.results["certificate"] = serialized
    report.summary.append(f"certificate: {serialized['conclusion']}")
    return report


def _lookup_rho(report: Report, record: CurveRecord) -> int:
    rho = picard_from_endomorphism_class(str(record.endomorphism_class))
    description = PICARD_TABLE[EndomorphismClass(record.endomorphism_class)][1]
    report.results["picard"] = {
        "endomorphism_class": record.endomorphism_class,
        "rho": rho,
        "source": description,
    }
    logger.info(f"rho = {rho} from the endomorphism class {record.endomorphism_class}")
    return rho


def _check_rank(report: Report, name: str, fibers: FiberConfiguration, rho: int) -> int:
    rank = shioda_tate_rank(fibers, KUMMER_PICARD_SHIFT + rho)
    report.add_check(f"MW rank of {name} is {EXPECTED_RANK}", rank == EXPECTED_RANK, str(rank))
    return rank


def _check_match(
    report: Report, name: str, first: WeierstrassSurface, second: WeierstrassSurface
) -> Optional[IsomorphismMatch]:
    match = same_surface_up_to_iso(first, second)
    report.add_check(name, match is not None, match.describe() if match else NO_MATCH)
    if match is not None:
        report.results.setdefault("matches", {})[name] = match.to_dict()
    return match


def _reproduce_qm(report: Report, record: CurveRecord, curve: Genus2Curve) -> None:
    invariants = igusa_clebsch(curve)
    report.results["igusa_clebsch"] = invariants.to_strings()
    surface = g_surface(invariants, 4)
    _check_match(report, "printed G^(4) recovered", surface, printed_qm_g4())
    twist = _check_match(report, "simplified equation is a twist", printed_qm_g4(), qm_twisted_g4())
    report.add_check("twist parameter is 210", twist is not None and twist.d == 210)
    fibers = _describe_surface(report, "G^(4)", surface, expected_g_fibers(4), g_rank_offset(4))
    rho = _lookup_rho(report, record)
    rank = _check_rank(report, "G^(4)", fibers, rho)
    report.summary.append(f"rank of G^(4): {rank} (given ρ = {rho}, {PICARD_REASONS['qm']})")


def _check_elliptic_curves(report: Report, record: CurveRecord, curve: Genus2Curve) -> None:
    elliptic = {
        name: EllipticCurveQ.from_record(value) for name, value in record.elliptic_curves.items()
    }
    report.results["j_invariants"] = {
        name: format_rational(ec_j_invariant(value)) for name, value in elliptic.items()
    }
    report.results["covers"] = []
    for cover in record.covers:
        target = elliptic[cover.target]
        verification = verify_cover(curve, target, CoverMap.from_record(cover))
        report.results["covers"].append(verification.to_dict())
        report.add_check(
            f"cover {cover.name} onto {cover.target}",
            verification.verified,
            f"degree {verification.degree}",
        )
    for source, target in (("E1", "E1_short"), ("E2", "E2_twist_short")):
        report.add_check(
            f"j({source}) = j({target})",
            ec_j_invariant(elliptic[source]) == ec_j_invariant(elliptic[target]),
            report.results["j_invariants"][source],
        )
    if record.twist is not None:
        twist = record.twist
        twisted = ec_quadratic_twist(elliptic[twist.curve], Fraction(twist.d))
        report.add_check(
            f"twist of {twist.curve} by {twist.d} is {twist.target}",
            ec_is_isomorphic(twisted, elliptic[twist.target]),
        )
    for name in ("E1", "E2"):
        report.add_check(
            f"{name} has a rational point of order 6", has_rational_n_torsion(elliptic[name], 6)
        )


def _reproduce_split(report: Report, record: CurveRecord, curve: Genus2Curve) -> None:
    _check_elliptic_curves(report, record, curve)
    invariants = igusa_clebsch(curve)
    report.results["igusa_clebsch"] = invariants.to_strings()
    surface = g_surface(invariants, 4)
    _check_match(report, "printed G^(4) recovered", surface, printed_split_g4())
    fibers = _describe_surface(report, "G^(4)", surface, expected_g_fibers(4), g_rank_offset(4))
    rho = _lookup_rho(report, record)
    rank = _check_rank(report, "G^(4)", fibers, rho)
    report.results["documentation"] = dict(record.documentation)
    report.summary.append(f"rank of G^(4): {rank} (given ρ = {rho}, {PICARD_REASONS['split']})")


def _check_intermediate_fibration(report: Report, params: HParams) -> None:
    fibration = intermediate_fibration(params)
    fibers = classify_fibers(fibration.surface)
    six = FiberType.from_name("I6")
    report.add_check(
        "I6 fibers at t1 = 0 and t1 = infinity",
        fibers.at(Place.finite(0)) == six and fibers.at(Place.infinity()) == six,
    )
    two = FiberType.from_name("I2")
    places = (-2 * (params.b - params.a) * params.c, -2 * params.b * (params.c - 1))
    report.add_check(
        "I2 fibers at t1 = -2(b - a)c and t1 = -2b(c - 1)",
        all(fibers.at(Place.finite(place)) == two for place in places),
        ", ".join(format_rational(place) for place in places),
    )
    report.add_check(
        "Euler numbers of the fibers sum to 24",
        fibers.euler_total == 24,
        str(fibers.euler_total),
    )
    report.results["intermediate_fibration"] = {**fibration.to_dict(), "fibers": fibers.to_dict()}


def _reproduce_example43(report: Report, record: CurveRecord, curve: Genus2Curve) -> None:
    if record.hparams is None:
        raise UsageError(f"{record.label} has no parameters a, b, c")
    params = HParams.from_strings(record.hparams)
    report.add_check(
        "curve is y^2 = x(x - 1)(x - a)(x - b)(x - c)", genus2_from_hparams(params) == curve
    )
    report.results["h_coefficients"] = h_coefficients(params).to_strings()

    certificate = certify_picard_one(curve, record.primes)
    report.results["certificate"] = certificate.to_dict()
    if certificate.conclusion != 1:
        raise InconclusiveCertificateError(
            f"No certificate for rho = 1 from the primes {list(certificate.primes)}"
        )
    report.add_check("rho(J(C)) = 1", True, f"primes {list(certificate.primes)}")
    _check_intermediate_fibration(report, params)

    surface = h_surface(params, 3)
    fibers = _describe_surface(report, "H^(3)", surface, expected_h_fibers(3), h_rank_offset(3))
    printed = printed_example43_h3()
    isomorphic = same_surface_up_to_iso(surface, printed) is not None
    ratio = format_rational((surface.a2 / printed.a2).constant_value())
    report.results["printed_equation"] = {
        **printed.to_dict(),
        "isomorphic": isomorphic,
        "a2_ratio": ratio,
    }
    if not isomorphic:
        report.summary.append(f"printed H^(3) differs from the computed one, a2 ratio {ratio}")
    rank = _check_rank(report, "H^(3)", fibers, 1)
    report.summary.append(f"MW rank of H^(3) over the algebraic closure: {rank}")


REPRODUCERS = {
    "qm": _reproduce_qm,
    "split": _reproduce_split,
    "example43": _reproduce_example43,
}


def cmd_reproduce(example: str) -> Report:
    """
    Run the whole pipeline on a worked example and check every expectation.

    Args:
        example (str): qm, split or example43

    Returns:
        Report: Checks with their outcomes
    """
    if example not in REPRODUCERS:
        raise UsageError(f"Unknown example {example!r}, expected one of {tuple(REPRODUCERS)}")
    report = Report("reproduce", inputs={"example": example})
    record, curve = _load_curve(EXAMPLE_PATHS[example])
    logger.info(f"Reproducing {example}: {record.description}")
    REPRODUCERS[example](report, record, curve)
    return report
