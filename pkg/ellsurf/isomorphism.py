"""
Search for isomorphisms of elliptic surfaces under t -> lambda * t^(+-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator

from config.console_logging import get_child_logger
from config.constants import ELLSURF_SETTINGS_PATH
from config.settings import PackageSettings
from ellsurf.weierstrass import WeierstrassSurface
from exactcore.rational_function import IncompatibleScalingError, RationalFunction
from exactcore.rationals import format_rational, rational_root, squarefree_kernel
from exactcore.toolkit import rational_roots

logger = get_child_logger(__file__)

NO_MATCH = "no match found"


@dataclass(frozen=True)
class IsomorphismMatch:
    """
    second = twist of first(lambda * t^exponent) by d, rescaled by (u^2 x, u^3 y).

    When lambda is irrational only mu = lambda^root_degree is known and lam is None.
    """

    exponent: int
    mu: Fraction
    root_degree: int
    lam: Fraction | None
    k: RationalFunction
    d: int
    u: RationalFunction

    def describe(self) -> str:
        """
        Human readable substitution.

        Returns:
            str: The change of variables
        """
        if self.lam is not None:
            scale = format_rational(self.lam)
        else:
            scale = f"({format_rational(self.mu)})^(1/{self.root_degree})"
        return f"t -> {scale} * t^{self.exponent}, twist d = {self.d}, u = {self.u}"

    def to_dict(self) -> dict[str, Any]:
        """
        Serialize for reports.

        Returns:
            dict[str, Any]: Every match parameter
        """
        return {
            "exponent": self.exponent,
            "lambda": format_rational(self.lam) if self.lam is not None else None,
            "mu": format_rational(self.mu),
            "root_degree": self.root_degree,
            "k": self.k.to_string(),
            "d": self.d,
            "u": self.u.to_string(),
        }


@dataclass(frozen=True)
class _Scaling:
    mu: Fraction
    root_degree: int
    lam: Fraction | None


def _extended_gcd(first: int, second: int) -> tuple[int, int, int]:
    if second == 0:
        return (abs(first), 1 if first >= 0 else -1, 0)
    divisor, x, y = _extended_gcd(second, first % second)
    return divisor, y, x - (first // second) * y


def _scaling_power(
    source: RationalFunction, target: RationalFunction
) -> tuple[int, Fraction] | None:
    """
    Solve source(lambda * t) = target for lambda^g.

    Args:
        source (RationalFunction): Function before rescaling
        target (RationalFunction): Function after rescaling

    Returns:
        tuple[int, Fraction] | None: (g, lambda^g), g = 0 when every lambda works,
            None when no lambda works
    """
    offset = source.denominator.degree
    pairs = []
    for own, other in (
        (source.numerator, target.numerator),
        (source.denominator, target.denominator),
    ):
        if own.degree != other.degree:
            return None
        for index in range(own.degree + 1):
            value, image = own.coefficient(index), other.coefficient(index)
            if (value == 0) != (image == 0):
                return None
            if value != 0:
                pairs.append((index - offset, image / value))
    degree, power = 0, Fraction(1)
    for shift, ratio in pairs:
        if shift == 0:
            continue
        divisor, own_weight, shift_weight = _extended_gcd(degree, shift)
        power = power**own_weight * ratio**shift_weight
        degree = divisor
    for shift, ratio in pairs:
        expected = power ** (shift // degree) if degree else Fraction(1)
        if ratio != expected:
            return None
    return degree, power


def _scalings(
    pulled_j: RationalFunction, target: WeierstrassSurface, pulled_delta: RationalFunction
) -> Iterator[_Scaling]:
    j_target = target.j_invariant()
    found = _scaling_power(pulled_j, j_target)
    if found is None:
        return
    degree, power = found
    if degree == 0:
        # constant j: candidates from ratios of singular fiber locations
        candidates = [Fraction(1), Fraction(-1)]
        own_roots = [root for root in rational_roots(pulled_delta.numerator) if root != 0]
        other_roots = [
            root for root in rational_roots(target.discriminant().numerator) if root != 0
        ]
        for own in own_roots:
            for other in other_roots:
                if own / other not in candidates:
                    candidates.append(own / other)
        for lam in candidates:
            yield _Scaling(lam, 1, lam)
        return
    root = rational_root(power, degree)
    if root is None:
        yield _Scaling(power, degree, None)
        return
    yield _Scaling(root, 1, root)
    if degree % 2 == 0:
        yield _Scaling(-root, 1, -root)


def _pull_back(function: RationalFunction, exponent: int, scaling: _Scaling) -> RationalFunction:
    if function.is_zero():
        return function
    return function.substitute_power(exponent).rescale(scaling.mu, scaling.root_degree)


def _twist_factor(
    source: tuple[RationalFunction, RationalFunction],
    target: tuple[RationalFunction, RationalFunction],
) -> RationalFunction | None:
    (c4, c6), (c4_target, c6_target) = source, target
    if c4.is_zero() != c4_target.is_zero() or c6.is_zero() != c6_target.is_zero():
        return None
    if c4.is_zero():
        return (c6_target / c6).nth_root(3)
    if c6.is_zero():
        return (c4_target / c4).nth_root(2)
    k = (c6_target / c6) / (c4_target / c4)
    if c4_target != c4 * k**2 or c6_target != c6 * k**3:
        return None
    return k


def _decompose(k: RationalFunction) -> tuple[int, RationalFunction] | None:
    # k = d * w^2 with d a squarefree integer and u = 1/w
    leading = k.numerator.leading
    square = (k / leading).nth_root(2)
    if square is None:
        return None
    d = squarefree_kernel(leading)
    factor = rational_root(leading / d, 2)
    if factor is None:
        return None
    return d, (square * factor).inverse()


def same_surface_up_to_iso(
    first: WeierstrassSurface, second: WeierstrassSurface
) -> IsomorphismMatch | None:
    """
    Search t -> lambda * t^e, e in the configured exponents, with a Weierstrass isomorphism.

    Args:
        first (WeierstrassSurface): Surface to pull back
        second (WeierstrassSurface): Target surface

    Returns:
        IsomorphismMatch | None: First match found, None when the search finds nothing
    """
    exponents = PackageSettings(ELLSURF_SETTINGS_PATH).surfaces.iso_search_exponents
    c4, c6, delta = first.c4_c6_disc()
    c4_target, c6_target, _ = second.c4_c6_disc()
    j_first = first.j_invariant()
    for exponent in exponents:
        pulled_j = j_first.substitute_power(exponent)
        pulled_delta = delta.substitute_power(exponent)
        for scaling in _scalings(pulled_j, second, pulled_delta):
            logger.debug(
                f"Trying t -> mu^(1/{scaling.root_degree}) t^{exponent}, mu = {scaling.mu}"
            )
            try:
                pulled = (_pull_back(c4, exponent, scaling), _pull_back(c6, exponent, scaling))
            except IncompatibleScalingError:
                continue
            k = _twist_factor(pulled, (c4_target, c6_target))
            decomposition = _decompose(k) if k is not None else None
            if k is None or decomposition is None:
                continue
            d, u = decomposition
            match = IsomorphismMatch(
                exponent=exponent,
                mu=scaling.mu,
                root_degree=scaling.root_degree,
                lam=scaling.lam,
                k=k,
                d=d,
                u=u,
            )
            logger.info(f"Isomorphism found: {match.describe()}")
            return match
    logger.info(NO_MATCH)
    return None
