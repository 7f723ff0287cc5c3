"""
Upper bound for the generic degree of the rank-2 generalized Verschiebung.

The degree of the Verschiebung on a general curve of genus g in
characteristic p equals 1/p^g times the degree of a zero-dimensional Quot
scheme of rank-2, degree-0 subsheaves of a rank-2p bundle of degree
2(p-1)(g-1). Holla's formula bounds that degree, and after the specialization
the sum collapses to a single sum over the nontrivial 2p-th roots of unity.
The bound is evaluated here along four routes: the root-of-unity sum, the
cosine form of the same sum, the general Holla engine, and the sine power sum
in floating point.
"""

import logging
import warnings
from fractions import Fraction
from typing import List, NamedTuple, Optional

import numpy as np

from .checks import Check, CheckOptions, check
from .cyclo_ring import cosine_root_sum, nontrivial_root_sum
from .errors import CrossPathMismatch, ParameterError, VerificationError
from .holla import QuotParams, derive_params, holla_degree
from .summation import PI, PRECISION, KahanSummation, Real, relative_error

logger = logging.getLogger(__name__)

HYPOTHESIS = "p+1 > g > 1 and p ≠ 2"
HOLLA_CROSS_CHECK_P_MAX = 13


class VerschParams(NamedTuple):
    p: int
    g: int


class Lemma4Record(NamedTuple):
    chi: int
    rank_pushforward: int
    deg_pushforward: int
    rank_hom: int
    deg_hom: int
    euler_diff: int


class G2Comparison(NamedTuple):
    exact: Fraction
    bound: Fraction
    gap: Fraction
    excess_nonempty: bool


class BoundReport(NamedTuple):
    g: int
    p: int
    bound_exact: Fraction
    quotF_degree_bound: Fraction
    bound_cosine: Fraction
    holla_degree: Optional[int]
    trig_value: float
    rel_err: float
    lemma4: Lemma4Record
    g2_comparison: Optional[G2Comparison]
    checks: List[Check]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def _require_odd_prime(p: int):
    if not is_prime(p):
        raise ParameterError(f"p must be prime, got p={p}")
    if p == 2:
        raise ParameterError(f"p must be odd; the bound needs {HYPOTHESIS}")


def versch_params(g: int, p: int) -> VerschParams:
    _require_odd_prime(p)
    if not p + 1 > g > 1:
        raise ParameterError(f"g={g}, p={p} violates the hypothesis {HYPOTHESIS}")
    return VerschParams(p=p, g=g)


def specialize(v: VerschParams) -> QuotParams:
    p, g = v.p, v.g
    params = derive_params(2 * p, 2 * (p - 1) * (g - 1), 2, g)
    expected = (g - 1, 2 * (g - 1), 0, 0)
    actual = (params.a, params.b, params.e_max, params.eps)
    if actual != expected:
        raise VerificationError(
            f"specialization of {v} gave (a, b, e_max, eps)={actual}, expected {expected}"
        )
    return params


def bound_exact(v: VerschParams) -> Fraction:
    return Fraction(-4 * v.p) ** (v.g - 1) * nontrivial_root_sum(2 * v.p, v.g)


def bound_cosine(v: VerschParams) -> Fraction:
    return Fraction(2 * v.p) ** (v.g - 1) * cosine_root_sum(2 * v.p, v.g)


def bound_trig(v: VerschParams) -> float:
    p, g = v.p, v.g
    accumulator = KahanSummation(Real)
    for theta in range(1, 2 * p):
        accumulator.add(np.sin(PI * Real(theta) / Real(2 * p)) ** -(2 * g - 2))
    return float(Real(p) ** (g - 1) * accumulator.value)


def quotF_degree_bound(v: VerschParams, cross_check: bool = True) -> Fraction:
    value = v.p**v.g * bound_exact(v)
    if cross_check:
        degree = holla_degree(specialize(v))
        if degree != value:
            raise CrossPathMismatch(
                f"Holla engine gives {degree} for {v}, root-of-unity sum gives {value}"
            )
    return value


def lemma4_arithmetic(v: VerschParams) -> Lemma4Record:
    p, g = v.p, v.g
    chi = 2 * (1 - g)
    rank_pushforward = 2 * p
    deg_pushforward = chi - rank_pushforward * (1 - g)
    rank_hom = 2 * (2 * p - 2)
    # Hom(F, G) with deg F = 0 and deg G = deg F_*(E)
    deg_hom = 2 * deg_pushforward
    euler_diff = deg_hom + rank_hom * (1 - g)

    if deg_pushforward != 2 * (p - 1) * (g - 1) or deg_pushforward != specialize(v).d:
        raise VerificationError(f"deg F_*(E) = {deg_pushforward} for {v}, expected 2(p-1)(g-1)")
    if deg_hom != 4 * (p - 1) * (g - 1):
        raise VerificationError(f"deg Hom = {deg_hom} for {v}, expected 4(p-1)(g-1)")
    if euler_diff != 0:
        raise VerificationError(f"Euler characteristic difference {euler_diff} != 0 for {v}")

    return Lemma4Record(
        chi=chi,
        rank_pushforward=rank_pushforward,
        deg_pushforward=deg_pushforward,
        rank_hom=rank_hom,
        deg_hom=deg_hom,
        euler_diff=euler_diff,
    )


def known_g2_degree(p: int) -> Fraction:
    return Fraction(p**3 + 2 * p, 3)


def g2_comparison(p: int) -> G2Comparison:
    _require_odd_prime(p)
    exact = known_g2_degree(p)
    bound = bound_exact(VerschParams(p=p, g=2))
    gap = bound - exact
    if gap != p**3 - p:
        raise VerificationError(f"genus-2 gap {gap} != p^3 - p for p={p}")
    return G2Comparison(exact=exact, bound=bound, gap=gap, excess_nonempty=gap > 0)


def build_report(
    v: VerschParams,
    options: CheckOptions = CheckOptions(),
    cross_check_holla: Optional[bool] = None,
) -> BoundReport:
    if cross_check_holla is None:
        cross_check_holla = v.p <= HOLLA_CROSS_CHECK_P_MAX

    checks = []
    exact = bound_exact(v)
    quotF = quotF_degree_bound(v, cross_check=False)
    checks.append(check("quotF = p^g * bound", quotF == v.p**v.g * exact))

    holla = None
    if cross_check_holla:
        holla = holla_degree(specialize(v))
        if holla != quotF:
            raise CrossPathMismatch(
                f"Holla engine gives {holla} for {v}, root-of-unity sum gives {quotF}"
            )
        checks.append(check("holla engine = quotF", True, f"{holla}"))

    cosine = bound_cosine(v)
    if cosine != exact:
        raise CrossPathMismatch(f"cosine form gives {cosine} for {v}, expected {exact}")
    checks.append(check("cosine form = bound", True))

    trig = bound_trig(v)
    rel_err = relative_error(trig, exact)
    checks.append(
        check(
            "trig rel_err < tol",
            max(rel_err, PRECISION) < options.tolerance,
            f"rel_err={rel_err:.3e} tol={options.tolerance:.1e}",
        )
    )

    integral = exact.denominator == 1 and exact > 0
    if not integral:
        warnings.warn(f"bound for g={v.g}, p={v.p} is not a positive integer: {exact}")
    checks.append(check("bound is a positive integer", integral, str(exact)))

    lemma4 = lemma4_arithmetic(v)
    checks.append(check("euler_diff = 0", lemma4.euler_diff == 0))

    comparison = None
    if v.g == 2:
        comparison = g2_comparison(v.p)
        checks.append(
            check(
                "g2 gap = p^3 - p",
                comparison.gap == v.p**3 - v.p,
                f"gap={comparison.gap}",
            )
        )

    logger.debug("bound report for %s: bound=%s rel_err=%.3e", v, exact, rel_err)
    return BoundReport(
        g=v.g,
        p=v.p,
        bound_exact=exact,
        quotF_degree_bound=quotF,
        bound_cosine=cosine,
        holla_degree=holla,
        trig_value=trig,
        rel_err=rel_err,
        lemma4=lemma4,
        g2_comparison=comparison,
        checks=checks,
    )
