"""
Degrees of zero-dimensional Quot schemes of maximal subbundles.

For a general stable bundle of rank n and degree d on a curve of genus g,
the rank-r subsheaves of maximal degree form a Quot scheme of dimension eps.
When eps = 0 its degree is given by Holla's form of the Vafa-Intriligator
formula, a signed sum over r-tuples of distinct n-th roots of unity, which
is evaluated here exactly in the cyclotomic field Q[x]/Phi_n.
"""

import itertools
import logging
import math
from fractions import Fraction
from typing import Iterator, NamedTuple

import numpy as np

from .cyclo_ring import ResidueElem, invert
from .errors import (
    DimensionPositive,
    NonIntegerSign,
    NonRationalResult,
    OracleError,
    ParameterError,
    VerificationError,
)
from .polyq import cyclotomic
from .summation import Complex, KahanSummation, Real, roots_of_unity

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_CAP = 64


class QuotParams(NamedTuple):
    n: int
    d: int
    r: int
    g: int
    a: int
    b: int
    eps: int
    e_max: int
    s_r: int
    quot_dim: int


def derive_params(n: int, d: int, r: int, g: int) -> QuotParams:
    if n < 1:
        raise ParameterError(f"rank n must be at least 1, got n={n}")
    if not 1 <= r <= n:
        raise ParameterError(f"subsheaf rank must satisfy 1 <= r <= n, got r={r}, n={n}")
    if g < 2:
        raise ParameterError(f"genus must be at least 2, got g={g}")

    # d = a*n - b with 0 <= b < n
    a = -(-d // n)
    b = a * n - d
    balanced = r * (n - r) * (g - 1)
    eps = (d * r - balanced) % n
    s_r = balanced + eps
    e_max, remainder = divmod(d * r - s_r, n)
    if remainder != 0:
        raise VerificationError(f"e_max is not integral for n={n}, d={d}, r={r}, g={g}")

    return QuotParams(
        n=n, d=d, r=r, g=g, a=a, b=b, eps=eps, e_max=e_max, s_r=s_r, quot_dim=eps
    )


def is_zero_dimensional(params: QuotParams) -> bool:
    return params.eps == 0


def sign_exponent(params: QuotParams) -> int:
    n, r, b, g = params.n, params.r, params.b, params.g
    exponent = Fraction((r - 1) * (b * r - (g - 1) * r * r), n)
    if exponent.denominator != 1:
        raise NonIntegerSign(
            f"sign exponent {exponent} is not an integer for n={n}, b={b}, r={r}, g={g}"
        )
    return exponent.numerator


def prefactor_sign(params: QuotParams) -> int:
    return -1 if sign_exponent(params) % 2 else 1


def _require_zero_dimensional(params: QuotParams):
    if not is_zero_dimensional(params):
        raise DimensionPositive(params.eps)


def all_subsets(n: int, r: int):
    return itertools.combinations(range(n), r)


def anchored_subsets(n: int, r: int):
    """The r-subsets of {0, ..., n-1} that contain 0."""
    return ((0,) + rest for rest in itertools.combinations(range(1, n), r - 1))


def rotation_weight(params: QuotParams) -> Fraction:
    """
    Shifting every exponent by t multiplies the summand by
    zeta^(t*(b*r - (g-1)*r^2)), which is 1 when eps = 0. Counting pairs
    (S, t) with t in S, every subset S arises r times and every subset
    containing 0 arises n times (as S - t), so the full sum is n/r times the
    sum over subsets containing 0.
    """
    n, r, b, g = params.n, params.r, params.b, params.g
    if (b * r - (g - 1) * r * r) % n != 0:
        raise VerificationError(f"summand is not rotation invariant for {params}")
    return Fraction(n, r)


def partial_holla_sum(params: QuotParams, subsets) -> ResidueElem:
    """
    Unscaled sum of the symmetric summand over the given exponent subsets,
    each root written as a power of the generator of Q[x]/Phi_n. Partial sums
    over disjoint slices combine by addition.
    """
    _require_zero_dimensional(params)
    n, r, g = params.n, params.r, params.g
    modulus = cyclotomic(n)
    zeta = ResidueElem.generator(modulus)
    powers = [zeta**k for k in range(n)]
    numerator_exponent = params.b - g + 1
    # each unordered pair {i, j} contributes (zi - zj)^(g-1) (zj - zi)^(g-1)
    pair_sign = (-1) ** ((g - 1) * math.comb(r, 2))

    total = ResidueElem.scalar(modulus, 0)
    count = 0
    for subset in subsets:
        numerator = powers[sum(subset) % n] ** numerator_exponent
        denominator = ResidueElem.scalar(modulus, 1)
        for i, j in itertools.combinations(subset, 2):
            denominator = denominator * (powers[i] - powers[j])
        denominator = denominator ** (2 * (g - 1)) * pair_sign
        total = total + numerator * invert(denominator)
        count += 1

    logger.debug("summed %d subsets for %s", count, params)
    return total


def combine_partial_sums(params: QuotParams, partials, weight: Fraction = Fraction(1)) -> int:
    total = ResidueElem.scalar(cyclotomic(params.n), 0)
    for partial in partials:
        total = total + partial
    if not total.is_scalar():
        raise NonRationalResult(
            f"root-of-unity sum for {params} did not reduce to a rational: {total.coeffs}"
        )
    value = (
        prefactor_sign(params)
        * params.n ** (params.r * (params.g - 1))
        * weight
        * total.scalar_value()
    )
    if value.denominator != 1:
        raise NonRationalResult(f"degree for {params} is not an integer: {value}")
    return value.numerator


def holla_degree(params: QuotParams, rotation_reduced: bool = True) -> int:
    """
    Exact degree of the zero-dimensional Quot scheme.

    The summand is symmetric in the roots, so the sum over ordered tuples of
    distinct roots is r! times the sum over unordered subsets of exponents,
    which cancels the 1/r! of the formula. With `rotation_reduced` only the
    subsets containing 0 are enumerated (see rotation_weight).
    """
    _require_zero_dimensional(params)
    # fail before enumerating if the sign exponent is not integral
    sign_exponent(params)

    if rotation_reduced:
        subsets, weight = anchored_subsets(params.n, params.r), rotation_weight(params)
    else:
        subsets, weight = all_subsets(params.n, params.r), Fraction(1)
    degree = combine_partial_sums(params, [partial_holla_sum(params, subsets)], weight)

    logger.debug("holla_degree(%s) = %d", params, degree)
    return degree


def ordered_tuple_sum(params: QuotParams) -> Fraction:
    """
    The formula evaluated literally over ordered tuples of distinct roots,
    divided by r!; agrees with holla_degree by symmetry of the summand.
    """
    _require_zero_dimensional(params)
    n, r, g = params.n, params.r, params.g
    modulus = cyclotomic(n)
    zeta = ResidueElem.generator(modulus)
    powers = [zeta**k for k in range(n)]

    total = ResidueElem.scalar(modulus, 0)
    for ordered in itertools.permutations(range(n), r):
        numerator = ResidueElem.scalar(modulus, 1)
        for k in ordered:
            numerator = numerator * powers[k] ** (params.b - g + 1)
        denominator = ResidueElem.scalar(modulus, 1)
        for i, j in itertools.permutations(ordered, 2):
            denominator = denominator * (powers[i] - powers[j]) ** (g - 1)
        total = total + numerator * invert(denominator)

    if not total.is_scalar():
        raise NonRationalResult(f"ordered sum for {params} is not rational")
    prefactor = Fraction(prefactor_sign(params) * n ** (r * (g - 1)), math.factorial(r))
    return prefactor * total.scalar_value()


def brute_force_degree(params: QuotParams, cap: int = DEFAULT_ORACLE_CAP) -> float:
    """
    Floating point evaluation of the formula over ordered tuples of explicit
    complex roots, in extended precision with compensated summation.
    """
    _require_zero_dimensional(params)
    n, r, g = params.n, params.r, params.g
    if n > cap:
        raise OracleError(f"brute-force oracle is capped at n <= {cap}, got n={n}")

    roots = roots_of_unity(n)
    numerator_exponent = params.b - g + 1
    accumulator = KahanSummation(Complex)
    for ordered in itertools.permutations(range(n), r):
        term = Complex(1)
        for k in ordered:
            term *= roots[k] ** numerator_exponent
        for i, j in itertools.permutations(ordered, 2):
            term /= (roots[i] - roots[j]) ** (g - 1)
        accumulator.add(term)

    prefactor = Real(prefactor_sign(params)) * Real(n) ** (r * (g - 1))
    prefactor /= Real(math.factorial(r))
    value = accumulator.value * prefactor

    real, imag = float(np.real(value)), float(np.imag(value))
    if abs(imag) > 1e-6 * abs(real):
        raise OracleError(
            f"brute-force sum for {params} has imaginary residue {imag} against real part {real}"
        )
    return real


def enumerate_zero_dimensional(
    n_max: int, r_max: int, g_max: int, n_min: int = 1, g_min: int = 2
) -> Iterator[QuotParams]:
    """All eps = 0 packs with d running over the residues 0..n-1 modulo n."""
    for n in range(n_min, n_max + 1):
        for r in range(1, min(r_max, n) + 1):
            for g in range(g_min, g_max + 1):
                for d in range(n):
                    params = derive_params(n, d, r, g)
                    if is_zero_dimensional(params):
                        yield params
