"""
Invariant suites run by `quot-degrees verify`.

Each suite returns a list of Check records; a suite never raises for a
failed property, it reports it.
"""

import logging
import random
from fractions import Fraction
from typing import List

import numpy as np
import sympy
import tqdm

from .checks import Check, CheckOptions, check
from .cyclo_ring import ResidueElem, invert, nontrivial_root_sum, trace_nontrivial
from .errors import NonInvertible, QuotDegreeError
from .holla import (
    brute_force_degree,
    derive_params,
    enumerate_zero_dimensional,
    holla_degree,
    ordered_tuple_sum,
)
from .polyp import bound_polynomial, closed_form, eval_polynomial
from .polyq import PolyQ, all_ones, cyclotomic, divisors, ext_gcd
from .summation import Complex, KahanSummation, relative_error, roots_of_unity
from .versch import bound_exact, build_report, g2_comparison, is_prime, versch_params

logger = logging.getLogger(__name__)

SEED = 20240917


def euler_phi(n: int) -> int:
    return int(sympy.totient(n))


def odd_primes(p_max: int) -> List[int]:
    return [p for p in range(3, p_max + 1) if is_prime(p)]


def versch_grid(g_max: int, p_max: int, g_min: int = 2):
    return [(g, p) for g in range(g_min, g_max + 1) for p in odd_primes(p_max) if g < p + 1]


def _random_poly(rng: random.Random, max_degree: int) -> PolyQ:
    degree = rng.randint(0, max_degree)
    coeffs = [rng.randint(-5, 5) for _ in range(degree)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
    return PolyQ(coeffs)


def cyclotomic_checks(n_max: int = 200) -> List[Check]:
    failures = []
    for n in range(1, n_max + 1):
        phi = cyclotomic(n)
        product = PolyQ.constant(1)
        for d in divisors(n):
            product = product * cyclotomic(d)
        if product != PolyQ.monomial(n) - 1:
            failures.append(f"product identity fails at n={n}")
        if phi.deg() != euler_phi(n):
            failures.append(f"deg Phi_{n} = {phi.deg()} != phi({n})")
        if not phi.has_integer_coeffs():
            failures.append(f"Phi_{n} has non-integer coefficients")
        if n >= 2 and all_ones(n) * PolyQ.of(-1, 1) != PolyQ.monomial(n) - 1:
            failures.append(f"Psi_{n} * (x - 1) != x^{n} - 1")

    return [
        check(
            f"cyclotomic identities for n <= {n_max}",
            not failures,
            "; ".join(failures[:5]),
        )
    ]


def trace_checks(n_max: int = 60, tolerance: float = 1e-9) -> List[Check]:
    worst = 0.0
    failures = []
    for n in range(2, n_max + 1):
        modulus = all_ones(n)
        x = ResidueElem.generator(modulus)
        roots = roots_of_unity(n)[1:]
        power = ResidueElem.scalar(modulus, 1)
        for k in range(3 * n):
            expected = n * (k % n == 0) - 1
            exact = trace_nontrivial(n, power)
            numeric = complex(np.sum(roots**k))
            error = abs(numeric - float(exact))
            worst = max(worst, error)
            if exact != expected or error > tolerance * n:
                failures.append(f"n={n} k={k}: trace {exact}, complex sum {numeric}")
            power = power * x

    return [
        check(
            f"trace(x^k) = n[n|k] - 1 for n <= {n_max}, k < 3n",
            not failures,
            failures[0] if failures else f"max abs error {worst:.3e}",
        )
    ]


def bezout_checks(pairs: int = 1000, seed: int = SEED) -> List[Check]:
    rng = random.Random(seed)
    failures = 0
    for _ in range(pairs):
        a, b = _random_poly(rng, 6), _random_poly(rng, 6)
        g, s, t = ext_gcd(a, b)
        if s * a + t * b != g or g.leading() != 1 or not (a % g).is_zero() or not (b % g).is_zero():
            failures += 1

    return [check(f"Bezout identity on {pairs} random pairs", failures == 0, f"{failures} failures")]


def divmod_checks(pairs: int = 500, seed: int = SEED) -> List[Check]:
    rng = random.Random(seed)
    failures = []
    for _ in range(pairs):
        a, b = _random_poly(rng, 8), _random_poly(rng, 5)
        q, r = divmod(a, b)
        if q * b + r != a or r.deg() >= b.deg():
            failures.append(f"divmod({a}, {b}) = ({q}, {r})")

    return [check(f"a = q*b + r, deg r < deg b on {pairs} random pairs", not failures, "; ".join(failures[:3]))]


def _random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def trace_linearity_checks(n_max: int = 60, samples: int = 200, seed: int = SEED) -> List[Check]:
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        n = rng.randint(2, n_max)
        modulus = all_ones(n)
        f = ResidueElem(modulus, _random_poly(rng, 2 * n))
        g = ResidueElem(modulus, _random_poly(rng, 2 * n))
        alpha, beta = _random_fraction(rng), _random_fraction(rng)
        combined = trace_nontrivial(n, f * alpha + g * beta)
        expected = alpha * trace_nontrivial(n, f) + beta * trace_nontrivial(n, g)
        if combined != expected:
            failures.append(f"n={n} alpha={alpha} beta={beta}: {combined} != {expected}")

    return [check(f"trace is Q-linear on {samples} random pairs", not failures, "; ".join(failures[:3]))]


def inverse_checks(n_max: int = 60, samples: int = 40, seed: int = SEED) -> List[Check]:
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        n = rng.randint(2, n_max)
        for modulus in (cyclotomic(n), all_ones(n)):
            a = ResidueElem(modulus, _random_poly(rng, min(6, modulus.deg() - 1)))
            try:
                product = invert(a) * a
            except NonInvertible:
                if ext_gcd(a.coeffs, modulus)[0].deg() == 0:
                    failures.append(f"{a.coeffs} wrongly reported non-invertible modulo {modulus}")
                continue
            if product != ResidueElem.scalar(modulus, 1):
                failures.append(f"invert failed for {a.coeffs} modulo {modulus}")

    return [check(f"invert(a) * a = 1 on {samples} random moduli", not failures, "; ".join(failures[:3]))]


def root_sum_checks(n_max: int = 60, g_max: int = 6, tolerance: float = 1e-9) -> List[Check]:
    worst = 0.0
    failures = []
    for n in range(2, n_max + 1):
        roots = roots_of_unity(n)[1:]
        for g in range(2, g_max + 1):
            exact = nontrivial_root_sum(n, g)
            terms = roots ** (g - 1) / (roots - 1) ** (2 * g - 2)
            numeric = KahanSummation(Complex).extend(terms).value
            error = relative_error(np.real(numeric), exact)
            worst = max(worst, error)
            if error >= tolerance:
                failures.append(f"n={n} g={g}: exact {exact}, complex sum {numeric}")

    return [
        check(
            f"root-of-unity sum vs complex sum for n <= {n_max}, g <= {g_max}",
            not failures,
            failures[0] if failures else f"max rel_err {worst:.3e}",
        )
    ]


def algebra_suite() -> List[Check]:
    return (
        cyclotomic_checks()
        + trace_checks()
        + trace_linearity_checks()
        + divmod_checks()
        + bezout_checks()
        + inverse_checks()
        + root_sum_checks()
    )


def holla_suite(
    options: CheckOptions,
    n_max: int = 14,
    r_max: int = 3,
    g_max: int = 4,
    ordered_n_max: int = 8,
    classical_g_max: int = 8,
    progress: bool = False,
) -> List[Check]:
    checks = []
    worst = 0.0
    oracle_failures = []
    not_positive = []
    packs = list(enumerate_zero_dimensional(n_max, r_max, g_max))
    for params in tqdm.tqdm(packs, desc="holla packs", disable=not progress):
        try:
            exact = holla_degree(params)
            approx = brute_force_degree(params, cap=options.oracle_cap)
        except QuotDegreeError as e:
            oracle_failures.append(f"{tuple(params[:4])}: {e.message}")
            continue
        error = relative_error(approx, exact)
        worst = max(worst, error)
        if error >= options.oracle_tolerance:
            oracle_failures.append(f"{tuple(params[:4])}: exact {exact}, oracle {approx}")
        if exact <= 0:
            not_positive.append(f"{tuple(params[:4])}: {exact}")

    checks.append(
        check(
            f"exact vs brute force on {len(packs)} packs (n <= {n_max}, r <= {r_max}, g <= {g_max})",
            not oracle_failures,
            "; ".join(oracle_failures[:3]) or f"max rel_err {worst:.3e}",
        )
    )
    checks.append(check("degree is a positive integer", not not_positive, "; ".join(not_positive[:3])))

    mismatches = []
    for params in enumerate_zero_dimensional(ordered_n_max, r_max, 3):
        full = holla_degree(params, rotation_reduced=False)
        if not ordered_tuple_sum(params) == full == holla_degree(params):
            mismatches.append(tuple(params[:4]))
    checks.append(
        check(
            f"ordered tuples / r! = subsets = rotation-reduced subsets (n <= {ordered_n_max})",
            not mismatches,
            str(mismatches[:3]),
        )
    )

    wrong = []
    for g in range(2, classical_g_max + 1):
        degree = holla_degree(derive_params(2, g - 1, 1, g))
        if degree != 2**g:
            wrong.append(f"g={g}: {degree}")
    checks.append(check(f"n=2, r=1 count is 2^g for g <= {classical_g_max}", not wrong, "; ".join(wrong)))
    return checks


def versch_suite(
    g_max: int, p_max: int, options: CheckOptions, progress: bool = False
) -> List[Check]:
    checks = []
    grid = versch_grid(g_max, p_max)
    for g, p in tqdm.tqdm(grid, desc="bound grid", disable=not progress):
        try:
            report = build_report(versch_params(g, p), options)
        except QuotDegreeError as e:
            checks.append(check(f"g={g} p={p}: report", False, e.message))
            continue
        checks.extend(c._replace(name=f"g={g} p={p}: {c.name}") for c in report.checks)

    wrong = []
    for p in odd_primes(50):
        comparison = g2_comparison(p)
        if comparison.gap != p**3 - p or comparison.exact > comparison.bound:
            wrong.append(str(p))
    checks.append(check("genus-2 gap is p^3 - p for odd primes p <= 50", not wrong, ", ".join(wrong)))
    return checks


def polyp_suite(g_max: int, p_max: int) -> List[Check]:
    checks = []
    for g in range(2, g_max + 1):
        try:
            poly = bound_polynomial(g)
            shifted = bound_polynomial(g, first_node=5)
        except QuotDegreeError as e:
            checks.append(check(f"g={g}: bound polynomial", False, e.message))
            continue

        reference = closed_form(g)
        if reference is not None:
            checks.append(check(f"g={g}: closed form", poly == reference))
        checks.append(check(f"g={g}: node-set independence", poly == shifted))

        mismatches = [
            p
            for p in odd_primes(p_max)
            if g < p + 1 and eval_polynomial(poly, p) != bound_exact(versch_params(g, p))
        ]
        checks.append(
            check(f"g={g}: polynomial = bound at odd primes p <= {p_max}", not mismatches, str(mismatches))
        )
    return checks


def run_all(g_max: int, p_max: int, options: CheckOptions, progress: bool = False) -> List[Check]:
    checks = []
    suites = [
        ("algebra", algebra_suite),
        ("holla", lambda: holla_suite(options, progress=progress)),
        ("versch", lambda: versch_suite(g_max, p_max, options, progress=progress)),
        ("polyp", lambda: polyp_suite(g_max, p_max)),
    ]
    for name, suite in suites:
        suite_checks = suite()
        logger.debug(
            "%s suite: %d checks, %d failed",
            name,
            len(suite_checks),
            sum(1 for c in suite_checks if not c.passed),
        )
        checks.extend(suite_checks)
    return checks
