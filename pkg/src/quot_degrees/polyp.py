"""
The Verschiebung bound as an exact polynomial in p.

The bound is p^(g-1) times a cosecant power sum of order 2g-2 over 2p points,
which is a polynomial of degree 3g-3 in p. It is recovered by Newton
interpolation at integer nodes (the root-of-unity sum is defined for every
integer m >= 2, prime or not) and confirmed at extra nodes with exact
equality.
"""

import logging
import math
from fractions import Fraction
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

from .cyclo_ring import nontrivial_root_sum
from .errors import ParameterError, VerificationError
from .polyq import PolyQ

logger = logging.getLogger(__name__)

VERIFICATION_NODES = 3


class PolynomialInP(NamedTuple):
    g: int
    coeffs: Tuple[Fraction, ...]

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def support(self) -> List[int]:
        return [k for k, c in enumerate(self.coeffs) if c != 0]

    def nonzero_terms(self) -> Dict[int, Fraction]:
        return {k: c for k, c in enumerate(self.coeffs) if c != 0}


class Interpolation(NamedTuple):
    polynomial: PolynomialInP
    nodes: List[int]
    verification: List[Tuple[int, Fraction, Fraction]]


def bound_value(g: int, m: int) -> Fraction:
    """(-4m)^(g-1) times the root-of-unity sum over 2m points; the bound at p = m."""
    return Fraction(-4 * m) ** (g - 1) * nontrivial_root_sum(2 * m, g)


def _bound_value_args(args) -> Fraction:
    return bound_value(*args)


def expected_support(g: int) -> List[int]:
    return list(range(g - 1, 3 * g - 2, 2))


def newton_coefficients(xs: List[int], ys: List[Fraction]) -> List[Fraction]:
    table = [Fraction(y) for y in ys]
    for level in range(1, len(xs)):
        for i in range(len(xs) - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    return table


def newton_to_monomial(xs: List[int], newton: List[Fraction]) -> PolyQ:
    poly = PolyQ.constant(newton[-1])
    for i in range(len(newton) - 2, -1, -1):
        poly = poly * PolyQ.of(-xs[i], 1) + newton[i]
    return poly


def eval_polynomial(poly: PolynomialInP, p: int) -> Fraction:
    result = Fraction(0)
    for c in reversed(poly.coeffs):
        result = result * p + c
    return result


def bound_polynomial(
    g: int, first_node: int = 2, mapper: Callable = map
) -> PolynomialInP:
    return interpolate_bound(g, first_node=first_node, mapper=mapper).polynomial


def interpolate_bound(
    g: int, first_node: int = 2, mapper: Callable = map
) -> Interpolation:
    """
    Interpolate the bound through 3g-2 nodes starting at `first_node` and
    confirm the result at the next three nodes. `mapper` may be a pool's map
    to evaluate the nodes concurrently.
    """
    if g < 2:
        raise ParameterError(f"genus must be at least 2, got g={g}")
    if first_node < 2:
        raise ParameterError(f"interpolation nodes start at m >= 2, got {first_node}")

    degree = 3 * g - 3
    count = degree + 1
    all_nodes = list(range(first_node, first_node + count + VERIFICATION_NODES))
    values = list(mapper(_bound_value_args, [(g, m) for m in all_nodes]))
    nodes, node_values = all_nodes[:count], values[:count]

    poly = newton_to_monomial(nodes, newton_coefficients(nodes, node_values))
    coeffs = tuple(poly.coeffs) + (Fraction(0),) * (degree + 1 - len(poly.coeffs))
    result = PolynomialInP(g=g, coeffs=coeffs)

    verification = []
    for m, expected in zip(all_nodes[count:], values[count:]):
        got = eval_polynomial(result, m)
        verification.append((m, expected, got))
        if got != expected:
            raise VerificationError(
                f"interpolated polynomial for g={g} gives {got} at m={m}, sum gives {expected}"
            )

    if poly.deg() != degree:
        raise VerificationError(f"bound polynomial for g={g} has degree {poly.deg()}, expected {degree}")
    if not set(result.support()) <= set(expected_support(g)):
        raise VerificationError(
            f"bound polynomial for g={g} has support {result.support()}, expected within {expected_support(g)}"
        )

    logger.debug("bound polynomial for g=%d: %s", g, result.nonzero_terms())
    return Interpolation(polynomial=result, nodes=nodes, verification=verification)


def _from_terms(g: int, terms: Dict[int, Fraction]) -> PolynomialInP:
    coeffs = [Fraction(0)] * (3 * g - 2)
    for k, c in terms.items():
        coeffs[k] = c
    return PolynomialInP(g=g, coeffs=tuple(coeffs))


def closed_form(g: int) -> Optional[PolynomialInP]:
    """The closed forms known for genus 2 and 3."""
    if g == 2:
        return _from_terms(2, {3: Fraction(4, 3), 1: Fraction(-1, 3)})
    if g == 3:
        return _from_terms(
            3, {6: Fraction(16, 45), 4: Fraction(40, 45), 2: Fraction(-11, 45)}
        )
    return None


def format_polynomial(poly: PolynomialInP) -> str:
    """Render as (16p^6 + 40p^4 - 11p^2)/45 over the common denominator."""
    terms = poly.nonzero_terms()
    if not terms:
        return "0"

    denominator = 1
    for c in terms.values():
        denominator = denominator * c.denominator // math.gcd(denominator, c.denominator)

    parts = []
    for k in sorted(terms, reverse=True):
        c = terms[k] * denominator
        sign = " + " if (c > 0 and parts) else " - " if (c < 0 and parts) else "" if c > 0 else "-"
        magnitude = abs(c.numerator)
        power = "" if k == 0 else "p" if k == 1 else f"p^{k}"
        coeff = str(magnitude) if (power == "" or magnitude != 1) else ""
        parts.append(sign + coeff + power)

    body = "".join(parts)
    return body if denominator == 1 else f"({body})/{denominator}"
