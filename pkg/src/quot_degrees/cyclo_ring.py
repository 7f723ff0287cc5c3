"""
Arithmetic in quotient rings Q[x]/m(x) and exact sums over roots of unity.

Sums over the nontrivial n-th roots of unity are evaluated in the etale
algebra Q[x]/Psi_n, where Psi_n = 1 + x + ... + x^(n-1). In that ring x - 1
is a unit, x^n = 1, and the trace of multiplication by x^k is n*[n | k] - 1,
so a single inversion followed by a trace replaces a sum over n - 1 roots.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ModulusMismatch, NonInvertible, NonRationalResult, ParameterError
from .polyq import PolyQ, all_ones, ext_gcd

logger = logging.getLogger(__name__)


@dataclass(frozen=True, init=False)
class ResidueElem:
    modulus: PolyQ
    coeffs: PolyQ

    def __init__(self, modulus: PolyQ, coeffs: PolyQ, reduced: bool = False):
        if modulus.deg() < 1 or modulus.leading() != 1:
            raise ParameterError(f"modulus must be monic of degree >= 1, got {modulus}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", coeffs if reduced else coeffs % modulus)

    @classmethod
    def generator(cls, modulus: PolyQ) -> ResidueElem:
        return cls(modulus, PolyQ.x())

    @classmethod
    def scalar(cls, modulus: PolyQ, c: Union[int, Fraction]) -> ResidueElem:
        return cls(modulus, PolyQ.constant(c))

    def _lift(self, other) -> ResidueElem:
        if isinstance(other, (int, Fraction)):
            return ResidueElem.scalar(self.modulus, other)
        if not isinstance(other, ResidueElem):
            return NotImplemented
        if other.modulus != self.modulus:
            raise ModulusMismatch(
                f"cannot combine residues modulo {self.modulus} and {other.modulus}"
            )
        return other

    def __add__(self, other) -> ResidueElem:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ResidueElem(self.modulus, self.coeffs + other.coeffs, reduced=True)

    def __sub__(self, other) -> ResidueElem:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ResidueElem(self.modulus, self.coeffs - other.coeffs, reduced=True)

    def __rsub__(self, other) -> ResidueElem:
        return -self + other

    def __neg__(self) -> ResidueElem:
        return ResidueElem(self.modulus, -self.coeffs, reduced=True)

    def __mul__(self, other) -> ResidueElem:
        if isinstance(other, (int, Fraction)):
            return ResidueElem(self.modulus, self.coeffs * other, reduced=True)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ResidueElem(self.modulus, self.coeffs * other.coeffs)

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, k: int) -> ResidueElem:
        if k < 0:
            return invert(self) ** (-k)
        result = ResidueElem.scalar(self.modulus, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def is_zero(self) -> bool:
        return self.coeffs.is_zero()

    def is_scalar(self) -> bool:
        return self.coeffs.is_constant()

    def scalar_value(self) -> Fraction:
        if not self.is_scalar():
            raise NonRationalResult(f"{self.coeffs} is not a scalar residue")
        return self.coeffs.coeff(0)


def ring_arith(a: ResidueElem, b: ResidueElem, op: str) -> ResidueElem:
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"cannot combine residues modulo {a.modulus} and {b.modulus}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ParameterError(f"unknown ring operation '{op}'")


def invert(a: ResidueElem) -> ResidueElem:
    if a.is_zero():
        raise NonInvertible(f"zero is not invertible modulo {a.modulus}")
    g, s, _ = ext_gcd(a.coeffs, a.modulus)
    if g.deg() != 0:
        raise NonInvertible(
            f"{a.coeffs} shares the factor {g} with the modulus {a.modulus}"
        )
    return ResidueElem(a.modulus, s)


def trace_nontrivial(n: int, f: ResidueElem) -> Fraction:
    """Sum of f(zeta) over the n-th roots of unity zeta != 1."""
    if n < 2:
        raise ParameterError(f"n must be at least 2, got {n}")
    if f.modulus != all_ones(n):
        raise ModulusMismatch(f"trace_nontrivial({n}) needs an element modulo Psi_{n}")

    total = Fraction(0)
    for k, c in enumerate(f.coeffs.coeffs):
        if c:
            total += c * (n - 1 if k % n == 0 else -1)
    return total


def nontrivial_root_sum(n: int, g: int) -> Fraction:
    """
    Exact value of the sum of zeta^(g-1) / (zeta - 1)^(2g-2) over the
    nontrivial n-th roots of unity.
    """
    if n < 2:
        raise ParameterError(f"n must be at least 2, got {n}")
    if g < 2:
        raise ParameterError(f"g must be at least 2, got {g}")

    x = ResidueElem.generator(all_ones(n))
    denominator = (x - 1) ** (2 * g - 2)
    value = trace_nontrivial(n, x ** (g - 1) * invert(denominator))
    logger.debug("nontrivial_root_sum(n=%d, g=%d) = %s", n, g, value)
    return value


def cosine_root_sum(n: int, g: int) -> Fraction:
    """
    Exact value of the sum of 1 / (1 - (zeta + 1/zeta)/2)^(g-1) over the
    nontrivial n-th roots of unity.
    """
    if n < 2:
        raise ParameterError(f"n must be at least 2, got {n}")
    if g < 2:
        raise ParameterError(f"g must be at least 2, got {g}")

    x = ResidueElem.generator(all_ones(n))
    # x^n = 1 modulo Psi_n
    x_inverse = x ** (n - 1)
    base = 1 - (x + x_inverse) * Fraction(1, 2)
    return trace_nontrivial(n, invert(base) ** (g - 1))
