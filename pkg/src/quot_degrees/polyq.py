"""
Dense univariate polynomials over the rationals.

A polynomial is stored as a tuple of Fraction coefficients starting with the
constant term, so PolyQ.of(1, 0, -1) is 1 - x^2 and the zero polynomial is
the empty tuple. Every value is immutable and may be shared between workers.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple, Union

import sympy

from .errors import ParameterError, VerificationError

Scalar = Union[int, Fraction]


def _trim(coeffs: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    values = [Fraction(c) for c in coeffs]
    end = len(values)
    while end >= 1 and values[end - 1] == 0:
        end -= 1
    return tuple(values[:end])


@dataclass(frozen=True, init=False)
class PolyQ:
    coeffs: Tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def of(cls, *args: Scalar) -> PolyQ:
        return cls(args)

    @classmethod
    def constant(cls, c: Scalar) -> PolyQ:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> PolyQ:
        if k < 0:
            raise ParameterError(f"monomial exponent must be non-negative, got {k}")
        return cls((0,) * k + (c,))

    @classmethod
    def x(cls) -> PolyQ:
        return cls.monomial(1)

    def deg(self) -> int:
        """The zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def monic(self) -> PolyQ:
        if self.is_zero():
            return self
        lc = self.leading()
        return PolyQ(c / lc for c in self.coeffs)

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def evaluate(self, x):
        """Horner evaluation; x may be any value supporting + and *."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __repr__(self):
        if not self.coeffs:
            return "PolyQ('0')"

        parts = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if c == 0:
                continue
            sign = " + " if (c > 0 and parts) else " - " if (c < 0 and parts) else "" if c > 0 else "-"
            term = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            magnitude = abs(c)
            coeff = str(magnitude) if (term == "" or magnitude != 1) else ""
            if coeff and term and magnitude.denominator != 1:
                coeff = f"({coeff})"
            parts.append(sign + coeff + term)

        return f"PolyQ('{''.join(parts)}')"

    @staticmethod
    def _coerce(other) -> PolyQ:
        if isinstance(other, PolyQ):
            return other
        if isinstance(other, (int, Fraction)):
            return PolyQ.constant(other)
        return NotImplemented

    def __add__(self, other) -> PolyQ:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PolyQ(
            c + d
            for c, d in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __sub__(self, other) -> PolyQ:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PolyQ(
            c - d
            for c, d in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __rsub__(self, other) -> PolyQ:
        return -self + other

    def __neg__(self) -> PolyQ:
        return PolyQ(-c for c in self.coeffs)

    def __mul__(self, other) -> PolyQ:
        if isinstance(other, (int, Fraction)):
            return PolyQ(c * other for c in self.coeffs)
        if not isinstance(other, PolyQ):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return PolyQ()

        result = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for j, d in enumerate(other.coeffs):
                if d:
                    result[i + j] += c * d
        return PolyQ(result)

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, n: int) -> PolyQ:
        if n < 0:
            raise ParameterError("Cannot raise a polynomial to a negative power.")
        result = PolyQ.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, d: PolyQ) -> Tuple[PolyQ, PolyQ]:
        """
        Return (q, r) with self = q*d + r and deg(r) < deg(d).

        >>> divmod(PolyQ.of(-1, 0, 1), PolyQ.of(-1, 1))
        (PolyQ('x + 1'), PolyQ('0'))
        """
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by the zero polynomial")

        rem = list(self.coeffs)
        dd = len(d.coeffs) - 1
        if len(rem) - 1 < dd:
            return PolyQ(), self

        lc_inv = 1 / d.coeffs[-1]
        quo = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            t = rem[k] * lc_inv
            if t == 0:
                continue
            shift = k - dd
            quo[shift] = t
            for i, c in enumerate(d.coeffs):
                if c:
                    rem[shift + i] -= t * c

        return PolyQ(quo), PolyQ(rem[:dd])

    def __floordiv__(self, d: PolyQ) -> PolyQ:
        return divmod(self, d)[0]

    def __mod__(self, d: PolyQ) -> PolyQ:
        return divmod(self, d)[1]

    def exact_div(self, d: PolyQ) -> PolyQ:
        """Return self/d if d divides self, otherwise raise ArithmeticError."""
        quo, rem = divmod(self, d)
        if not rem.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {d}: remainder {rem}")
        return quo


def poly_arith(a: PolyQ, b: PolyQ, op: str):
    operations = {
        "add": lambda: a + b,
        "sub": lambda: a - b,
        "mul": lambda: a * b,
        "divmod": lambda: divmod(a, b),
    }
    if op not in operations:
        raise ParameterError(f"unknown polynomial operation '{op}'")
    return operations[op]()


def ext_gcd(a: PolyQ, b: PolyQ) -> Tuple[PolyQ, PolyQ, PolyQ]:
    """
    Extended Euclid over Q: returns (g, s, t) with g = s*a + t*b and g the
    monic greatest common divisor.
    """
    if a.is_zero() and b.is_zero():
        raise ParameterError("ext_gcd needs at least one nonzero polynomial")

    r0, s0, t0 = a, PolyQ.constant(1), PolyQ()
    r1, s1, t1 = b, PolyQ(), PolyQ.constant(1)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1

    lc_inv = 1 / r0.leading()
    return r0 * lc_inv, s0 * lc_inv, t0 * lc_inv


def divisors(n: int):
    return sympy.divisors(n)


@functools.lru_cache(maxsize=None)
def cyclotomic(n: int) -> PolyQ:
    """
    Phi_n, by dividing x^n - 1 by Phi_d for every proper divisor d of n.

    >>> cyclotomic(6)
    PolyQ('x^2 - x + 1')
    """
    if n <= 0:
        raise ParameterError(f"cyclotomic index must be positive, got {n}")

    poly = PolyQ.monomial(n) - 1
    for d in divisors(n)[:-1]:
        poly = poly.exact_div(cyclotomic(d))

    if not poly.has_integer_coeffs():
        raise VerificationError(f"Phi_{n} has non-integer coefficients")
    return poly


@functools.lru_cache(maxsize=None)
def all_ones(n: int) -> PolyQ:
    """Psi_n = 1 + x + ... + x^(n-1) = (x^n - 1)/(x - 1)."""
    if n < 2:
        raise ParameterError(f"all_ones index must be at least 2, got {n}")
    return PolyQ((1,) * n)
