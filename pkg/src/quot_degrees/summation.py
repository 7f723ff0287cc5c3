"""
Compensated floating point summation in the widest native precision.

The float cross-checks add terms of wildly different sizes (the sine power
sums range from O(1) to O(p^(2g-2))), so every accumulation goes through a
Kahan accumulator over numpy's extended types.
"""

import numpy as np

Real = np.longdouble
Complex = np.clongdouble

PI = np.arccos(Real(-1))
# relative agreement is only resolved down to the working precision
PRECISION = float(np.finfo(Real).eps)


class KahanSummation:
    """Incremental Kahan summation; works for real and complex numpy scalars."""

    def __init__(self, dtype=Real):
        self.sum = dtype(0)
        self.carry = dtype(0)

    def add(self, value):
        value = value - self.carry
        previous_sum = self.sum
        self.sum = previous_sum + value
        self.carry = (self.sum - previous_sum) - value

    def extend(self, values):
        for value in values:
            self.add(value)
        return self

    @property
    def value(self):
        return self.sum


def compensated_sum(values, dtype=Real):
    return KahanSummation(dtype).extend(values).value


def roots_of_unity(n: int):
    """The n-th roots of unity exp(2 pi i k / n), k = 0..n-1, in extended precision."""
    angles = Real(2) * PI * np.arange(n, dtype=Real) / Real(n)
    return np.cos(angles) + Complex(1j) * np.sin(angles)


def relative_error(approx, exact) -> float:
    exact = float(exact)
    if exact == 0:
        return abs(float(approx))
    return abs(float(approx) - exact) / abs(exact)
