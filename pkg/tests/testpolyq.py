import random
import unittest
from fractions import Fraction

from src.quot_degrees.errors import ParameterError
from src.quot_degrees.polyq import (
    PolyQ,
    all_ones,
    cyclotomic,
    divisors,
    ext_gcd,
    poly_arith,
)
from src.quot_degrees.suites import _random_poly


class TestPolyQ(unittest.TestCase):
    def test_trim_and_degree(self):
        self.assertEqual(PolyQ.of(1, 2), PolyQ.of(1, 2, 0, 0))
        self.assertEqual(-1, PolyQ().deg())
        self.assertEqual(-1, PolyQ.of(0, 0).deg())
        self.assertEqual(3, PolyQ.monomial(3, 5).deg())

    def test_repr(self):
        self.assertEqual("PolyQ('x^2 - x + 1')", repr(PolyQ.of(1, -1, 1)))
        self.assertEqual("PolyQ('0')", repr(PolyQ()))
        self.assertEqual("PolyQ('-x^3 + (1/2)x')", repr(PolyQ.of(0, Fraction(1, 2), 0, -1)))

    def test_arithmetic(self):
        a = PolyQ.of(1, 1)
        b = PolyQ.of(-1, 1)
        self.assertEqual(PolyQ.of(-1, 0, 1), a * b)
        self.assertEqual(PolyQ.of(0, 2), a + b)
        self.assertEqual(PolyQ.of(2), a - b)
        self.assertEqual(PolyQ.of(0, 1), a - 1)
        self.assertEqual(PolyQ.of(0, -1), 1 - a)
        self.assertEqual(PolyQ.of(3, 3), 3 * a)
        self.assertEqual(PolyQ.of(1, 3, 3, 1), a**3)
        self.assertEqual(PolyQ.of(1), a**0)

    def test_negative_power(self):
        with self.assertRaises(ParameterError):
            PolyQ.x() ** -1

    def test_divmod(self):
        q, r = divmod(PolyQ.of(-1, 0, 1), PolyQ.of(-1, 1))
        self.assertEqual(PolyQ.of(1, 1), q)
        self.assertTrue(r.is_zero())

        a = PolyQ.of(1, 2, 3, 4)
        d = PolyQ.of(1, 0, 2)
        q, r = divmod(a, d)
        self.assertEqual(a, q * d + r)
        self.assertLess(r.deg(), d.deg())

    def test_divmod_random_pairs(self):
        rng = random.Random(7)
        for _ in range(300):
            a, b = _random_poly(rng, 8), _random_poly(rng, 5)
            q, r = divmod(a, b)
            self.assertEqual(a, q * b + r, f"{a} / {b}")
            self.assertLess(r.deg(), b.deg(), f"{a} / {b}")

    def test_divmod_by_zero(self):
        with self.assertRaises(ZeroDivisionError):
            divmod(PolyQ.x(), PolyQ())

    def test_exact_div(self):
        self.assertEqual(PolyQ.of(1, 1), PolyQ.of(-1, 0, 1).exact_div(PolyQ.of(-1, 1)))
        with self.assertRaises(ArithmeticError):
            PolyQ.of(1, 0, 1).exact_div(PolyQ.of(-1, 1))

    def test_evaluate(self):
        self.assertEqual(17, PolyQ.of(1, 2, 3).evaluate(2))
        self.assertEqual(Fraction(7, 4), PolyQ.of(1, 1, 1).evaluate(Fraction(1, 2)))

    def test_poly_arith(self):
        a, b = PolyQ.of(1, 1), PolyQ.of(-1, 1)
        self.assertEqual(a * b, poly_arith(a, b, "mul"))
        self.assertEqual((PolyQ.of(1), PolyQ.of(2)), poly_arith(a, b, "divmod"))
        with self.assertRaises(ParameterError):
            poly_arith(a, b, "pow")

    def test_ext_gcd_common_factor(self):
        a = PolyQ.of(-1, 0, 1)
        b = PolyQ.of(2, -3, 1)
        g, s, t = ext_gcd(a, b)
        self.assertEqual(PolyQ.of(-1, 1), g)
        self.assertEqual(g, s * a + t * b)

    def test_ext_gcd_coprime(self):
        a = PolyQ.of(1, 0, 1)
        b = PolyQ.of(0, 3)
        g, s, t = ext_gcd(a, b)
        self.assertEqual(PolyQ.of(1), g)
        self.assertEqual(g, s * a + t * b)

    def test_ext_gcd_monic(self):
        g, s, t = ext_gcd(PolyQ.of(0, 0, 4), PolyQ.of(0, 6))
        self.assertEqual(PolyQ.x(), g)

    def test_ext_gcd_zero(self):
        with self.assertRaises(ParameterError):
            ext_gcd(PolyQ(), PolyQ())
        g, _, _ = ext_gcd(PolyQ(), PolyQ.of(2, 2))
        self.assertEqual(PolyQ.of(1, 1), g)


class TestCyclotomic(unittest.TestCase):
    def test_small(self):
        self.assertEqual(PolyQ.of(-1, 1), cyclotomic(1))
        self.assertEqual(PolyQ.of(1, 1), cyclotomic(2))
        self.assertEqual(PolyQ.of(1, -1, 1), cyclotomic(6))
        self.assertEqual(PolyQ.of(1, 0, -1, 0, 1), cyclotomic(12))
        self.assertEqual("PolyQ('x^2 - x + 1')", repr(cyclotomic(6)))

    def test_product_identity(self):
        for n in (12, 30, 36):
            product = PolyQ.constant(1)
            for d in divisors(n):
                product = product * cyclotomic(d)
            self.assertEqual(PolyQ.monomial(n) - 1, product, f"n={n}")

    def test_first_coefficient_outside_unit_range(self):
        phi = cyclotomic(105)
        self.assertEqual(48, phi.deg())
        self.assertTrue(phi.has_integer_coeffs())
        self.assertEqual(Fraction(-2), phi.coeff(7))
        self.assertEqual(Fraction(-2), phi.coeff(41))

    def test_invalid_index(self):
        with self.assertRaises(ParameterError):
            cyclotomic(0)

    def test_all_ones(self):
        self.assertEqual(PolyQ.of(1, 1, 1), all_ones(3))
        self.assertEqual(PolyQ.monomial(7) - 1, all_ones(7) * PolyQ.of(-1, 1))
        with self.assertRaises(ParameterError):
            all_ones(1)

    def test_divisors(self):
        self.assertEqual([1, 2, 3, 6], divisors(6))
        self.assertEqual([1], divisors(1))


if __name__ == "__main__":
    unittest.main()
