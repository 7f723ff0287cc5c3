import unittest
from fractions import Fraction

from src.quot_degrees.cyclo_ring import ResidueElem
from src.quot_degrees.errors import (
    DimensionPositive,
    NonIntegerSign,
    NonRationalResult,
    OracleError,
    ParameterError,
)
from src.quot_degrees.holla import (
    anchored_subsets,
    brute_force_degree,
    combine_partial_sums,
    derive_params,
    enumerate_zero_dimensional,
    holla_degree,
    is_zero_dimensional,
    ordered_tuple_sum,
    partial_holla_sum,
    prefactor_sign,
    rotation_weight,
    sign_exponent,
)
from src.quot_degrees.polyq import cyclotomic


class TestDeriveParams(unittest.TestCase):
    def test_zero_dimensional(self):
        params = derive_params(6, 4, 2, 2)
        self.assertEqual(
            (1, 2, 0, 0, 8, 0),
            (params.a, params.b, params.eps, params.e_max, params.s_r, params.quot_dim),
        )
        self.assertTrue(is_zero_dimensional(params))

    def test_positive_dimension(self):
        params = derive_params(3, 1, 1, 2)
        self.assertEqual(2, params.eps)
        self.assertEqual(4, params.s_r)
        self.assertEqual(-1, params.e_max)
        self.assertFalse(is_zero_dimensional(params))

    def test_negative_degree(self):
        params = derive_params(4, -5, 1, 2)
        self.assertEqual(-1, params.a)
        self.assertEqual(1, params.b)
        self.assertEqual(params.d, params.a * params.n - params.b)
        self.assertEqual(params.d * params.r - params.s_r, params.n * params.e_max)

    def test_invalid(self):
        for args in ((0, 0, 1, 2), (3, 0, 0, 2), (3, 0, 4, 2), (3, 0, 1, 1)):
            with self.assertRaises(ParameterError, msg=str(args)):
                derive_params(*args)

    def test_sign(self):
        params = derive_params(3, 0, 3, 2)
        self.assertEqual(-6, sign_exponent(params))
        self.assertEqual(1, prefactor_sign(params))
        self.assertIsInstance(prefactor_sign(params), int)

    def test_non_integer_sign_exponent(self):
        # (r-1)(b r - (g-1) r^2) / n = -2/5
        params = derive_params(5, 4, 2, 2)
        with self.assertRaises(NonIntegerSign) as context:
            sign_exponent(params)
        self.assertEqual(4, context.exception.exit_code)


class TestHollaDegree(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(4, holla_degree(derive_params(2, 1, 1, 2)))
        self.assertEqual(315, holla_degree(derive_params(6, 4, 2, 2)))
        self.assertEqual(8, holla_degree(derive_params(2, 0, 1, 3)))

    def test_classical_count(self):
        for g in range(2, 9):
            self.assertEqual(2**g, holla_degree(derive_params(2, g - 1, 1, g)), f"g={g}")

    def test_whole_bundle_is_a_single_point(self):
        self.assertEqual(1, holla_degree(derive_params(1, 0, 1, 2)))
        self.assertEqual(1, holla_degree(derive_params(2, 0, 2, 2)))
        self.assertEqual(1, holla_degree(derive_params(3, 0, 3, 2)))

    def test_positive_dimension_raises(self):
        with self.assertRaises(DimensionPositive) as context:
            holla_degree(derive_params(3, 1, 1, 2))
        self.assertEqual(2, context.exception.eps)
        self.assertEqual(3, context.exception.exit_code)
        self.assertEqual(
            "Quot scheme has positive dimension eps=2; Holla formula inapplicable",
            context.exception.message,
        )

    def test_rotation_reduction(self):
        for params in enumerate_zero_dimensional(9, 3, 3):
            self.assertEqual(
                holla_degree(params, rotation_reduced=False),
                holla_degree(params),
                str(params),
            )

    def test_ordered_tuples(self):
        self.assertEqual(Fraction(315), ordered_tuple_sum(derive_params(6, 4, 2, 2)))
        for params in enumerate_zero_dimensional(6, 3, 3):
            self.assertEqual(holla_degree(params), ordered_tuple_sum(params), str(params))

    def test_partial_sums_combine(self):
        params = derive_params(10, 6, 2, 3)
        self.assertTrue(is_zero_dimensional(params))
        subsets = list(anchored_subsets(params.n, params.r))
        partials = [partial_holla_sum(params, subsets[::2]), partial_holla_sum(params, subsets[1::2])]
        self.assertEqual(
            holla_degree(params),
            combine_partial_sums(params, partials, rotation_weight(params)),
        )

    def test_non_scalar_sum_is_rejected(self):
        params = derive_params(6, 4, 2, 2)
        partial = ResidueElem.generator(cyclotomic(6))
        with self.assertRaises(NonRationalResult) as context:
            combine_partial_sums(params, [partial])
        self.assertEqual(4, context.exception.exit_code)

    def test_anchored_subsets(self):
        self.assertEqual([(0, 1), (0, 2), (0, 3)], list(anchored_subsets(4, 2)))
        self.assertEqual(Fraction(3), rotation_weight(derive_params(6, 4, 2, 2)))


class TestBruteForce(unittest.TestCase):
    def test_agrees_with_exact(self):
        for n, d, r, g in ((6, 4, 2, 2), (2, 1, 1, 2), (5, 3, 2, 2)):
            params = derive_params(n, d, r, g)
            exact = holla_degree(params)
            self.assertAlmostEqual(exact, brute_force_degree(params), delta=1e-6 * exact)

    def test_small_grid(self):
        for params in enumerate_zero_dimensional(8, 3, 3):
            exact = holla_degree(params)
            self.assertGreater(exact, 0, str(params))
            self.assertAlmostEqual(exact, brute_force_degree(params), delta=1e-6 * exact, msg=str(params))

    def test_positive_dimension(self):
        # 2*8 - 2*8*2 = -16, so eps = 4 for n = 10
        with self.assertRaises(DimensionPositive) as context:
            brute_force_degree(derive_params(10, 8, 2, 3))
        self.assertEqual(4, context.exception.eps)

    def test_cap(self):
        params = derive_params(4, 3, 1, 2)
        self.assertTrue(is_zero_dimensional(params))
        with self.assertRaises(OracleError):
            brute_force_degree(params, cap=3)


class TestEnumerate(unittest.TestCase):
    def test_packs(self):
        packs = list(enumerate_zero_dimensional(4, 2, 3))
        self.assertTrue(all(is_zero_dimensional(p) for p in packs))
        self.assertIn((2, 1, 1, 2), [tuple(p[:4]) for p in packs])
        self.assertTrue(all(0 <= p.d < p.n for p in packs))
        self.assertTrue(all(p.r <= 2 and 2 <= p.g <= 3 for p in packs))


if __name__ == "__main__":
    unittest.main()
