import unittest
import warnings
from fractions import Fraction
from unittest import mock

from src.quot_degrees.checks import CheckOptions
from src.quot_degrees.errors import CrossPathMismatch, ParameterError, VerificationError
from src.quot_degrees.holla import derive_params, holla_degree
from src.quot_degrees.summation import relative_error
from src.quot_degrees.versch import (
    HYPOTHESIS,
    VerschParams,
    bound_cosine,
    bound_exact,
    bound_trig,
    build_report,
    g2_comparison,
    is_prime,
    known_g2_degree,
    lemma4_arithmetic,
    quotF_degree_bound,
    specialize,
    versch_params,
)

BOUNDS = {
    (2, 3): 35,
    (2, 5): 165,
    (2, 7): 455,
    (3, 3): 329,
    (3, 5): 6105,
    (3, 7): 43953,
}

QUOT_F_DEGREES = {
    (2, 3): 315,
    (2, 5): 4125,
    (2, 7): 22295,
    (3, 3): 8883,
    (3, 5): 763125,
    (3, 7): 15075879,
}


class TestVerschParams(unittest.TestCase):
    def test_valid(self):
        self.assertEqual(VerschParams(p=3, g=2), versch_params(2, 3))
        self.assertEqual(VerschParams(p=3, g=3), versch_params(3, 3))

    def test_hypothesis(self):
        for g, p in ((5, 3), (4, 3), (1, 5), (2, 2), (2, 9), (2, 1)):
            with self.assertRaises(ParameterError, msg=f"g={g} p={p}"):
                versch_params(g, p)

    def test_message_quotes_hypothesis(self):
        with self.assertRaises(ParameterError) as context:
            versch_params(5, 3)
        self.assertIn(HYPOTHESIS, context.exception.message)
        self.assertEqual(2, context.exception.exit_code)

    def test_is_prime(self):
        self.assertEqual([2, 3, 5, 7, 11, 13], [n for n in range(15) if is_prime(n)])

    def test_specialize(self):
        params = specialize(VerschParams(p=5, g=3))
        self.assertEqual((10, 16, 2, 3), tuple(params[:4]))
        self.assertEqual((2, 4, 0, 0), (params.a, params.b, params.e_max, params.eps))

    def test_specialize_mismatch(self):
        with mock.patch("src.quot_degrees.versch.derive_params", return_value=derive_params(6, 4, 2, 2)):
            with self.assertRaises(VerificationError) as context:
                specialize(VerschParams(p=5, g=2))
        self.assertEqual(4, context.exception.exit_code)


class TestBound(unittest.TestCase):
    def test_bound_exact(self):
        for (g, p), expected in BOUNDS.items():
            self.assertEqual(Fraction(expected), bound_exact(versch_params(g, p)), f"g={g} p={p}")

    def test_quotF_degree(self):
        for (g, p), expected in QUOT_F_DEGREES.items():
            v = versch_params(g, p)
            self.assertEqual(expected, quotF_degree_bound(v, cross_check=False), f"g={g} p={p}")
        self.assertEqual(315, quotF_degree_bound(versch_params(2, 3)))

    def test_holla_engine_agrees(self):
        for g, p in ((2, 3), (3, 5), (4, 7), (2, 11)):
            v = versch_params(g, p)
            self.assertEqual(p**g * bound_exact(v), holla_degree(specialize(v)), f"g={g} p={p}")

    def test_cosine_form(self):
        for g in range(2, 6):
            for p in (5, 7, 11):
                v = versch_params(g, p)
                self.assertEqual(bound_exact(v), bound_cosine(v), f"g={g} p={p}")

    def test_trig(self):
        for g, p in ((2, 3), (3, 7), (6, 13), (4, 31)):
            v = versch_params(g, p)
            self.assertLess(relative_error(bound_trig(v), bound_exact(v)), 1e-9, f"g={g} p={p}")

    def test_integrality(self):
        for g in range(2, 7):
            for p in (7, 11, 13):
                value = bound_exact(versch_params(g, p))
                self.assertEqual(1, value.denominator, f"g={g} p={p}")
                self.assertGreater(value, 0)


class TestComparisons(unittest.TestCase):
    def test_lemma4(self):
        record = lemma4_arithmetic(versch_params(3, 5))
        self.assertEqual(-4, record.chi)
        self.assertEqual(10, record.rank_pushforward)
        self.assertEqual(16, record.deg_pushforward)
        self.assertEqual(16, record.rank_hom)
        self.assertEqual(32, record.deg_hom)
        self.assertEqual(0, record.euler_diff)

    def test_known_g2_degree(self):
        self.assertEqual([11, 45, 119], [known_g2_degree(p) for p in (3, 5, 7)])

    def test_g2_comparison(self):
        for p, gap in ((3, 24), (5, 120), (7, 336)):
            comparison = g2_comparison(p)
            self.assertEqual(gap, comparison.gap)
            self.assertEqual(comparison.bound, comparison.exact + comparison.gap)
            self.assertTrue(comparison.excess_nonempty)


class TestReport(unittest.TestCase):
    def test_report(self):
        report = build_report(versch_params(2, 3))
        self.assertEqual(35, report.bound_exact)
        self.assertEqual(315, report.quotF_degree_bound)
        self.assertEqual(315, report.holla_degree)
        self.assertEqual(35, report.bound_cosine)
        self.assertEqual(24, report.g2_comparison.gap)
        self.assertTrue(all(c.passed for c in report.checks), report.checks)
        self.assertIn("g2 gap = p^3 - p", [c.name for c in report.checks])

    def test_holla_cross_check_is_skipped_for_large_p(self):
        report = build_report(versch_params(2, 17))
        self.assertIsNone(report.holla_degree)
        report = build_report(versch_params(3, 5), cross_check_holla=False)
        self.assertIsNone(report.holla_degree)
        self.assertIsNone(report.g2_comparison)

    def test_holla_engine_disagrees(self):
        with mock.patch("src.quot_degrees.versch.holla_degree", return_value=314):
            with self.assertRaises(CrossPathMismatch) as context:
                build_report(versch_params(2, 3))
            with self.assertRaises(CrossPathMismatch):
                quotF_degree_bound(versch_params(2, 3))
        self.assertEqual(4, context.exception.exit_code)
        self.assertIn("314", context.exception.message)

    def test_unachievable_tolerance(self):
        report = build_report(versch_params(3, 7), CheckOptions(tolerance=1e-30))
        failed = [c.name for c in report.checks if not c.passed]
        self.assertEqual(["trig rel_err < tol"], failed)

    def test_no_integrality_warning(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            build_report(versch_params(4, 5))


if __name__ == "__main__":
    unittest.main()
