import unittest

from src.quot_degrees.checks import CheckOptions
from src.quot_degrees.suites import (
    algebra_suite,
    bezout_checks,
    cyclotomic_checks,
    divmod_checks,
    euler_phi,
    holla_suite,
    inverse_checks,
    odd_primes,
    polyp_suite,
    root_sum_checks,
    run_all,
    trace_checks,
    trace_linearity_checks,
    versch_grid,
    versch_suite,
)


class TestSuites(unittest.TestCase):
    def _assert_all_passed(self, checks):
        failed = [c for c in checks if not c.passed]
        self.assertEqual([], failed)
        self.assertGreater(len(checks), 0)

    def test_helpers(self):
        self.assertEqual([1, 1, 2, 2, 4, 2, 6], [euler_phi(n) for n in range(1, 8)])
        self.assertEqual(48, euler_phi(105))
        self.assertEqual([3, 5, 7, 11, 13], odd_primes(13))
        self.assertEqual([(2, 3), (2, 5), (3, 3), (3, 5), (4, 5)], versch_grid(4, 5))

    def test_algebra_checks(self):
        self._assert_all_passed(cyclotomic_checks(60))
        self._assert_all_passed(trace_checks(20))
        self._assert_all_passed(trace_linearity_checks(20, 50))
        self._assert_all_passed(divmod_checks(200))
        self._assert_all_passed(bezout_checks(100))
        self._assert_all_passed(inverse_checks(30, 10))
        self._assert_all_passed(root_sum_checks(20, 4))

    def test_algebra_suite(self):
        self._assert_all_passed(algebra_suite())

    def test_holla_suite(self):
        checks = holla_suite(CheckOptions(), n_max=8, r_max=3, g_max=3, ordered_n_max=6, classical_g_max=6)
        self._assert_all_passed(checks)

    def test_oracle_equivalence_grid(self):
        self._assert_all_passed(holla_suite(CheckOptions(), ordered_n_max=6))

    def test_versch_suite(self):
        self._assert_all_passed(versch_suite(6, 13, CheckOptions()))

    def test_versch_suite_unachievable_tolerance(self):
        checks = versch_suite(3, 7, CheckOptions(tolerance=1e-30))
        failed = {c.name.split(": ", 1)[1] for c in checks if not c.passed}
        self.assertEqual({"trig rel_err < tol"}, failed)

    def test_polyp_suite(self):
        self._assert_all_passed(polyp_suite(4, 13))

    def test_run_all(self):
        self._assert_all_passed(run_all(3, 7, CheckOptions()))


if __name__ == "__main__":
    unittest.main()
