import os
import tempfile
import unittest
from unittest.mock import patch

from services.algebra.parser import parse_polynomial
from services.errors import UsageError
from services.verify import checks
from services.verify.checks import CHECKS, CheckOutcome, a2_expected
from services.verify.runner import CheckSpec, load_manifest, run_check, run_suite
from utils.logger import current_job

MANIFEST = """
checks:
  - id: quick
    suite: fast
    check: a3_l0
  - id: slow
    suite: all
    check: porteous
    params: {n_max: 1, l_max: 1}
"""


def broken_check():
    raise RuntimeError("broken")


def write_manifest(test, text):
    handle, path = tempfile.mkstemp(suffix=".yaml")
    with os.fdopen(handle, "w", encoding="utf-8") as f:
        f.write(text)
    test.addCleanup(os.remove, path)
    return path


class TestManifest(unittest.TestCase):

    def test_shipped_manifest_names_known_checks(self):
        specs = load_manifest()
        self.assertTrue(specs)
        self.assertTrue(all(spec.check in CHECKS for spec in specs))
        self.assertEqual(len({spec.id for spec in specs}), len(specs))
        self.assertTrue(any(spec.suite == "fast" for spec in specs))

    def test_suite_membership(self):
        fast = CheckSpec("x", "fast", "a3_l0")
        slow = CheckSpec("y", "all", "a3_l0")
        self.assertTrue(fast.belongs_to("fast") and fast.belongs_to("all"))
        self.assertFalse(slow.belongs_to("fast"))

    def test_unknown_check(self):
        path = write_manifest(self, "checks:\n  - {id: bad, suite: fast, check: no_such_check}\n")
        with self.assertRaises(UsageError):
            load_manifest(path)

    def test_unknown_suite(self):
        path = write_manifest(self, "checks:\n  - {id: bad, suite: nightly, check: a3_l0}\n")
        with self.assertRaises(UsageError):
            load_manifest(path)

    def test_missing_file(self):
        with self.assertRaises(UsageError):
            load_manifest("/nonexistent/manifest.yaml")


class TestRunner(unittest.TestCase):

    def test_exception_becomes_error_status(self):
        with patch.dict(CHECKS, {"boom": broken_check}):
            result = run_check(CheckSpec("boom-check", "fast", "boom"))
        self.assertEqual(result.status, "error")
        self.assertIn("RuntimeError", result.detail)

    def test_check_runs_under_its_id(self):
        seen = []
        with patch.dict(CHECKS, {"whoami": lambda: seen.append(current_job()) or CheckOutcome(True)}):
            run_check(CheckSpec("whoami-check", "fast", "whoami"))
        self.assertEqual(seen, ["whoami-check"])

    def test_failed_outcome(self):
        with patch.dict(CHECKS, {"never": lambda: CheckOutcome(False, "nope")}):
            result = run_check(CheckSpec("never-check", "fast", "never"))
        self.assertEqual((result.check, result.status, result.detail), ("never-check", "fail", "nope"))

    def test_fast_suite_skips_all_only_checks(self):
        path = write_manifest(self, MANIFEST)
        results = run_suite("fast", workers=2, manifest=path)
        self.assertEqual([(r.check, r.status) for r in results], [("quick", "pass")])

    def test_all_suite_keeps_manifest_order(self):
        path = write_manifest(self, MANIFEST)
        results = run_suite("all", workers=2, manifest=path)
        self.assertEqual([r.check for r in results], ["quick", "slow"])
        self.assertTrue(all(r.status == "pass" for r in results))

    def test_unknown_suite(self):
        with self.assertRaises(UsageError):
            run_suite("nightly")


class TestChecks(unittest.TestCase):

    def test_a2_closed_series(self):
        self.assertEqual(a2_expected(0), parse_polynomial("c1^2 + c2"))
        self.assertEqual(a2_expected(1), parse_polynomial("c2^2 + c1*c3 + 2*c4"))

    def test_brute_force_census(self):
        self.assertEqual(len(checks.brute_force_ideals(2, 3)), 5)

    def test_cheap_checks_pass(self):
        for name in ["a3_l0", "table_roundtrip", "nets_of_conics", "thom_series"]:
            outcome = CHECKS[name]()
            self.assertTrue(outcome.passed, f"{name}: {outcome.detail}")

    def test_table_wide_checks_on_small_algebras(self):
        for name, params in [("d_stability", {"mu_max": 2, "l_max": 1}),
                             ("supersymmetry_stability", {"mu_max": 2, "l_max": 0}),
                             ("reciprocity", {"mu_max": 2, "interpolate_max_mu": 2})]:
            outcome = CHECKS[name](**params)
            self.assertTrue(outcome.passed, f"{name}: {outcome.detail}")

    def test_alternative_routes_agree(self):
        for name, params in [("laurent_residue", {"algebras": ["A_2"], "l_max": 1}),
                             ("phi_corank_one", {"n_max": 2, "l_max": 1}),
                             ("symmetrized_localization", {"cases": [["A_2", 2, 2]]})]:
            outcome = CHECKS[name](**params)
            self.assertTrue(outcome.passed, f"{name}: {outcome.detail}")


if __name__ == '__main__':
    unittest.main()
