import os
import tempfile
import unittest
from argparse import Namespace
from unittest.mock import patch

from config.loader import ConfigLoader
from services.errors import UsageError
from services.jobs import JobSpec


class TestJobSpec(unittest.TestCase):

    def test_from_args_applies_config_defaults(self):
        job = JobSpec.from_args(Namespace(command="verify", format=None, suite=None))
        self.assertEqual(job.format, ConfigLoader.get("output.format"))
        self.assertEqual(job.suite, ConfigLoader.get("verify.default_suite"))
        self.assertEqual(job.basis, "schur")

    def test_p_is_filled_from_l(self):
        job = JobSpec("tp", algebra="A2", n=2, l=1).validate()
        self.assertEqual((job.n, job.p, job.l), (2, 3, 1))

    def test_l_is_filled_from_p(self):
        job = JobSpec("tp", algebra="A2", n=2, p=4).validate()
        self.assertEqual(job.l, 2)

    def test_quotient_only_job(self):
        job = JobSpec("tp", algebra="A2", l=0).validate()
        self.assertIsNone(job.n)

    def test_dimension_errors(self):
        bad = [
            JobSpec("tp", algebra="A2"),
            JobSpec("tp", algebra="A2", p=3),
            JobSpec("tp", algebra="A2", n=3, p=2),
            JobSpec("tp", algebra="A2", n=2, p=3, l=2),
            JobSpec("tp", algebra="A2", n=0, l=1),
            JobSpec("tp", algebra="A2", l=1, basis="roots"),
            JobSpec("tp", algebra="A2", n=2),
        ]
        for job in bad:
            with self.assertRaises(UsageError, msg=str(job)):
                job.validate()

    def test_general_errors(self):
        with self.assertRaises(UsageError):
            JobSpec("tp", l=0).validate()
        with self.assertRaises(UsageError):
            JobSpec("tp", algebra="A2", l=-1).validate()
        with self.assertRaises(UsageError):
            JobSpec("draw").validate()
        with self.assertRaises(UsageError):
            JobSpec("tp", algebra="A2", l=0, basis="monomial").validate()

    def test_residue_rules(self):
        with self.assertRaises(UsageError):
            JobSpec("residue", algebra="A2").validate()
        with self.assertRaises(UsageError):
            JobSpec("residue", algebra="A2", l=0, basis="roots").validate()
        JobSpec("residue", algebra="A2", l=0, basis="chern").validate()

    def test_log_label(self):
        self.assertEqual(JobSpec("tp", algebra="A2", n=1, l=1).validate().label(), "tp A2 n=1 p=2")
        self.assertEqual(JobSpec("tp", algebra="A2", l=1).label(), "tp A2 l=1")
        self.assertEqual(JobSpec("verify", suite="all").label(), "verify all")

    def test_euler_and_verify_need_no_algebra(self):
        JobSpec("euler").validate()
        JobSpec("verify", suite="all").validate()

    @patch("services.jobs.load_shipped_tables")
    def test_shipped_tables_without_flag(self, mock_load):
        JobSpec("euler").euler_table()
        mock_load.assert_called_once()

    def test_resolve_custom_algebra(self):
        handle, path = tempfile.mkstemp(suffix=".table")
        with os.fdopen(handle, "w", encoding="utf-8") as f:
            f.write("@algebra Fold mu=2 gamma=2\nFold | (x^3) | 1\n")
        self.addCleanup(os.remove, path)
        Q, table = JobSpec("tp", algebra="Fold", l=0, table=path).resolve()
        self.assertEqual((Q.mu, Q.gamma), (2, 2))
        self.assertEqual(table.custom["Fold"], Q)


class TestConfigLoader(unittest.TestCase):

    def test_dot_path_lookup(self):
        self.assertEqual(ConfigLoader.get("series.index_bound"), 3)
        self.assertEqual(ConfigLoader.get("engine.missing", "fallback"), "fallback")
        self.assertEqual(ConfigLoader.get("engine.seed.deeper", 7), 7)

    def test_environment_overrides(self):
        self.addCleanup(ConfigLoader.load_settings)
        with patch.dict(os.environ, {"THOM_SEED": "11", "THOM_WORKERS": "3"}):
            ConfigLoader.load_settings()
        self.assertEqual(ConfigLoader.get("engine.seed"), 11)
        self.assertEqual(ConfigLoader.get("engine.workers"), 3)

    def test_resolve_path_uses_project_root(self):
        resolved = ConfigLoader.resolve_path("data/euler")
        self.assertTrue(os.path.isdir(resolved))


if __name__ == '__main__':
    unittest.main()
