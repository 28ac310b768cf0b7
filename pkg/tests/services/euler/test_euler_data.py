import os
import tempfile
import unittest

from services.algebra.parser import parse_expression
from services.errors import TableError, TautologicalReciprocity, UsageError
from services.euler.algebras import AlgebraId, parse_algebra
from services.euler.reciprocity import complete_by_reciprocity, reciprocity_holds, reciprocity_sum
from services.euler.tables import (COMPLETED, dump_table, ingest_custom_table, load_shipped_tables, load_table,
                                   lookup, read_table_file, table_files)
from services.ideals.ideals import MonomialIdeal, parse_ideal

MU2 = """# mu = 2
A_2 | (x^3)        | 1
A_2 | (x^2,xy,y^2) | (1/3)*(a1-2*a2)*(a2-2*a1)
"""


class TestAlgebraId(unittest.TestCase):

    def test_invariants(self):
        cases = {
            "A_3": (3, 3), "I_{2,2}": (3, 4), "I_{2,3}": (4, 5), "III_{2,3}": (3, 5), "III_{3,3}": (4, 6),
            "Sigma^2": (2, 4), "Sigma^{2,1}": (4, 7), "Phi_{2,1}": (3, 5), "Phi_{3,0}": (4, 7),
        }
        for name, (mu, gamma) in cases.items():
            Q = parse_algebra(name)
            self.assertEqual((Q.mu, Q.gamma), (mu, gamma), name)

    def test_name_forms(self):
        self.assertEqual(parse_algebra("A2"), AlgebraId("A", (2,)))
        self.assertEqual(parse_algebra("I23"), parse_algebra("I_{2,3}"))
        self.assertEqual(parse_algebra("Sigma21"), AlgebraId("SigmaTB21"))
        self.assertEqual(str(parse_algebra("III24")), "III_{2,4}")
        self.assertEqual(parse_algebra("Phi_{3,1}").compact, "Phi31")

    def test_bad_names(self):
        with self.assertRaises(UsageError):
            parse_algebra("B_2")
        with self.assertRaises(UsageError):
            parse_algebra("Phi_{2,2}")
        with self.assertRaises(UsageError):
            parse_algebra("I_{1,3}")


class TestTables(unittest.TestCase):

    def test_load_and_get(self):
        table = load_table(MU2)
        A2 = AlgebraId("A", (2,))
        self.assertTrue(table.covers(A2))
        self.assertEqual(table.get(A2, MonomialIdeal.maximal_square(2)).value,
                         parse_expression("(1/3)*(a1-2*a2)*(a2-2*a1)"))

    def test_lookup_applies_suspension(self):
        table = load_table(MU2)
        value = lookup(table, AlgebraId("A", (2,)), parse_ideal("(x^3,y)"))
        self.assertEqual(value, parse_expression("(a2-a1)*(a2-2*a1)"))

    def test_lookup_permutes_representative(self):
        table = load_table(MU2)
        value = lookup(table, AlgebraId("A", (2,)), parse_ideal("(y^3,x)"))
        self.assertEqual(value, parse_expression("(a1-a2)*(a1-2*a2)"))

    def test_wrong_degree_names_the_line(self):
        with self.assertRaises(TableError) as ctx:
            load_table("# header\nA_2 | (x^3) | a1\n")
        self.assertEqual(ctx.exception.line, 2)

    def test_malformed_rows(self):
        with self.assertRaises(TableError):
            load_table("A_2 | (x^3)\n")
        with self.assertRaises(TableError):
            load_table("A_2 | (x^3) | 1\nA_2 | (x^3) | 1\n")
        with self.assertRaises(TableError):
            load_table("A_2 | (x^4) | 1\n")
        with self.assertRaises(TableError) as ctx:
            load_table("A_2 | (x^3) | 1 + $\n")
        self.assertEqual(ctx.exception.line, 1)

    def test_dump_round_trip(self):
        table = load_table(MU2)
        self.assertEqual(load_table(dump_table(table)), table)

    def test_shipped_files_round_trip(self):
        for path in table_files():
            table = read_table_file(path)
            self.assertEqual(load_table(dump_table(table)), table, path)

    def test_shipped_tables_cover_catalog(self):
        table = load_shipped_tables()
        for name in ["A_1", "A_2", "A_3", "I_{2,2}", "III_{2,3}", "A_4", "III_{2,4}", "III_{3,3}", "I_{2,3}",
                     "Sigma^{2,1}"]:
            self.assertTrue(table.covers(parse_algebra(name)), name)
        entry = table.get(AlgebraId("A", (3,)), MonomialIdeal.maximal_square(3))
        self.assertEqual(entry.provenance, COMPLETED)


class TestReciprocity(unittest.TestCase):

    def test_completion_reproduces_a2(self):
        table = load_table(MU2)
        self.assertEqual(complete_by_reciprocity(table, AlgebraId("A", (2,))),
                         parse_expression("(1/3)*(a1-2*a2)*(a2-2*a1)"))

    def test_sum_vanishes(self):
        table = load_table(MU2)
        self.assertTrue(reciprocity_sum(table, AlgebraId("A", (2,))).is_zero())
        self.assertTrue(reciprocity_holds(table, AlgebraId("A", (2,))))

    def test_completed_row_cannot_be_checked_against_itself(self):
        with self.assertRaises(TautologicalReciprocity):
            reciprocity_holds(load_shipped_tables(), AlgebraId("A", (3,)))
        with self.assertRaises(TautologicalReciprocity):
            reciprocity_holds(load_shipped_tables(), AlgebraId("III", (2, 4)))

    def test_wrong_row_breaks_the_relation(self):
        bad = MU2.replace("(1/3)*(a1-2*a2)*(a2-2*a1)", "(1/3)*(a1-2*a2)*(a2-3*a1)")
        self.assertFalse(reciprocity_holds(load_table(bad), AlgebraId("A", (2,))))

    def test_mu_one_is_tautological(self):
        with self.assertRaises(TautologicalReciprocity):
            complete_by_reciprocity(load_shipped_tables(), AlgebraId("A", (1,)))

    def test_shipped_row_must_agree(self):
        bad = MU2.replace("(1/3)*(a1-2*a2)*(a2-2*a1)", "(a1-2*a2)*(a2-2*a1)")
        with self.assertRaises(TableError):
            complete_by_reciprocity(load_table(bad), AlgebraId("A", (2,)))


class TestCustomTable(unittest.TestCase):

    def _write(self, text):
        handle, path = tempfile.mkstemp(suffix=".table")
        with os.fdopen(handle, "w", encoding="utf-8") as f:
            f.write(text)
        self.addCleanup(os.remove, path)
        return path

    def test_missing_maximal_row_is_completed(self):
        path = self._write("@algebra Fold mu=2 gamma=2\nFold | (x^3) | 1\n")
        table = ingest_custom_table(path)
        Q = table.custom["Fold"]
        entry = table.get(Q, MonomialIdeal.maximal_square(2))
        self.assertEqual(entry.provenance, COMPLETED)
        self.assertEqual(entry.value, parse_expression("(1/3)*(a1-2*a2)*(a2-2*a1)"))
        self.assertIn("completed", [status for _, status, _ in table.report])

    def test_reingesting_shipped_file(self):
        path = [p for p in table_files() if p.endswith("mu2.table")][0]
        table = ingest_custom_table(path)
        self.assertEqual(table, read_table_file(path))
        self.assertIn(("reciprocity", "pass"), [(check, status) for check, status, _ in table.report])

    def test_wrong_degree_is_rejected(self):
        path = self._write("A_2 | (x^3) | a1\n")
        with self.assertRaises(TableError):
            ingest_custom_table(path)


if __name__ == '__main__':
    unittest.main()
