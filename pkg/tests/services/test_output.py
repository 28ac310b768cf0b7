import json
import unittest

from services.errors import UsageError
from services.output import ResultDocument, emit, parse
from services.schur.expansion import SchurExpansion
from services.schur.partitions import Partition


class TestResultDocument(unittest.TestCase):

    def setUp(self):
        self.doc = ResultDocument("tp", algebra="A_2", l=0, basis="schur", codim=2)
        self.doc.set_expansion(SchurExpansion({Partition((1, 1)): 1, Partition((2,)): 2}))

    def test_expansion_fields(self):
        self.assertEqual(self.doc.value, "Δ_{1,1} + 2Δ_{2}")
        self.assertEqual(self.doc.terms, [{"partition": "1,1", "coeff": "1"}, {"partition": "2", "coeff": "2"}])

    def test_json_keeps_every_field(self):
        text = emit(self.doc, "json")
        data = json.loads(text)
        self.assertEqual(data["algebra"], "A_2")
        self.assertEqual(data["codim"], 2)
        self.assertIn("Δ", text)
        self.assertEqual(parse(text), self.doc)

    def test_text_layout(self):
        self.doc.add_check("reciprocity", "pass", "A_2")
        self.doc.notes.append("Euler data: shipped")
        self.assertEqual(emit(self.doc).splitlines(),
                         ["Δ_{1,1} + 2Δ_{2}", "[PASS] reciprocity: A_2", "# Euler data: shipped"])

    def test_failure_statuses(self):
        self.doc.add_check("reciprocity", "completed")
        self.assertFalse(self.doc.failed())
        self.doc.add_check("coverage", "fail", "missing rows")
        self.assertTrue(self.doc.failed())

    def test_unknown_format(self):
        with self.assertRaises(UsageError):
            emit(self.doc, "xml")


if __name__ == '__main__':
    unittest.main()
