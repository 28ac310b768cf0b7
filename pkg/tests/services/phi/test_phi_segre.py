import unittest

from services.errors import PreconditionError
from services.phi.localized import fixed_points, phi_codim, phi_tp_localized
from services.phi.schur import phi_corank_one, phi_tp_schur, shifted_index
from services.phi.segre import is_segre_index, segre_coeff, segre_indices, segre_series_check
from services.schur.expansion import SchurExpansion
from services.schur.partitions import Partition
from services.thom.quotient import to_quotient


class TestSegreCoefficients(unittest.TestCase):

    def test_small_values(self):
        self.assertEqual(segre_coeff(()), 1)
        self.assertEqual(segre_coeff((0,)), 1)
        self.assertEqual(segre_coeff((1,)), 2)
        self.assertEqual(segre_coeff((1, 0)), 1)

    def test_non_decreasing_indices_vanish(self):
        self.assertFalse(is_segre_index((1, 1)))
        self.assertEqual(segre_coeff((1, 1)), 0)
        self.assertEqual(segre_coeff((0, -1)), 0)

    def test_index_enumeration(self):
        self.assertEqual(list(segre_indices(2, 2)), [(1, 0), (2, 0)])
        self.assertEqual(list(segre_indices(0, 0)), [()])

    def test_generating_identity(self):
        self.assertTrue(segre_series_check(2, 3))
        self.assertTrue(segre_series_check(3, 2))


class TestPhiSchur(unittest.TestCase):

    def test_shifted_index(self):
        self.assertEqual(shifted_index(2, 2, 0, (1, 0)), [2, 2, 0])

    def test_corank_zero_values(self):
        self.assertEqual(phi_tp_schur(2, 2, 0).expansion, SchurExpansion({Partition((2, 2)): 1}))
        self.assertEqual(phi_tp_schur(2, 2, 1).expansion,
                         SchurExpansion({Partition((3, 3, 1)): 1, Partition((4, 3)): 3}))

    def test_phi21(self):
        expected = SchurExpansion({Partition((2, 2, 1)): 2, Partition((3, 2)): 4})
        self.assertEqual(phi_tp_schur(2, 1, 0).expansion, expected)
        self.assertEqual(phi_corank_one(2, 0).expansion, expected)

    def test_corank_one_closed_form_agrees(self):
        for n, l in [(2, 1), (3, 0)]:
            self.assertEqual(phi_corank_one(n, l).expansion, phi_tp_schur(n, 1, l).expansion, (n, l))

    def test_preconditions(self):
        with self.assertRaises(PreconditionError):
            phi_tp_schur(2, 3, 0)
        with self.assertRaises(PreconditionError):
            phi_corank_one(2, -1)


class TestPhiLocalized(unittest.TestCase):

    def test_codimension(self):
        self.assertEqual(phi_codim(2, 1, 0), 5)
        self.assertEqual(phi_codim(3, 0, 1), 11)
        with self.assertRaises(PreconditionError):
            phi_codim(2, 2, 0)

    def test_fixed_points(self):
        self.assertEqual(fixed_points(2), [(1, 1), (1, 2), (2, 2)])

    def test_localization_matches_schur_formula(self):
        for m, r, l in [(2, 1, 0), (2, 0, 1)]:
            tp = to_quotient(phi_tp_localized(m, r, m + l), width=m + 1)
            self.assertEqual(tp.expansion, phi_tp_schur(m, m - r, l).expansion, (m, r, l))

    def test_preconditions(self):
        with self.assertRaises(PreconditionError):
            phi_tp_localized(2, 1, 1)


if __name__ == '__main__':
    unittest.main()
