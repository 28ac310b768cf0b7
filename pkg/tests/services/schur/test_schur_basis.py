import unittest
from fractions import Fraction

from services.algebra.mpoly import MPoly
from services.algebra.parser import parse_polynomial
from services.algebra.varids import alpha
from services.errors import ExpressionError
from services.schur.delta import c_monomial, delta_alphabet, delta_quotient, straighten
from services.schur.expansion import SchurExpansion, schur_expand
from services.schur.partitions import (Partition, conjugate, format_partition, parse_partition, partitions_of,
                                       rectangle, staircase)


class TestPartitions(unittest.TestCase):

    def test_trailing_zeros_are_dropped(self):
        self.assertEqual(Partition((2, 1, 0, 0)), Partition((2, 1)))
        self.assertEqual(len(Partition((2, 1, 0))), 2)

    def test_rejects_increasing_parts(self):
        with self.assertRaises(ValueError):
            Partition((1, 2))

    def test_conjugate(self):
        self.assertEqual(conjugate(Partition((3, 1))), Partition((2, 1, 1)))
        self.assertEqual(conjugate(conjugate(Partition((4, 2, 2)))), Partition((4, 2, 2)))

    def test_counts(self):
        self.assertEqual([len(partitions_of(d)) for d in range(7)], [1, 1, 2, 3, 5, 7, 11])
        self.assertEqual(partitions_of(4, max_parts=2), [Partition((4,)), Partition((3, 1)), Partition((2, 2))])

    def test_shapes(self):
        self.assertEqual(staircase(3), Partition((3, 2, 1)))
        self.assertEqual(rectangle(2, 4), Partition((4, 4)))

    def test_shorthand_only_for_long_runs(self):
        self.assertEqual(format_partition(Partition((3, 3, 3, 1)), shorthand=True), "3^3,1")
        self.assertEqual(format_partition(Partition((3, 3, 1)), shorthand=True), "3,3,1")
        self.assertEqual(parse_partition("3^3,1"), Partition((3, 3, 3, 1)))
        self.assertEqual(parse_partition("()"), Partition())

    def test_parse_errors(self):
        with self.assertRaises(ExpressionError):
            parse_partition("3,x")
        with self.assertRaises(ExpressionError):
            parse_partition("1,2")


class TestDelta(unittest.TestCase):

    def test_small_deltas(self):
        self.assertEqual(delta_quotient(Partition((2,))), parse_polynomial("c2"))
        self.assertEqual(delta_quotient(Partition((1, 1))), parse_polynomial("c1^2 - c2"))
        self.assertEqual(delta_quotient(Partition()), MPoly.constant(1))

    def test_straighten(self):
        self.assertEqual(straighten((2, 1)), (1, Partition((2, 1))))
        self.assertEqual(straighten((0, 2)), (-1, Partition((1, 1))))
        self.assertIsNone(straighten((1, 2)))

    def test_alphabet_version(self):
        a1, a2 = MPoly.var(alpha(1)), MPoly.var(alpha(2))
        self.assertEqual(delta_alphabet(Partition((1,)), [a1, a2]), a1 + a2)
        self.assertEqual(delta_alphabet(Partition((1, 1)), [a1, a2]), a1 ** 2 + a1 * a2 + a2 ** 2)
        self.assertTrue(delta_alphabet(Partition((3,)), [a1, a2]).is_zero())

    def test_c_monomial(self):
        self.assertEqual(c_monomial([0, 2]), parse_polynomial("c2"))
        self.assertTrue(c_monomial([3, -1]).is_zero())


class TestSchurExpansion(unittest.TestCase):

    def test_expand_a2_class(self):
        expansion = schur_expand(parse_polynomial("c1^2 + c2"))
        self.assertEqual(expansion, SchurExpansion({Partition((1, 1)): 1, Partition((2,)): 2}))
        self.assertEqual(str(expansion), "Δ_{1,1} + 2Δ_{2}")

    def test_round_trip_to_chern(self):
        p = parse_polynomial("c1^3 + 3*c1*c2 + 2*c3")
        self.assertEqual(schur_expand(p).to_mpoly(), p)

    def test_records(self):
        expansion = SchurExpansion({Partition((2,)): Fraction(1, 2), Partition((1, 1)): 1})
        self.assertEqual(expansion.to_records(),
                         [{"partition": "1,1", "coeff": "1"}, {"partition": "2", "coeff": "1/2"}])
        self.assertEqual(SchurExpansion.from_records(expansion.to_records()), expansion)

    def test_properties(self):
        expansion = SchurExpansion({Partition((2, 2)): 1, Partition((3, 1)): 3})
        self.assertEqual(expansion.weight(), 4)
        self.assertEqual(expansion.width(), 2)
        self.assertEqual(expansion.leading(), (Partition((3, 1)), Fraction(3)))
        self.assertTrue(expansion.is_nonnegative_integral())
        self.assertFalse((expansion * Fraction(1, 2)).is_nonnegative_integral())
        self.assertTrue((expansion - expansion).is_zero())

    def test_negative_coefficients_display(self):
        expansion = SchurExpansion({Partition((1, 1)): -1, Partition((2,)): 1})
        self.assertEqual(str(expansion), "-Δ_{1,1} + Δ_{2}")


if __name__ == '__main__':
    unittest.main()
