import unittest

from services.algebra.parser import parse_polynomial
from services.errors import ExpressionError, PreconditionError
from services.ideals.ideals import (MonomialGerm, MonomialIdeal, canonical_representatives, canonicalize,
                                    descendant, enumerate_ideals, ideal_of, parse_ideal, stabilizer_order,
                                    suspension_factor)
from services.verify.checks import brute_force_ideals


class TestMonomialIdeal(unittest.TestCase):

    def test_parse_and_codim(self):
        I = parse_ideal("(x^2,xy,y^3)")
        self.assertEqual(I.n, 2)
        self.assertEqual(I.codim, 3)
        self.assertEqual(I.complement, frozenset({(1, 0), (0, 1), (0, 2)}))

    def test_parse_rejects_infinite_codimension(self):
        with self.assertRaises(PreconditionError):
            parse_ideal("(x^2,xy)")

    def test_parse_rejects_bad_text(self):
        with self.assertRaises(ExpressionError):
            parse_ideal("x^2,y^2")

    def test_maximal_square(self):
        M = MonomialIdeal.maximal_square(3)
        self.assertEqual(M.codim, 3)
        self.assertTrue(M.is_maximal_square())
        self.assertEqual(M, parse_ideal("(x^2,y^2,z^2,xy,xz,yz)"))

    def test_complement_must_be_divisor_closed(self):
        with self.assertRaises(PreconditionError):
            MonomialIdeal(2, [(0, 2)])

    def test_descendant_and_suspension(self):
        I = parse_ideal("(x^3)")
        self.assertEqual(descendant(I), parse_ideal("(x^3,y)"))
        self.assertEqual(suspension_factor(I), parse_polynomial("(a2 - a1)*(a2 - 2*a1)"))

    def test_germ_ideal(self):
        germ = MonomialGerm(2, ((2, 0), (0, 2)))
        self.assertEqual(ideal_of(germ), parse_ideal("(x^2,y^2)"))
        with self.assertRaises(PreconditionError):
            MonomialGerm(2, ((0, 0),))


class TestEnumeration(unittest.TestCase):

    def test_two_variables_count_partitions(self):
        self.assertEqual([len(enumerate_ideals(2, m)) for m in range(1, 6)], [2, 3, 5, 7, 11])

    def test_known_counts(self):
        self.assertEqual(len(enumerate_ideals(1, 4)), 1)
        self.assertEqual(len(enumerate_ideals(3, 3)), 13)

    def test_matches_brute_force(self):
        for n, m in [(2, 3), (3, 2), (3, 3)]:
            mine = {I.complement for I in enumerate_ideals(n, m)}
            self.assertEqual(mine, brute_force_ideals(n, m))

    def test_preconditions(self):
        with self.assertRaises(PreconditionError):
            enumerate_ideals(0, 2)


class TestRepresentatives(unittest.TestCase):

    def test_counts_per_codimension(self):
        self.assertEqual([len(canonical_representatives(mu)) for mu in range(1, 5)], [1, 2, 4, 7])

    def test_ordered_by_variable_count(self):
        reps = canonical_representatives(3)
        self.assertEqual([rep.n for rep in reps], [1, 2, 2, 3])
        self.assertEqual(reps[0].ideal, parse_ideal("(x^4)"))
        self.assertEqual(reps[-1].ideal, MonomialIdeal.maximal_square(3))

    def test_canonicalize_swaps_variables(self):
        rep, renaming = canonicalize(parse_ideal("(y^2,xy,x^3)"))
        self.assertEqual(rep, parse_ideal("(x^2,xy,y^3)"))
        self.assertEqual(len(renaming), 2)

    def test_stabilizer_and_orbit(self):
        square = parse_ideal("(x^2,y^2)")
        self.assertEqual(stabilizer_order(square), 2)
        rep = [r for r in canonical_representatives(3) if r.ideal == square][0]
        self.assertEqual(rep.orbit_size(3), 3)


if __name__ == '__main__':
    unittest.main()
