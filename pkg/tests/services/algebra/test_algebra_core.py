import unittest
from fractions import Fraction

from sympy.polys.rings import PolyElement

from services.algebra.linform import LinForm, resultant
from services.algebra.mpoly import MPoly, exact_divide, frame
from services.algebra.parser import parse_expression, parse_polynomial
from services.algebra.ratfn import RatFn, asymmetrize, resultant_ratfn, symmetrize
from services.algebra.sampling import SamplePoints, solve_exact
from services.algebra.varids import alpha, beta, z
from services.errors import (ExpressionError, IndeterminateForm, MissingAssignment, NotDivisible,
                             PolynomialityError, RankDeficient)

a1, a2 = MPoly.var(alpha(1)), MPoly.var(alpha(2))


class TestMPoly(unittest.TestCase):

    def test_arithmetic_matches_parsed_text(self):
        self.assertEqual((a1 + a2) ** 2, parse_polynomial("a1^2 + 2*a1*a2 + a2^2"))
        self.assertEqual((a1 - a2) * (a1 + a2), a1 ** 2 - a2 ** 2)
        self.assertTrue((a1 - a1).is_zero())

    def test_degree_and_homogeneity(self):
        p = parse_polynomial("a1^3 + a1*a2^2")
        self.assertEqual(p.degree(), 3)
        self.assertTrue(p.is_homogeneous())
        self.assertFalse((p + a1).is_homogeneous())

    def test_exact_divide(self):
        self.assertEqual(exact_divide(a1 ** 2 - a2 ** 2, a1 - a2), a1 + a2)

    def test_exact_divide_reports_remainder(self):
        with self.assertRaises(NotDivisible):
            exact_divide(a1 ** 2 + a2, a1)

    def test_evaluate_needs_every_variable(self):
        self.assertEqual((a1 * a2 + 1).evaluate({alpha(1): 2, alpha(2): Fraction(1, 2)}), 2)
        with self.assertRaises(MissingAssignment):
            (a1 * a2).evaluate({alpha(1): 1})

    def test_substitute_and_rename(self):
        p = a1 ** 2 + a2
        self.assertEqual(p.substitute({alpha(1): a2}, partial=True), a2 ** 2 + a2)
        self.assertEqual(p.rename({alpha(1): alpha(2), alpha(2): alpha(1)}), a2 ** 2 + a1)

    def test_display(self):
        self.assertEqual(str(parse_polynomial("2*c3 + 3*c1*c2 + c1^3")), "c1^3 + 3*c1*c2 + 2*c3")
        self.assertEqual(str(MPoly()), "0")

    def test_values_live_in_a_sympy_ring(self):
        p = a1 * a2 + Fraction(1, 3)
        self.assertIsInstance(p.lift(frame((alpha(1), alpha(2)))), PolyElement)
        self.assertIs(frame((alpha(1),)), frame((alpha(1),)))

    def test_equal_polynomials_hash_alike_across_variable_sets(self):
        wide = (a1 + a2) - a2
        self.assertEqual(wide, a1)
        self.assertEqual(hash(wide), hash(a1))
        self.assertEqual({a1: 1}[wide], 1)

    def test_primitive_part_has_positive_leading_coefficient(self):
        content, prim = (a1 * Fraction(-2, 3) + a2 * Fraction(4, 9)).primitive()
        self.assertEqual(content, Fraction(-2, 9))
        self.assertEqual(prim, a1 * 3 - a2 * 2)
        self.assertEqual(MPoly().primitive(), (Fraction(0), MPoly()))

    def test_substitute_drops_replaced_variables(self):
        p = (a1 ** 3 + a1 * a2).substitute({alpha(1): a2 + 1}, partial=True)
        self.assertEqual(p.variables(), {alpha(2)})
        self.assertEqual(p.evaluate({alpha(2): 2}), 33)
        self.assertEqual(p.substitute({alpha(2): MPoly.constant(2)}).constant_value(), 33)


class TestRatFn(unittest.TestCase):

    def test_cancellation_to_zero(self):
        f = parse_expression("1/(a1-a2) + 1/(a2-a1)")
        self.assertTrue(f.is_zero())

    def test_to_poly_certifies(self):
        self.assertEqual(parse_expression("(a1^2-a2^2)/(a1-a2)").to_poly(), a1 + a2)
        with self.assertRaises(PolynomialityError):
            parse_expression("1/a1").to_poly()

    def test_infinite_arithmetic(self):
        inf = RatFn(0).reciprocal()
        self.assertTrue(inf.is_infinite())
        self.assertTrue(parse_expression("INF").is_infinite())
        self.assertTrue(inf.reciprocal().is_zero())
        with self.assertRaises(IndeterminateForm):
            inf * RatFn(0)
        with self.assertRaises(IndeterminateForm):
            inf + inf
        with self.assertRaises(IndeterminateForm):
            RatFn(0) / RatFn(0)

    def test_equality_across_representations(self):
        self.assertEqual(parse_expression("(a1+a2)/(2*a1+2*a2)"), RatFn(Fraction(1, 2)))
        self.assertEqual(parse_expression("a1*(a1-a2)/(a1-a2)"), RatFn.from_poly(a1))

    def test_resultant(self):
        res = resultant_ratfn([LinForm.of(beta(1))], [LinForm.of(alpha(1)), LinForm.of(alpha(2))])
        self.assertEqual(res, parse_expression("(b1-a1)*(b1-a2)"))

    def test_symmetrize_and_asymmetrize(self):
        self.assertEqual(symmetrize(RatFn.from_poly(a1), 2, 1), RatFn.from_poly(a1 + a2))
        z1, z2 = MPoly.var(z(1)), MPoly.var(z(2))
        self.assertEqual(asymmetrize(RatFn.from_poly(z1), 2), RatFn.from_poly(z1 - z2))
        self.assertTrue(asymmetrize(RatFn(1), 2).is_zero())


class TestParser(unittest.TestCase):

    def test_precedence_and_powers(self):
        self.assertEqual(parse_polynomial("2*a1^2 - (a1 + a2)*a2"), 2 * a1 ** 2 - a1 * a2 - a2 ** 2)

    def test_rational_constants(self):
        self.assertEqual(parse_expression("(1/3)*a1"), RatFn.from_poly(a1 * Fraction(1, 3)))

    def test_bad_character_reports_column(self):
        with self.assertRaises(ExpressionError) as ctx:
            parse_expression("a1 + $")
        self.assertEqual(ctx.exception.column, 6)

    def test_unknown_variable(self):
        with self.assertRaises(ExpressionError):
            parse_expression("q7 + 1")

    def test_empty_expression(self):
        with self.assertRaises(ExpressionError):
            parse_expression("   ")


class TestLinForm(unittest.TestCase):

    def test_dominant_is_highest_index(self):
        form = LinForm({z(1): 2, z(3): -1})
        self.assertEqual(form.dominant(), (z(3), Fraction(-1)))

    def test_canonical_scale(self):
        scale, prim = LinForm({alpha(1): -2, alpha(2): 4}).canonical()
        self.assertEqual(scale, -2)
        self.assertEqual(prim, LinForm({alpha(1): 1, alpha(2): -2}))

    def test_resultant(self):
        self.assertEqual(resultant([LinForm.of(beta(1))], [LinForm.of(alpha(1)), LinForm.of(alpha(2))]),
                         parse_polynomial("(b1 - a1)*(b1 - a2)"))
        self.assertEqual(resultant([], [LinForm.of(alpha(1))]), MPoly.constant(1))

    def test_round_trip_through_mpoly(self):
        form = LinForm({alpha(1): 1, beta(2): -3})
        self.assertEqual(LinForm.from_mpoly(form.to_mpoly()), form)
        with self.assertRaises(ValueError):
            LinForm.from_mpoly(a1 * a2)


class TestSampling(unittest.TestCase):

    def test_seeded_points_repeat(self):
        first = SamplePoints(seed=7, bound=100).point([alpha(1), alpha(2)])
        second = SamplePoints(seed=7, bound=100).point([alpha(2), alpha(1)])
        self.assertEqual(first, second)
        self.assertNotEqual(first[alpha(1)], first[alpha(2)])

    def test_solve_exact_overdetermined(self):
        rows = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)], [Fraction(2), Fraction(1)]]
        self.assertEqual(solve_exact(rows, [Fraction(3), Fraction(1), Fraction(5)]), [Fraction(2), Fraction(1)])

    def test_solve_exact_inconsistent(self):
        rows = [[Fraction(1)], [Fraction(1)]]
        self.assertIsNone(solve_exact(rows, [Fraction(1), Fraction(2)]))

    def test_solve_exact_rank_deficient(self):
        rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
        with self.assertRaises(RankDeficient):
            solve_exact(rows, [Fraction(1), Fraction(2)])


if __name__ == '__main__':
    unittest.main()
