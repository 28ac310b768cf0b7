import unittest

from services.algebra.linform import LinForm
from services.algebra.mpoly import MPoly
from services.algebra.parser import parse_expression
from services.algebra.poles import Hyperplane, pole_free, pole_orders, vanishes
from services.algebra.ratfn import RatFn
from services.algebra.varids import alpha
from services.euler.algebras import parse_algebra
from services.euler.reciprocity import reciprocity_terms
from services.euler.tables import load_shipped_tables
from services.ideals.ideals import MonomialIdeal

a1, a2 = LinForm.of(alpha(1)), LinForm.of(alpha(2))


class TestHyperplane(unittest.TestCase):

    def test_form_restricts_to_zero(self):
        form = (a1 - a2 * 2).to_mpoly()
        plane = Hyperplane(form)
        self.assertTrue(plane.restrict(form).is_zero())
        self.assertFalse(plane.restrict(MPoly.var(alpha(1))).is_zero())


class TestVanishing(unittest.TestCase):

    def test_partial_fractions_cancel(self):
        terms = [parse_expression("1/(a1*(a1-a2))"), parse_expression("1/(a2*(a2-a1))"),
                 parse_expression("1/(a1*a2)")]
        self.assertTrue(vanishes(terms))
        self.assertFalse(vanishes(terms[:2]))

    def test_double_pole(self):
        terms = [parse_expression("1/(a1-a2)^2"), parse_expression("-1/(a1-a2)^2")]
        self.assertTrue(vanishes(terms))
        self.assertFalse(vanishes([parse_expression("1/((a1-a2)^2*a1)")]))

    def test_undecided_cases(self):
        self.assertIsNone(vanishes([parse_expression("1/(a1^2+a2^2)")]))
        self.assertIsNone(vanishes([parse_expression("1/a1"), parse_expression("1/(a1*a2)")]))
        self.assertIsNone(vanishes([RatFn.from_poly(MPoly.var(alpha(1)))]))

    def test_pole_orders(self):
        orders = pole_orders([parse_expression("1/((a1-a2)^2*a1)")])
        self.assertEqual(sorted(orders.values()), [1, 2])
        self.assertEqual(pole_orders([parse_expression("1/(a1*(a1-a2))"), parse_expression("1/(a2*(a2-a1))"),
                                      parse_expression("1/(a1*a2)")]), {})


class TestRootTerms(unittest.TestCase):

    def test_divided_difference_is_polynomial(self):
        terms = [(parse_expression("1/(a1-a2)"), [a1]), (parse_expression("1/(a2-a1)"), [a2])]
        self.assertTrue(pole_free(terms))
        self.assertFalse(pole_free(terms[:1]))

    def test_same_sign_keeps_the_pole(self):
        terms = [(parse_expression("1/(a1-a2)"), [a1]), (parse_expression("1/(a1-a2)"), [a2])]
        self.assertFalse(pole_free(terms))


class TestCompletedRows(unittest.TestCase):

    def test_mu4_rows_close_the_relation(self):
        table = load_shipped_tables()
        for name in ["A_4", "III_{2,4}", "I_{2,3}"]:
            self.assertTrue(vanishes(reciprocity_terms(table, parse_algebra(name))), name)

    def test_scaled_row_is_detected(self):
        table = load_shipped_tables()
        Q = parse_algebra("III_{2,4}")
        value = table.get(Q, MonomialIdeal.maximal_square(4)).value
        others = [t for t in reciprocity_terms(table, Q) if t != value.reciprocal()]
        self.assertFalse(vanishes(others + [(value * 2).reciprocal()]))


if __name__ == '__main__':
    unittest.main()
