import unittest
from fractions import Fraction

from services.algebra.linform import LinForm
from services.algebra.mpoly import MPoly
from services.algebra.parser import parse_expression, parse_polynomial
from services.algebra.ratfn import RatFn
from services.algebra.varids import alpha
from services.errors import DegreeBoundError, NotSupersymmetric, PolynomialityError
from services.euler.algebras import AlgebraId, parse_algebra
from services.schur.expansion import SchurExpansion
from services.schur.partitions import Partition
from services.thom.closed_forms import porteous, porteous_root
from services.thom.engine import shared_engine
from services.thom.forms import QuotientForm, RootForm, Summand
from services.thom.quotient import (certify, lower, lower_form, quotient_series, rho, supersymmetry_check,
                                    to_quotient)

a1 = MPoly.var(alpha(1))


class TestQuotientVariables(unittest.TestCase):

    def test_numeric_series(self):
        values = quotient_series([Fraction(2)], [Fraction(3)], 2, one=Fraction(1))
        self.assertEqual(values, [1, 1, -2])

    def test_rho_of_first_class(self):
        self.assertEqual(rho(1, 1, parse_polynomial("c1")), parse_polynomial("b1 - a1"))
        self.assertEqual(rho(1, 2, parse_polynomial("c2")), parse_polynomial("(b1 - a1)*(b2 - a1)"))


class TestToQuotient(unittest.TestCase):

    def test_porteous_round_trip(self):
        tp = to_quotient(porteous_root(1, 2), width=1)
        self.assertEqual(tp.l, 1)
        self.assertEqual(tp.expansion, porteous(1, 1).expansion)

    def test_rejects_non_supersymmetric_input(self):
        with self.assertRaises(NotSupersymmetric):
            to_quotient(RootForm.from_poly(1, 1, a1), width=1)

    def test_degree_bound(self):
        with self.assertRaises(DegreeBoundError):
            to_quotient(RootForm.from_poly(1, 1, a1 ** 4))

    def test_quotient_form_properties(self):
        form = QuotientForm(0, SchurExpansion({Partition((1, 1)): 1, Partition((2,)): 2}))
        self.assertEqual(form.codim, 2)
        self.assertEqual(form.width, 2)
        self.assertEqual(form.chern, parse_polynomial("c1^2 + c2"))


class TestSupersymmetry(unittest.TestCase):

    def test_resultant_is_supersymmetric(self):
        self.assertTrue(supersymmetry_check(porteous_root(1, 2)))
        self.assertTrue(supersymmetry_check(porteous_root(2, 2)))

    def test_single_root_is_not(self):
        self.assertFalse(supersymmetry_check(RootForm.from_poly(1, 1, a1)))

    def test_certify_bounds_the_parts(self):
        tp = porteous_root(2, 2)
        self.assertEqual(certify(tp), 2)
        self.assertTrue(tp.certified)
        self.assertFalse(tp.is_materialized())

    def test_pole_is_rejected(self):
        tp = RootForm(2, 2, [Summand(parse_expression("1/(a1-a2)"), [LinForm.of(alpha(1))])])
        with self.assertRaises(PolynomialityError):
            certify(tp)
        self.assertFalse(supersymmetry_check(tp))

    def test_asymmetric_weight_is_rejected(self):
        tp = RootForm(2, 2, [Summand(RatFn.from_poly(a1), [LinForm.of(alpha(1))])])
        with self.assertRaises(NotSupersymmetric):
            certify(tp)

    def test_mu4_root_forms_certified_without_expansion(self):
        engine = shared_engine()
        for name in ["III_{2,4}", "I_{2,3}"]:
            Q = parse_algebra(name)
            n = engine.localization_dimension(Q, 0)
            tp = engine.root_tp(Q, n, n)
            self.assertTrue(supersymmetry_check(tp), name)
            self.assertFalse(tp.is_materialized(), name)


class TestLowering(unittest.TestCase):

    def test_lower_monomials(self):
        self.assertEqual(lower(parse_polynomial("c2^2 + c1*c3"), 2), parse_polynomial("c1^2 + c2"))
        self.assertTrue(lower(parse_polynomial("c1"), 2).is_zero())

    def test_lowering_a2_steps_down_in_l(self):
        engine = shared_engine()
        A2 = AlgebraId("A", (2,))
        lowered = lower_form(engine.quotient_tp(A2, 1), m=2)
        self.assertEqual(lowered.l, 0)
        self.assertEqual(lowered.expansion, engine.quotient_tp(A2, 0).expansion)

    def test_lowering_mu4(self):
        engine = shared_engine()
        III24 = parse_algebra("III_{2,4}")
        lowered = lower_form(engine.quotient_tp(III24, 1), m=4)
        self.assertEqual(lowered.expansion, engine.quotient_tp(III24, 0).expansion)


if __name__ == '__main__':
    unittest.main()
