import random
import unittest

from septimic.derivations import d1
from septimic.forms import (
    Grading, basic_form, check_form_degree, form_coefficients, grading_of,
    sl2_substitute, x, x_expand, z_basis, z_polynomial)
from septimic.poly import NotDivisibleError, gen, parse, render
from septimic.TFraction import TFraction


# The quartic invariant (3*z2^2 + z4)/t^2 and its x-expansion.
DV1 = TFraction(parse('3*z2^2 + z4'), 2)
DV1_X = parse('x4*t - 4*x1*x3 + 3*x2^2')


class TestZBasis(unittest.TestCase):

    def test_z2(self):
        self.assertEqual(parse('x2*t - x1^2'), z_polynomial(2))

    def test_z3(self):
        self.assertEqual(parse('x3*t^2 - 3*x1*x2*t + 2*x1^3'), z_polynomial(3))

    def test_z7(self):
        exp = parse('x7*t^6 + 6*x1^7 - 21*x1^5*x2*t + 35*x1^4*x3*t^2 '
                    '- 35*x1^3*x4*t^3 + 21*x1^2*x5*t^4 - 7*x1*x6*t^5')
        self.assertEqual(exp, z_polynomial(7))

    def test_length(self):
        self.assertEqual(6, len(z_basis(7)))
        self.assertEqual(1, len(z_basis(2)))

    def test_d1_kernel(self):
        """ Every z_i is annihilated by D1.
        """
        for p in z_basis(7):
            self.assertFalse(d1(p), render(p))

    def test_bad_degree(self):
        for d in (1, 8, '7'):
            with self.assertRaises(ValueError):
                check_form_degree(d)


class TestXExpand(unittest.TestCase):

    def test_dv1(self):
        self.assertEqual(DV1_X, x_expand(DV1, 7))

    def test_t(self):
        self.assertEqual(gen('t'), x_expand(TFraction(gen('t')), 7))

    def test_z2z3(self):
        """ (3*z2^2*z3 - 9*z2*z5 + 7*z3*z4)/t^2 expands to 11 terms.
        """
        f = TFraction(parse('3*z2^2*z3 - 9*z2*z5 + 7*z3*z4'), 2)
        p = x_expand(f, 7)
        self.assertEqual(11, len(p))
        self.assertFalse(d1(p))

    def test_not_semi_invariant(self):
        with self.assertRaises(NotDivisibleError):
            x_expand(TFraction(gen('z2'), 1), 7)

    def test_rejects_x(self):
        with self.assertRaises(ValueError):
            x_expand(TFraction(parse('x1*z2')), 7)

    def test_mixed(self):
        f = TFraction(parse('x1*z2'))
        self.assertEqual(parse('x1*x2*t - x1^3'), x_expand(f, 7, mixed=True))

    def test_z_beyond_d(self):
        with self.assertRaises(ValueError):
            x_expand(TFraction(gen('z5')), 4)


class TestGrading(unittest.TestCase):

    def test_t(self):
        self.assertEqual(Grading(1, 0, 7), grading_of(TFraction(gen('t')), 7))

    def test_z(self):
        self.assertEqual(10, grading_of(TFraction(gen('z2')), 7).order)
        self.assertEqual(15, grading_of(TFraction(gen('z3')), 7).order)

    def test_dv1(self):
        self.assertEqual(Grading(2, 4, 6), grading_of(DV1, 7))
        self.assertEqual(Grading(2, 4, 0), grading_of(DV1, 4))

    def test_z_monomials(self):
        """ z_i has degree i and weight i, so a z-monomial has order (d - 2) * sum(i*a_i).
        """
        rng = random.Random(2)
        for _ in range(20):
            exps = {i: rng.randint(0, 3) for i in range(2, 8)}
            if not any(exps.values()):
                continue
            p = gen('t') ** 0
            for i, e in exps.items():
                p = p * gen('z{}'.format(i)) ** e
            size = sum(i * e for i, e in exps.items())
            order = 7 * size - 2 * size
            self.assertEqual(order, grading_of(TFraction(p), 7).order)

    def test_inhomogeneous(self):
        with self.assertRaises(ValueError):
            grading_of(TFraction(parse('z2 + t')), 7)

    def test_zero(self):
        with self.assertRaises(ValueError):
            grading_of(TFraction.of(0), 7)


class TestBasicForm(unittest.TestCase):

    def test_quadratic(self):
        self.assertEqual(parse('t*Y1^2 + 2*x1*Y1*Y2 + x2*Y2^2'), basic_form(2))

    def test_coefficients(self):
        for d in range(2, 8):
            self.assertEqual([x(i) for i in range(d + 1)],
                             form_coefficients(basic_form(d), d))


class TestSl2(unittest.TestCase):

    def test_identity(self):
        self.assertEqual(DV1_X, sl2_substitute(DV1_X, 1, 0, 0, 1, 4))

    def test_quartic_invariant(self):
        """ The quartic's degree-2 invariant is fixed by unimodular matrices.
        """
        for matrix in [(1, 1, 0, 1), (1, 0, 2, 1), (2, 1, 1, 1), (0, -1, 1, 0), (3, 2, 4, 3)]:
            self.assertEqual(DV1_X, sl2_substitute(DV1_X, *matrix, 4), matrix)

    def test_upper_triangular_fixes_t(self):
        self.assertEqual(gen('t'), sl2_substitute(gen('t'), 1, 1, 0, 1, 7))

    def test_not_unimodular(self):
        with self.assertRaises(ValueError):
            sl2_substitute(DV1_X, 2, 0, 0, 1, 4)


if __name__ == '__main__':
    unittest.main()
