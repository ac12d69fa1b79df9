import os
import unittest

from septimic.derivations import d1, d2, dz, nilpotency_order, scaled_dz_rules, z_rule
from septimic.forms import x_expand, z_polynomial
from septimic.poly import gen, parse
from septimic.recipe import evaluate_recipe
from septimic.TFraction import TFraction


DV1 = TFraction(parse('3*z2^2 + z4'), 2)

shipped = '{}/../recipes'.format(os.path.dirname(__file__))


def septic_through_degree(n):
    """ The shipped septic recipe up to its degree-n semi-invariants.
    """
    with open(shipped + '/septic.recipe', encoding='utf-8') as f:
        text = f.read()
    return evaluate_recipe(text[:text.index('# degree {}\n'.format(n + 1))])


class TestD1(unittest.TestCase):

    def test_x1(self):
        self.assertEqual(gen('t'), d1(gen('x1')))

    def test_z2(self):
        self.assertFalse(d1(parse('x2*t - x1^2')))

    def test_dv1(self):
        self.assertFalse(d1(x_expand(DV1, 7)))


class TestD2(unittest.TestCase):

    def test_t(self):
        self.assertEqual(parse('7*x1'), d2(gen('t'), 7))

    def test_last(self):
        self.assertFalse(d2(gen('x7'), 7))

    def test_z2(self):
        self.assertEqual(parse('5*x3*t - 5*x1*x2'), d2(parse('x2*t - x1^2'), 7))

    def test_quartic_invariant(self):
        self.assertFalse(d2(parse('x4*t - 4*x1*x3 + 3*x2^2'), 4))


class TestDz(unittest.TestCase):

    def test_t(self):
        self.assertEqual(TFraction(parse('7*x1')), dz(TFraction(gen('t')), 7))

    def test_z2(self):
        self.assertEqual(TFraction(parse('5*(2*x1*z2 + z3)'), 1), dz(TFraction(gen('z2')), 7))

    def test_zero(self):
        self.assertFalse(dz(TFraction.of(0), 7))

    def test_matches_d2(self):
        """ D on z_i agrees with D2 on the x-expansion of z_i.
        """
        for d in range(2, 8):
            for i in range(2, d + 1):
                f = TFraction(gen('z{}'.format(i)))
                self.assertEqual(d2(z_polynomial(i), d), x_expand(dz(f, d), d, mixed=True),
                                 'd={} z{}'.format(d, i))

    def test_matches_d2_fraction(self):
        """ The quotient rule holds for a denominator.
        """
        self.assertEqual(d2(x_expand(DV1, 7), 7), x_expand(dz(DV1, 7), 7, mixed=True))


class TestSepticD(unittest.TestCase):
    """ The operator D for the septic, written out variable by variable.
    """

    printed = {
        't': (parse('7*x1'), 0),
        'z2': (parse('5*(2*x1*z2 + z3)'), 1),
        'z3': (parse('15*x1*z3 - 18*z2^2 + 4*z4'), 1),
        'z4': (parse('20*x1*z4 - 24*z2*z3 + 3*z5'), 1),
        'z5': (parse('2*z6 + 25*x1*z5 - 30*z2*z4'), 1),
        'z6': (parse('z7 + 30*x1*z6 - 36*z2*z5'), 1),
        'z7': (parse('7*(5*x1*z7 - 6*z2*z6)'), 1),
    }

    def test_coefficients(self):
        for name, (num, s) in self.printed.items():
            with self.subTest(variable=name):
                self.assertEqual(TFraction(num, s), dz(TFraction(gen(name)), 7))

    def test_z_rule(self):
        for i in range(2, 8):
            self.assertEqual(self.printed['z{}'.format(i)][0], z_rule(i, 7))
        self.assertEqual(gen('t') * self.printed['t'][0], scaled_dz_rules(7)['t'])

    def test_matches_d2_on_generators(self):
        """ D and D2 agree on every septic semi-invariant up to degree 4.
        """
        table = septic_through_degree(4)
        self.assertEqual(1 + 3 + 6 + 8, len(table))
        for entry in table:
            with self.subTest(name=entry.name):
                self.assertEqual(d2(x_expand(entry.value, 7), 7),
                                 x_expand(dz(entry.value, 7), 7, mixed=True))


class TestNilpotency(unittest.TestCase):

    def test_t(self):
        self.assertEqual(7, nilpotency_order(TFraction(gen('t')), 7))
        self.assertEqual(7, nilpotency_order(TFraction(gen('t')), 7, via='z'))

    def test_z3(self):
        self.assertEqual(15, nilpotency_order(TFraction(gen('z3')), 7))

    def test_routes_agree(self):
        for i in range(2, 8):
            f = TFraction(gen('z{}'.format(i)))
            self.assertEqual(5 * i, nilpotency_order(f, 7, via='x'))
            self.assertEqual(5 * i, nilpotency_order(f, 7, via='z'))

    def test_invariant(self):
        self.assertEqual(0, nilpotency_order(DV1, 4))
        self.assertEqual(6, nilpotency_order(DV1, 7))

    def test_z_route_past_syntax(self):
        """ D^11(z2) is zero only once x2.. are rewritten over t, x1 and z.
        """
        z2 = TFraction(gen('z2'))
        self.assertEqual(10, nilpotency_order(z2, 7, via='z'))
        self.assertEqual(nilpotency_order(z2, 7, via='x'), nilpotency_order(z2, 7, via='z'))
        self.assertEqual(6, nilpotency_order(DV1, 7, via='z'))
        self.assertEqual(0, nilpotency_order(DV1, 4, via='z'))

    def test_zero(self):
        with self.assertRaises(ValueError):
            nilpotency_order(TFraction.of(0), 7)

    def test_unknown_route(self):
        with self.assertRaises(ValueError):
            nilpotency_order(TFraction(gen('t')), 7, via='y')


if __name__ == '__main__':
    unittest.main()
