import os
import unittest

from septimic.Construction import ST, T, Gen, Product
from septimic.poly import parse
from septimic.recipe import RecipeError, closure, evaluate_recipe, parse_expr, parse_recipe
from septimic.TFraction import TFraction


resources = '{}/resources/recipes'.format(os.path.dirname(__file__))
shipped = '{}/../recipes'.format(os.path.dirname(__file__))


def read(path):
    with open(path, encoding='utf-8') as f:
        return f.read()


class TestParseExpr(unittest.TestCase):

    def test_bracket(self):
        expr = parse_expr('[t,dv_1*tr_1]^7')
        self.assertIsInstance(expr, ST)
        self.assertIs(T, expr.lhs)
        self.assertEqual(7, expr.r)
        self.assertEqual({'dv_1', 'tr_1'}, expr.names())

    def test_power(self):
        expr = parse_expr('[t,dv_1^2]^7')
        self.assertIsInstance(expr.rhs, Product)
        self.assertEqual('[t,dv_1^2]^7', expr.text())

    def test_product_order(self):
        """ Products render with factors sorted by name.
        """
        self.assertEqual('a*b', parse_expr('b*a').text())
        self.assertEqual(parse_expr('a*b'), parse_expr('b*a'))

    def test_name(self):
        self.assertEqual(Gen('dv_1'), parse_expr('dv_1'))

    def test_missing_index_top(self):
        self.assertIsNone(parse_expr('[t,dv_3]').r)

    def test_nested_needs_index(self):
        with self.assertRaises(RecipeError):
            parse_expr('[t,[t,t]]^2')

    def test_nested(self):
        expr = parse_expr('[t,[z_a,z_b]^2]^1')
        self.assertEqual('[t,[z_a,z_b]^2]^1', expr.text())

    def test_syntax(self):
        for text in ('[t,dv_1', '[t dv_1]^2', 'dv_1 *', '[t,dv_1]^x'):
            with self.assertRaises(RecipeError):
                parse_expr(text)


class TestParseRecipe(unittest.TestCase):

    def test_small(self):
        lines = parse_recipe(read(resources + '/small.recipe'))
        self.assertEqual(['dv_1', 'dv_2', 'dv_3', 'tr_2', 'tr_5', 'p_4', 'ch_1'],
                         [line.name for line in lines])
        self.assertEqual(15, lines[3].order)
        self.assertIsNone(lines[6].order)

    def test_undefined(self):
        with self.assertRaises(RecipeError) as cm:
            parse_recipe(read(resources + '/undefined.recipe'))
        self.assertEqual(2, cm.exception.lineno)

    def test_no_index(self):
        with self.assertRaises(RecipeError):
            parse_recipe(read(resources + '/no-index.recipe'))

    def test_duplicate(self):
        with self.assertRaises(RecipeError):
            parse_recipe('a = [t,t]^2\na = [t,t]^4\n')

    def test_bad_line(self):
        with self.assertRaises(RecipeError):
            parse_recipe('[t,t]^2\n')

    def test_closure(self):
        lines = parse_recipe(read(resources + '/small.recipe'))
        self.assertEqual(['dv_3', 'tr_5', 'p_4'], [line.name for line in closure(lines, 'p_4')])
        with self.assertRaises(KeyError):
            closure(lines, 'p_8')

    def test_shipped(self):
        """ The degree-7 recipe parses and names thirty invariants but p_30.
        """
        lines = parse_recipe(read(shipped + '/septic.recipe'))
        names = {line.name for line in lines}
        invariants = [n for n in names if n.startswith('p_')]
        self.assertEqual(29, len(invariants))
        for name in ('p_4', 'p_8_3', 'p_12_6', 'p_14_4', 'p_16_2', 'p_18_9', 'p_20',
                     'p_22_2', 'p_26'):
            self.assertIn(name, names)


class TestEvaluateRecipe(unittest.TestCase):

    def test_dv1(self):
        table = evaluate_recipe('dv_1 = [t,t]^4\n', d=7)
        value = table.get('dv_1')
        self.assertEqual(TFraction(parse('3*z2^2 + z4'), 2), value)
        self.assertEqual(2, len(value.num))

    def test_solve_index(self):
        table = evaluate_recipe(read(resources + '/small.recipe'), d=7, target='tr_2')
        self.assertEqual('[t,dv_3]^1', table.construction('tr_2').text())
        self.assertEqual(15, table.entry('tr_2').grading.order)

    def test_invariant(self):
        table = evaluate_recipe(read(resources + '/small.recipe'), d=7)
        self.assertEqual(['p_4', 'ch_1'], [e.name for e in table.invariants()])
        self.assertEqual(table.get('p_4'), table.get('ch_1'))
        self.assertEqual(4, table.entry('p_4').grading.degree)

    def test_unchecked(self):
        checked = evaluate_recipe(read(resources + '/small.recipe'), d=7, target='p_4')
        fast = evaluate_recipe(read(resources + '/small.recipe'), d=7, target='p_4', check=False)
        self.assertEqual(checked.get('p_4'), fast.get('p_4'))

    def test_wrong_order(self):
        with self.assertRaises(RecipeError):
            evaluate_recipe(read(resources + '/wrong-order.recipe'), d=7)

    def test_zero(self):
        with self.assertRaises(RecipeError):
            evaluate_recipe('a = [t,t]^3\n', d=7)

    def test_out_of_range(self):
        with self.assertRaises(RecipeError):
            evaluate_recipe('a = [t,t]^8\n', d=7)

    def test_unsolvable(self):
        with self.assertRaises(RecipeError):
            evaluate_recipe('a = [t,t]   # ord=3\n', d=7)

    def test_target_shipped(self):
        """ p_4 of the shipped recipe is the quartic invariant.
        """
        table = evaluate_recipe(read(shipped + '/septic.recipe'), d=7, target='p_4')
        self.assertEqual(0, table.entry('p_4').grading.order)


if __name__ == '__main__':
    unittest.main()
