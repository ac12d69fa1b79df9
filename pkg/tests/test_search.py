import os
import unittest

from septimic.Construction import Evaluator
from septimic.GeneratorTable import GeneratorTable
from septimic.search import (
    candidate_products, complete_system, extend_semiinvariants, generator_multisets,
    invariant_candidates)
from septimic.syzygy import EvaluationScreen


EXTENDED = os.environ.get('SEPTIMIC_EXTENDED') == '1'


def septic_table(through):
    table = GeneratorTable(7)
    evaluator = Evaluator(table)
    for n in range(2, through + 1):
        extend_semiinvariants(table, n, evaluator)
    return table


def screened_septic_table(through):
    table = GeneratorTable(7)
    evaluator = Evaluator(table)
    screen = EvaluationScreen({}, 7)
    for n in range(2, through + 1):
        extend_semiinvariants(table, n, evaluator, prune=True, screen=screen)
    return table


# Sorted orders of the irreducible septic semi-invariants by degree.
ORDERS = {
    2: [2, 6, 10],
    3: [3, 5, 7, 9, 11, 15],
    4: [0, 4, 4, 6, 8, 8, 10, 14],
    5: [1, 3, 3, 5, 5, 7, 7, 9, 9, 13],
    6: [2, 2, 2, 4, 4, 6, 6, 8, 8, 12],
    7: [1, 1, 1, 3, 3, 5, 5, 5, 5, 7, 7, 11],
    8: [0, 0, 0, 2, 2, 2, 4, 4, 4, 6, 6, 6, 10],
    9: [1, 1, 1, 3, 3, 3, 3, 3, 5, 5, 9],
}


class TestCandidates(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.table = septic_table(2)

    def test_degree_one(self):
        exprs = candidate_products(GeneratorTable(7), 1)
        self.assertEqual(['[t,t]^{}'.format(r) for r in range(1, 8)],
                         sorted(e.text() for e in exprs))

    def test_degree_two(self):
        self.assertEqual(22, len(candidate_products(self.table, 2)))

    def test_pruned(self):
        """ [t, t*t]^r is dropped for every r up to 7.
        """
        exprs = candidate_products(self.table, 2, prune=True)
        self.assertEqual(15, len(exprs))
        self.assertFalse(any('t*t' in e.text() or 't^2' in e.text() for e in exprs))

    def test_multisets(self):
        self.assertEqual(4, len(generator_multisets(self.table, 2)))

    def test_halves(self):
        exprs = invariant_candidates(self.table, 4, max_r=10)
        self.assertEqual(['[c2_3,c2_3]^2', '[c2_2,c2_2]^6', '[c2_1,c2_1]^10'],
                         [e.text() for e in exprs])

    def test_default_window(self):
        self.assertEqual([], invariant_candidates(self.table, 4))

    def test_odd_halves(self):
        with self.assertRaises(ValueError):
            invariant_candidates(self.table, 5)

    def test_unknown_mode(self):
        with self.assertRaises(ValueError):
            invariant_candidates(self.table, 4, mode='thirds')


class TestExtend(unittest.TestCase):

    def test_degree_two(self):
        table = septic_table(2)
        new = table.at_degree(2)
        self.assertEqual(['c2_1', 'c2_2', 'c2_3'], [e.name for e in new])
        self.assertEqual([10, 6, 2], [e.grading.order for e in new])
        self.assertEqual('[t,t]^2', new[0].construction.text())

    def test_degree_three(self):
        table = septic_table(3)
        new = table.at_degree(3)
        self.assertEqual(6, len(new))
        self.assertEqual([3, 5, 6, 7, 8, 9], sorted(e.grading.weight for e in new))

    def test_pruned_agrees(self):
        table = GeneratorTable(7)
        evaluator = Evaluator(table)
        for n in (2, 3):
            extend_semiinvariants(table, n, evaluator, prune=True)
        self.assertEqual(6, len(table.at_degree(3)))

    def test_degree_four(self):
        new = screened_septic_table(4).at_degree(4)
        self.assertEqual(8, len(new))
        self.assertEqual(ORDERS[4], sorted(e.grading.order for e in new))

    @unittest.skipUnless(EXTENDED, 'set SEPTIMIC_EXTENDED=1')
    def test_through_degree_nine(self):
        table = screened_septic_table(9)
        self.assertEqual([3, 6, 8, 10, 10, 12, 13, 11],
                         [len(table.at_degree(n)) for n in range(2, 10)])
        for n, orders in ORDERS.items():
            with self.subTest(degree=n):
                self.assertEqual(orders, sorted(e.grading.order for e in table.at_degree(n)))


class TestCompleteSystem(unittest.TestCase):

    def test_quadratic(self):
        table, ledger, manifest = complete_system(2)
        self.assertEqual(['c2_1'], manifest.extra['invariants'])
        self.assertEqual(1, ledger.total())
        self.assertEqual(0, table.entry('c2_1').grading.order)

    def test_cubic(self):
        _, ledger, manifest = complete_system(3)
        self.assertEqual(1, ledger.total())
        self.assertEqual(1, ledger.deltas[4])
        self.assertEqual(1, len(manifest.extra['invariants']))

    def test_quartic(self):
        _, ledger, manifest = complete_system(4)
        self.assertEqual(2, ledger.total())
        self.assertEqual(1, ledger.deltas[2])
        self.assertEqual(1, ledger.deltas[3])
        self.assertEqual(0, ledger.deltas[6])

    def test_widened_window(self):
        """ The quartic invariants lie outside the default window and are
        still found.
        """
        table, ledger, manifest = complete_system(4)
        self.assertEqual([], invariant_candidates(table, 2))
        self.assertEqual([], invariant_candidates(table, 6))
        self.assertEqual([2, 3], sorted(table.entry(n).grading.degree
                                        for n in manifest.extra['invariants']))

    def test_ledger_written(self):
        _, _, manifest = complete_system(2)
        self.assertEqual(2, manifest.extra['ledger']['d'])

    def test_bad_mode(self):
        with self.assertRaises(ValueError):
            complete_system(2, mode='thirds')

    def test_quintic(self):
        table, ledger, manifest = complete_system(5)
        degrees = sorted(table.entry(n).grading.degree for n in manifest.extra['invariants'])
        self.assertEqual([4, 8, 12, 18], degrees)
        self.assertEqual(4, ledger.total())


if __name__ == '__main__':
    unittest.main()
