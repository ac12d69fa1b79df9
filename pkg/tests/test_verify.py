import os
import random
import unittest

from septimic.recipe import evaluate_recipe
from septimic.search import run_recipe
from septimic.TFraction import TFraction
from septimic.poly import parse
from septimic.verify import (
    CHECKS, check_d1, check_d2, check_division, check_sl2, failures, parse_checks,
    random_unimodular, summary_table, verify_manifest)


resources = '{}/resources/recipes'.format(os.path.dirname(__file__))
shipped = '{}/../recipes'.format(os.path.dirname(__file__))


def small_manifest():
    with open(resources + '/small.recipe', encoding='utf-8') as f:
        return run_recipe(f.read(), d=7)


class TestChecks(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(['d1', 'sl2'], parse_checks('d1, sl2'))
        self.assertEqual(list(CHECKS), parse_checks(','.join(CHECKS)))

    def test_parse_unknown(self):
        with self.assertRaises(ValueError):
            parse_checks('d1,d3')

    def test_unimodular(self):
        rng = random.Random(3)
        for _ in range(50):
            a, b, c, e = random_unimodular(rng)
            self.assertEqual(1, a * e - b * c)

    def test_unimodular_wide(self):
        rng = random.Random(11)
        for bound in (1, 25):
            for _ in range(100):
                a, b, c, e = random_unimodular(rng, bound=bound)
                self.assertEqual(1, a * e - b * c)
                self.assertTrue(all(isinstance(v, int) for v in (a, b, c, e)))

    def test_quartic_invariant(self):
        """ [t,t]^4 is an invariant of the quartic.
        """
        value = TFraction(parse('3*z2^2 + z4'), 2)
        self.assertTrue(check_d1(value, 4))
        self.assertTrue(check_division(value, 4))
        self.assertTrue(check_d2(value, 4))

    def test_division_fails(self):
        self.assertFalse(check_division(TFraction(parse('z2'), 3), 7))


class TestVerifyManifest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.manifest = small_manifest()

    def test_all_pass(self):
        results = verify_manifest(self.manifest, seed=5)
        self.assertEqual([], failures(results))
        self.assertTrue(any(r.check == 'sl2' and r.name == 'p_4' and r.status == 'pass'
                            for r in results))
        self.assertIn('grading', summary_table(results))

    def test_sl2_only_invariants(self):
        results = verify_manifest(self.manifest, checks=['sl2'])
        self.assertEqual({'p_4', 'ch_1'}, {r.name for r in results})

    def test_degree_limit(self):
        results = verify_manifest(self.manifest, checks=['d1'], max_degree=2)
        skipped = {r.name for r in results if r.status == 'skip'}
        self.assertEqual({'tr_2', 'tr_5', 'p_4', 'ch_1'}, skipped)

    def test_grading_mismatch(self):
        manifest = small_manifest()
        manifest.record('dv_1')['order'] = 4
        bad = failures(verify_manifest(manifest, checks=['grading']))
        self.assertEqual(['dv_1'], [r.name for r in bad])
        self.assertIn('stored', bad[0].detail)


class TestSepticInvariants(unittest.TestCase):
    """ Every shipped septic invariant up to degree 14 is fixed by SL2.
    """

    def test_sl2(self):
        with open(shipped + '/septic.recipe', encoding='utf-8') as f:
            text = f.read()
        table = evaluate_recipe(text[:text.index('\np_16_1')], check=False)
        rng = random.Random(13)
        names = []
        for entry in table.invariants():
            names.append(entry.name)
            with self.subTest(name=entry.name):
                ok, detail = check_sl2(entry.value, 7, rng)
                self.assertTrue(ok, detail)
        self.assertEqual(1 + 3 + 6 + 4, len(names))


if __name__ == '__main__':
    unittest.main()
