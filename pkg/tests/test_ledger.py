import unittest

from septimic.DeltaLedger import DeltaLedger, LedgerError, delta_account


SEPTIC = {4: 1, 8: 3, 12: 6, 14: 4, 16: 2, 18: 9}


class TestDeltaLedger(unittest.TestCase):
    """ Counting new invariant generators degree by degree.
    """

    def test_degree_20(self):
        ledger = DeltaLedger(7, SEPTIC)
        self.assertEqual(1, delta_account(ledger, 20, 2))
        self.assertEqual({'dim_i': 35, 'sigma': 36, 'dim_s': 2, 'delta': 1}, ledger.rows[20])

    def test_degree_24_and_26(self):
        ledger = DeltaLedger(7, {**SEPTIC, 20: 1, 22: 2})
        self.assertEqual(0, ledger.account(24, 12))
        self.assertEqual(1, ledger.account(26, 27))

    def test_quartic_start(self):
        """ With nothing below, delta_4 is dim I_4.
        """
        ledger = DeltaLedger(7)
        for i in range(1, 4):
            self.assertEqual(0, ledger.account(i, 0))
        self.assertEqual(1, ledger.account(4, 0))
        self.assertEqual(1, ledger.total())
        self.assertEqual([1, 2, 3, 4], ledger.degrees())

    def test_negative(self):
        ledger = DeltaLedger(7, {2: 5})
        with self.assertRaises(LedgerError):
            ledger.account(4, 0)

    def test_too_many_syzygies(self):
        ledger = DeltaLedger(7, {4: 1})
        with self.assertRaises(LedgerError):
            ledger.account(8, 2)

    def test_total(self):
        ledger = DeltaLedger(7, SEPTIC)
        self.assertEqual(25, ledger.total())

    def test_round_trip(self):
        ledger = DeltaLedger(7)
        for i in range(1, 9):
            ledger.account(i, 0)
        doc = ledger.to_dict()
        again = DeltaLedger.from_dict(doc)
        self.assertEqual(ledger.rows, again.rows)
        self.assertEqual(doc, again.to_dict())

    def test_table(self):
        ledger = DeltaLedger(7)
        ledger.account(4, 0)
        text = ledger.table()
        self.assertIn('delta', text)
        self.assertIn('4', text)


if __name__ == '__main__':
    unittest.main()
