import unittest
from itertools import combinations_with_replacement

from septimic.dimension import (
    count_weight, dim_invariants, dim_semiinvariants, gaussian_binomial_coefficients,
    partitions_in_box, sigma_count, sigma_series)


def brute_force_count(d, i, w):
    """ Degree-i monomials in x0..xd of weight w, by enumeration.
    """
    return sum(1 for m in combinations_with_replacement(range(d + 1), i) if sum(m) == w)


class TestDimInvariants(unittest.TestCase):

    def test_septic(self):
        self.assertEqual(4, dim_invariants(7, 14))
        self.assertEqual(0, dim_invariants(7, 3))
        self.assertEqual(35, dim_invariants(7, 20))
        self.assertEqual(26, dim_invariants(7, 22))
        self.assertEqual(92, dim_invariants(7, 30))

    def test_small_forms(self):
        self.assertEqual(1, dim_invariants(2, 2))
        self.assertEqual(1, dim_invariants(3, 4))
        self.assertEqual(1, dim_invariants(4, 2))
        self.assertEqual(1, dim_invariants(4, 3))
        self.assertEqual(1, dim_invariants(5, 4))

    def test_odd(self):
        for d in (3, 5, 7):
            for i in (1, 3, 5, 7):
                self.assertEqual(0, dim_invariants(d, i))

    def test_oracle(self):
        """ Partition counting and Gaussian binomials agree.
        """
        for d in range(1, 8):
            for i in range(0, 13):
                self.assertEqual(dim_invariants(d, i), dim_invariants(d, i, oracle=True), (d, i))

    def test_brute_force(self):
        for d in range(1, 8):
            for i in range(0, 7):
                for w in range(0, d * i + 1):
                    self.assertEqual(brute_force_count(d, i, w), count_weight(d, i, w), (d, i, w))

    def test_bad_input(self):
        with self.assertRaises(ValueError):
            dim_invariants(0, 2)
        with self.assertRaises(ValueError):
            dim_invariants(7, -1)


class TestCounting(unittest.TestCase):

    def test_partitions(self):
        # 4 = 4 = 3+1 = 2+2 = 2+1+1 = 1+1+1+1; at most 2 parts, each at most 3
        self.assertEqual(2, partitions_in_box(2, 3, 4))
        self.assertEqual(0, partitions_in_box(2, 3, -1))
        self.assertEqual(1, partitions_in_box(0, 0, 0))

    def test_gaussian(self):
        # [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4
        self.assertEqual([1, 1, 2, 1, 1], gaussian_binomial_coefficients(2, 2))

    def test_semiinvariants(self):
        """ The degree-2 semi-invariants of the septic have orders 14, 10, 6, 2.
        """
        dims = [dim_semiinvariants(7, 2, w) for w in range(8)]
        self.assertEqual([1, 0, 1, 0, 1, 0, 1, 0], dims)
        self.assertEqual(0, dim_semiinvariants(7, 2, 8))


class TestSigma(unittest.TestCase):

    deltas = {4: 1, 8: 3, 12: 6, 14: 4, 16: 2, 18: 9}

    def test_series(self):
        self.assertEqual([1, 0, 1, 0, 1], sigma_series({2: 1}, 4))
        self.assertEqual([1, 1, 2, 2, 3], sigma_series({1: 1, 2: 1}, 4))

    def test_septic(self):
        self.assertEqual(0, sigma_count(self.deltas, 14))
        self.assertEqual(16, sigma_count(self.deltas, 16))
        self.assertEqual(36, sigma_count(self.deltas, 20))

    def test_only_lower_degrees(self):
        """ Generators of degree i are not products at degree i.
        """
        self.assertEqual(1, sigma_count({4: 1, 8: 3}, 8))


if __name__ == '__main__':
    unittest.main()
