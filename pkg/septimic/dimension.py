""" Cayley-Sylvester counting.
"""

from functools import lru_cache

from sympy import Poly, Symbol


@lru_cache(maxsize=None)
def partitions_in_box(parts, largest, w):
    """ N(largest, parts, w): partitions of w into at most `parts` parts,
    each at most `largest`.
    """
    if w < 0:
        return 0
    if w == 0:
        return 1
    if parts == 0 or largest == 0:
        return 0
    # Either every part is below `largest`, or one part equals it.
    return (partitions_in_box(parts, largest - 1, w)
            + partitions_in_box(parts - 1, largest, w - largest))


def gaussian_binomial_coefficients(d, i):
    """ Coefficients of the Gaussian binomial [d+i choose i]_q, lowest first.
    """
    q = Symbol('q')
    num = Poly(1, q)
    den = Poly(1, q)
    for k in range(1, i + 1):
        num *= Poly(1 - q ** (d + k), q)
        den *= Poly(1 - q ** k, q)
    quotient, remainder = num.div(den)
    if not remainder.is_zero:
        raise ArithmeticError('Gaussian binomial division left a remainder.')
    return [int(c) for c in reversed(quotient.all_coeffs())]


def count_weight(d, i, w, oracle=False):
    """ Number of degree-i monomials in the form's d+1 coefficients of weight w.
    """
    if w < 0 or w > d * i:
        return 0
    if oracle:
        return gaussian_binomial_coefficients(d, i)[w]
    return partitions_in_box(i, d, w)


def dim_invariants(d, i, oracle=False):
    """ Dimension of the degree-i invariants of the binary form of degree d.

    Args:
        d: Degree of the form, d >= 1.
        i: Degree of the invariants, i >= 0.
        oracle: Count with the Gaussian binomial instead of the partition
            recursion.

    Raises:
        ValueError: d < 1 or i < 0.
    """
    if d < 1 or i < 0:
        raise ValueError('dim_invariants needs d >= 1 and i >= 0, got d={}, i={}.'.format(d, i))
    if d * i % 2:
        return 0
    w = d * i // 2
    return count_weight(d, i, w, oracle) - count_weight(d, i, w - 1, oracle)


def dim_semiinvariants(d, i, w):
    """ Dimension of the degree-i, weight-w semi-invariants.

    This is zero unless the order d*i - 2*w is nonnegative.
    """
    if d * i - 2 * w < 0:
        return 0
    return count_weight(d, i, w) - count_weight(d, i, w - 1)


def sigma_series(deltas, n):
    """ Coefficients 0..n of prod_k (1 - x^k)^(-deltas[k]).

    Args:
        deltas: Map of degree to number of generators of that degree.
        n: Truncation degree.
    """
    series = [1] + [0] * n
    for k, count in sorted(deltas.items()):
        if k <= 0 or k > n:
            continue
        for _ in range(count):
            for j in range(k, n + 1):
                series[j] += series[j - k]
    return series


def sigma_count(deltas, i):
    """ Number of degree-i products of generators of degree below i.

    Args:
        deltas: DeltaLedger or a map of degree to generator count.
        i: Degree.
    """
    deltas = getattr(deltas, 'deltas', deltas)
    lower = {k: v for k, v in deltas.items() if k < i}
    return sigma_series(lower, i)[i]
