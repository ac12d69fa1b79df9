""" Covariants: kappa, Roberts reconstruction and classical transvectants.

A covariant is a polynomial in t, x1..xd, Y1 and Y2 that is homogeneous
in (Y1, Y2). Its Y-degree is its order.
"""

from sympy import QQ, binomial, ff

from septimic.derivations import d2
from septimic.forms import check_form_degree, grading_of, x_expand
from septimic.poly import R, SLOT, Z_VARS, gen, is_free_of, power
from septimic.TFraction import TFraction


_Y1 = SLOT['Y1']
_Y2 = SLOT['Y2']


def covariant_order(F):
    """ Y-degree of a nonzero covariant.

    Raises:
        ValueError: F is zero or not homogeneous in Y1, Y2.
    """
    orders = {expv[_Y1] + expv[_Y2] for expv in F.itermonoms()}
    if len(orders) != 1:
        raise ValueError('Covariant is zero or not homogeneous in Y1, Y2.')
    return orders.pop()


def kappa(F):
    """ Leading coefficient of a covariant, the coefficient of Y1^m.
    """
    if not F:
        return R.zero
    covariant_order(F)
    terms = {}
    for expv, c in F.items():
        if expv[_Y2] == 0:
            rest = list(expv)
            rest[_Y1] = 0
            terms[tuple(rest)] = c
    return R.from_dict(terms)


def kappa_inv(f, d):
    """ Reconstruct the covariant with leading coefficient f.

    Uses sum_i D2^i(a)/i! * Y1^(m-i) * Y2^i, where a is the x-expansion of
    f and m is the last index with D2^m(a) != 0.

    Args:
        f: Semi-invariant as a TFraction over t and z, or an x-polynomial.
        d: Degree of the binary form.

    Raises:
        ValueError: f is zero or D2 does not vanish within d*degree
            steps.
    """
    check_form_degree(d)
    f = TFraction.of(f)
    if not f:
        raise ValueError('Cannot reconstruct a covariant from zero.')

    a = f.num if not f.s and is_free_of(f.num, Z_VARS) else x_expand(f, d)
    bound = d * max(grading_of(a, d).degree, 0)

    ladder = [a]
    while True:
        nxt = d2(ladder[-1], d) * QQ(1, len(ladder))
        if not nxt:
            break
        if len(ladder) > bound:
            raise ValueError('D2 does not vanish on {} within {} steps.'.format(f, bound))
        ladder.append(nxt)

    m = len(ladder) - 1
    Y1, Y2 = gen('Y1'), gen('Y2')
    return sum((c * power(Y1, m - i) * power(Y2, i) for i, c in enumerate(ladder)), R.zero)


def _y_derivative(F, r1, r2):
    for _ in range(r1):
        F = F.diff(gen('Y1'))
    for _ in range(r2):
        F = F.diff(gen('Y2'))
    return F


def transvectant(F, G, r, normalized=True):
    """ Transvectant (F, G)^r.

    The classical sum

        sum_i (-1)^i C(r,i) d^r F/dY1^(r-i) dY2^i * d^r G/dY1^i dY2^(r-i)

    is divided by [m]_r [k]_r when normalized is set, m and k being the
    orders of F and G. Normalized transvectants have exactly the leading
    coefficient that semitransvectant_raw computes.

    Raises:
        ValueError: r outside [0, min(order F, order G)].
    """
    if not F or not G:
        if r < 0:
            raise ValueError('Transvectant index must be nonnegative, got {}.'.format(r))
        return R.zero

    m, k = covariant_order(F), covariant_order(G)
    if not 0 <= r <= min(m, k):
        raise ValueError('Transvectant index {} outside [0, {}].'.format(r, min(m, k)))

    acc = R.zero
    for i in range(r + 1):
        term = _y_derivative(F, r - i, i) * _y_derivative(G, i, r - i)
        acc += (-1) ** i * int(binomial(r, i)) * term

    if normalized:
        acc = acc * QQ(1, int(ff(m, r) * ff(k, r)))
    return acc
