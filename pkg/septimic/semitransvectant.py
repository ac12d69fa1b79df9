""" Semitransvectants computed directly on the z-representation.

The leading coefficient of (F, G)^r is assembled from D-powers of the two
leading coefficients:

    sum_i (-1)^i C(r,i) sigma(D^i f)/[m]_i * sigma(D^(r-i) g)/[k]_(r-i)

where m, k are the orders of f and g, [a]_i is the falling factorial and
sigma is the evaluation x1 -> 0, x_j -> z_j / t^(j-1). sigma fixes every
semi-invariant and is a ring homomorphism, so it may be applied factor by
factor.

In checked mode the factors are instead rewritten exactly in the
coordinates (t, x1, z2, ..., zd) and the x1-coefficients of the whole sum
must cancel.
"""

from sympy import QQ, binomial, ff

from septimic.derivations import dz
from septimic.forms import check_form_degree, clear_x_denominators, grading_of, x1_rewrite
from septimic.poly import R, SLOT, gen, is_free_of, primitive_normalize, substitute
from septimic.TFraction import TFraction


_X1 = SLOT['x1']


class VanishingCheckError(ValueError):
    """ Raised when the x1-coefficients of a semitransvectant sum survive.
    """


def falling(a, i):
    """ Falling factorial [a]_i = a(a-1)...(a-i+1).
    """
    return int(ff(a, i))


def drop_x1_above(f, limit):
    """ Drop the terms of f whose x1-degree exceeds limit.
    """
    kept = {expv: c for expv, c in f.num.items() if expv[_X1] <= limit}
    return TFraction(R.from_dict(kept), f.s)


def d_ladder(f, n, d, prune_to=None):
    """ [f, D f, ..., D^n f].

    With prune_to set, step k keeps only terms of x1-degree at most
    prune_to - k. D lowers the x1-degree by at most one, so the dropped
    terms cannot reach x1-degree zero by step prune_to.
    """
    ladder = [TFraction.of(f)]
    for k in range(1, n + 1):
        nxt = dz(ladder[-1], d)
        if prune_to is not None:
            nxt = drop_x1_above(nxt, prune_to - k)
        ladder.append(nxt)
    return ladder


def sigma_evaluate(f, d):
    """ Evaluate x1 -> 0 and x_j -> z_j / t^(j-1) on a mixed fraction.
    """
    num, K = clear_x_denominators(TFraction.of(f), d, keep_x1=False)
    bindings = {'x{}'.format(j): gen('z{}'.format(j)) for j in range(2, d + 1)}
    return TFraction(substitute(num, bindings), f.s + K)


def _orders(f, g, r, d):
    m = grading_of(f, d).order
    k = grading_of(g, d).order
    if not 0 <= r <= min(m, k):
        raise ValueError('Semitransvectant index {} outside [0, {}] for orders {} and {}.'.format(
            r, min(m, k), m, k))
    return m, k


def semitransvectant_raw(f, g, r, d, check=True):
    """ The unnormalized sum for the leading coefficient of (F, G)^r.

    Args:
        f, g: Homogeneous semi-invariants over t and z.
        r: Transvectant index, 0 <= r <= min(ord f, ord g).
        d: Degree of the binary form.
        check: Rewrite exactly and require the x1-coefficients to cancel;
            otherwise evaluate with sigma on pruned D-ladders.

    Raises:
        ValueError: r out of range, or inputs without a grading.
        VanishingCheckError: x1 survives in checked mode.
    """
    check_form_degree(d)
    f, g = TFraction.of(f), TFraction.of(g)
    m, k = _orders(f, g, r, d)

    prune_to = None if check else r
    lf = d_ladder(f, r, d, prune_to)
    lg = lf if g == f else d_ladder(g, r, d, prune_to)
    rewrite = x1_rewrite if check else sigma_evaluate

    acc = TFraction(R.zero)
    for i in range(r + 1):
        a = rewrite(lf[i], d)
        b = rewrite(lg[r - i], d)
        if not a or not b:
            continue
        scale = QQ((-1) ** i * int(binomial(r, i)), falling(m, i) * falling(k, r - i))
        acc = acc + a * b * scale

    if check and not is_free_of(acc.num, ['x1']):
        raise VanishingCheckError(
            'x1-coefficients do not cancel in [{}, {}]^{}.'.format(f, g, r))
    return acc


def semitransvectant(f, g, r, d, check=True):
    """ [f, g]^r with a primitive integer numerator.

    Returns:
        TFraction whose numerator has coprime integer coefficients and a
        positive leading coefficient, or the zero fraction.
    """
    raw = semitransvectant_raw(f, g, r, d, check)
    if not raw:
        return raw
    prim, _ = primitive_normalize(raw.num)
    return TFraction(prim, raw.s)


def normalizing_factor(f, g, r, d, check=True):
    """ q_r(f, g), the scalar taking the raw sum to [f, g]^r.

    Raises:
        ValueError: The raw sum vanishes.
    """
    raw = semitransvectant_raw(f, g, r, d, check)
    if not raw:
        raise ValueError('[{}, {}]^{} vanishes; q_r is undefined.'.format(f, g, r))
    _, content = primitive_normalize(raw.num)
    return QQ.one / content
