""" The derivations D1, D2 and their extension D to the z-representation.
"""

from functools import lru_cache

from septimic.forms import check_form_degree, grading_of, x1_rewrite, x_expand
from septimic.poly import R, Z_VARS, gen, is_free_of
from septimic.TFraction import TFraction


def apply_derivation(p, rules):
    """ Extend a derivation from its values on variables.

    Args:
        p: Polynomial.
        rules: Map of variable name to the image of that variable.

    Returns:
        sum over v of rules[v] * dp/dv.
    """
    acc = R.zero
    for name, image in rules.items():
        if not image:
            continue
        dp = p.diff(gen(name))
        if dp:
            acc += image * dp
    return acc


@lru_cache(maxsize=None)
def d1_rules():
    """ D1(x_i) = i * x_(i-1), with x_0 = t.
    """
    rules = {'x1': gen('t')}
    for i in range(2, 8):
        rules['x{}'.format(i)] = i * gen('x{}'.format(i - 1))
    return rules


@lru_cache(maxsize=None)
def d2_rules(d):
    """ D2(t) = d*x1 and D2(x_j) = (d - j)*x_(j+1).
    """
    check_form_degree(d)
    rules = {'t': d * gen('x1')}
    for j in range(1, d):
        rules['x{}'.format(j)] = (d - j) * gen('x{}'.format(j + 1))
    return rules


def d1(p):
    """ Image of p under D1.
    """
    return apply_derivation(p, d1_rules())


def d2(p, d=7):
    """ Image of p under D2 for the form of degree d.
    """
    return apply_derivation(p, d2_rules(d))


def z_rule(i, d):
    """ t * D(z_i) as a polynomial in x1 and the z-variables.

    D(z_i) = ((d-i) z_(i+1) + i(d-2) x1 z_i - i(d-1) z_2 z_(i-1)) / t,
    reading z_1 and z_(d+1) as zero.
    """
    def z(k):
        return gen('z{}'.format(k)) if 2 <= k <= d else R.zero

    x1 = gen('x1')
    return (d - i) * z(i + 1) + i * (d - 2) * x1 * z(i) - i * (d - 1) * z(2) * z(i - 1)


@lru_cache(maxsize=None)
def scaled_dz_rules(d):
    """ t * D(v) for every variable v of the mixed ring.
    """
    check_form_degree(d)
    t = gen('t')
    rules = {name: t * image for name, image in d2_rules(d).items()}
    for i in range(2, d + 1):
        rules['z{}'.format(i)] = z_rule(i, d)
    return rules


def dz_rules(d):
    """ D on the variables, as TFractions.
    """
    return {name: TFraction(image, 1) for name, image in scaled_dz_rules(d).items()}


def dz(f, d):
    """ Apply the extension D of D2 to a fraction over t, x and z.

    D(N/t^s) = (t*D(N) - s*d*x1*N) / t^(s+1).
    """
    f = TFraction.of(f)
    if not f:
        return f
    top = apply_derivation(f.num, scaled_dz_rules(d))
    if f.s:
        top -= f.s * d * gen('x1') * f.num
    return TFraction(top, f.s + 1)


def nilpotency_order(f, d, via='x'):
    """ Largest s with D2^s(f) != 0.

    Args:
        f: Semi-invariant as a TFraction (t, z numerator) or an
            x-polynomial.
        d: Degree of the binary form.
        via: 'x' applies D2 to the x-expansion, 'z' applies D to the
            z-representation. Each D-step is rewritten over t, x1 and
            the z-variables, which are algebraically independent, so a
            step is zero exactly when its numerator is.

    Raises:
        ValueError: Zero input, or D2 does not vanish within d*degree
            steps, which means the input is not a semi-invariant.
    """
    f = TFraction.of(f)
    if not f:
        raise ValueError('The zero polynomial has no order.')

    bound = d * max(grading_of(f, d).degree, 0)

    if via == 'x':
        cur = f.num if not f.s and is_free_of(f.num, Z_VARS) else x_expand(f, d)
        step = lambda p: d2(p, d)
    elif via == 'z':
        cur = f
        step = lambda p: x1_rewrite(dz(p, d), d)
    else:
        raise ValueError('Unknown route "{}".'.format(via))

    s = 0
    while True:
        nxt = step(cur)
        if not nxt:
            return s
        s += 1
        if s > bound:
            raise ValueError('D2 does not vanish on {} within {} steps.'.format(f, bound))
        cur = nxt
