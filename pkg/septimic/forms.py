""" The z-basis, gradings and the basic binary form.
"""

from collections import namedtuple
from functools import lru_cache

from sympy import QQ, binomial

from septimic.poly import (
    R, SLOT, VARS, X_VARS, Y_VARS, NotDivisibleError, const, divide_exact,
    gen, is_free_of, power, substitute)
from septimic.TFraction import TFraction, t_power


Grading = namedtuple('Grading', 'degree weight order')

MIN_DEGREE = 2
MAX_DEGREE = 7


def check_form_degree(d):
    """ Validate the degree of the binary form.

    Raises:
        ValueError: d is not an integer in [2, 7].
    """
    if not isinstance(d, int) or not MIN_DEGREE <= d <= MAX_DEGREE:
        raise ValueError('Form degree must be between {} and {}, got {}.'.format(
            MIN_DEGREE, MAX_DEGREE, d))
    return d


def choose(n, k):
    return int(binomial(n, k))


def x(i):
    """ Generator x_i, with x_0 standing for t.
    """
    return gen('t') if i == 0 else gen('x{}'.format(i))


@lru_cache(maxsize=None)
def z_polynomial(i):
    """ Cayley's semi-invariant z_i written in t and the x-variables.
    """
    x1 = gen('x1')
    t = gen('t')
    z = R.zero
    for k in range(i - 1):
        z += (-1) ** k * choose(i, k) * x(i - k) * power(x1, k) * power(t, i - k - 1)
    z += (i - 1) * (-1) ** (i + 1) * power(x1, i)
    return z


def z_basis(d):
    """ The polynomials z_2 ... z_d.

    Args:
        d: Degree of the binary form.

    Returns:
        List of polynomials in t and x1..xd, z_2 first.
    """
    check_form_degree(d)
    return [z_polynomial(i) for i in range(2, d + 1)]


def z_bindings(d):
    return {'z{}'.format(i): z_polynomial(i) for i in range(2, d + 1)}


def x_expand(f, d, mixed=False):
    """ Rewrite a z-representation in the x-coordinates.

    Args:
        f: TFraction whose numerator uses t and z-variables only.
        d: Degree of the binary form.
        mixed: Also accept x-variables in the numerator, as D produces.

    Returns:
        The polynomial in t, x1..xd equal to f.

    Raises:
        ValueError: f mentions Y variables, x variables without mixed,
            or a z-index above d.
        NotDivisibleError: t^s does not divide the expanded numerator.
    """
    check_form_degree(d)
    f = TFraction.of(f)

    if not is_free_of(f.num, Y_VARS if mixed else X_VARS + Y_VARS):
        raise ValueError('x_expand needs a numerator in t and z only: {}.'.format(f))
    if not is_free_of(f.num, ['z{}'.format(i) for i in range(d + 1, 8)]):
        raise ValueError('{} uses z-variables beyond z{}.'.format(f, d))

    expanded = substitute(f.num, z_bindings(d))
    try:
        return divide_exact(expanded, t_power(f.s))
    except NotDivisibleError:
        raise NotDivisibleError('t^{} does not divide the x-expansion of {}; '
                                'it is not a semi-invariant.'.format(f.s, f))


def clear_x_denominators(f, d, keep_x1):
    """ Multiply through by the t-power that x_j -> (...)/t^(j-1) needs.

    Returns:
        (numerator with shifted t-exponents, extra exponent K).
    """
    slots = [(SLOT['x{}'.format(j)], j - 1) for j in range(2, d + 1)]
    shifts = {}
    for expv in f.num.itermonoms():
        if not keep_x1 and expv[SLOT['x1']]:
            continue
        shifts[expv] = sum(expv[i] * w for i, w in slots)

    K = max(shifts.values(), default=0)
    t = SLOT['t']
    shifted = {}
    for expv, shift in shifts.items():
        e = list(expv)
        e[t] += K - shift
        shifted[tuple(e)] = f.num[expv]
    return R.from_dict(shifted), K


@lru_cache(maxsize=None)
def x_numerator(j):
    """ P_j with x_j = P_j / t^(j-1) in the coordinates t, x1, z2, ..., z7.
    """
    x1 = gen('x1')
    p = gen('z{}'.format(j))
    for k in range(1, j - 1):
        p -= (-1) ** k * choose(j, k) * x_numerator(j - k) * power(x1, k)
    p -= (j - 1) * (-1) ** (j + 1) * power(x1, j)
    return p


def x1_rewrite(f, d):
    """ Rewrite a mixed fraction exactly over t, x1 and the z-variables.
    """
    num, K = clear_x_denominators(TFraction.of(f), d, keep_x1=True)
    bindings = {'x{}'.format(j): x_numerator(j) for j in range(2, d + 1)}
    return TFraction(substitute(num, bindings), f.s + K)


def var_degree(name):
    """ Degree contributed by one power of a variable.
    """
    if name.startswith('z'):
        return int(name[1:])
    if name in Y_VARS:
        return 0
    return 1


def var_weight(name):
    """ Weight contributed by one power of a variable.
    """
    if name == 't' or name in Y_VARS:
        return 0
    return int(name[1:])


_DEGREES = [0] * R.ngens
_WEIGHTS = [0] * R.ngens
for _name in VARS:
    _DEGREES[SLOT[_name]] = var_degree(_name)
    _WEIGHTS[SLOT[_name]] = var_weight(_name)


def term_grading(expv):
    """ (degree, weight) of a single monomial.
    """
    return (sum(a * b for a, b in zip(expv, _DEGREES)),
            sum(a * b for a, b in zip(expv, _WEIGHTS)))


def grading_of(f, d):
    """ Degree, weight and order of a homogeneous fraction.

    Args:
        f: TFraction or polynomial, nonzero.
        d: Degree of the binary form.

    Returns:
        Grading with order = d * degree - 2 * weight.

    Raises:
        ValueError: f is zero, mentions Y1/Y2, or is not bihomogeneous.
    """
    f = TFraction.of(f)
    if not f:
        raise ValueError('The zero fraction has no grading.')
    if not is_free_of(f.num, Y_VARS):
        raise ValueError('Covariant variables are not graded here: {}.'.format(f))

    gradings = {term_grading(expv) for expv in f.num.itermonoms()}
    if len(gradings) != 1:
        raise ValueError('Inhomogeneous input {}: gradings {}.'.format(
            f, sorted(gradings)))

    (degree, weight), = gradings
    degree -= f.s
    return Grading(degree, weight, d * degree - 2 * weight)


def basic_form(d):
    """ The binary form t*Y1^d + sum C(d,i) x_i Y1^(d-i) Y2^i.
    """
    check_form_degree(d)
    Y1, Y2 = gen('Y1'), gen('Y2')
    return sum((choose(d, i) * x(i) * power(Y1, d - i) * power(Y2, i)
                for i in range(d + 1)), R.zero)


def form_coefficients(F, d):
    """ Read (t, x1, ..., xd) back from a form of order d in Y1, Y2.
    """
    coeffs = [dict() for _ in range(d + 1)]
    y1, y2 = SLOT['Y1'], SLOT['Y2']
    for expv, c in F.items():
        i = expv[y2]
        if expv[y1] + i != d:
            raise ValueError('Form is not homogeneous of order {}.'.format(d))
        rest = list(expv)
        rest[y1] = rest[y2] = 0
        coeffs[i][tuple(rest)] = c
    return [R.from_dict(c) * QQ(1, choose(d, i)) for i, c in enumerate(coeffs)]


def sl2_substitute(p, a, b, c, e, d):
    """ Act on a polynomial in the form's coefficients by a unimodular matrix.

    The basic form is transformed by Y1 -> a*Y1 + b*Y2, Y2 -> c*Y1 + e*Y2
    and its new coefficients replace t, x1, ..., xd in p.

    Raises:
        ValueError: a*e - b*c != 1.
    """
    check_form_degree(d)
    a, b, c, e = (QQ.convert(v) for v in (a, b, c, e))
    if a * e - b * c != 1:
        raise ValueError('Matrix [[{}, {}], [{}, {}]] is not unimodular.'.format(a, b, c, e))

    Y1, Y2 = gen('Y1'), gen('Y2')
    moved = substitute(basic_form(d), {
        'Y1': const(a) * Y1 + const(b) * Y2,
        'Y2': const(c) * Y1 + const(e) * Y2,
    })
    coeffs = form_coefficients(moved, d)

    bindings = {'t': coeffs[0]}
    bindings.update({'x{}'.format(i): coeffs[i] for i in range(1, d + 1)})
    return substitute(p, bindings)
