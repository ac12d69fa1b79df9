""" Property checks replayed over stored results.
"""

import random
from collections import namedtuple

from prettytable import PrettyTable
from sympy import igcd
try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

from septimic.derivations import d1, d2, dz, nilpotency_order
from septimic.forms import (
    basic_form, form_coefficients, grading_of, sl2_substitute, x_expand, z_polynomial)
from septimic.linalg import evaluate_mod, random_prime
from septimic.poly import NotDivisibleError, const, gen, substitute
from septimic.TFraction import TFraction


CHECKS = ('d1', 'd2', 'division', 'sl2', 'grading')

# Largest degree each check visits unless told otherwise. The x-expansion
# grows quickly with the degree.
DEFAULT_LIMITS = {'d1': 10, 'd2': 4, 'division': 10, 'sl2': 14, 'grading': None}

# Invariants up to this degree are also substituted symbolically.
EXACT_SL2_DEGREE = 4

SL2_MATRICES = 5

Result = namedtuple('Result', 'check name status detail')


def parse_checks(text):
    """ Split "d1,d2,..." into check names.

    Raises:
        ValueError: Unknown check name.
    """
    names = [c.strip() for c in text.split(',') if c.strip()]
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise ValueError('Unknown check(s) {}; choose from {}.'.format(
            ', '.join(unknown), ', '.join(CHECKS)))
    return names


def random_unimodular(rng, bound=3):
    """ A random integer matrix (a, b, c, e) with a*e - b*c = 1.
    """
    while True:
        a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if a and igcd(a, b) == 1:
            break
    # a*e + (-b)*c = 1, shifted along the solution line by k.
    e, c, _ = igcdex(a, -b)
    k = rng.randint(-bound, bound)
    return a, b, int(c) + k * a, int(e) + k * b


def check_d1(value, d):
    return not d1(x_expand(value, d))


def check_division(value, d):
    try:
        x_expand(value, d)
    except NotDivisibleError:
        return False
    return True


def check_d2(value, d):
    """ x_expand after D agrees with D2 after x_expand.
    """
    return x_expand(dz(value, d), d, mixed=True) == d2(x_expand(value, d), d)


def check_grading(value, record, d):
    grading = grading_of(value, d)
    stored = (record['degree'], record['weight'], record['order'])
    if tuple(grading) != stored:
        return False, 'stored {} but computed {}'.format(stored, tuple(grading))
    if grading.order != d * grading.degree - 2 * grading.weight:
        return False, 'order is not d*degree - 2*weight'
    nil = nilpotency_order(value, d, via='z')
    if nil != grading.order:
        return False, 'nilpotency order {} differs from order {}'.format(nil, grading.order)
    return True, ''


def _moved_coefficients(d, matrix):
    a, b, c, e = matrix
    Y1, Y2 = gen('Y1'), gen('Y2')
    moved = substitute(basic_form(d), {
        'Y1': const(a) * Y1 + const(b) * Y2,
        'Y2': const(c) * Y1 + const(e) * Y2,
    })
    return form_coefficients(moved, d)


def _z_point(d, coeffs, prime):
    point = {'t': coeffs[0]}
    point.update({'x{}'.format(i): coeffs[i] for i in range(1, d + 1)})
    zs = {'t': coeffs[0]}
    for i in range(2, d + 1):
        zs['z{}'.format(i)] = evaluate_mod(z_polynomial(i), point, prime)
    return zs


def check_sl2(value, d, rng):
    """ Invariance under random unimodular matrices.

    Values are compared at random points modulo a prime; small invariants
    are also substituted symbolically.
    """
    degree = grading_of(value, d).degree
    expanded = x_expand(value, d) if degree <= EXACT_SL2_DEGREE else None
    prime = random_prime(rng)

    for _ in range(SL2_MATRICES):
        matrix = random_unimodular(rng)
        if expanded is not None and sl2_substitute(expanded, *matrix, d) != expanded:
            return False, 'not fixed by {}'.format(matrix)

        coeffs = [rng.randrange(1, prime) for _ in range(d + 1)]
        base = dict(zip(['t'] + ['x{}'.format(i) for i in range(1, d + 1)], coeffs))
        moved = [evaluate_mod(c, base, prime) for c in _moved_coefficients(d, matrix)]
        if not moved[0]:
            continue
        before = evaluate_mod(value, _z_point(d, coeffs, prime), prime)
        after = evaluate_mod(value, _z_point(d, moved, prime), prime)
        if before != after:
            return False, 'value changes under {}'.format(matrix)
    return True, ''


def verify_manifest(manifest, checks=CHECKS, max_degree=None, seed=7):
    """ Run property checks over every entry of a loaded manifest.

    Args:
        manifest: Manifest with values loaded.
        checks: Names from CHECKS.
        max_degree: Visit entries up to this degree for every check;
            DEFAULT_LIMITS applies when None.
        seed: Seed for random matrices and points.

    Returns:
        List of Result, status one of 'pass', 'fail', 'skip'.
    """
    d = manifest.d
    rng = random.Random(seed)
    results = []
    for record in manifest:
        name = record['name']
        value = TFraction.of(manifest.load_value(name))
        for check in checks:
            limit = max_degree if max_degree is not None else DEFAULT_LIMITS[check]
            if limit is not None and record['degree'] > limit:
                results.append(Result(check, name, 'skip', 'degree above {}'.format(limit)))
                continue
            if check == 'sl2' and record['order'] != 0:
                continue

            detail = ''
            try:
                if check == 'd1':
                    ok = check_d1(value, d)
                elif check == 'division':
                    ok = check_division(value, d)
                elif check == 'd2':
                    ok = check_d2(value, d)
                elif check == 'grading':
                    ok, detail = check_grading(value, record, d)
                else:
                    ok, detail = check_sl2(value, d, rng)
            except (ValueError, ArithmeticError) as e:
                ok, detail = False, str(e)
            results.append(Result(check, name, 'pass' if ok else 'fail', detail))
    return results


def summary_table(results):
    """ Pass, fail and skip counts per check.
    """
    counts = {}
    for r in results:
        row = counts.setdefault(r.check, {'pass': 0, 'fail': 0, 'skip': 0})
        row[r.status] += 1

    pt = PrettyTable()
    pt.field_names = ['check', 'passed', 'failed', 'skipped']
    pt.align['check'] = 'l'
    for check in CHECKS:
        if check in counts:
            row = counts[check]
            pt.add_row([check, row['pass'], row['fail'], row['skip']])
    return str(pt)


def failures(results):
    return [r for r in results if r.status == 'fail']
