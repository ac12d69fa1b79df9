""" Linear relations among products of invariants.

Product values are screened by evaluation at random points modulo a large
prime with t = 1; the products at one degree are homogeneous, so nothing
is lost by dehomogenizing. Relations found by the screen can then be
certified by exact elimination and symbolic recombination.
"""

import random
import re
from collections import namedtuple

from sympy import QQ
from tqdm import tqdm

from septimic.linalg import (
    evaluate_mod, modular_matrix, random_prime, row_reduce, vectorize)
from septimic.TFraction import TFraction


class SyzygyRecord:
    """ The syzygy space S_n among the degree-n products.

    Attributes:
        degree: n.
        labels: Product monomials, each a tuple of generator names.
        relations: Basis of relation vectors over labels.
        status: 'screened' or 'certified'.
    """
    def __init__(self, degree, labels, relations, status):
        self.degree = degree
        self.labels = labels
        self.relations = relations
        self.status = status

    @property
    def dim(self):
        return len(self.relations)

    def relation_text(self, k):
        """ One relation as "c1*a*b + c2*c*d ... = 0".
        """
        parts = []
        for c, label in zip(self.relations[k], self.labels):
            if not c:
                continue
            sign = '-' if c < 0 else '+'
            body = '*'.join(label)
            mag = abs(c)
            term = body if mag == 1 else '{}*{}'.format(mag, body)
            parts.append(term if not parts and sign == '+' else
                         ('-' + term if not parts else '{} {}'.format(sign, term)))
        return '{} = 0'.format(' '.join(parts) or '0')

    def to_dict(self):
        return {
            'degree': self.degree,
            'products': len(self.labels),
            'dim': self.dim,
            'status': self.status,
            'relations': ([self.relation_text(k) for k in range(self.dim)]
                          if self.status == 'certified' else []),
        }


def product_monomials(generators, n):
    """ Multisets of generators with degree sum n, at least two factors.

    Args:
        generators: Sequence of (name, degree) in a fixed order.
        n: Target degree.

    Returns:
        List of name tuples, in lexicographic order of generator index.
    """
    gens = list(generators)
    out = []

    def _walk(start, remaining, acc):
        for idx in range(start, len(gens)):
            name, deg = gens[idx]
            if deg > remaining:
                continue
            acc.append(name)
            if deg == remaining:
                if len(acc) > 1:
                    out.append(tuple(acc))
            else:
                _walk(idx, remaining - deg, acc)
            acc.pop()

    _walk(0, n, [])
    return out


class EvaluationScreen:
    """ Values of named fractions at a fixed list of random points mod p.

    Points set t = 1 and draw every z-variable uniformly modulo the
    prime. The list grows on demand and values are memoized per name.
    """
    def __init__(self, values, d, seed=7, prime=None):
        self.values = values
        self.d = d
        self.rng = random.Random(seed)
        self.prime = prime or random_prime(self.rng)
        self.points = []
        self.memo = {}

    def ensure(self, count):
        while len(self.points) < count:
            pt = {'t': 1}
            for i in range(2, self.d + 1):
                pt['z{}'.format(i)] = self.rng.randrange(1, self.prime)
            self.points.append(pt)

    def row(self, name, count):
        """ Values of one fraction at the first count points.
        """
        self.ensure(count)
        cached = self.memo.get(name, [])
        if len(cached) < count:
            f = self.values[name]
            cached = cached + [evaluate_mod(f, pt, self.prime)
                               for pt in self.points[len(cached):count]]
            self.memo[name] = cached
        return cached[:count]

    def product_row(self, names, count):
        p = self.prime
        row = [1] * count
        for name in names:
            for j, v in enumerate(self.row(name, count)):
                row[j] = row[j] * v % p
        return row

    def fraction_row(self, f, count):
        """ Values of an unnamed fraction.
        """
        self.ensure(count)
        return [evaluate_mod(f, pt, self.prime) for pt in self.points[:count]]


def product_value(values, names):
    acc = TFraction.of(1)
    for name in names:
        acc = acc * values[name]
    return acc


def certify(labels, values, d):
    """ Exact relation basis among the products, recombined to zero.

    Raises:
        ArithmeticError: A relation does not recombine to zero.
    """
    products = [product_value(values, names) for names in labels]
    M, _ = vectorize(products, d)
    _, _, relations = row_reduce(M.transpose())

    for rel in relations:
        total = TFraction.of(0)
        for c, f in zip(rel, products):
            if c:
                total = total + f * c
        if total:
            raise ArithmeticError('Relation does not recombine to zero.')
    return relations


def syzygy_space(generators, values, n, d, screen=None, extra_points=32,
                 certify_relations=False, progress=False):
    """ The syzygy space S_n among degree-n products of invariants.

    Args:
        generators: Sequence of (name, degree) of the invariants below n.
        values: Map of name to TFraction.
        n: Degree.
        d: Degree of the binary form.
        screen: Shared EvaluationScreen; a fresh one is made if omitted.
        extra_points: Points beyond the number of products.
        certify_relations: Recompute the relations exactly and check that
            each recombines to the zero polynomial.
        progress: Show a progress bar.

    Returns:
        SyzygyRecord.
    """
    labels = product_monomials([(g, deg) for g, deg in generators if deg < n], n)
    if not labels:
        return SyzygyRecord(n, [], [], 'certified')

    screen = screen or EvaluationScreen(values, d)
    count = len(labels) + extra_points
    rows = [screen.product_row(names, count)
            for names in tqdm(labels, disable=not progress, desc='S_{}'.format(n), unit='product')]

    M = modular_matrix(rows, screen.prime)
    _, _, relations = row_reduce(M.transpose())

    if not relations:
        return SyzygyRecord(n, labels, [], 'certified')
    if not certify_relations:
        return SyzygyRecord(n, labels, relations, 'screened')

    exact = certify(labels, values, d)
    return SyzygyRecord(n, labels, exact, 'certified')


PrintedTerm = namedtuple('PrintedTerm', 'coeff names')

_term_re = re.compile(r'\s*([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?([A-Za-z][A-Za-z0-9_]*(?:\s*[*^]\s*[A-Za-z0-9_]+)*)')


def parse_relation(text):
    """ Parse "c1*a*b - c2*c^2 + ... = 0" into PrintedTerms.

    Raises:
        ValueError: Malformed relation.
    """
    text = text.split('=')[0].strip()
    terms = []
    pos = 0
    while pos < len(text):
        m = _term_re.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError('Cannot parse relation near "{}".'.format(text[pos:pos + 20]))
        sign, coeff, body = m.groups()
        c = QQ.convert(1) if coeff is None else QQ(*map(int, coeff.split('/')))
        if sign == '-':
            c = -c
        names = []
        for factor in re.split(r'\s*\*\s*', body.strip()):
            base, _, e = factor.partition('^')
            names.extend([base.strip()] * (int(e) if e else 1))
        terms.append(PrintedTerm(c, tuple(sorted(names))))
        pos = m.end()
    if not terms:
        raise ValueError('Empty relation.')
    return terms


def compare_printed(terms, values, d, seed=7, points=40):
    """ Evaluate a printed relation against computed invariants.

    Returns:
        Dict with 'vanishes' (the relation holds as printed), 'support'
        (its product monomials), and 'factors': when some relation among
        exactly those monomials exists, the ratio of each of its
        coefficients to the printed one, else None.
    """
    missing = sorted({n for term in terms for n in term.names if n not in values})
    if missing:
        raise KeyError('Unknown invariant(s) {}.'.format(', '.join(missing)))

    screen = EvaluationScreen(values, d, seed)
    count = max(points, len(terms) + 8)
    p = screen.prime

    residual = [0] * count
    for term in terms:
        row = screen.product_row(term.names, count)
        c = int(QQ.numer(term.coeff)) * pow(int(QQ.denom(term.coeff)), -1, p)
        residual = [(a + c * v) % p for a, v in zip(residual, row)]

    result = {
        'vanishes': not any(residual),
        'support': ['*'.join(term.names) for term in terms],
        'factors': None,
    }

    # A relation with the printed support gives the rescaling per monomial.
    products = [product_value(values, term.names) for term in terms]
    M, _ = vectorize(products, d)
    _, _, relations = row_reduce(M.transpose())
    if len(relations) == 1 and all(relations[0]):
        ours = relations[0]
        ratios = [QQ(int(c)) / term.coeff for c, term in zip(ours, terms)]
        base = ratios[0]
        result['factors'] = [str(r / base) for r in ratios]
    return result
