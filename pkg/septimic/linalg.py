""" Exact and modular linear algebra over polynomial coefficient vectors.
"""

from sympy import QQ, gcd_list, lcm_list, nextprime
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from septimic.forms import grading_of
from septimic.poly import R, SLOT
from septimic.TFraction import TFraction


class MonomialBasisIndex:
    """ Column index of every monomial of one grading.

    Monomials are sorted in decreasing ring order.
    """
    def __init__(self, monomials):
        self.monomials = sorted(set(monomials), key=R.order, reverse=True)
        self.index = {m: j for j, m in enumerate(self.monomials)}

    def __len__(self):
        return len(self.monomials)

    def __getitem__(self, monomial):
        return self.index[monomial]


def vectorize(fs, d):
    """ Coefficient rows of fractions sharing one grading.

    The fractions are first written over the largest denominator among
    them.

    Args:
        fs: Sequence of TFractions (zero allowed).
        d: Degree of the binary form.

    Returns:
        (DomainMatrix over QQ in sparse format, MonomialBasisIndex).

    Raises:
        ValueError: The nonzero inputs have different (degree, weight).
    """
    rows, basis = coefficient_rows(fs, d)
    data = {r: row for r, row in enumerate(rows) if row}
    return DomainMatrix(data, (len(rows), len(basis)), QQ), basis


def coefficient_rows(fs, d):
    """ Sparse coefficient rows {column: value} in one monomial basis.

    Raises:
        ValueError: The nonzero inputs have different (degree, weight).
    """
    fs = [TFraction.of(f) for f in fs]
    gradings = {grading_of(f, d)[:2] for f in fs if f}
    if len(gradings) > 1:
        raise ValueError('Cannot vectorize mixed gradings {}.'.format(sorted(gradings)))

    s = max((f.s for f in fs), default=0)
    nums = [f.at(s) for f in fs]

    basis = MonomialBasisIndex(m for n in nums for m in n.itermonoms())
    return [{basis[m]: c for m, c in n.items()} if n else {} for n in nums], basis


def canonical_vector(values, domain=QQ):
    """ Scale a nonzero vector to a canonical representative.

    Over QQ the result is a primitive integer vector whose first nonzero
    entry is positive. Over GF(p) the first nonzero entry becomes 1.
    """
    values = list(values)
    lead = next((v for v in values if v), None)
    if lead is None:
        return values

    if domain == QQ:
        dens = int(lcm_list([int(QQ.denom(v)) for v in values]))
        ints = [int(QQ.numer(v)) * (dens // int(QQ.denom(v))) for v in values]
        g = int(gcd_list(ints))
        sign = 1 if ints[values.index(lead)] > 0 else -1
        return [sign * v // g for v in ints]

    inv = domain.one / lead
    return [int(domain.to_int(v * inv)) % domain.mod for v in values]


def row_reduce(M):
    """ Rank, reduced row echelon form and nullspace of a matrix.

    Returns:
        (rank, rref, nullspace) where nullspace lists canonical vectors x
        with M x = 0.
    """
    rref, pivots = M.rref()
    nullspace = []
    if M.shape[1] and len(pivots) < M.shape[1]:
        nullspace = [canonical_vector(row, M.domain) for row in M.nullspace().to_list()]
    return len(pivots), rref, nullspace


def _as_dict(row):
    if isinstance(row, dict):
        return {j: v for j, v in row.items() if v}
    return {j: v for j, v in enumerate(row) if v}


def greedy_independent(candidates, base=(), domain=QQ):
    """ Keep each candidate that raises the rank of base plus kept rows.

    Args:
        candidates: Sequence of (label, row) scanned in the given order.
        base: Sequence of (label, row) already in the span.
        domain: Field of the row entries.

    Returns:
        The labels of the kept candidates, in scan order.
    """
    if not candidates:
        return []

    rows = [_as_dict(row) for _, row in base] + [_as_dict(row) for _, row in candidates]
    ncols = 1 + max((j for row in rows for j in row), default=-1)
    if not ncols:
        return []

    # Vectors become columns; pivot columns are the greedy choice.
    columns = {}
    for c, row in enumerate(rows):
        for j, v in row.items():
            columns.setdefault(j, {})[c] = domain.convert(v)
    _, pivots = DomainMatrix(columns, (ncols, len(rows)), domain).rref()

    offset = len(base)
    return [candidates[c - offset][0] for c in pivots if c >= offset]


def random_prime(rng, bits=62):
    """ A prime drawn just above a random integer of the given bit size.
    """
    return int(nextprime(rng.randrange(2 ** (bits - 1), 2 ** bits - 2 ** 20)))


def evaluate_mod(f, values, prime):
    """ Evaluate a fraction at an integer point modulo a prime.

    Args:
        f: TFraction or polynomial.
        values: Map of variable name to integer; absent variables are 0.
        prime: Modulus; t must not vanish modulo it when f.s > 0.
    """
    f = TFraction.of(f)
    point = [0] * R.ngens
    for name, v in values.items():
        point[SLOT[name]] = v % prime

    acc = 0
    for expv, c in f.num.items():
        term = int(QQ.numer(c)) * pow(int(QQ.denom(c)), -1, prime)
        for slot, e in enumerate(expv):
            if e:
                term = term * pow(point[slot], e, prime) % prime
        acc = (acc + term) % prime

    if f.s:
        acc = acc * pow(pow(point[SLOT['t']], f.s, prime), -1, prime) % prime
    return acc


def modular_matrix(rows, prime):
    """ DomainMatrix over GF(prime) from rows of integers.
    """
    K = GF(prime)
    data = [[K(v) for v in row] for row in rows]
    ncols = len(rows[0]) if rows else 0
    return DomainMatrix(data, (len(rows), ncols), K)


def modular_rank(fs, points, prime):
    """ Rank of the evaluation matrix of fractions at points modulo prime.

    This is a lower bound on the exact rank and equal to it with high
    probability when there are enough random points.
    """
    if not fs:
        return 0
    rows = [[evaluate_mod(f, pt, prime) for pt in points] for f in fs]
    return modular_matrix(rows, prime).rank()
