""" Exact sparse polynomials over the fixed variable set.

Every polynomial in septimic is an element of one sympy ``PolyRing`` over
``QQ`` whose generators are t, x1..x7, z2..z7, Y1 and Y2. The ring is
ordered graded lexicographically with t < x1 < ... < x7 < z2 < ... < z7 <
Y1 < Y2, so sympy receives the generators most-significant first.
"""

import re

from sympy import QQ
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import ring


VARS = (('t',)
        + tuple('x{}'.format(i) for i in range(1, 8))
        + tuple('z{}'.format(i) for i in range(2, 8))
        + ('Y1', 'Y2'))

R = ring(list(reversed(VARS)), QQ, grlex)[0]

# Exponent-tuple slot of every variable name.
SLOT = {name: R.ngens - 1 - k for k, name in enumerate(VARS)}

X_VARS = tuple(v for v in VARS if v.startswith('x'))
Z_VARS = tuple(v for v in VARS if v.startswith('z'))
Y_VARS = ('Y1', 'Y2')


class PolynomialSyntaxError(ValueError):
    """ Raised for text that does not follow the polynomial grammar.
    """
    def __init__(self, message, position):
        super().__init__('{} at position {}.'.format(message, position))
        self.position = position


class NotDivisibleError(ValueError):
    """ Raised when an exact division leaves a remainder.
    """


def gen(name):
    """ Return the ring generator for a variable name.

    Raises:
        ValueError: Unknown variable.
    """
    try:
        return R.gens[SLOT[name]]
    except KeyError:
        raise ValueError('Unknown variable "{}".'.format(name))


def const(value):
    """ Embed an integer or rational into the ring.
    """
    return R.ground_new(QQ.convert(value))


def monomial(exponents):
    """ Build a monic monomial from a {name: exponent} map.
    """
    expv = [0] * R.ngens
    for name, e in exponents.items():
        expv[SLOT[name]] = e
    return R.from_dict({tuple(expv): QQ.one})


def exponent(expv, name):
    """ Exponent of a named variable inside a raw exponent tuple.
    """
    return expv[SLOT[name]]


def variables(p):
    """ Names of the variables that occur in p, in VarId order.
    """
    seen = [0] * R.ngens
    for expv in p.itermonoms():
        seen = [a or b for a, b in zip(seen, expv)]
    return [name for name in VARS if seen[SLOT[name]]]


def is_free_of(p, names):
    """ True when none of the given variables occur in p.
    """
    slots = [SLOT[name] for name in names]
    return all(not expv[i] for expv in p.itermonoms() for i in slots)


def power(p, n):
    """ Integer power of a polynomial.

    Raises:
        ValueError: Negative exponent.
    """
    if n < 0:
        raise ValueError('Negative exponent {} is not allowed.'.format(n))
    if n == 0:
        return R.one
    return p ** n


def derivative(p, name):
    """ Formal partial derivative with respect to a named variable.
    """
    return p.diff(gen(name))


def substitute(p, bindings):
    """ Simultaneously substitute polynomials for variables.

    Terms are grouped by the exponents of the bound variables so that
    each product of powers is formed once, and powers are memoized.

    Args:
        p: Polynomial to substitute into.
        bindings: Map of variable name to replacement polynomial.

    Returns:
        The substituted polynomial.
    """
    if not bindings or not p:
        return p

    slots = [(SLOT[name], value) for name, value in sorted(bindings.items())]
    bound = {i for i, _ in slots}

    powers = {}

    def _pow(k, value, e):
        key = (k, e)
        if key not in powers:
            powers[key] = value if e == 1 else _pow(k, value, e - 1) * value
        return powers[key]

    groups = {}
    for expv, coeff in p.items():
        key = tuple(expv[i] for i, _ in slots)
        rest = tuple(0 if i in bound else e for i, e in enumerate(expv))
        groups.setdefault(key, {})[rest] = coeff

    acc = {}
    for key, rest in groups.items():
        factor = R.one
        for k, ((_, value), e) in enumerate(zip(slots, key)):
            if e:
                factor = factor * _pow(k, value, e)
        if not factor:
            continue
        for expv, coeff in (factor * R.from_dict(rest)).items():
            acc[expv] = acc.get(expv, QQ.zero) + coeff

    return R.from_dict(acc)


def divide_exact(p, q):
    """ Exact polynomial division.

    Raises:
        ValueError: Division by the zero polynomial.
        NotDivisibleError: q does not divide p.
    """
    if not q:
        raise ValueError('Division by the zero polynomial.')

    if len(q) == 1:
        (qexpv, qcoeff), = q.items()
        terms = {}
        for expv, coeff in p.items():
            e = tuple(a - b for a, b in zip(expv, qexpv))
            if min(e) < 0:
                raise NotDivisibleError('{} does not divide {}.'.format(
                    render(q), render(p)))
            terms[e] = coeff / qcoeff
        return R.from_dict(terms)

    try:
        return p.exquo(q)
    except ExactQuotientFailed:
        raise NotDivisibleError('{} does not divide {}.'.format(
            render(q), render(p)))


def primitive_normalize(p):
    """ Split p into a primitive integer polynomial and its content.

    Returns:
        (primitive, content) with p == content * primitive, coprime
        integer coefficients in primitive and a positive leading
        coefficient under the ring order.

    Raises:
        ValueError: p is zero.
    """
    if not p:
        raise ValueError('Cannot normalize the zero polynomial.')

    content, prim = p.primitive()
    if prim.LC < 0:
        content, prim = -content, -prim

    return prim, content


def _render_coeff(c):
    num, den = int(QQ.numer(c)), int(QQ.denom(c))
    return str(num) if den == 1 else '{}/{}'.format(num, den)


def _render_monomial(expv):
    factors = []
    for name in VARS:
        e = expv[SLOT[name]]
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append('{}^{}'.format(name, e))
    return '*'.join(factors)


def render(p):
    """ Canonical text of a polynomial, terms in decreasing order.
    """
    if not p:
        return '0'

    parts = []
    for expv, coeff in p.terms():
        sign = '-' if coeff < 0 else '+'
        mag = -coeff if coeff < 0 else coeff
        mono = _render_monomial(expv)

        if not mono:
            body = _render_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = '{}*{}'.format(_render_coeff(mag), mono)

        if not parts:
            parts.append(body if sign == '+' else '-' + body)
        else:
            parts.append('{} {}'.format(sign, body))

    return ' '.join(parts)


_token_re = re.compile(r'\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(\S))')


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _token_re.match(text, pos)
        if not match or match.end() == pos:
            break
        number, name, op = match.groups()
        if number is not None:
            tokens.append(('int', number, match.start(1)))
        elif name is not None:
            tokens.append(('var', name, match.start(2)))
        elif op is not None:
            tokens.append(('op', op, match.start(3)))
        pos = match.end()
    tokens.append(('end', '', len(text)))
    return tokens


class _Parser:
    """ Recursive descent over the polynomial grammar.

    expr    := term (('+'|'-') term)*
    term    := unary ('*' unary)*
    unary   := ('-'|'+') unary | power
    power   := primary ('^' uint)?
    primary := int ('/' uint)? | var | '(' expr ')'
    """
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text):
        kind, value, pos = self.take()
        if value != text:
            raise PolynomialSyntaxError(
                'Expected "{}" but found "{}"'.format(text, value or 'end of input'), pos)

    def parse(self):
        p = self.expr()
        kind, value, pos = self.peek()
        if kind != 'end':
            raise PolynomialSyntaxError('Unexpected "{}"'.format(value), pos)
        return p

    def expr(self):
        acc = {}
        sign = 1
        while True:
            term = self.term()
            for expv, coeff in term.items():
                acc[expv] = acc.get(expv, QQ.zero) + sign * coeff
            kind, value, pos = self.peek()
            if kind == 'op' and value in '+-':
                self.take()
                sign = 1 if value == '+' else -1
            else:
                return R.from_dict(acc)

    def term(self):
        p = self.unary()
        while self.peek()[1] == '*' and self.peek()[0] == 'op':
            self.take()
            p = p * self.unary()
        return p

    def unary(self):
        kind, value, pos = self.peek()
        if kind == 'op' and value in '+-':
            self.take()
            p = self.unary()
            return -p if value == '-' else p
        return self.power()

    def power(self):
        p = self.primary()
        kind, value, pos = self.peek()
        if kind == 'op' and value == '^':
            self.take()
            kind, value, pos = self.take()
            if kind != 'int':
                raise PolynomialSyntaxError('Expected an exponent', pos)
            p = power(p, int(value))
        return p

    def primary(self):
        kind, value, pos = self.take()
        if kind == 'int':
            num = int(value)
            kind2, value2, pos2 = self.peek()
            if kind2 == 'op' and value2 == '/':
                self.take()
                kind3, value3, pos3 = self.take()
                if kind3 != 'int' or int(value3) == 0:
                    raise PolynomialSyntaxError('Expected a nonzero denominator', pos3)
                return const(QQ(num, int(value3)))
            return const(num)
        if kind == 'var':
            if value not in SLOT:
                raise PolynomialSyntaxError('Unknown variable "{}"'.format(value), pos)
            return gen(value)
        if kind == 'op' and value == '(':
            p = self.expr()
            self.expect(')')
            return p
        raise PolynomialSyntaxError(
            'Unexpected "{}"'.format(value or 'end of input'), pos)


def parse(text):
    """ Parse polynomial text in the canonical grammar.

    Newlines are whitespace, so stored files may hold one term per line.

    Raises:
        PolynomialSyntaxError: Malformed input, with its character position.
    """
    return _Parser(text).parse()
