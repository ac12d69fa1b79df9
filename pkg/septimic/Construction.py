""" Construction expressions: how every generator was built.

An expression is one of

    T                 the form's leading coefficient t
    Gen(name)         a named generator of a GeneratorTable
    Product(factors)  a product of (expression, power) pairs
    ST(lhs, rhs, r)   the semitransvectant [lhs, rhs]^r

and renders to the recipe syntax, e.g. "[t,dv_1*tr_1]^7".
"""

import hashlib
import json
import multiprocessing

from septimic.forms import grading_of
from septimic.semitransvectant import semitransvectant
from septimic.TFraction import TFraction
from septimic.poly import gen


class Expr:
    """ Base of all construction expressions.
    """
    def text(self):
        raise NotImplementedError

    def size(self):
        raise NotImplementedError

    def names(self):
        """ Generator names referenced by the expression.
        """
        return set()

    def __eq__(self, other):
        return isinstance(other, Expr) and self.text() == other.text()

    def __hash__(self):
        return hash(self.text())

    def __str__(self):
        return self.text()

    def __repr__(self):
        return '{}({!r})'.format(type(self).__name__, self.text())


class _T(Expr):
    def text(self):
        return 't'

    def size(self):
        return 1


T = _T()


class Gen(Expr):
    def __init__(self, name):
        if name == 't':
            raise ValueError('"t" is not a generator name.')
        self.name = name

    def text(self):
        return self.name

    def size(self):
        return 1

    def names(self):
        return {self.name}


class Product(Expr):
    """ A product of powers. Factors are merged and sorted by their text.
    """
    def __init__(self, factors):
        merged = {}
        for expr, e in factors:
            if e < 0:
                raise ValueError('Negative power {} of {}.'.format(e, expr))
            if isinstance(expr, Product):
                for inner, k in expr.factors:
                    merged[inner] = merged.get(inner, 0) + k * e
            elif e:
                merged[expr] = merged.get(expr, 0) + e
        self.factors = tuple(sorted(merged.items(), key=lambda f: f[0].text()))

    def text(self):
        if not self.factors:
            return '1'
        return '*'.join(
            expr.text() if e == 1 else '{}^{}'.format(expr.text(), e)
            for expr, e in self.factors)

    def size(self):
        return sum(expr.size() * e for expr, e in self.factors)

    def names(self):
        return set().union(*(expr.names() for expr, _ in self.factors))

    def degree_factors(self):
        """ The factors with repetition, e.g. dv_1^2 -> [dv_1, dv_1].
        """
        return [expr for expr, e in self.factors for _ in range(e)]


def product(*exprs):
    """ Product of expressions, collapsing single factors.
    """
    p = Product([(expr, 1) for expr in exprs])
    if len(p.factors) == 1 and p.factors[0][1] == 1:
        return p.factors[0][0]
    return p


class ST(Expr):
    """ Semitransvectant [lhs, rhs]^r. r may be None until solved.
    """
    def __init__(self, lhs, rhs, r):
        self.lhs = lhs
        self.rhs = rhs
        self.r = r

    def text(self):
        if self.r is None:
            return '[{},{}]'.format(self.lhs.text(), self.rhs.text())
        return '[{},{}]^{}'.format(self.lhs.text(), self.rhs.text(), self.r)

    def size(self):
        return 1 + self.lhs.size() + self.rhs.size()

    def names(self):
        return self.lhs.names() | self.rhs.names()


def expanded_text(expr, table):
    """ Text with every generator replaced by its own construction.

    Two expressions with equal expanded text have equal values whatever
    names their generators carry.
    """
    if isinstance(expr, Gen):
        return '({})'.format(expanded_text(table.construction(expr.name), table))
    if isinstance(expr, Product):
        return '*'.join(
            '{}^{}'.format(expanded_text(e, table), k) for e, k in expr.factors)
    if isinstance(expr, ST):
        return '[{},{}]^{}'.format(
            expanded_text(expr.lhs, table), expanded_text(expr.rhs, table), expr.r)
    return expr.text()


def cache_key(expr, table):
    """ sha256 of the canonical serialization of an expression for a table.
    """
    blob = json.dumps({'d': table.d, 'expr': expanded_text(expr, table)},
                      sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(blob.encode()).hexdigest()


class Evaluator:
    """ Evaluate expressions against a GeneratorTable.

    Values are memoized by expression text for the evaluator's lifetime
    and, when a cache is given, persisted under the expression's cache key.
    """
    def __init__(self, table, check=True, cache=None):
        self.table = table
        self.d = table.d
        self.check = check
        self.cache = cache
        self.memo = {}
        self._workers = None

    def order(self, expr):
        return grading_of(self.evaluate(expr), self.d).order

    def solve_r(self, expr, order):
        """ The r for which [lhs, rhs]^r has the given order.

        Raises:
            ValueError: No integer r in range gives that order.
        """
        total = self.order(expr.lhs) + self.order(expr.rhs) - order
        r = total // 2
        if total % 2 or not 0 <= r:
            raise ValueError('No index r gives {} order {}.'.format(expr, order))
        return r

    def evaluate(self, expr):
        """ Value of an expression as a TFraction.

        Raises:
            KeyError: Unknown generator name.
            ValueError: An ST node without an index, or out of range.
        """
        key = expr.text()
        if key in self.memo:
            return self.memo[key]

        if expr is T:
            value = TFraction(gen('t'))
        elif isinstance(expr, Gen):
            value = self.table.get(expr.name)
        elif isinstance(expr, Product):
            value = TFraction.of(1)
            for factor, e in expr.factors:
                value = value * self.evaluate(factor) ** e
        elif isinstance(expr, ST):
            value = self._evaluate_st(expr)
        else:
            raise ValueError('Cannot evaluate {!r}.'.format(expr))

        self.memo[key] = value
        return value

    def _evaluate_st(self, expr):
        if expr.r is None:
            raise ValueError('Semitransvectant {} has no index.'.format(expr))

        ckey = None
        if self.cache is not None:
            ckey = cache_key(expr, self.table)
            hit = self.cache.read(ckey)
            if hit is not None:
                return TFraction.from_str(hit['value'])

        value = semitransvectant(
            self.evaluate(expr.lhs), self.evaluate(expr.rhs), expr.r, self.d, self.check)

        if ckey is not None:
            self.cache.write(ckey, {'expr': expr.text(), 'value': str(value)})
        return value

    def evaluate_many(self, exprs, jobs=1):
        """ Values of several expressions, computing their outermost
        semitransvectants in a process pool when jobs > 1.

        Operands are evaluated here first; workers receive only text.
        """
        exprs = list(exprs)
        if jobs > 1:
            todo = {}
            for expr in exprs:
                if not isinstance(expr, ST) or expr.text() in self.memo:
                    continue
                if self.cache is not None and self.cache.read(cache_key(expr, self.table)) is not None:
                    continue
                todo[expr.text()] = expr

            if len(todo) > 1:
                payloads = [(str(self.evaluate(e.lhs)), str(self.evaluate(e.rhs)), e.r, self.d, self.check)
                            for e in todo.values()]
                for expr, text in zip(todo.values(), self._pool(jobs).map(_st_worker, payloads)):
                    value = TFraction.from_str(text)
                    self.memo[expr.text()] = value
                    if self.cache is not None:
                        self.cache.write(cache_key(expr, self.table), {'expr': expr.text(), 'value': text})

        return [self.evaluate(expr) for expr in exprs]

    def _pool(self, jobs):
        if self._workers is None:
            self._workers = multiprocessing.Pool(jobs)
        return self._workers

    def close(self):
        """ Shut down the worker pool, if one was started.
        """
        if self._workers is not None:
            self._workers.close()
            self._workers.join()
            self._workers = None


def _st_worker(payload):
    lhs, rhs, r, d, check = payload
    value = semitransvectant(TFraction.from_str(lhs), TFraction.from_str(rhs), r, d, check)
    return str(value)
