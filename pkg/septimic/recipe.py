""" The recipe language: one named construction per line.

    line    := name "=" expr ("#" comment)? | "#" comment | blank
    expr    := "[" expr "," expr "]" ("^" uint)? | product
    product := atom ("*" atom)*
    atom    := name ("^" uint)? | "t"

A bracket without "^r" is accepted only at the top of a line carrying a
"# ord=K" annotation; r is then solved from ord = ord(lhs) + ord(rhs) - 2r.
When both r and ord=K are given the order is checked.
"""

import re
from collections import namedtuple

from tqdm import tqdm

from septimic.Construction import ST, T, Evaluator, Gen, Product
from septimic.GeneratorTable import GeneratorTable
from septimic.forms import grading_of


RecipeLine = namedtuple('RecipeLine', 'lineno name expr order')

_name_re = r'[A-Za-z][A-Za-z0-9_]*'
_line_re = re.compile(r'^\s*({})\s*=\s*([^#]*?)\s*(?:#(.*))?$'.format(_name_re))
_ord_re = re.compile(r'\bord\s*=\s*(\d+)')
_token_re = re.compile(r'\s*(?:({})|(\d+)|(\S))'.format(_name_re))


class RecipeError(ValueError):
    """ Raised for malformed or inconsistent recipe lines.
    """
    def __init__(self, message, lineno):
        super().__init__('Line {}: {}'.format(lineno, message))
        self.lineno = lineno


class _ExprParser:
    def __init__(self, text, lineno):
        self.lineno = lineno
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            match = _token_re.match(text, pos)
            name, number, op = match.groups()
            if name is not None:
                self.tokens.append(('name', name))
            elif number is not None:
                self.tokens.append(('int', number))
            else:
                self.tokens.append(('op', op))
            pos = match.end()
        self.tokens.append(('end', ''))
        self.i = 0

    def error(self, message):
        raise RecipeError(message, self.lineno)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        kind, value = self.take()
        if (kind, value) != ('op', op):
            self.error('expected "{}" but found "{}"'.format(op, value or 'end of line'))

    def uint(self):
        kind, value = self.take()
        if kind != 'int':
            self.error('expected an exponent but found "{}"'.format(value or 'end of line'))
        return int(value)

    def parse(self):
        expr = self.expr(top=True)
        kind, value = self.peek()
        if kind != 'end':
            self.error('unexpected "{}"'.format(value))
        return expr

    def expr(self, top=False):
        if self.peek() == ('op', '['):
            self.take()
            lhs = self.expr()
            self.expect(',')
            rhs = self.expr()
            self.expect(']')
            r = None
            if self.peek() == ('op', '^'):
                self.take()
                r = self.uint()
            elif not top:
                self.error('nested bracket needs an explicit "^r"')
            return ST(lhs, rhs, r)
        return self.product()

    def product(self):
        factors = [self.atom()]
        while self.peek() == ('op', '*'):
            self.take()
            factors.append(self.atom())
        if len(factors) == 1 and factors[0][1] == 1:
            return factors[0][0]
        return Product(factors)

    def atom(self):
        kind, value = self.take()
        if kind != 'name':
            self.error('expected a name but found "{}"'.format(value or 'end of line'))
        atom = T if value == 't' else Gen(value)
        e = 1
        if self.peek() == ('op', '^'):
            self.take()
            e = self.uint()
        return atom, e


def parse_expr(text, lineno=0):
    """ Parse one recipe expression.

    Raises:
        RecipeError: Malformed expression.
    """
    return _ExprParser(text, lineno).parse()


def parse_recipe(text):
    """ Parse a whole recipe.

    Returns:
        List of RecipeLine in file order.

    Raises:
        RecipeError: Syntax errors, duplicate or undefined names, and
            missing indices without an ord annotation.
    """
    lines = []
    defined = {'t'}
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith('#'):
            continue

        match = _line_re.match(raw)
        if not match:
            raise RecipeError('expected "name = expression"', lineno)
        name, body, comment = match.groups()

        if name in defined:
            raise RecipeError('"{}" is defined twice'.format(name), lineno)
        if not body:
            raise RecipeError('empty expression for "{}"'.format(name), lineno)

        expr = parse_expr(body, lineno)
        order = None
        if comment:
            m = _ord_re.search(comment)
            if m:
                order = int(m.group(1))

        if isinstance(expr, ST) and expr.r is None and order is None:
            raise RecipeError('"{}" has no "^r" and no "# ord=K" to solve it'.format(name), lineno)

        missing = expr.names() - defined
        if missing:
            raise RecipeError('undefined name(s) {}'.format(', '.join(sorted(missing))), lineno)

        defined.add(name)
        lines.append(RecipeLine(lineno, name, expr, order))
    return lines


def closure(lines, target):
    """ The recipe lines that target depends on, in file order.

    Raises:
        KeyError: target is not defined.
    """
    by_name = {line.name: line for line in lines}
    if target not in by_name:
        raise KeyError('Recipe does not define "{}".'.format(target))
    needed = set()
    stack = [target]
    while stack:
        name = stack.pop()
        if name in needed:
            continue
        needed.add(name)
        stack.extend(by_name[name].expr.names())
    return [line for line in lines if line.name in needed]


def evaluate_recipe(script, d=7, target=None, check=True, cache=None, progress=False):
    """ Evaluate a recipe into a GeneratorTable.

    Args:
        script: Recipe text.
        d: Degree of the binary form.
        target: Evaluate only the lines this name depends on.
        check: Enable the x1 vanishing check in semitransvectants.
        cache: Optional SimpleCache shared between runs.
        progress: Show a progress bar.

    Returns:
        The filled GeneratorTable.

    Raises:
        RecipeError: A line evaluates to zero, its index cannot be
            solved, its index is out of range, or its order disagrees
            with the annotation.
    """
    lines = parse_recipe(script)
    if target:
        lines = closure(lines, target)

    table = GeneratorTable(d)
    evaluator = Evaluator(table, check=check, cache=cache)

    for line in tqdm(lines, disable=not progress, desc='recipe', unit='line'):
        expr = line.expr
        try:
            if isinstance(expr, ST) and expr.r is None:
                expr = ST(expr.lhs, expr.rhs, evaluator.solve_r(expr, line.order))
            value = evaluator.evaluate(expr)
        except (KeyError, ValueError) as e:
            raise RecipeError('{}: {}'.format(line.name, e), line.lineno)

        if not value:
            raise RecipeError('{} = {} is zero'.format(line.name, expr), line.lineno)

        order = grading_of(value, d).order
        if line.order is not None and order != line.order:
            raise RecipeError('{} = {} has order {}, annotated {}'.format(
                line.name, expr, order, line.order), line.lineno)

        table.add(line.name, value, expr)

    return table
