""" TFraction class
"""

from sympy import QQ

from septimic.poly import R, SLOT, const, divide_exact, gen, monomial, parse, render


_T = SLOT['t']


def t_power(s):
    """ The monomial t^s.
    """
    return monomial({'t': s})


class TFraction:
    """ A polynomial over a nonnegative power of t.

    Instances are normalized on construction: common factors of t are
    cancelled so that either s == 0 or t does not divide num. The zero
    fraction always has s == 0.
    """
    __slots__ = ('num', 's')

    def __init__(self, num, s=0):
        if s < 0:
            raise ValueError('Denominator exponent must be nonnegative, got {}.'.format(s))

        if not num:
            num, s = R.zero, 0
        elif s:
            low = min(expv[_T] for expv in num.itermonoms())
            k = min(low, s)
            if k:
                num = divide_exact(num, t_power(k))
                s -= k

        self.num = num
        self.s = s

    @classmethod
    def of(cls, value):
        """ Coerce a polynomial, integer or TFraction into a TFraction.
        """
        if isinstance(value, TFraction):
            return value
        if isinstance(value, int):
            return cls(const(value))
        return cls(value)

    @classmethod
    def variable(cls, name):
        return cls(gen(name))

    @classmethod
    def from_str(cls, text):
        """ Parse "NUM" or "(NUM)/t^s".
        """
        text = text.strip()
        head, sep, tail = text.rpartition('/t^')
        if sep and head.startswith('(') and head.endswith(')') and tail.strip().isdigit():
            return cls(parse(head[1:-1]), int(tail))
        return cls(parse(text))

    def at(self, s):
        """ Numerator rewritten over t^s.

        Raises:
            ValueError: s is smaller than the current exponent.
        """
        if s < self.s:
            raise ValueError('Cannot lower denominator t^{} to t^{}.'.format(self.s, s))
        return self.num * t_power(s - self.s) if s > self.s else self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = TFraction.of(other)
        return self.s == other.s and self.num == other.num

    def __hash__(self):
        return hash((self.s, render(self.num)))

    def __add__(self, other):
        other = TFraction.of(other)
        s = max(self.s, other.s)
        return TFraction(self.at(s) + other.at(s), s)

    __radd__ = __add__

    def __neg__(self):
        return TFraction(-self.num, self.s)

    def __sub__(self, other):
        return self + (-TFraction.of(other))

    def __rsub__(self, other):
        return TFraction.of(other) - self

    def __mul__(self, other):
        if isinstance(other, TFraction):
            return TFraction(self.num * other.num, self.s + other.s)
        if isinstance(other, int) or QQ.of_type(other):
            return TFraction(self.num * QQ.convert(other), self.s)
        return self * TFraction.of(other)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError('Negative exponent {} is not allowed.'.format(n))
        if n == 0:
            return TFraction(R.one)
        return TFraction(self.num ** n, self.s * n)

    def __str__(self):
        if not self.s:
            return render(self.num)
        return '({})/t^{}'.format(render(self.num), self.s)

    def __repr__(self):
        return 'TFraction({})'.format(self)
