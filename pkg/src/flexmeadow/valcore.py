"""Exact arithmetic in a non-archimedean ordered field.

Elements are quotients of finite generalized power series in a positive
infinitesimal ``e``::

    sum(c_i * e**q_i) / sum(d_j * e**r_j)

with rational coefficients and rational exponents.  The value group is the
(divisible) group of rationals, and ``e`` is smaller than every positive
rational.  Everything is exact; no floating point is used except the
``INFINITY`` sentinel returned as the valuation of zero.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Tuple, Union

__all__ = [
    "INFINITY", "PSeries", "FieldElem", "DivisionByZero", "LiteralError",
    "ZERO", "ONE", "EPS", "monomial", "const",
    "f_add", "f_sub", "f_mul", "f_neg", "f_inv", "valuation", "f_compare",
    "series_expand", "parse_field", "format_field",
]

INFINITY = math.inf

# A PSeries is a tuple of (exponent, coefficient) pairs, exponents strictly
# increasing, coefficients nonzero.  The empty tuple is 0.
PSeries = Tuple[Tuple[Fraction, Fraction], ...]

Rational = Union[int, Fraction]


class DivisionByZero(ZeroDivisionError):
    pass


class LiteralError(ValueError):
    """Raised for malformed literals; ``pos`` is the offending offset."""

    def __init__(self, msg: str, pos: int = 0):
        super().__init__(f"{msg} (at position {pos})")
        self.msg = msg
        self.pos = pos

    def shifted(self, offset: int) -> "LiteralError":
        return LiteralError(self.msg, self.pos + offset)


# -- power series primitives -------------------------------------------------

def _s_add(a: PSeries, b: PSeries) -> PSeries:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        ea, ca = a[i]
        eb, cb = b[j]
        if ea < eb:
            out.append(a[i])
            i += 1
        elif eb < ea:
            out.append(b[j])
            j += 1
        else:
            c = ca + cb
            if c:
                out.append((ea, c))
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _s_neg(a: PSeries) -> PSeries:
    return tuple((e, -c) for e, c in a)


def _s_mul(a: PSeries, b: PSeries) -> PSeries:
    if not a or not b:
        return ()
    if len(a) == 1:
        e0, c0 = a[0]
        return tuple((e0 + e, c0 * c) for e, c in b)
    if len(b) == 1:
        e0, c0 = b[0]
        return tuple((e + e0, c * c0) for e, c in a)
    acc: dict = {}
    for ea, ca in a:
        for eb, cb in b:
            e = ea + eb
            acc[e] = acc.get(e, 0) + ca * cb
    return tuple((e, c) for e, c in sorted(acc.items()) if c)


_ONE_SERIES: PSeries = ((Fraction(0), Fraction(1)),)


class FieldElem:
    """An element ``num / den`` of the field.

    ``den`` is normalized so that its lowest-exponent term is ``1 * e^0``.
    Two elements are equal iff their cross products agree; there is no
    canonical reduced form, so instances are unhashable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: PSeries = (), den: PSeries = _ONE_SERIES):
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            den = _ONE_SERIES
        elif den is not _ONE_SERIES and den != _ONE_SERIES:
            e0, c0 = den[0]
            if len(den) == 1:
                num = tuple((e - e0, c / c0) for e, c in num)
                den = _ONE_SERIES
            elif e0 != 0 or c0 != 1:
                num = tuple((e - e0, c / c0) for e, c in num)
                den = tuple((e - e0, c / c0) for e, c in den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    # arithmetic dunders delegate to the module functions
    def __add__(self, other):
        return f_add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return f_sub(self, _coerce(other))

    def __rsub__(self, other):
        return f_sub(_coerce(other), self)

    def __mul__(self, other):
        return f_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return f_mul(self, f_inv(_coerce(other)))

    def __rtruediv__(self, other):
        return f_mul(_coerce(other), f_inv(self))

    def __neg__(self):
        return f_neg(self)

    def __pow__(self, n: int):
        if n < 0:
            return f_inv(self) ** -n
        result = ONE
        for _ in range(n):
            result = f_mul(result, self)
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = const(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        return _s_mul(self.num, other.den) == _s_mul(other.num, self.den)

    __hash__ = None

    def __lt__(self, other):
        return f_compare(self, _coerce(other)) < 0

    def __le__(self, other):
        return f_compare(self, _coerce(other)) <= 0

    def __gt__(self, other):
        return f_compare(self, _coerce(other)) > 0

    def __ge__(self, other):
        return f_compare(self, _coerce(other)) >= 0

    def __bool__(self):
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return self.den == _ONE_SERIES

    def __repr__(self):
        return f"FieldElem({format_field(self)!r})"

    def __str__(self):
        return format_field(self)


def _coerce(x) -> FieldElem:
    if isinstance(x, FieldElem):
        return x
    if isinstance(x, (int, Fraction)):
        return const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a field element")


def monomial(coeff: Rational, exp: Rational) -> FieldElem:
    coeff = Fraction(coeff)
    if not coeff:
        return ZERO
    return FieldElem(((Fraction(exp), coeff),))


def const(c: Rational) -> FieldElem:
    return monomial(c, 0)


ZERO = FieldElem()
ONE = const(1)
EPS = monomial(1, 1)


# -- field operations --------------------------------------------------------

def f_add(x: FieldElem, y: FieldElem) -> FieldElem:
    if not x.num:
        return y
    if not y.num:
        return x
    if x.den == y.den:
        return FieldElem(_s_add(x.num, y.num), x.den)
    num = _s_add(_s_mul(x.num, y.den), _s_mul(y.num, x.den))
    return FieldElem(num, _s_mul(x.den, y.den))


def f_neg(x: FieldElem) -> FieldElem:
    return FieldElem(_s_neg(x.num), x.den)


def f_sub(x: FieldElem, y: FieldElem) -> FieldElem:
    return f_add(x, f_neg(y))


def f_mul(x: FieldElem, y: FieldElem) -> FieldElem:
    if not x.num or not y.num:
        return ZERO
    return FieldElem(_s_mul(x.num, y.num), _s_mul(x.den, y.den))


def f_inv(x: FieldElem) -> FieldElem:
    if not x.num:
        raise DivisionByZero("inverse of zero in the carrier field")
    return FieldElem(x.den, x.num)


def valuation(x: FieldElem):
    """Leading exponent of ``x``; ``INFINITY`` for zero."""
    if not x.num:
        return INFINITY
    # den is normalized to leading exponent 0
    return x.num[0][0]


def sign(x: FieldElem) -> int:
    if not x.num:
        return 0
    return 1 if x.num[0][1] > 0 else -1


def f_compare(x: FieldElem, y: FieldElem) -> int:
    """Return -1, 0 or 1 as ``x`` is less than, equal to or greater than ``y``."""
    return sign(f_sub(x, y))


def series_expand(x: FieldElem, upto: Rational) -> PSeries:
    """Expand ``num/den`` by long division, keeping exponents ``<= upto``."""
    upto = Fraction(upto)
    den = x.den
    if den == _ONE_SERIES:
        return tuple(t for t in x.num if t[0] <= upto)
    out = []
    rem = x.num
    while rem and rem[0][0] <= upto:
        term = rem[0]
        out.append(term)
        rem = _s_add(rem, _s_neg(_s_mul((term,), den)))
    return tuple(out)


# -- literals ----------------------------------------------------------------

def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _fmt_exp(q: Fraction) -> str:
    if q.denominator == 1 and q >= 0:
        return str(q.numerator)
    return f"({_fmt_rat(q)})"


def _fmt_series(s: PSeries) -> str:
    if not s:
        return "0"
    parts = []
    for i, (e, c) in enumerate(s):
        neg = c < 0
        mag = -c if neg else c
        if e == 0:
            body = _fmt_rat(mag)
        elif mag == 1:
            body = f"e^{_fmt_exp(e)}"
        else:
            body = f"{_fmt_rat(mag)}*e^{_fmt_exp(e)}"
        if i == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def format_field(x: FieldElem) -> str:
    num = _fmt_series(x.num)
    if x.den == _ONE_SERIES:
        return num
    simple = len(x.num) == 1 and x.num[0][1].denominator == 1
    if not simple:
        num = f"({num})"
    return f"{num}/({_fmt_series(x.den)})"


_TOKEN = re.compile(r"\s*(?:(\d+)|(e)|([-+*/^()]))")


def _tokenize(src: str):
    pos = 0
    out = []
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            raise LiteralError(f"unexpected character {src[pos:].lstrip()[:1]!r}",
                               pos + len(src[pos:]) - len(src[pos:].lstrip()))
        start = m.start(m.lastindex)
        out.append((m.group(m.lastindex), start))
        pos = m.end()
    out.append(("", len(src)))
    return out


class _FieldParser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self, k: int = 0) -> str:
        return self.toks[min(self.i + k, len(self.toks) - 1)][0]

    def pos(self) -> int:
        return self.toks[self.i][1]

    def take(self, expected: str = None) -> str:
        tok = self.peek()
        if expected is not None and tok != expected:
            raise LiteralError(f"expected {expected!r}, got {tok or 'end of input'!r}",
                               self.pos())
        self.i += 1
        return tok

    def integer(self) -> int:
        tok = self.peek()
        if not tok.isdigit():
            raise LiteralError(f"expected integer, got {tok or 'end of input'!r}", self.pos())
        self.i += 1
        return int(tok)

    def rational(self) -> Fraction:
        n = self.integer()
        if self.peek() == "/" and self.peek(1).isdigit():
            self.take("/")
            d = self.integer()
            if d == 0:
                raise LiteralError("zero denominator in rational", self.pos())
            return Fraction(n, d)
        return Fraction(n)

    def exponent(self) -> Fraction:
        if self.peek() == "(":
            self.take("(")
            neg = False
            if self.peek() in ("+", "-"):
                neg = self.take() == "-"
            q = self.rational()
            self.take(")")
            return -q if neg else q
        neg = False
        if self.peek() == "-":
            self.take()
            neg = True
        q = Fraction(self.integer())
        return -q if neg else q

    def term(self) -> Tuple[Fraction, Fraction]:
        coeff = Fraction(1)
        if self.peek().isdigit():
            coeff = self.rational()
            if self.peek() != "*":
                return Fraction(0), coeff
            self.take("*")
        self.take("e")
        exp = Fraction(1)
        if self.peek() == "^":
            self.take("^")
            exp = self.exponent()
        return exp, coeff

    def series(self) -> PSeries:
        acc: PSeries = ()
        neg = False
        if self.peek() in ("+", "-"):
            neg = self.take() == "-"
        while True:
            e, c = self.term()
            acc = _s_add(acc, ((e, -c if neg else c),) if c else ())
            if self.peek() in ("+", "-"):
                neg = self.take() == "-"
                continue
            return acc

    def element(self) -> FieldElem:
        if self.peek() == "(":
            self.take("(")
            num = self.series()
            self.take(")")
        else:
            num = self.series()
        den = _ONE_SERIES
        if self.peek() == "/":
            self.take("/")
            self.take("(")
            start = self.pos()
            den = self.series()
            self.take(")")
            if not den:
                raise LiteralError("zero denominator", start)
        return FieldElem(num, den)


def parse_field(src: str) -> FieldElem:
    """Parse a literal such as ``3/2*e^(1/2) + 2*e^1`` or ``1/(1 + e)``."""
    p = _FieldParser(src)
    x = p.element()
    if p.peek() != "":
        raise LiteralError(f"trailing input {p.peek()!r}", p.pos())
    return x


def from_terms(terms: Iterable[Tuple[Rational, Rational]]) -> FieldElem:
    """Build a polynomial element from ``(coeff, exponent)`` pairs."""
    acc: PSeries = ()
    for c, e in terms:
        c = Fraction(c)
        if c:
            acc = _s_add(acc, ((Fraction(e), c),))
    return FieldElem(acc)
