"""Neutrices (convex additive subgroups) of the carrier field.

In a field whose value group is the rationals every convex subgroup with a
rational cut point is one of::

    Zero               {0}
    Cut(q, closed)     {x : v(x) >= q}
    Cut(q, open)       {x : v(x) >  q}
    Full               the whole field

They are totally ordered by inclusion, so Minkowski sums are maxima and
Minkowski products shift cut points.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .valcore import (
    FieldElem, LiteralError, ONE, f_inv, monomial, valuation,
)

__all__ = [
    "Neutrix", "ZERO_N", "FULL", "INFINITESIMALS", "LIMITED", "cut",
    "n_contains", "n_subset", "n_sum", "n_mul", "n_absorb", "n_quotient",
    "decompose", "is_idempotent", "n_inv", "parse_neutrix", "format_neutrix",
]

ZERO_KIND, CUT_KIND, FULL_KIND = 0, 1, 2


@dataclass(frozen=True)
class Neutrix:
    kind: int
    q: Optional[Fraction] = None
    closed: Optional[bool] = None

    def __post_init__(self):
        if self.kind == CUT_KIND:
            if self.q is None or self.closed is None:
                raise ValueError("cut neutrix needs a point and a boundary")
            if not isinstance(self.q, Fraction):
                object.__setattr__(self, "q", Fraction(self.q))
        elif self.q is not None or self.closed is not None:
            raise ValueError("only cut neutrices carry a point")

    @property
    def is_zero(self) -> bool:
        return self.kind == ZERO_KIND

    @property
    def is_full(self) -> bool:
        return self.kind == FULL_KIND

    def size_key(self) -> Tuple:
        """Sort key that orders neutrices by inclusion."""
        if self.kind == CUT_KIND:
            return (1, -self.q, 1 if self.closed else 0)
        return (self.kind, 0, 0)

    def __le__(self, other: "Neutrix") -> bool:
        return n_subset(self, other)

    def __lt__(self, other: "Neutrix") -> bool:
        return n_subset(self, other) and self != other

    def __str__(self):
        return format_neutrix(self)


def cut(q, closed: bool) -> Neutrix:
    return Neutrix(CUT_KIND, Fraction(q), bool(closed))


ZERO_N = Neutrix(ZERO_KIND)
FULL = Neutrix(FULL_KIND)
INFINITESIMALS = cut(0, closed=False)
LIMITED = cut(0, closed=True)


def n_contains(n: Neutrix, x: FieldElem) -> bool:
    if n.kind == FULL_KIND:
        return True
    if n.kind == ZERO_KIND:
        return x.is_zero()
    v = valuation(x)
    return v >= n.q if n.closed else v > n.q


def n_subset(a: Neutrix, b: Neutrix) -> bool:
    return a.size_key() <= b.size_key()


def n_sum(a: Neutrix, b: Neutrix) -> Neutrix:
    return a if a.size_key() >= b.size_key() else b


def n_mul(a: Neutrix, b: Neutrix) -> Neutrix:
    if a.kind == ZERO_KIND or b.kind == ZERO_KIND:
        return ZERO_N
    if a.kind == FULL_KIND or b.kind == FULL_KIND:
        return FULL
    # the value group is dense, so an open factor keeps the product open
    return cut(a.q + b.q, a.closed and b.closed)


def n_absorb(a: FieldElem, n: Neutrix) -> Neutrix:
    """The set ``a * n``."""
    if a.is_zero():
        return ZERO_N
    if n.kind != CUT_KIND:
        return n
    return cut(n.q + valuation(a), n.closed)


def n_quotient(a: Neutrix, b: Neutrix) -> Neutrix:
    """``{x : x*b <= a}`` for neutrices ``a`` and ``b`` with ``b != {0}``."""
    if b.is_zero:
        raise ValueError("quotient by {0} is not a neutrix")
    if a.is_full:
        return FULL
    if b.is_full or a.is_zero:
        return ZERO_N
    q = a.q - b.q
    # every x with v(x) > q qualifies, none with v(x) < q; the boundary
    # valuation decides the flag
    principal = cut(q, closed=True)
    return cut(q, closed=n_subset(n_mul(principal, b), a))


def decompose(n: Neutrix) -> Tuple[FieldElem, Neutrix]:
    """Split ``n`` as ``r * I`` with ``I`` idempotent, ``r = e^q`` canonical."""
    if n.kind != CUT_KIND:
        return ONE, n
    return monomial(1, n.q), cut(0, n.closed)


def is_idempotent(n: Neutrix) -> bool:
    return n_mul(n, n) == n


def n_inv(n: Neutrix) -> Neutrix:
    r, idem = decompose(n)
    return n_absorb(f_inv(r), idem)


# -- literals ----------------------------------------------------------------

_CUT_RE = re.compile(
    r"\s*cut\s*\(\s*(-?\d+(?:\s*/\s*\d+)?)\s*,\s*(open|closed)\s*\)\s*$")

_NAMED = {"zero": ZERO_N, "full": FULL, "o": INFINITESIMALS, "L": LIMITED}


def parse_neutrix(src: str) -> Neutrix:
    word = src.strip()
    if word in _NAMED:
        return _NAMED[word]
    m = _CUT_RE.match(src)
    if not m:
        raise LiteralError(f"not a neutrix literal: {src!r}", 0)
    try:
        q = Fraction(m.group(1).replace(" ", ""))
    except ZeroDivisionError:
        raise LiteralError("zero denominator in cut point", m.start(1)) from None
    return cut(q, m.group(2) == "closed")


def format_neutrix(n: Neutrix) -> str:
    if n.kind == ZERO_KIND:
        return "zero"
    if n.kind == FULL_KIND:
        return "full"
    if n == INFINITESIMALS:
        return "o"
    if n == LIMITED:
        return "L"
    return f"cut({n.q},{'closed' if n.closed else 'open'})"
