"""External numbers ``a + A``: a field element shifted by a neutrix.

Equality is set equality.  The stored precise part ``a`` is any
representative of the coset; nothing is canonicalized except for display.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .neutrix import (
    FULL, INFINITESIMALS, LIMITED, Neutrix, ZERO_N, CUT_KIND, cut,
    format_neutrix, n_absorb, n_contains, n_inv, n_mul, n_quotient, n_subset,
    n_sum, parse_neutrix,
)
from .valcore import (
    FieldElem, LiteralError, ONE, ZERO, f_add, f_inv, f_mul, f_neg, f_sub,
    format_field, from_terms, parse_field, series_expand,
)

__all__ = [
    "ExtNum", "GenConfig", "ext", "e_add", "e_mul", "e_neg", "e_inv",
    "neutrix_part", "is_zeroless", "is_neutrix", "e_eq", "subset",
    "set_quotient", "check_fil", "random_field_elem", "random_neutrix",
    "random_extnum", "parse_ext", "format_ext",
]


@dataclass(frozen=True, eq=False)
class ExtNum:
    a: FieldElem
    n: Neutrix

    def __eq__(self, other):
        if not isinstance(other, ExtNum):
            return NotImplemented
        return e_eq(self, other)

    __hash__ = None

    def __add__(self, other):
        return e_add(self, other)

    def __mul__(self, other):
        return e_mul(self, other)

    def __neg__(self):
        return e_neg(self)

    def __sub__(self, other):
        return e_add(self, e_neg(other))

    def inverse(self) -> "ExtNum":
        return e_inv(self)

    def __repr__(self):
        return f"ExtNum({format_ext(self)!r})"

    def __str__(self):
        return format_ext(self)


def ext(a, n: Neutrix = ZERO_N) -> ExtNum:
    if not isinstance(a, FieldElem):
        a = from_terms([(Fraction(a), 0)])
    return ExtNum(a, n)


def e_add(x: ExtNum, y: ExtNum) -> ExtNum:
    n = n_sum(x.n, y.n)
    if n.is_full:
        return ExtNum(ZERO, FULL)
    return ExtNum(f_add(x.a, y.a), n)


def e_mul(x: ExtNum, y: ExtNum) -> ExtNum:
    n = n_sum(n_sum(n_absorb(x.a, y.n), n_absorb(y.a, x.n)), n_mul(x.n, y.n))
    if n.is_full:
        return ExtNum(ZERO, FULL)
    return ExtNum(f_mul(x.a, y.a), n)


def e_neg(x: ExtNum) -> ExtNum:
    return ExtNum(f_neg(x.a), x.n)


def neutrix_part(x: ExtNum) -> ExtNum:
    return ExtNum(ZERO, x.n)


def is_neutrix(x: ExtNum) -> bool:
    return n_contains(x.n, x.a)


def is_zeroless(x: ExtNum) -> bool:
    return not n_contains(x.n, x.a)


def e_inv(x: ExtNum) -> ExtNum:
    """Total inverse: the usual one for zeroless ``x``, else ``r^-1 * I``."""
    if is_zeroless(x):
        inv_a = f_inv(x.a)
        return ExtNum(inv_a, n_absorb(f_mul(inv_a, inv_a), x.n))
    return ExtNum(ZERO, n_inv(x.n))


def e_eq(x: ExtNum, y: ExtNum) -> bool:
    return x.n == y.n and n_contains(x.n, f_sub(x.a, y.a))


def subset(x: ExtNum, y: ExtNum) -> bool:
    """Set inclusion ``x <= y``."""
    return n_subset(x.n, y.n) and n_contains(y.n, f_sub(x.a, y.a))


def set_quotient(a: ExtNum, b: ExtNum) -> Optional[ExtNum]:
    """``{x : x*b <= a}``, or ``None`` when that set is empty.

    For zeroless ``b`` the set is ``a * b^-1`` unless the relative
    uncertainty of ``b`` exceeds that of a zeroless ``a``, in which case no
    ``x`` works.
    """
    if is_zeroless(b):
        if is_zeroless(a):
            ratio = f_mul(a.a, f_inv(b.a))
            if not n_subset(n_absorb(ratio, b.n), a.n):
                return None
        return e_mul(a, e_inv(b))
    if b.n.is_zero:
        return ExtNum(ZERO, FULL) if not is_zeroless(a) else None
    if is_zeroless(a):
        return None
    return ExtNum(ZERO, n_quotient(a.n, b.n))


def check_fil(x: ExtNum) -> bool:
    """Flexible inverse law at ``x``: ``x*x^-1 = 1 + e`` with ``1 + e`` zeroless."""
    if not is_zeroless(x):
        return True
    z = e_mul(x, e_inv(x))
    return (n_contains(z.n, f_sub(z.a, ONE))
            and not z.n.is_full
            and is_zeroless(z))


# -- random generation -------------------------------------------------------

@dataclass(frozen=True)
class GenConfig:
    """Bounds for random sampling of field elements and external numbers."""

    max_exp_num: int = 3
    max_exp_den: int = 3
    coeff_bound: int = 10
    max_terms: int = 2
    fraction_rate: float = 0.15
    special_rate: float = 0.10


def _rand_exp(rng: random.Random, cfg: GenConfig) -> Fraction:
    return Fraction(rng.randint(-cfg.max_exp_num, cfg.max_exp_num),
                    rng.randint(1, cfg.max_exp_den))


def _rand_coeff(rng: random.Random, cfg: GenConfig) -> Fraction:
    num = rng.randint(1, cfg.coeff_bound) * rng.choice((-1, 1))
    return Fraction(num, rng.randint(1, cfg.coeff_bound))


def _rand_poly(rng: random.Random, cfg: GenConfig) -> FieldElem:
    while True:
        k = rng.randint(1, cfg.max_terms)
        x = from_terms([(_rand_coeff(rng, cfg), _rand_exp(rng, cfg)) for _ in range(k)])
        if not x.is_zero():
            return x


def random_field_elem(rng: random.Random, cfg: GenConfig = GenConfig()) -> FieldElem:
    x = _rand_poly(rng, cfg)
    if rng.random() < cfg.fraction_rate:
        x = f_mul(x, f_inv(_rand_poly(rng, cfg)))
    return x


def random_neutrix(rng: random.Random, cfg: GenConfig = GenConfig()) -> Neutrix:
    kind = rng.randrange(3)
    if kind == 0:
        return ZERO_N
    if kind == 1:
        return FULL
    return cut(_rand_exp(rng, cfg), rng.random() < 0.5)


_SPECIALS = (
    ExtNum(ZERO, ZERO_N), ExtNum(ONE, ZERO_N), ExtNum(ZERO, INFINITESIMALS),
    ExtNum(ZERO, LIMITED), ExtNum(ZERO, FULL),
)


def random_extnum(rng: random.Random, cfg: GenConfig = GenConfig()) -> ExtNum:
    if rng.random() < cfg.special_rate:
        return rng.choice(_SPECIALS)
    n = random_neutrix(rng, cfg)
    # an exact zero precise part makes pure neutrices common
    a = ZERO if rng.random() < 0.2 else random_field_elem(rng, cfg)
    return ExtNum(a, n)


# -- literals ----------------------------------------------------------------

def display_part(x: ExtNum) -> FieldElem:
    """A short representative of the precise part, for printing only."""
    if x.n.is_full:
        return ZERO
    if x.n.kind != CUT_KIND:
        return x.a
    terms = series_expand(x.a, x.n.q)
    if x.n.closed:
        terms = tuple(t for t in terms if t[0] < x.n.q)
    return FieldElem(terms)


def format_ext(x: ExtNum) -> str:
    return f"{format_field(display_part(x))} ; {format_neutrix(x.n)}"


def parse_ext(src: str) -> ExtNum:
    """Parse ``<field literal> ; <neutrix literal>``; a bare field literal is exact."""
    head, sep, tail = src.partition(";")
    a = parse_field(head)
    if not sep:
        return ExtNum(a, ZERO_N)
    try:
        n = parse_neutrix(tail)
    except LiteralError as exc:
        raise exc.shifted(len(head) + 1) from None
    return ExtNum(a, n)
