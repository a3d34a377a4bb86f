"""Concrete algebras over the meadow signature ``{0, 1, err, +, *, -, ^-1, N}``.

Each model exposes the same small interface so that the checker can evaluate
terms in any of them.  Finite models also enumerate their elements.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterator, Optional

from .external import (
    ExtNum, GenConfig, e_add, e_eq, e_inv, e_mul, e_neg, format_ext,
    is_zeroless, neutrix_part, parse_ext, random_extnum, subset,
)
from .neutrix import FULL, INFINITESIMALS, ZERO_N
from .valcore import LiteralError, ONE, ZERO, const, valuation

__all__ = [
    "MeadowCarrier", "ErrUnsupported", "InvalidModulus", "OutOfCarrier",
    "ExternalModel", "FfpInvolutive", "FfpCommon", "RhatCommon",
    "RatInvolutive", "model_external", "model_ffp_involutive",
    "model_ffp_common", "model_rhat_common", "model_rat_involutive",
    "model_from_name", "MODEL_NAMES",
]


class ErrUnsupported(Exception):
    """The term mentions ``err`` but the carrier has no error element."""


class InvalidModulus(ValueError):
    pass


class OutOfCarrier(ValueError):
    pass


class MeadowCarrier:
    """Base class for models.

    Subclasses set ``name``, ``zero``, ``one`` and optionally ``err``, and
    implement the operations.  ``enumerate`` returns ``None`` for infinite
    carriers.
    """

    name = "abstract"
    zero = None
    one = None
    err = None

    def add(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def nfun(self, x):
        raise NotImplementedError

    def eq(self, x, y) -> bool:
        return x == y

    def subset(self, x, y) -> bool:
        """Inclusion for set-valued carriers; plain equality otherwise."""
        return self.eq(x, y)

    def sample(self, rng: random.Random, config: GenConfig):
        raise NotImplementedError

    def enumerate(self) -> Optional[list]:
        return None

    def parse(self, src: str):
        raise NotImplementedError

    def format(self, x) -> str:
        return str(x)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


# -- external numbers --------------------------------------------------------

class ExternalModel(MeadowCarrier):
    name = "external"
    zero = ExtNum(ZERO, ZERO_N)
    one = ExtNum(ONE, ZERO_N)

    def add(self, x, y):
        return e_add(x, y)

    def mul(self, x, y):
        return e_mul(x, y)

    def neg(self, x):
        return e_neg(x)

    def inv(self, x):
        return e_inv(x)

    def nfun(self, x):
        return neutrix_part(x)

    def eq(self, x, y):
        return e_eq(x, y)

    def subset(self, x, y):
        return subset(x, y)

    def sample(self, rng, config):
        return random_extnum(rng, config)

    def parse(self, src):
        return parse_ext(src)

    def format(self, x):
        return format_ext(x)


# -- finite fields -----------------------------------------------------------

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class _PrimeField(MeadowCarrier):
    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p) or p > 97:
            raise InvalidModulus(f"modulus must be a prime <= 97, got {p!r}")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def _field_inv(self, x: int) -> int:
        return pow(x, -1, self.p)

    def parse(self, src):
        word = src.strip()
        try:
            return int(word) % self.p
        except ValueError:
            raise LiteralError(f"not an element of F_{self.p}: {src!r}") from None


class FfpInvolutive(_PrimeField):
    """F_p with ``0^-1 = 0``; every neutrix part is ``0``."""

    def __init__(self, p: int):
        super().__init__(p)
        self.name = f"ffp:{p}"

    def add(self, x, y):
        return (x + y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def neg(self, x):
        return -x % self.p

    def inv(self, x):
        return 0 if x == 0 else self._field_inv(x)

    def nfun(self, x):
        return 0

    def sample(self, rng, config):
        return rng.randrange(self.p)

    def enumerate(self):
        return list(range(self.p))


class _ErrorElement:
    __slots__ = ()

    def __repr__(self):
        return "E"

    __str__ = __repr__


E = _ErrorElement()


class FfpCommon(_PrimeField):
    """F_p plus an absorbing error element ``E`` with ``0^-1 = E``."""

    def __init__(self, p: int):
        super().__init__(p)
        self.name = f"ffp-common:{p}"
        self.err = E

    def add(self, x, y):
        if x is E or y is E:
            return E
        return (x + y) % self.p

    def mul(self, x, y):
        if x is E or y is E:
            return E
        return (x * y) % self.p

    def neg(self, x):
        return E if x is E else -x % self.p

    def inv(self, x):
        if x is E or x == 0:
            return E
        return self._field_inv(x)

    def nfun(self, x):
        return E if x is E else 0

    def eq(self, x, y):
        return x is y if (x is E or y is E) else x == y

    def sample(self, rng, config):
        k = rng.randrange(self.p + 1)
        return E if k == self.p else k

    def enumerate(self):
        return list(range(self.p)) + [E]

    def parse(self, src):
        if src.strip() == "E":
            return E
        return super().parse(src)


# -- rationals ---------------------------------------------------------------

class RatInvolutive(MeadowCarrier):
    """The rationals with ``0^-1 = 0``."""

    name = "rat-involutive"
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        return Fraction(0) if x == 0 else 1 / x

    def nfun(self, x):
        return Fraction(0)

    def sample(self, rng, config):
        if rng.random() < config.special_rate:
            return rng.choice((Fraction(0), Fraction(1), Fraction(-1)))
        b = config.coeff_bound
        return Fraction(rng.randint(-b, b), rng.randint(1, b))

    def parse(self, src):
        try:
            return Fraction(src.strip())
        except (ValueError, ZeroDivisionError):
            raise LiteralError(f"not a rational: {src!r}") from None


# -- hat-R common meadow -----------------------------------------------------

class RhatCommon(MeadowCarrier):
    """Elements ``r + o`` for rational ``r``, plus the whole field as error.

    Sums and products are the external-number operations; the inverse sends
    ``0 + o`` and the whole field to the whole field.
    """

    name = "rhat-common"
    zero = ExtNum(ZERO, INFINITESIMALS)
    one = ExtNum(ONE, INFINITESIMALS)
    err = ExtNum(ZERO, FULL)

    def __init__(self, bound: int = 100):
        self.bound = bound

    def check(self, x: ExtNum) -> ExtNum:
        if x.n.is_full:
            return x
        if x.n == INFINITESIMALS and valuation(x.a) >= 0:
            return x
        raise OutOfCarrier(f"{format_ext(x)} is not an element of rhat-common")

    def add(self, x, y):
        return e_add(self.check(x), self.check(y))

    def mul(self, x, y):
        return e_mul(self.check(x), self.check(y))

    def neg(self, x):
        return e_neg(self.check(x))

    def inv(self, x):
        self.check(x)
        if not is_zeroless(x):
            return self.err
        return e_inv(x)

    def nfun(self, x):
        return neutrix_part(self.check(x))

    def eq(self, x, y):
        return e_eq(x, y)

    def subset(self, x, y):
        return subset(x, y)

    def sample(self, rng, config):
        if rng.random() < config.special_rate:
            return rng.choice((self.zero, self.one, self.err))
        r = Fraction(rng.randint(-self.bound, self.bound), rng.randint(1, self.bound))
        return ExtNum(const(r), INFINITESIMALS)

    def parse(self, src):
        return self.check(parse_ext(src))

    def format(self, x):
        return format_ext(x)


# -- registry ----------------------------------------------------------------

def model_external() -> ExternalModel:
    return ExternalModel()


def model_ffp_involutive(p: int) -> FfpInvolutive:
    return FfpInvolutive(p)


def model_ffp_common(p: int) -> FfpCommon:
    return FfpCommon(p)


def model_rhat_common() -> RhatCommon:
    return RhatCommon()


def model_rat_involutive() -> RatInvolutive:
    return RatInvolutive()


MODEL_NAMES = ("external", "ffp:<p>", "ffp-common:<p>", "rhat-common", "rat-involutive")


def model_from_name(name: str) -> MeadowCarrier:
    """Build a model from its CLI name, e.g. ``ffp:5`` or ``rhat-common``."""
    simple = {
        "external": model_external,
        "rhat-common": model_rhat_common,
        "rat-involutive": model_rat_involutive,
    }
    if name in simple:
        return simple[name]()
    kind, sep, arg = name.partition(":")
    if sep and kind in ("ffp", "ffp-common"):
        try:
            p = int(arg)
        except ValueError:
            raise InvalidModulus(f"bad modulus in {name!r}") from None
        return FfpInvolutive(p) if kind == "ffp" else FfpCommon(p)
    raise ValueError(f"unknown model {name!r}; expected one of {', '.join(MODEL_NAMES)}")
