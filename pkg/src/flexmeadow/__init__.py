"""Neutrices, external numbers and flexible involutive meadows."""

from .valcore import (
    EPS, ONE, ZERO, DivisionByZero, FieldElem, LiteralError, f_add, f_compare,
    f_inv, f_mul, f_neg, f_sub, format_field, monomial, parse_field,
    series_expand, valuation,
)
from .neutrix import (
    FULL, INFINITESIMALS, LIMITED, ZERO_N, Neutrix, cut, decompose,
    is_idempotent, n_absorb, n_contains, n_inv, n_mul, n_sum, parse_neutrix,
)
from .external import (
    ExtNum, GenConfig, check_fil, e_add, e_eq, e_inv, e_mul, e_neg, ext,
    format_ext, is_zeroless, neutrix_part, parse_ext, set_quotient, subset,
)

__version__ = "0.1.0"
