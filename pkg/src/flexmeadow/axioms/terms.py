"""Terms over the meadow signature: AST, parser, printer and evaluator.

Grammar::

    term    := sum
    sum     := prod { ("+" | "-") prod }
    prod    := unary { "*" postfix }
    unary   := "-" unary | postfix
    postfix := atom { "^-1" }
    atom    := "0" | "1" | "err" | "N" "(" term ")" | ident | "(" term ")"

A minus sign directly after ``*`` is rejected; write ``x*(-y)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple, Union

from ..carrier import ErrUnsupported, MeadowCarrier

__all__ = [
    "Term", "Var", "Zero", "One", "Err", "Add", "Mul", "Neg", "Inv", "NOf",
    "TermSyntaxError", "UnboundVariable", "parse_term", "format_term",
    "eval_term", "free_vars",
]


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Err:
    pass


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Neg:
    arg: "Term"


@dataclass(frozen=True)
class Inv:
    arg: "Term"


@dataclass(frozen=True)
class NOf:
    arg: "Term"


Term = Union[Var, Zero, One, Err, Add, Mul, Neg, Inv, NOf]


class TermSyntaxError(SyntaxError):
    def __init__(self, msg: str, src: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {src!r}")
        self.detail = msg
        self.pos = pos


class UnboundVariable(KeyError):
    pass


# -- parsing -----------------------------------------------------------------

_TOK = re.compile(r"\s*(\^-1|[A-Za-z_][A-Za-z0-9_]*|\d+|[-+*()])")
_RESERVED = {"err", "N"}


def _lex(src: str) -> List[Tuple[str, int]]:
    toks = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos >= len(src):
            break
        m = _TOK.match(src, pos)
        if not m:
            raise TermSyntaxError(f"unexpected character {src[pos]!r}", src, pos)
        toks.append((m.group(1), m.start(1)))
        pos = m.end()
    toks.append(("", len(src)))
    return toks


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _lex(src)
        self.i = 0

    def peek(self) -> str:
        return self.toks[self.i][0]

    def fail(self, msg: str):
        raise TermSyntaxError(msg, self.src, self.toks[self.i][1])

    def expect(self, tok: str):
        if self.peek() != tok:
            self.fail(f"expected {tok!r}, found {self.peek() or 'end of input'!r}")
        self.i += 1

    def parse(self) -> Term:
        t = self.sum()
        if self.peek() != "":
            self.fail(f"unexpected {self.peek()!r}")
        return t

    def sum(self) -> Term:
        t = self.prod()
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.i += 1
            rhs = self.prod()
            t = Add(t, rhs) if op == "+" else Add(t, Neg(rhs))
        return t

    def prod(self) -> Term:
        t = self.unary()
        while self.peek() == "*":
            self.i += 1
            if self.peek() == "-":
                self.fail("unary minus after '*' needs parentheses")
            t = Mul(t, self.postfix())
        return t

    def unary(self) -> Term:
        if self.peek() == "-":
            self.i += 1
            return Neg(self.unary())
        return self.postfix()

    def postfix(self) -> Term:
        t = self.atom()
        while self.peek() == "^-1":
            self.i += 1
            t = Inv(t)
        return t

    def atom(self) -> Term:
        tok = self.peek()
        if tok == "0":
            self.i += 1
            return Zero()
        if tok == "1":
            self.i += 1
            return One()
        if tok == "err":
            self.i += 1
            return Err()
        if tok == "N":
            self.i += 1
            self.expect("(")
            t = self.sum()
            self.expect(")")
            return NOf(t)
        if tok == "(":
            self.i += 1
            t = self.sum()
            self.expect(")")
            return t
        if tok and (tok[0].isalpha() or tok[0] == "_") and tok not in _RESERVED:
            self.i += 1
            return Var(tok)
        if tok.isdigit():
            self.fail(f"numeral {tok!r} is not in the signature (only 0 and 1)")
        self.fail(f"unexpected {tok or 'end of input'!r}")


def parse_term(src: str) -> Term:
    return _Parser(src).parse()


# -- printing ----------------------------------------------------------------

_SUM, _PROD, _UNARY, _POSTFIX = 1, 2, 3, 4


def _fmt(t: Term, level: int) -> str:
    if isinstance(t, Add):
        if isinstance(t.right, Neg):
            s = f"{_fmt(t.left, _SUM)} - {_fmt(t.right.arg, _PROD)}"
        else:
            s = f"{_fmt(t.left, _SUM)} + {_fmt(t.right, _PROD)}"
        return f"({s})" if level > _SUM else s
    if isinstance(t, Mul):
        s = f"{_fmt(t.left, _PROD)}*{_fmt(t.right, _POSTFIX)}"
        return f"({s})" if level > _PROD else s
    if isinstance(t, Neg):
        s = f"-{_fmt(t.arg, _UNARY)}"
        return f"({s})" if level > _UNARY else s
    if isinstance(t, Inv):
        return f"{_fmt(t.arg, _POSTFIX + 1)}^-1"
    if isinstance(t, NOf):
        return f"N({_fmt(t.arg, _SUM)})"
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, One):
        return "1"
    if isinstance(t, Err):
        return "err"
    raise TypeError(f"not a term: {t!r}")


def format_term(t: Term) -> str:
    return _fmt(t, _SUM)


# -- evaluation --------------------------------------------------------------

def free_vars(t: Term) -> FrozenSet[str]:
    if isinstance(t, Var):
        return frozenset((t.name,))
    if isinstance(t, (Add, Mul)):
        return free_vars(t.left) | free_vars(t.right)
    if isinstance(t, (Neg, Inv, NOf)):
        return free_vars(t.arg)
    return frozenset()


def eval_term(m: MeadowCarrier, t: Term, env: Dict[str, object]):
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise UnboundVariable(t.name) from None
    if isinstance(t, Add):
        return m.add(eval_term(m, t.left, env), eval_term(m, t.right, env))
    if isinstance(t, Mul):
        return m.mul(eval_term(m, t.left, env), eval_term(m, t.right, env))
    if isinstance(t, Neg):
        return m.neg(eval_term(m, t.arg, env))
    if isinstance(t, Inv):
        return m.inv(eval_term(m, t.arg, env))
    if isinstance(t, NOf):
        return m.nfun(eval_term(m, t.arg, env))
    if isinstance(t, Zero):
        return m.zero
    if isinstance(t, One):
        return m.one
    if isinstance(t, Err):
        if m.err is None:
            raise ErrUnsupported(f"model {m.name} has no error element")
        return m.err
    raise TypeError(f"not a term: {t!r}")
