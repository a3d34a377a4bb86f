"""Laws and the built-in axiom catalogs.

Plain identities are written in the law-file syntax::

    <id> : <term> = <term>
    <id> : <guard> => <term> = <term>

where ``<guard>`` is ``zeroless(x)``, ``nonzero(x)`` or an equation
``<term> = <term>`` that must hold for the sample to count.  A line whose
right side contains ``|`` is a disjunction of equations.  Laws that are not
equations (the flexible inverse law, the regularity witnesses, inclusion
checks) are builtins, evaluated in :mod:`.checker`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .terms import Term, TermSyntaxError, free_vars, parse_term

__all__ = [
    "Law", "Guard", "UnknownCatalog", "LawFileError", "parse_law",
    "parse_law_file", "catalog", "CATALOG_NAMES", "all_laws", "find_law",
]


class UnknownCatalog(KeyError):
    pass


class LawFileError(ValueError):
    pass


@dataclass(frozen=True)
class Guard:
    """``kind`` is ``zeroless``, ``nonzero`` or ``equation``."""

    kind: str
    var: Optional[str] = None
    lhs: Optional[Term] = None
    rhs: Optional[Term] = None

    def describe(self) -> str:
        from .terms import format_term
        if self.kind == "equation":
            return f"{format_term(self.lhs)} = {format_term(self.rhs)}"
        return f"{self.kind}({self.var})"


@dataclass(frozen=True)
class Law:
    id: str
    kind: str  # identity | conditional | disjunction | builtin
    vars: Tuple[str, ...]
    catalog: str = ""
    lhs: Optional[Term] = None
    rhs: Optional[Term] = None
    guard: Optional[Guard] = None
    disjuncts: Tuple[Tuple[Term, Term], ...] = ()
    builtin: Optional[str] = None
    note: str = ""

    def describe(self) -> str:
        from .terms import format_term
        if self.kind == "builtin":
            return f"<builtin {self.builtin}>"
        if self.kind == "disjunction":
            return " | ".join(f"{format_term(l)} = {format_term(r)}" for l, r in self.disjuncts)
        body = f"{format_term(self.lhs)} = {format_term(self.rhs)}"
        if self.guard is not None:
            return f"{self.guard.describe()} => {body}"
        return body


def _ordered_vars(*terms: Term) -> Tuple[str, ...]:
    names = set()
    for t in terms:
        names |= free_vars(t)
    # x, y, z first, then the rest alphabetically
    return tuple(sorted(names, key=lambda v: (v not in ("x", "y", "z"), v)))


def _equation(src: str) -> Tuple[Term, Term]:
    if src.count("=") != 1:
        raise LawFileError(f"expected exactly one '=' in {src.strip()!r}")
    lhs, rhs = src.split("=")
    return parse_term(lhs), parse_term(rhs)


def parse_law(line: str, catalog_name: str = "", note: str = "") -> Law:
    law_id, sep, body = line.partition(":")
    law_id = law_id.strip()
    if not sep or not law_id:
        raise LawFileError(f"missing '<id> :' prefix in {line!r}")
    try:
        if "=>" in body:
            guard_src, concl = body.split("=>", 1)
            guard_src = guard_src.strip()
            guard = _parse_guard(guard_src)
            lhs, rhs = _equation(concl)
            terms = [lhs, rhs]
            if guard.kind == "equation":
                terms += [guard.lhs, guard.rhs]
            vars_ = _ordered_vars(*terms)
            if guard.var is not None and guard.var not in vars_:
                vars_ = vars_ + (guard.var,)
            return Law(law_id, "conditional", vars_, catalog_name, lhs, rhs,
                       guard=guard, note=note)
        if "|" in body:
            disj = tuple(_equation(part) for part in body.split("|"))
            vars_ = _ordered_vars(*[t for pair in disj for t in pair])
            return Law(law_id, "disjunction", vars_, catalog_name,
                       disjuncts=disj, note=note)
        lhs, rhs = _equation(body)
    except TermSyntaxError as exc:
        raise LawFileError(f"law {law_id}: {exc}") from None
    return Law(law_id, "identity", _ordered_vars(lhs, rhs), catalog_name, lhs, rhs, note=note)


def _parse_guard(src: str) -> Guard:
    for kind in ("zeroless", "nonzero"):
        if src.startswith(kind + "(") and src.endswith(")"):
            var = src[len(kind) + 1:-1].strip()
            if not var.isidentifier():
                raise LawFileError(f"bad guard variable in {src!r}")
            return Guard(kind, var)
    if "=" in src:
        lhs, rhs = _equation(src)
        return Guard("equation", lhs=lhs, rhs=rhs)
    raise LawFileError(f"unknown guard {src!r}")


def parse_law_file(text: str, catalog_name: str = "") -> List[Law]:
    """Parse one law per line; blank lines and ``#`` comments are skipped."""
    laws = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            laws.append(parse_law(line, catalog_name))
    return laws


_INVOLUTIVE = """
I1  : (x+y)+z = x+(y+z)
I2  : x+y = y+x
I3  : x+0 = x
I4  : x+(-x) = 0
I5  : (x*y)*z = x*(y*z)
I6  : x*y = y*x
I7  : 1*x = x
I8  : x*(y+z) = x*y+x*z
I9  : (x^-1)^-1 = x
I10 : x*(x*x^-1) = x
"""

_COMMON = """
M1  : (x+y)+z = x+(y+z)
M2  : x+y = y+x
M3  : x+0 = x
M4  : x+(-x) = 0*x
M5  : (x*y)*z = x*(y*z)
M6  : x*y = y*x
M7  : 1*x = x
M8  : x*(y+z) = x*y+x*z
M9  : -(-x) = x
M10 : x*x^-1 = 1+0*x^-1
M11 : (x*y)^-1 = x^-1*y^-1
M12 : (1+0*x)^-1 = 1+0*x
M13 : 0^-1 = err
M14 : x+err = err
"""

_FLEXIBLE = """
FI1  : (x+y)+z = x+(y+z)
FI2  : x+y = y+x
FI3  : x+N(x) = x
FI4  : x+(-x) = N(x)
FI5  : (x*y)*z = x*(y*z)
FI6  : x*y = y*x
FI7  : (1+N(x)*x^-1)*x = x
FI8  : x*(y+z) = x*y+x*z+N(x)*y+N(x)*z
FI9  : (x^-1)^-1 = x
FI10 : x*(x*x^-1) = x
"""

_ARITHMETICAL = """
A1 : x+(-x) = N(x)
A2 : x+N(x) = x
"""

_NEUTRIX_EXTRA = """
N1 : N(x+y) = N(x) | N(x+y) = N(y)
N2 : N(-x) = N(x)
"""

_DERIVED = """
CANCEL-fwd : x+y = x+z => N(x)+y = N(x)+z
CANCEL-bwd : N(x)+y = N(x)+z => x+y = x+z
N-sum-idem : N(x)+N(x) = N(x)
N-additive : N(x+y) = N(x)+N(y)
N-idem     : N(N(x)) = N(x)
N-fixed    : x = N(y) => x = N(x)
NEG-invol  : -(-x) = x
NEG-sum    : -(x+y) = -x-y
N-symm     : N(x) = -N(x)
"""

_DISTRIBUTIVITY = """
FI8-printed   : x*(y+z) = x*y+x*z+N(x)*y+N(x)*z
FI8-corrected : x*y+x*z = x*(y+z)+(N(x)*y+N(x)*z)
DIST-classical : x*(y+z) = x*y+x*z
"""

_NOTES = {
    "involutive": "axioms of involutive meadows",
    "common": "axioms of common meadows",
    "flexible": "axioms of flexible involutive meadows",
    "arithmetical": "arithmetical properties and the flexible inverse law",
    "neutrix-extra": "extra axioms on the neutrix part",
    "derived": "consequences of the flexible axioms with N1 and N2",
    "regularity": "von Neumann regularity with explicit witnesses",
    "distributivity-variants": "forms of distributivity for external numbers",
}


def _builtin(law_id: str, name: str, vars_: Tuple[str, ...], cat: str, note: str) -> Law:
    return Law(law_id, "builtin", vars_, cat, builtin=name, note=note)


def _build() -> Dict[str, List[Law]]:
    cats = {
        "involutive": parse_law_file(_INVOLUTIVE, "involutive"),
        "common": parse_law_file(_COMMON, "common"),
        "flexible": parse_law_file(_FLEXIBLE, "flexible"),
        "arithmetical": parse_law_file(_ARITHMETICAL, "arithmetical"),
        "neutrix-extra": parse_law_file(_NEUTRIX_EXTRA, "neutrix-extra"),
        "derived": parse_law_file(_DERIVED, "derived"),
        "regularity": [],
        "distributivity-variants": parse_law_file(_DISTRIBUTIVITY, "distributivity-variants"),
    }
    cats["arithmetical"].append(_builtin(
        "FIL", "fil", ("x",), "arithmetical",
        "x != N(x) implies x*x^-1 = 1 + e with 1 + e not an error term"))
    cats["regularity"] += [
        _builtin("VNR-mul", "vnr-mul", ("x",), "regularity", "x*x*y = x with y := x^-1"),
        _builtin("VNR-add", "vnr-add", ("x",), "regularity", "x+x+y = x with y := -x"),
    ]
    cats["distributivity-variants"].append(_builtin(
        "SUBDIST", "subdist", ("x", "y", "z"), "distributivity-variants",
        "x*(y+z) is contained in x*y+x*z"))
    return cats


_CATALOGS = _build()
CATALOG_NAMES = tuple(_CATALOGS)


def catalog(name: str) -> List[Law]:
    try:
        return list(_CATALOGS[name])
    except KeyError:
        raise UnknownCatalog(
            f"unknown catalog {name!r}; choose from {', '.join(CATALOG_NAMES)}") from None


def catalog_note(name: str) -> str:
    catalog(name)
    return _NOTES[name]


def all_laws() -> List[Law]:
    return [law for name in CATALOG_NAMES for law in _CATALOGS[name]]


def find_law(law_id: str, catalog_name: Optional[str] = None) -> Law:
    pool = catalog(catalog_name) if catalog_name else all_laws()
    for law in pool:
        if law.id == law_id:
            return law
    raise KeyError(law_id)
