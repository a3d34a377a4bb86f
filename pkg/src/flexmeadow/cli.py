"""Command-line interface.

Subcommands::

    flexmeadow check --model external --catalog flexible --samples 10000 --seed 42
    flexmeadow eval --model external "x^-1" --bind "x=2 ; o"
    flexmeadow decompose "cut(1,closed)"
    flexmeadow quotient "1 ; o" "2 ; o"

Exit status is 0 when every law passes, 1 when a counterexample (or a
checker error) is reported and 2 for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from typing import List, Optional

from .axioms import (
    CATALOG_NAMES, Exhaustive, Random, TermSyntaxError, UnboundVariable,
    catalog, check_suite, eval_term, free_vars, parse_term,
)
from .axioms.laws import catalog_note
from .carrier import ErrUnsupported, InvalidModulus, OutOfCarrier, model_from_name
from .external import GenConfig, format_ext, parse_ext, set_quotient
from .neutrix import decompose, format_neutrix, parse_neutrix
from .valcore import LiteralError, format_field

MAX_SAMPLES = 10_000_000

DEFAULT_CATALOGS = {
    "external": ["flexible", "arithmetical", "neutrix-extra", "derived"],
    "ffp": ["involutive", "flexible"],
    "ffp-common": ["common"],
    "rhat-common": ["common"],
    "rat-involutive": ["involutive"],
}


class UsageError(Exception):
    pass


def _model(name: str):
    try:
        return model_from_name(name)
    except (InvalidModulus, ValueError) as exc:
        raise UsageError(str(exc)) from None


def list_axioms(out=None) -> None:
    out = out or sys.stdout
    for name in CATALOG_NAMES:
        print(f"[{name}] {catalog_note(name)}", file=out)
        for law in catalog(name):
            print(f"  {law.id:<15} {law.describe()}", file=out)


def cmd_check(args, out=None) -> int:
    out = out or sys.stdout
    if args.list_axioms:
        list_axioms(out)
        return 0
    m = _model(args.model)
    names = args.catalog or DEFAULT_CATALOGS[args.model.partition(":")[0]]
    for name in names:
        if name not in CATALOG_NAMES:
            raise UsageError(f"unknown catalog {name!r}; choose from {', '.join(CATALOG_NAMES)}")
    if args.exhaustive:
        if m.enumerate() is None:
            raise UsageError(f"--exhaustive needs a finite model, got {m.name}")
        strategy = Exhaustive()
    else:
        if not 1 <= args.samples <= MAX_SAMPLES:
            raise UsageError(f"--samples must be between 1 and {MAX_SAMPLES}")
        strategy = Random(args.samples, args.seed, GenConfig())

    reports = check_suite(m, names, strategy)
    width = max(len(r.law) for r in reports) if reports else 0
    for r in reports:
        line = f"{r.law:<{width}}  {r.status.upper():<5} {r.effective}/{r.samples}"
        if r.counterexample is not None:
            c = r.counterexample
            binds = ", ".join(f"{k}={m.format(v)}" for k, v in c.bindings.items())
            line += f"  [{binds}]  lhs={m.format(c.lhs)}  rhs={m.format(c.rhs)}"
        elif r.error:
            line += f"  {r.error}"
        print(line, file=out)
    failed = sum(not r.passed for r in reports)
    print(f"{len(reports) - failed}/{len(reports)} laws passed on {m.name}", file=out)

    if args.json:
        doc = {
            "model": m.name,
            "results": [r.to_json(m) for r in reports],
            "seed": args.seed,
            "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        }
        text = json.dumps(doc, indent=2)
        if args.json == "-":
            print(text, file=out)
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
    return 0 if failed == 0 else 1


def _parse_bind(m, spec: str):
    name, sep, literal = spec.partition("=")
    name = name.strip()
    if not sep or not name.isidentifier():
        raise UsageError(f"--bind expects NAME=LITERAL, got {spec!r}")
    try:
        return name, m.parse(literal)
    except (LiteralError, OutOfCarrier) as exc:
        raise UsageError(f"bad literal for {name}: {exc}") from None


def cmd_eval(args, out=None) -> int:
    out = out or sys.stdout
    m = _model(args.model)
    try:
        term = parse_term(args.term)
    except TermSyntaxError as exc:
        raise UsageError(str(exc)) from None
    env = dict(_parse_bind(m, b) for b in args.bind)
    missing = sorted(free_vars(term) - set(env))
    if missing:
        raise UsageError(f"unbound variable(s): {', '.join(missing)}")
    try:
        value = eval_term(m, term, env)
    except (ErrUnsupported, OutOfCarrier, UnboundVariable) as exc:
        raise UsageError(str(exc)) from None
    print(m.format(value), file=out)
    return 0


def cmd_decompose(args, out=None) -> int:
    out = out or sys.stdout
    try:
        n = parse_neutrix(args.neutrix)
    except LiteralError as exc:
        raise UsageError(str(exc)) from None
    r, idem = decompose(n)
    print(f"r={format_field(r)}, I={format_neutrix(idem)}", file=out)
    return 0


def cmd_quotient(args, out=None) -> int:
    out = out or sys.stdout
    try:
        a = parse_ext(args.numerator)
        b = parse_ext(args.denominator)
    except LiteralError as exc:
        raise UsageError(str(exc)) from None
    q = set_quotient(a, b)
    print("empty" if q is None else format_ext(q), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="flexmeadow",
        description="Check meadow axioms on external numbers and related models.")
    p.add_argument("--list-axioms", action="store_true", help="print every catalog and exit")
    sub = p.add_subparsers(dest="command")

    c = sub.add_parser("check", help="check axiom catalogs on a model")
    c.add_argument("--model", default="external",
                   help="external, ffp:<p>, ffp-common:<p>, rhat-common or rat-involutive")
    c.add_argument("--catalog", action="append", help="catalog name (repeatable)")
    c.add_argument("--samples", type=int, default=10_000)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--exhaustive", action="store_true", help="enumerate all assignments")
    c.add_argument("--json", metavar="PATH", help="write a JSON report ('-' for stdout)")
    c.add_argument("--list-axioms", action="store_true", help="print every catalog and exit")
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("eval", help="evaluate a term in a model")
    e.add_argument("term")
    e.add_argument("--model", default="external")
    e.add_argument("--bind", action="append", default=[], metavar="NAME=LITERAL")
    e.set_defaults(func=cmd_eval)

    d = sub.add_parser("decompose", help="split a neutrix as r * I with I idempotent")
    d.add_argument("neutrix")
    d.set_defaults(func=cmd_decompose)

    q = sub.add_parser("quotient", help="set quotient {x : x*B <= A}")
    q.add_argument("numerator", metavar="A")
    q.add_argument("denominator", metavar="B")
    q.set_defaults(func=cmd_quotient)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.list_axioms and args.command is None:
        list_axioms()
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"flexmeadow: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
