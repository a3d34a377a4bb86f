"""Check laws against a model by random sampling or exhaustive enumeration."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..carrier import ErrUnsupported, ExternalModel, MeadowCarrier, OutOfCarrier
from ..external import GenConfig, check_fil
from .laws import Law, catalog
from .terms import UnboundVariable, eval_term

__all__ = [
    "Random", "Exhaustive", "Counterexample", "Report", "MIN_EFFECTIVE",
    "check", "check_suite", "evaluate_law", "sample_env",
]

MIN_EFFECTIVE = 100


@dataclass(frozen=True)
class Random:
    samples: int = 10_000
    seed: int = 0
    config: GenConfig = GenConfig()

    def describe(self) -> str:
        return f"random({self.samples}, seed={self.seed})"


@dataclass(frozen=True)
class Exhaustive:
    def describe(self) -> str:
        return "exhaustive"


Strategy = Union[Random, Exhaustive]


@dataclass
class Counterexample:
    bindings: Dict[str, object]
    lhs: object
    rhs: object
    index: int = 0


@dataclass
class Report:
    model: str
    law: str
    catalog: str
    strategy: str
    samples: int = 0
    effective: int = 0
    status: str = "pass"  # pass | fail | error
    counterexample: Optional[Counterexample] = None
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self, m: MeadowCarrier) -> dict:
        cx = None
        if self.counterexample is not None:
            c = self.counterexample
            cx = {
                "bindings": {k: m.format(v) for k, v in c.bindings.items()},
                "lhs": m.format(c.lhs),
                "rhs": m.format(c.rhs),
            }
        out = {
            "law": self.law,
            "catalog": self.catalog,
            "status": self.status,
            "samples": self.samples,
            "effective_samples": self.effective,
            "counterexample": cx,
        }
        if self.error is not None:
            out["error"] = self.error
        return out


def sample_env(m: MeadowCarrier, law: Law, seed: int, index: int,
               config: GenConfig = GenConfig()) -> Dict[str, object]:
    """Bindings for sample ``index``; depends only on ``(seed, index)``."""
    rng = random.Random((seed << 32) ^ index)
    return {v: m.sample(rng, config) for v in law.vars}


def _guard_holds(m: MeadowCarrier, law: Law, env) -> bool:
    g = law.guard
    if g is None:
        return True
    if g.kind == "equation":
        return m.eq(eval_term(m, g.lhs, env), eval_term(m, g.rhs, env))
    x = env[g.var]
    if g.kind == "zeroless":
        return not m.eq(x, m.nfun(x))
    if g.kind == "nonzero":
        return not m.eq(x, m.zero)
    raise ValueError(f"unknown guard kind {g.kind!r}")


def _builtin(m: MeadowCarrier, law: Law, env) -> Tuple[bool, bool, object, object]:
    """Returns ``(applicable, holds, lhs, rhs)``."""
    x = env["x"]
    name = law.builtin
    if name == "fil":
        if m.eq(x, m.nfun(x)):
            return False, True, None, None
        z = m.mul(x, m.inv(x))
        one_e = m.add(m.one, m.nfun(z))
        if isinstance(m, ExternalModel):
            holds = check_fil(x)
        else:
            holds = m.eq(z, one_e) and not m.eq(z, m.nfun(z))
        return True, holds, z, one_e
    if name == "vnr-mul":
        lhs = m.mul(m.mul(x, x), m.inv(x))
        return True, m.eq(lhs, x), lhs, x
    if name == "vnr-add":
        lhs = m.add(m.add(x, x), m.neg(x))
        return True, m.eq(lhs, x), lhs, x
    if name == "subdist":
        y, z = env["y"], env["z"]
        lhs = m.mul(x, m.add(y, z))
        rhs = m.add(m.mul(x, y), m.mul(x, z))
        return True, m.subset(lhs, rhs), lhs, rhs
    raise ValueError(f"unknown builtin {name!r}")


def evaluate_law(m: MeadowCarrier, law: Law, env) -> Tuple[bool, bool, object, object]:
    """Evaluate one instance of ``law``.

    Returns ``(applicable, holds, lhs, rhs)``; ``applicable`` is false when a
    guard rules the sample out.
    """
    if law.kind == "builtin":
        return _builtin(m, law, env)
    if law.kind == "disjunction":
        first = None
        for lhs_t, rhs_t in law.disjuncts:
            lhs, rhs = eval_term(m, lhs_t, env), eval_term(m, rhs_t, env)
            if m.eq(lhs, rhs):
                return True, True, lhs, rhs
            if first is None:
                first = (lhs, rhs)
        return True, False, first[0], first[1]
    if law.kind == "conditional" and not _guard_holds(m, law, env):
        return False, True, None, None
    lhs, rhs = eval_term(m, law.lhs, env), eval_term(m, law.rhs, env)
    return True, m.eq(lhs, rhs), lhs, rhs


def _assignments(m: MeadowCarrier, law: Law) -> Iterable[Dict[str, object]]:
    elems = m.enumerate()
    for combo in itertools.product(elems, repeat=len(law.vars)):
        yield dict(zip(law.vars, combo))


def check(m: MeadowCarrier, law: Law, strategy: Strategy = Random()) -> Report:
    report = Report(m.name, law.id, law.catalog, strategy.describe())
    if isinstance(strategy, Exhaustive):
        if m.enumerate() is None:
            report.status = "error"
            report.error = f"model {m.name} is infinite; exhaustive check unavailable"
            return report
        envs = _assignments(m, law)
    else:
        envs = (sample_env(m, law, strategy.seed, i, strategy.config)
                for i in range(strategy.samples))
    try:
        for i, env in enumerate(envs):
            report.samples += 1
            applicable, holds, lhs, rhs = evaluate_law(m, law, env)
            if not applicable:
                continue
            report.effective += 1
            if not holds:
                report.status = "fail"
                report.counterexample = Counterexample(env, lhs, rhs, i)
                return report
    except (ErrUnsupported, OutOfCarrier, UnboundVariable) as exc:
        report.status = "error"
        report.error = f"{type(exc).__name__}: {exc}"
        return report
    if isinstance(strategy, Random) and report.effective < MIN_EFFECTIVE:
        report.status = "error"
        report.error = (f"InsufficientSamples: only {report.effective} of "
                        f"{report.samples} samples satisfied the guard")
    return report


def check_suite(m: MeadowCarrier, catalog_names: Sequence[str],
                strategy: Strategy = Random()) -> List[Report]:
    """Check every law of the named catalogs, in catalog order."""
    reports = []
    for name in catalog_names:
        for law in catalog(name):
            reports.append(check(m, law, strategy))
    return reports
