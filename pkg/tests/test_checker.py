import pytest

from flexmeadow.axioms import (
    CATALOG_NAMES, Exhaustive, Random, catalog, check, check_suite,
    evaluate_law, find_law, parse_law, parse_law_file, sample_env,
)
from flexmeadow.axioms.checker import MIN_EFFECTIVE
from flexmeadow.axioms.laws import LawFileError, UnknownCatalog
from flexmeadow.carrier import (
    model_external, model_ffp_common, model_ffp_involutive, model_rat_involutive,
)


def test_catalog_sizes():
    assert len(catalog("involutive")) == 10
    assert len(catalog("common")) == 14
    assert len(catalog("flexible")) == 10
    with pytest.raises(UnknownCatalog):
        catalog("fields")


def test_every_catalog_has_unique_ids():
    for name in CATALOG_NAMES:
        ids = [law.id for law in catalog(name)]
        assert len(ids) == len(set(ids))


def test_sampling_is_deterministic():
    m = model_external()
    law = find_law("FI8", "flexible")
    a = [sample_env(m, law, 42, i) for i in range(50)]
    b = [sample_env(m, law, 42, i) for i in range(50)]
    for ea, eb in zip(a, b):
        assert all(m.eq(ea[v], eb[v]) for v in law.vars)


def test_same_seed_same_report():
    m = model_external()
    law = find_law("DIST-classical")
    r1 = check(m, law, Random(2000, seed=3))
    r2 = check(m, law, Random(2000, seed=3))
    assert r1.status == r2.status == "fail"
    assert r1.counterexample.index == r2.counterexample.index
    assert r1.to_json(m) == r2.to_json(m)


def test_counterexample_is_sound():
    m = model_external()
    law = find_law("FI8-printed")
    r = check(m, law, Random(10_000, seed=42))
    assert r.status == "fail"
    cx = r.counterexample
    applicable, holds, lhs, rhs = evaluate_law(m, law, cx.bindings)
    assert applicable and not holds
    assert m.eq(lhs, cx.lhs) and m.eq(rhs, cx.rhs)
    assert r.samples == cx.index + 1


def test_exhaustive_visits_every_assignment():
    m = model_ffp_involutive(5)
    r = check(m, find_law("I1"), Exhaustive())
    assert r.passed and r.samples == r.effective == 125
    r = check(model_ffp_common(3), find_law("M14"), Exhaustive())
    assert r.passed and r.samples == 4


def test_exhaustive_rejects_infinite_model():
    r = check(model_external(), find_law("FI2"), Exhaustive())
    assert r.status == "error"


def test_exhaustive_finds_planted_failure():
    law = parse_law("BAD : x*x = x")
    r = check(model_ffp_involutive(3), law, Exhaustive())
    assert r.status == "fail" and r.counterexample.bindings == {"x": 2}


def test_guard_skips_samples():
    m = model_ffp_involutive(5)
    law = parse_law("G : nonzero(x) => x*x^-1 = 1")
    r = check(m, law, Exhaustive())
    assert r.passed and r.samples == 5 and r.effective == 4
    eq_guard = parse_law("H : x = 0 => x + x = x")
    r = check(m, eq_guard, Exhaustive())
    assert r.passed and r.effective == 1


def test_insufficient_samples_is_an_error():
    m = model_ffp_involutive(5)
    law = parse_law("G : x = 0 => x + x = x")
    r = check(m, law, Random(200, seed=1))
    assert r.effective < MIN_EFFECTIVE
    assert r.status == "error" and "InsufficientSamples" in r.error


def test_unsupported_err_symbol_is_reported():
    r = check(model_external(), find_law("M13"), Random(10))
    assert r.status == "error" and "ErrUnsupported" in r.error


def test_rat_involutive_passes_its_catalog():
    reports = check_suite(model_rat_involutive(), ["involutive"], Random(500, seed=5))
    assert all(r.passed for r in reports)


def test_law_file_parsing():
    laws = parse_law_file("""
    # comment
    L1 : x + y = y + x
    L2 : zeroless(x) => x*x^-1 = 1 + N(x*x^-1)
    L3 : N(x+y) = N(x) | N(x+y) = N(y)
    """, "mine")
    assert [l.kind for l in laws] == ["identity", "conditional", "disjunction"]
    assert laws[0].vars == ("x", "y")
    assert laws[1].guard.kind == "zeroless"
    assert all(l.catalog == "mine" for l in laws)
    for bad in ("x + y = y + x", "L : x + y", "L : x = y = z", "L : maybe(x) => x = x", "L : x*-y = x"):
        with pytest.raises(LawFileError):
            parse_law(bad)
