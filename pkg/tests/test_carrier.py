from fractions import Fraction
import itertools
import random

import pytest

from flexmeadow.carrier import (
    E, InvalidModulus, OutOfCarrier, model_external, model_ffp_common,
    model_ffp_involutive, model_from_name, model_rat_involutive,
    model_rhat_common,
)
from flexmeadow.external import GenConfig, ext
from flexmeadow.neutrix import FULL, INFINITESIMALS, LIMITED, ZERO_N, cut

F = Fraction


def test_external_examples():
    m = model_external()
    x = ext(2, INFINITESIMALS)
    assert m.eq(m.add(x, m.neg(x)), ext(0, INFINITESIMALS))
    y = ext(0, cut(1, True))
    assert m.eq(m.inv(m.inv(y)), y)
    assert m.eq(m.inv(m.zero), m.zero)
    assert m.err is None and m.enumerate() is None


def test_ffp_involutive_examples():
    m = model_ffp_involutive(5)
    assert m.inv(0) == 0
    assert m.inv(2) == 3
    assert m.nfun(4) == 0
    assert m.enumerate() == [0, 1, 2, 3, 4]


def test_ffp_common_examples():
    m = model_ffp_common(3)
    assert m.inv(0) is E
    assert m.add(E, E) is E
    assert m.add(2, E) is E
    assert m.err is E
    assert len(m.enumerate()) == 4


def test_rhat_examples():
    m = model_rhat_common()
    assert m.eq(m.inv(m.zero), m.err)
    assert m.eq(m.inv(m.err), m.err)
    r = ext(5, INFINITESIMALS)
    assert m.eq(m.add(r, m.err), m.err)
    assert m.eq(m.mul(r, m.err), m.err)
    two = ext(2, INFINITESIMALS)
    assert m.eq(m.mul(two, m.inv(two)), m.one)
    with pytest.raises(OutOfCarrier):
        m.add(ext(1, LIMITED), r)
    with pytest.raises(OutOfCarrier):
        m.parse("1 ; zero")


def test_rat_involutive_examples():
    m = model_rat_involutive()
    assert m.inv(F(0)) == 0
    assert m.inv(m.inv(F(7, 3))) == F(7, 3)
    assert m.mul(F(0), m.mul(F(0), m.inv(F(0)))) == 0


@pytest.mark.parametrize("p", [2, 3, 5, 7, 97])
def test_ffp_compatible_with_field(p):
    m = model_ffp_involutive(p)
    for a, b in itertools.product(range(1, p), repeat=2):
        assert m.add(a, b) == (a + b) % p
        assert m.mul(a, b) == (a * b) % p
        assert (m.inv(a) * a) % p == 1
    c = model_ffp_common(p)
    for a in range(1, p):
        assert c.inv(a) == m.inv(a)


@pytest.mark.parametrize("p", [0, 1, 4, 9, 101, -3])
def test_invalid_modulus(p):
    with pytest.raises(InvalidModulus):
        model_ffp_involutive(p)
    with pytest.raises(InvalidModulus):
        model_ffp_common(p)


def test_rhat_closure():
    m = model_rhat_common()
    rng = random.Random(1)
    xs = [m.sample(rng, GenConfig()) for _ in range(200)]
    for x, y in zip(xs, xs[1:]):
        for v in (m.add(x, y), m.mul(x, y), m.neg(x), m.inv(x), m.nfun(x)):
            m.check(v)


@pytest.mark.parametrize("name", ["ffp:5", "ffp-common:3", "ffp:2"])
def test_enumerate_duplicate_free(name):
    m = model_from_name(name)
    elems = m.enumerate()
    for a, b in itertools.combinations(elems, 2):
        assert not m.eq(a, b)


def test_model_names():
    assert model_from_name("external").name == "external"
    assert model_from_name("ffp:7").name == "ffp:7"
    assert model_from_name("ffp-common:3").name == "ffp-common:3"
    assert model_from_name("rhat-common").name == "rhat-common"
    assert model_from_name("rat-involutive").name == "rat-involutive"
    with pytest.raises(ValueError):
        model_from_name("reals")
    with pytest.raises(InvalidModulus):
        model_from_name("ffp:x")


def test_literal_parsing():
    assert model_from_name("ffp-common:3").parse("E") is E
    assert model_from_name("ffp:5").parse("7") == 2
    assert model_from_name("rat-involutive").parse("7/3") == F(7, 3)
