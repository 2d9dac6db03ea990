from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fibwords.core import (
    DomainError,
    RationalParam,
    SpawningInfix,
    floor_div_q,
    model_polynomial,
    parse_rational,
)


@pytest.mark.parametrize("text,c,d", [("4", 4, 1), ("6/4", 3, 2), ("0.02", 1, 50), ("3/2", 3, 2), (" 10 / 4 ", 5, 2), ("1.5", 3, 2)])
def test_parse_rational(text, c, d):
    q = parse_rational(text)
    assert (q.c, q.d) == (c, d)


@pytest.mark.parametrize("text", ["0", "-1", "-3/2", "0/5", "1/0", "abc", "", "1/2/3", "nan", "inf"])
def test_parse_rational_rejects(text):
    with pytest.raises(DomainError):
        parse_rational(text)


def test_constructor_reduces_and_rejects():
    assert RationalParam(6, 4) == RationalParam(3, 2)
    with pytest.raises(DomainError):
        RationalParam(0, 1)
    with pytest.raises(DomainError):
        RationalParam(1, -2)


@given(st.integers(1, 500), st.integers(1, 500))
def test_format_parse_roundtrip(c, d):
    q = RationalParam(c, d)
    assert parse_rational(str(q)) == q
    assert q.as_fraction() == Fraction(c, d)


def test_floor_div_q_examples():
    assert floor_div_q(2, RationalParam(3, 2)) == 1
    assert floor_div_q(0, RationalParam(7, 3)) == 0
    assert floor_div_q(2, RationalParam(3, 4)) == 2


@given(st.integers(0, 10**30), st.integers(1, 10**6), st.integers(1, 10**6))
def test_floor_div_q_is_exact(i, c, d):
    q = RationalParam(c, d)
    assert floor_div_q(i, q) == (Fraction(i) / q.as_fraction()).__floor__()


@pytest.mark.parametrize("q,terms", [
    ("2/3", [(1, 0), (2, 1)]),
    ("3/2", [(1, 0), (1, 1), (2, 2)]),
    ("1/5", [(1, 0)]),
    ("3/4", [(1, 0), (2, 1), (3, 2)]),
])
def test_model_polynomial(q, terms):
    assert list(model_polynomial(parse_rational(q))) == terms


def test_model_polynomial_text():
    assert str(model_polynomial(parse_rational("3/4"))) == "z + z^2y + z^3y^2"


@given(st.integers(1, 40), st.integers(1, 40))
def test_model_polynomial_invariants(c, d):
    q = RationalParam(c, d)
    p = model_polynomial(q)
    assert len(p) == q.c
    assert p.terms[0] == (1, 0)
    for i, (r, ones) in enumerate(p):
        assert ones == i and r == 1 + floor_div_q(i, q)
    degs = p.degrees()
    assert all(a < b for a, b in zip(degs, degs[1:]))
    assert 1 in degs and max(degs) < q.period


def test_spawning_infix():
    s = SpawningInfix.of(RationalParam(3, 2))
    assert s.word() == "00111" and len(s) == 5
