import math

import pytest
from hypothesis import given, settings, strategies as st

from fibwords.core import DomainError, RationalParam, parse_rational
from fibwords.limits import (
    default_grid,
    denominator_degrees,
    dominant_root,
    dp_count,
    growth_rate,
    ratio_sweep,
    sweep_csv,
)
from fibwords.recurrence import derive, generate

from conftest import GRID, rp

GOLDEN = (1 + math.sqrt(5)) / 2
TRIBONACCI = (1 + (19 + 3 * math.sqrt(33)) ** (1 / 3) + (19 - 3 * math.sqrt(33)) ** (1 / 3)) / 3


def float_bisect(f, lo, hi, iters=200):
    for _ in range(iters):
        mid = (lo + hi) / 2
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def test_growth_rate_examples():
    assert abs(growth_rate(rp("1")).ratio - GOLDEN) < 1e-9
    assert abs(growth_rate(rp("2")).ratio - TRIBONACCI) < 1e-9
    # Narayana: real root of x^3 = x^2 + 1
    narayana = float_bisect(lambda x: 1 + x * x - x**3, 1.0, 2.0)
    assert abs(growth_rate(rp("1/2")).ratio - narayana) < 1e-9
    assert abs(narayana - 1.4655712319) < 1e-9


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 25), st.integers(1, 25))
def test_root_bracket_and_bounds(c, d):
    q = RationalParam(c, d)
    lo, hi = dominant_root(q, 1e-10)
    degs = denominator_degrees(q)
    assert 1 - sum(lo**e for e in degs) > 0 > 1 - sum(hi**e for e in degs)
    est = growth_rate(q, 1e-10)
    assert 1 < est.ratio < 2
    assert abs(est.ratio * est.beta - 1) < 1e-12


def test_invariant_under_representation():
    assert growth_rate(parse_rational("6/4")) == growth_rate(parse_rational("3/2"))


def test_bad_tolerance():
    with pytest.raises(DomainError):
        growth_rate(rp("1"), 0)


@pytest.mark.parametrize("q,expected", [
    ("3/2", [1, 2, 4, 7, 13, 23, 42, 76, 138, 250, 453, 821]),
    ("5/3", [1, 2, 4, 7, 13, 24, 44, 81, 148, 272, 499, 916]),
])
def test_dp_count_examples(q, expected):
    assert dp_count(rp(q), 11) == expected
    assert dp_count(rp(q), 0) == [1]


@pytest.mark.parametrize("g", GRID)
def test_dp_matches_recurrence_to_300(g):
    q = rp(g)
    assert dp_count(q, 300) == generate(derive(q), 300)


@pytest.mark.parametrize("g", GRID)
def test_empirical_ratio_converges(g):
    est = growth_rate(rp(g))
    assert abs(est.empirical_ratio - est.ratio) < 1e-6


def test_sweep():
    rows = ratio_sweep()
    assert len(rows) == 101
    assert rows[49][0] == RationalParam(1, 1) and abs(rows[49][1] - GOLDEN) < 1e-9
    assert rows[99][0] == RationalParam(2, 1) and abs(rows[99][1] - TRIBONACCI) < 1e-9
    ratios = [r for _, r in rows]
    assert all(a <= b for a, b in zip(ratios, ratios[1:]))
    text = sweep_csv(rows)
    lines = text.splitlines()
    assert lines[0] == "q,ratio" and lines[1].startswith("1/50,")
    with pytest.raises(DomainError):
        ratio_sweep(["1/2", "0"])
    assert ratio_sweep(["0.5"]) == ratio_sweep([RationalParam(1, 2)])
    assert default_grid()[-1] == RationalParam(101, 50)
