import random

import pytest
from hypothesis import given, settings, strategies as st

from fibwords.core import DomainError
from fibwords.series import (
    TruncatedBivariateSeries as B,
    TruncatedUnivariateSeries as U,
    length_series,
    series_add,
    series_inverse,
    series_mul,
    suffix_series,
    word_series,
    zero_popularity_series,
)
from fibwords.words import census

from conftest import GRID, rp


def test_univariate_geometric_inverse():
    s = U.from_list([1, -1], 3)
    assert series_inverse(s).coeffs == [1, 1, 1, 1]


def test_bivariate_diagonal_geometric():
    s = B.from_terms([((0, 0), 1), ((1, 1), -1)], 4)
    assert series_inverse(s).coeffs == {(0, 0): 1, (1, 1): 1, (2, 2): 1}


def test_inverse_requires_unit_constant():
    with pytest.raises(DomainError):
        B.from_terms([((0, 0), 2), ((1, 0), 1)], 3).inverse()
    with pytest.raises(DomainError):
        U.from_list([0, 1], 3).inverse()


def test_add_mul_small():
    a = B.from_terms([((0, 0), 1), ((1, 0), 2)], 3)
    b = B.from_terms([((0, 1), 3)], 3)
    assert series_add(a, b).coeffs == {(0, 0): 1, (1, 0): 2, (0, 1): 3}
    assert series_mul(a, b).coeffs == {(0, 1): 3, (1, 1): 6}
    assert (a - a).coeffs == {}


@settings(max_examples=60)
@given(st.dictionaries(st.tuples(st.integers(0, 6), st.integers(0, 6)), st.integers(-5, 5), max_size=8),
       st.integers(2, 10))
def test_bivariate_times_inverse_is_one(terms, order):
    terms = {k: v for k, v in terms.items() if k != (0, 0)}
    s = B.from_terms([((0, 0), 1)] + list(terms.items()), order)
    assert (s * s.inverse()).coeffs == {(0, 0): 1}


def test_univariate_random_inverse():
    rng = random.Random(7)
    for _ in range(20):
        vals = [1] + [rng.choice([0, 0, 0, 1, -1, 3]) for _ in range(12)]
        s = U.from_list(vals, 15)
        assert (s * s.inverse()).coeffs == [1] + [0] * 15


def test_specialization_of_random_product():
    rng = random.Random(3)
    a = B.from_terms([((rng.randrange(5), rng.randrange(5)), rng.randrange(-3, 4)) for _ in range(6)], 8)
    b = B.from_terms([((rng.randrange(5), rng.randrange(5)), rng.randrange(-3, 4)) for _ in range(6)], 8)
    assert (a * b).total_degree_sums().coeffs == (a.total_degree_sums() * b.total_degree_sums()).coeffs


def test_suffix_series_examples():
    s = suffix_series(rp("3/2"), 10)
    assert set(s.coeffs) == {(1, 0), (1, 1), (2, 2), (3, 3), (3, 4), (4, 5)}
    s = suffix_series(rp("1/2"), 7)
    assert set(s.coeffs) == {(1, 0), (3, 1), (5, 2)}
    for g in GRID:
        assert suffix_series(rp(g), 5)[(1, 0)] == 1


@pytest.mark.parametrize("g", GRID)
def test_suffix_series_matches_suffix_words(g):
    from fibwords.words import suffix_elements

    q = rp(g)
    s = suffix_series(q, 30)
    assert set(s.coeffs) == {(w.count("0"), w.count("1")) for w in suffix_elements(q, 30)}
    assert set(s.coeffs.values()) == {1}


def test_word_series_examples():
    w = word_series(rp("1"), 6)
    assert w[(3, 1)] == 3 and w[(2, 2)] == 2
    for g in ("1/3", "5/2"):
        ws = word_series(rp(g), 12)
        assert all(ws[(0, i)] == 1 for i in range(13))
    assert word_series(rp("2"), 3).total_degree_sums().coeffs == [1, 2, 4, 7]


@pytest.mark.parametrize("q,expected", [
    ("1", [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233]),
    ("3/5", [1, 2, 3, 5, 8, 12, 19, 30, 46, 72, 113, 176]),
    ("5/2", [1, 2, 4, 8, 15, 29, 56, 107, 206, 396, 761, 1463]),
])
def test_length_series_examples(q, expected):
    assert length_series(rp(q), 11).coeffs == expected


@pytest.mark.parametrize("g", GRID)
def test_series_against_census(g):
    q = rp(g)
    c = census(q, 12)
    ws = word_series(q, 12)
    for n in range(13):
        for r in range(n + 1):
            assert ws[(r, n - r)] == c.weight(r, n - r)
    assert length_series(q, 40).coeffs == word_series(q, 40).total_degree_sums().coeffs
    assert zero_popularity_series(q, 12).coeffs == c.zero_popularity


def test_zero_popularity_examples():
    z = zero_popularity_series(rp("1"), 6)
    assert z[3] == 8 and z[4] == 18 and z[0] == 0
    assert zero_popularity_series(rp("9/7"), 0).coeffs == [0]


def test_big_coefficients_are_exact():
    s = length_series(rp("5"), 200)
    assert s[200] > 2**64
    assert s[200] == s[199] + s[198] + s[197] + s[196] + s[195] + s[194]


def test_json_forms():
    assert length_series(rp("1"), 3).to_json() == ["1", "2", "3", "5"]
    assert suffix_series(rp("2"), 2).to_json() == [[1, 0, "1"], [1, 1, "1"]]
