"""Cross-module oracle suite run by ``fibwords verify``."""
from __future__ import annotations

from dataclasses import dataclass

from . import fixtures
from .core import RationalParam, parse_rational
from .graycode import check_gray, parity_gap
from .limits import dp_count
from .recurrence import derive, generate, psi
from .series import length_series, suffix_series, word_series
from .words import census, enumerate_words, factorize, is_member

VERIFY_N = 14


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        return f"{tag} {self.name}" + (f": {self.detail}" if self.detail else "")


def check_table2():
    for g, (terms, lags) in fixtures.TABLE2.items():
        q = parse_rational(g)
        spec = derive(q)
        got = generate(spec, len(terms) - 1)
        problems = []
        if spec.all_lags() != lags:
            problems.append(f"lags {spec.all_lags()} != {lags}")
        if spec.relation() != fixtures.table2_relation(g):
            problems.append("relation text differs")
        if got != terms:
            problems.append(f"terms {got} != published {terms}")
        yield CheckResult(f"table2[{g}]", not problems, "; ".join(problems))


def check_oracles(n_max: int = VERIFY_N):
    for g in fixtures.TEST_GRID:
        q = parse_rational(g)
        cen = census(q, n_max)
        rec = generate(derive(q), n_max)
        ser = length_series(q, n_max).coeffs
        dp = dp_count(q, n_max)
        enum = [len(enumerate_words(q, n)) for n in range(n_max + 1)]
        lengths_ok = cen.by_length == rec == ser == dp == enum
        bw = word_series(q, n_max)
        weights_ok = all(
            bw[(r, n - r)] == cen.weight(r, n - r) for n in range(n_max + 1) for r in range(n + 1)
        )
        detail = "" if lengths_ok and weights_ok else f"census={cen.by_length} recurrence={rec}"
        yield CheckResult(f"oracles[{g}]", lengths_ok and weights_ok, detail)


def check_decompositions():
    w = fixtures.DECOMPOSITION_WORD
    for g, expected in fixtures.DECOMPOSITIONS.items():
        q = parse_rational(g)
        f = factorize(w, q)
        ok = f.pieces() == expected.split() and f.word() == w
        yield CheckResult(f"decompose[{g}]", ok, "" if ok else str(f))
    for g in fixtures.REJECTED:
        yield CheckResult(f"reject[{g}]", not is_member(w, parse_rational(g)))


def check_psi(n_max: int = 10):
    for g in fixtures.TEST_GRID:
        q = parse_rational(g)
        ok = True
        for n in range(n_max + 1):
            images = [psi(w, q) for w in enumerate_words(q, n)]
            tail = "1" * q.c
            targets = {w for w in enumerate_words(q, n + q.period) if w.endswith(tail)}
            if len(set(images)) != len(images) or set(images) != targets:
                ok = False
                break
        yield CheckResult(f"psi[{g}]", ok, "" if ok else f"fails at n={n}")


def check_gray_fixtures():
    yield CheckResult("gray[q=1,n=5 example]", check_gray(fixtures.GRAY_Q1_N5, 1)
                      and set(fixtures.GRAY_Q1_N5) == set(enumerate_words(RationalParam(1, 1), 5)))
    odd, even = parity_gap(RationalParam(2, 3), 5)
    yield CheckResult("parity[q=2/3,n=5]", (odd, even) == (7, 5),
                      "" if (odd, even) == (7, 5) else f"got ({odd}, {even})")


def check_suffix_series(order: int = 40):
    for g in fixtures.TEST_GRID:
        s = suffix_series(parse_rational(g), order)
        ok = all(v in (0, 1) for v in s.coeffs.values())
        yield CheckResult(f"suffix01[{g}]", ok)


CHECKS = [check_table2, check_oracles, check_decompositions, check_psi, check_gray_fixtures, check_suffix_series]


def run_all():
    for check in CHECKS:
        yield from check()
