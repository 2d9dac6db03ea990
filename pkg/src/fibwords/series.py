"""Exact truncated power series for the suffix and word generating functions.

Bivariate series are keyed by ``(r, i)`` for the monomial z^r y^i (r zeros,
i ones) and truncated at total degree ``order``. Coefficients are Python
ints, so nothing overflows.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import DomainError, RationalParam, model_polynomial

DEFAULT_ORDER = 64


@dataclass(frozen=True)
class TruncatedBivariateSeries:
    order: int
    coeffs: dict  # (r, i) -> nonzero int, r + i <= order

    @classmethod
    def from_terms(cls, terms, order: int) -> "TruncatedBivariateSeries":
        acc: dict[tuple[int, int], int] = {}
        for (r, i), v in terms:
            if r < 0 or i < 0:
                raise DomainError(f"negative exponent ({r}, {i})")
            if r + i <= order and v:
                acc[(r, i)] = acc.get((r, i), 0) + v
        return cls(order, {k: v for k, v in acc.items() if v})

    @classmethod
    def one(cls, order: int) -> "TruncatedBivariateSeries":
        return cls(order, {(0, 0): 1})

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.coeffs.get(key, 0)

    def _order_with(self, other) -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        n = self._order_with(other)
        return TruncatedBivariateSeries.from_terms(list(self.coeffs.items()) + list(other.coeffs.items()), n)

    def __neg__(self):
        return TruncatedBivariateSeries(self.order, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        n = self._order_with(other)
        acc: dict[tuple[int, int], int] = {}
        right = sorted(other.coeffs.items(), key=lambda t: t[0][0] + t[0][1])
        for (r1, i1), v1 in self.coeffs.items():
            room = n - r1 - i1
            if room < 0:
                continue
            for (r2, i2), v2 in right:
                if r2 + i2 > room:
                    break
                k = (r1 + r2, i1 + i2)
                acc[k] = acc.get(k, 0) + v1 * v2
        return TruncatedBivariateSeries(n, {k: v for k, v in acc.items() if v})

    def inverse(self) -> "TruncatedBivariateSeries":
        """Multiplicative inverse; the constant term must be 1.

        Coefficients are filled in graded order from t = 1 - (s - 1) * t.
        """
        if self[(0, 0)] != 1:
            raise DomainError(f"series inverse needs constant term 1, got {self[(0, 0)]}")
        rest = [(k, v) for k, v in self.coeffs.items() if k != (0, 0)]
        t: dict[tuple[int, int], int] = {(0, 0): 1}
        for deg in range(1, self.order + 1):
            for r in range(deg + 1):
                i = deg - r
                acc = 0
                for (a, b), v in rest:
                    if a <= r and b <= i:
                        prev = t.get((r - a, i - b))
                        if prev:
                            acc -= v * prev
                if acc:
                    t[(r, i)] = acc
        return TruncatedBivariateSeries(self.order, t)

    def total_degree_sums(self) -> "TruncatedUnivariateSeries":
        """Specialize y = z = x."""
        out = [0] * (self.order + 1)
        for (r, i), v in self.coeffs.items():
            out[r + i] += v
        return TruncatedUnivariateSeries(self.order, out)

    def items(self):
        """Terms sorted by total degree, then by zeros-exponent."""
        return sorted(self.coeffs.items(), key=lambda t: (t[0][0] + t[0][1], t[0][0]))

    def to_json(self) -> list:
        return [[r, i, str(v)] for (r, i), v in self.items()]


@dataclass(frozen=True)
class TruncatedUnivariateSeries:
    order: int
    coeffs: list  # dense, index = degree, length order + 1

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise DomainError(f"expected {self.order + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_list(cls, values, order: int) -> "TruncatedUnivariateSeries":
        vals = list(values)[: order + 1]
        return cls(order, vals + [0] * (order + 1 - len(vals)))

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other):
        n = min(self.order, other.order)
        return TruncatedUnivariateSeries(n, [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __neg__(self):
        return TruncatedUnivariateSeries(self.order, [-v for v in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedUnivariateSeries(n, out)

    def inverse(self) -> "TruncatedUnivariateSeries":
        if self.coeffs[0] != 1:
            raise DomainError(f"series inverse needs constant term 1, got {self.coeffs[0]}")
        support = [(k, v) for k, v in enumerate(self.coeffs) if k and v]
        out = [1] + [0] * self.order
        for n in range(1, self.order + 1):
            out[n] = -sum(v * out[n - k] for k, v in support if k <= n)
        return TruncatedUnivariateSeries(self.order, out)

    def to_json(self) -> list:
        return [str(v) for v in self.coeffs]


def series_add(a, b):
    return a + b


def series_mul(a, b):
    return a * b


def series_inverse(s):
    return s.inverse()


def _bivariate(terms, order):
    return TruncatedBivariateSeries.from_terms(terms, order)


def _infix_factor(q: RationalParam, order: int) -> TruncatedBivariateSeries:
    """1 - z^d y^c."""
    return _bivariate([((0, 0), 1), ((q.d, q.c), -1)], order)


def suffix_series(q: RationalParam, order: int = DEFAULT_ORDER) -> TruncatedBivariateSeries:
    """P_q(y, z) / (1 - z^d y^c), truncated."""
    p = _bivariate([(t, 1) for t in model_polynomial(q)], order)
    return p * _infix_factor(q, order).inverse()


def word_series(q: RationalParam, order: int = DEFAULT_ORDER) -> TruncatedBivariateSeries:
    """(1 - z^d y^c) / ((1 - y)(1 - z^d y^c - P_q(y, z))), truncated."""
    num = _infix_factor(q, order)
    inner = num - _bivariate([(t, 1) for t in model_polynomial(q)], order)
    den = _bivariate([((0, 0), 1), ((0, 1), -1)], order) * inner
    return num * den.inverse()


def length_series(q: RationalParam, order: int = DEFAULT_ORDER) -> TruncatedUnivariateSeries:
    """(1 - x^(c+d)) / ((1 - x)(1 - x^(c+d) - P_q(x, x))), truncated."""
    def poly(pairs):
        out = [0] * (order + 1)
        for k, v in pairs:
            if k <= order:
                out[k] += v
        return TruncatedUnivariateSeries(order, out)

    n = q.period
    num = poly([(0, 1), (n, -1)])
    inner = poly([(0, 1), (n, -1)] + [(deg, -1) for deg in model_polynomial(q).degrees()])
    den = poly([(0, 1), (1, -1)]) * inner
    return num * den.inverse()


def zero_popularity_series(q: RationalParam, order: int = DEFAULT_ORDER) -> TruncatedUnivariateSeries:
    """Total number of zeros over all words of each length.

    Equals d/dz W_q(x, xz) at z = 1, read off the bivariate coefficients as
    sum_r r * w_(r, n-r).
    """
    out = [0] * (order + 1)
    for (r, i), v in word_series(q, order).coeffs.items():
        out[r + i] += r * v
    return TruncatedUnivariateSeries(order, out)
