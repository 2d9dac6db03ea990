"""Growth rate of |W_{q,n}| and the ratio sweep over a rational grid."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .core import DomainError, RationalParam, floor_div_q

DEFAULT_TOL = 1e-12
REFERENCE_N = 200


def denominator_degrees(q: RationalParam) -> list[int]:
    """Exponents k with coefficient -1 in D(x) = 1 - x^(c+d) - P_q(x, x)."""
    return [1 + floor_div_q(i, q) + i for i in range(q.c)] + [q.period]


def _sign_at_dyadic(m: int, k: int, degrees: list[int]) -> int:
    """Sign of D(m / 2^k), computed exactly in integers."""
    top = max(degrees)
    # 2^(k*top) * D(x) = 2^(k*top) - sum m^e 2^(k*(top-e))
    value = (1 << (k * top)) - sum(m**e << (k * (top - e)) for e in degrees)
    return (value > 0) - (value < 0)


@dataclass(frozen=True)
class GrowthEstimate:
    q: RationalParam
    beta: float
    beta_decimal: str
    ratio: float
    tolerance: float
    empirical_ratio: float

    def to_json(self) -> dict:
        return {"q": str(self.q), "beta": self.beta_decimal, "ratio": self.ratio}


def dominant_root(q: RationalParam, tol: float = DEFAULT_TOL) -> tuple[Fraction, Fraction]:
    """Dyadic bracket (lo, hi) around the root of D in (0, 1), with 1/lo - 1/hi < tol.

    D(0) = 1, D(1) = -c and D is strictly decreasing on [0, 1], so the root
    is unique.
    """
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    degrees = denominator_degrees(q)
    lo_m, hi_m, k = 0, 1, 0
    tol_f = Fraction(tol)
    while True:
        lo_m, hi_m, k = 2 * lo_m, 2 * hi_m, k + 1
        mid = lo_m + 1
        if _sign_at_dyadic(mid, k, degrees) > 0:
            lo_m = mid
        else:
            hi_m = mid
        if lo_m > 0 and Fraction(1 << k, lo_m) - Fraction(1 << k, hi_m) < tol_f:
            return Fraction(lo_m, 1 << k), Fraction(hi_m, 1 << k)


def growth_rate(q: RationalParam, tol: float = DEFAULT_TOL, reference_n: int = REFERENCE_N) -> GrowthEstimate:
    """lim w_(n+1)/w_n as the reciprocal of the dominant denominator root."""
    lo, hi = dominant_root(q, tol)
    beta = (lo + hi) / 2
    w = dp_count(q, reference_n + 1)
    digits = max(17, len(str(hi.denominator)))
    with localcontext() as ctx:
        ctx.prec = digits
        beta_dec = Decimal(beta.numerator) / Decimal(beta.denominator)
    return GrowthEstimate(
        q=q,
        beta=float(beta),
        beta_decimal=str(beta_dec),
        ratio=float(1 / beta),
        tolerance=tol,
        empirical_ratio=float(Fraction(w[reference_n + 1], w[reference_n])),
    )


def dp_count(q: RationalParam, n_max: int) -> list[int]:
    """|W_{q,n}| for n <= n_max by composing suffix words directly.

    f(m) counts sequences of suffix words of total length m; a member of
    length n is 1^(n-m) followed by such a sequence.
    """
    if n_max < 0:
        raise DomainError(f"n_max must be non-negative, got {n_max}")
    lengths = []
    i = 0
    while True:
        ell = 1 + floor_div_q(i, q) + i
        if ell > n_max:
            break
        lengths.append(ell)
        i += 1
    f = [1] + [0] * n_max
    for m in range(1, n_max + 1):
        f[m] = sum(f[m - ell] for ell in lengths if ell <= m)
    out = []
    running = 0
    for m in range(n_max + 1):
        running += f[m]
        out.append(running)
    return out


def default_grid(denominator: int = 50, count: int = 101) -> list[RationalParam]:
    return [RationalParam(k, denominator) for k in range(1, count + 1)]


def ratio_sweep(grid=None, tol: float = DEFAULT_TOL) -> list[tuple[RationalParam, float]]:
    if grid is None:
        grid = default_grid()
    # RationalParam.of rejects non-positive points
    points = [RationalParam.of(g) for g in grid]
    out = []
    for q in points:
        lo, hi = dominant_root(q, tol)
        out.append((q, float(2 / (lo + hi))))
    return out


def sweep_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["q", "ratio"])
    for q, ratio in rows:
        writer.writerow([str(q), f"{ratio:.12f}"])
    return buf.getvalue()
