"""Linear recurrences with 0-1 coefficients and the psi insertion map."""
from __future__ import annotations

from dataclasses import dataclass

from .core import DomainError, RationalParam, model_polynomial
from .words import is_member


@dataclass(frozen=True)
class RecurrenceSpec:
    """w_n = sum_{j in lags} w_(n-j) + w_(n-extra_lag), with w_0.. given."""

    q: RationalParam
    lags: tuple[int, ...]
    extra_lag: int
    initial: tuple[int, ...]

    def all_lags(self) -> tuple[int, ...]:
        return tuple(sorted(self.lags + (self.extra_lag,)))

    def relation(self) -> str:
        return "w_n = " + " + ".join(f"w_{{n-{j}}}" for j in self.all_lags())


def derive(q: RationalParam) -> RecurrenceSpec:
    """Lag set from the degrees of P_q(x, x), plus the infix length c + d.

    Initial values come from running the recurrence with w_m = 0 for m < 0
    and adding the word 1^n for each n < c + d.
    """
    lags = tuple(sorted(model_polynomial(q).degrees()))
    extra = q.period
    full = lags + (extra,)
    initial: list[int] = []
    for n in range(extra):
        initial.append(sum(initial[n - j] for j in full if n - j >= 0) + 1)
    return RecurrenceSpec(q, lags, extra, tuple(initial))


def generate(spec: RecurrenceSpec, n_max: int) -> list[int]:
    """w_0 .. w_n_max exactly."""
    if n_max < 0:
        raise DomainError(f"n_max must be non-negative, got {n_max}")
    full = spec.all_lags()
    w = list(spec.initial[: n_max + 1])
    for n in range(len(w), n_max + 1):
        w.append(sum(w[n - j] for j in full))
    return w


def psi(w: str, q: RationalParam) -> str:
    """Insert 0^d 1^c right after the rightmost 0; 1^k maps to 1^(k+c+d)."""
    if not is_member(w, q):
        raise DomainError(f"{w!r} is not a member of W_{q}")
    k = w.rfind("0")
    if k < 0:
        return "1" * (len(w) + q.period)
    return w[: k + 1] + "0" * q.d + "1" * q.c + w[k + 1:]


def compositions_reference(parts, n_max: int) -> list[int]:
    """Number of compositions of n into the given parts, for n = 0..n_max."""
    parts = sorted(set(parts))
    if any(p < 1 for p in parts):
        raise DomainError(f"parts must be positive, got {parts}")
    a = [1]
    for n in range(1, n_max + 1):
        a.append(sum(a[n - p] for p in parts if p <= n))
    return a
