"""Word-level semantics: membership, block parsing, factorization, enumeration.

Words are plain ``str`` objects over ``"01"``. :func:`census` is the
brute-force oracle; it scans every one of the 2^n words and shares no code
with the series or recurrence modules.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass, field

from . import _kernels
from .core import DomainError, RationalParam, ResourceError, floor_div_q

DEFAULT_MAX_N = 24
MAX_N_ENV = "FIBWORDS_MAX_N"

_WORD_RE = re.compile(r"^[01]*$")


class FactorizationError(DomainError):
    """Word is not a member, so it has no suffix factorization."""

    def __init__(self, message: str, blocks=()):
        super().__init__(message)
        self.blocks = list(blocks)


def max_n() -> int:
    """Brute-force length cap, overridable through ``FIBWORDS_MAX_N``."""
    raw = os.environ.get(MAX_N_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{MAX_N_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise DomainError(f"{MAX_N_ENV} must be non-negative")
    return value


def _check_cap(n: int, cap: int | None) -> None:
    limit = max_n() if cap is None else cap
    if n < 0:
        raise DomainError(f"length must be non-negative, got {n}")
    if n > limit:
        raise ResourceError(f"n={n} exceeds the brute-force cap {limit} (set {MAX_N_ENV} or pass a larger cap)")


def check_word(w: str) -> str:
    if not isinstance(w, str) or not _WORD_RE.match(w):
        raise DomainError(f"not a binary word: {w!r}")
    return w


@dataclass(frozen=True)
class BlockDecomposition:
    leading_ones: int
    blocks: tuple[tuple[int, int], ...]

    def word(self) -> str:
        return "1" * self.leading_ones + "".join("0" * a + "1" * b for a, b in self.blocks)


@dataclass(frozen=True)
class SuffixFactorization:
    """Leading run 1^k followed by suffix words, each given by its ones-count."""

    leading_ones: int
    factors: tuple[int, ...]
    q: RationalParam

    def pieces(self) -> list[str]:
        out = ["1" * self.leading_ones] if self.leading_ones else []
        out.extend(suffix_word(i, self.q) for i in self.factors)
        return out

    def word(self) -> str:
        return "".join(self.pieces())

    def __str__(self) -> str:
        return "|".join(self.pieces())


def parse_blocks(w: str) -> BlockDecomposition:
    """Split ``w`` into a leading 1-run and maximal blocks 0^a 1^b."""
    check_word(w)
    k = len(w) - len(w.lstrip("1"))
    blocks = tuple((len(m.group(1)), len(m.group(2))) for m in re.finditer(r"(0+)(1*)", w[k:]))
    return BlockDecomposition(k, blocks)


def block_ok(a: int, b: int, q: RationalParam) -> bool:
    return a == 0 or a * q.c > b * q.d


def is_member(w: str, q: RationalParam) -> bool:
    return all(block_ok(a, b, q) for a, b in parse_blocks(w).blocks)


def suffix_word(i: int, q: RationalParam) -> str:
    """The element 0^(1+floor(i/q)) 1^i of the suffix set."""
    return "0" * (1 + floor_div_q(i, q)) + "1" * i


def factorize(w: str, q: RationalParam) -> SuffixFactorization:
    """Factor a member word as 1^k followed by suffix-set elements.

    Each block 0^a 1^b contributes ``a - 1 - floor(b/q)`` single zeros and
    then the element with ``b`` ones.
    """
    dec = parse_blocks(w)
    bad = [(a, b) for a, b in dec.blocks if not block_ok(a, b, q)]
    if bad:
        names = ", ".join("0" * a + "1" * b for a, b in bad)
        raise FactorizationError(f"{w!r} is not in W_{q}: factor(s) {names} violate a*q > b", bad)
    factors: list[int] = []
    for a, b in dec.blocks:
        need = 1 + floor_div_q(b, q)
        factors.extend([0] * (a - need))
        factors.append(b)
    return SuffixFactorization(dec.leading_ones, tuple(factors), q)


def suffix_elements(q: RationalParam, max_len: int) -> list[str]:
    if max_len < 1:
        raise DomainError(f"max_len must be >= 1, got {max_len}")
    out = []
    i = 0
    while True:
        s = suffix_word(i, q)
        if len(s) > max_len:
            # lengths strictly increase with i
            return out
        out.append(s)
        i += 1


def iter_words(q: RationalParam, n: int, cap: int | None = None):
    """Yield members of length ``n`` in lexicographic order (0 < 1).

    Depth-first extension; every prefix of a member is a member, so only
    viable prefixes are ever extended.
    """
    _check_cap(n, cap)
    c, d = q.c, q.d
    buf = [""] * n
    # (depth, letter placed at depth-1, zeros a and ones b of the open block)
    stack = [(0, "", 0, 0)]
    while stack:
        depth, letter, a, b = stack.pop()
        if depth:
            buf[depth - 1] = letter
        if depth == n:
            yield "".join(buf)
            continue
        # '1' pushed first so '0' is explored first
        if a == 0 or a * c > (b + 1) * d:
            stack.append((depth + 1, "1", a, b + 1))
        stack.append((depth + 1, "0", 1 if b > 0 else a + 1, 0))


def enumerate_words(q: RationalParam, n: int, cap: int | None = None) -> list[str]:
    return list(iter_words(q, n, cap))


@dataclass
class Census:
    q: RationalParam
    by_length: list[int] = field(default_factory=list)
    by_weight: dict[tuple[int, int], int] = field(default_factory=dict)
    zero_popularity: list[int] = field(default_factory=list)

    def weight(self, r: int, i: int) -> int:
        return self.by_weight.get((r, i), 0)

    def to_json(self) -> dict:
        return {
            "q": str(self.q),
            "counts": [str(v) for v in self.by_length],
            "weights": [[r, i, str(w)] for (r, i), w in sorted(self.by_weight.items(), key=lambda t: (t[0][0] + t[0][1], t[0][0]))],
            "zero_popularity": [str(v) for v in self.zero_popularity],
        }


def census(q: RationalParam, n_max: int, cap: int | None = None) -> Census:
    """Exhaustively scan all 2^n words for each n <= n_max."""
    _check_cap(n_max, cap)
    out = Census(q)
    for n in range(n_max + 1):
        row = _kernels.census_row(n, q.c, q.d)
        total = 0
        pop = 0
        for r in range(n + 1):
            w = int(row[r])
            if w:
                out.by_weight[(r, n - r)] = w
            total += w
            pop += r * w
        out.by_length.append(total)
        out.zero_popularity.append(pop)
    return out
