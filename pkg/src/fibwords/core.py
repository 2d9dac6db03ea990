"""Rational parameter handling and model-polynomial construction."""
from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from math import gcd


class DomainError(ValueError):
    """Input outside the domain of an operation."""


class ResourceError(RuntimeError):
    """Request exceeds a configured resource cap."""


@dataclass(frozen=True)
class RationalParam:
    """Positive rational q = c/d, always stored irreducible."""

    c: int
    d: int

    def __post_init__(self):
        if not (isinstance(self.c, int) and isinstance(self.d, int)):
            raise DomainError(f"numerator and denominator must be integers, got {self.c!r}/{self.d!r}")
        if self.c < 1 or self.d < 1:
            raise DomainError(f"q must be positive, got {self.c}/{self.d}")
        g = gcd(self.c, self.d)
        if g != 1:
            object.__setattr__(self, "c", self.c // g)
            object.__setattr__(self, "d", self.d // g)

    @classmethod
    def of(cls, value) -> "RationalParam":
        """Coerce a RationalParam, Fraction, int or string."""
        if isinstance(value, RationalParam):
            return value
        if isinstance(value, str):
            return parse_rational(value)
        if isinstance(value, bool):
            raise DomainError(f"not a rational parameter: {value!r}")
        if isinstance(value, (int, Fraction)):
            f = Fraction(value)
            if f <= 0:
                raise DomainError(f"q must be positive, got {f}")
            return cls(f.numerator, f.denominator)
        raise DomainError(f"not a rational parameter: {value!r}")

    @property
    def period(self) -> int:
        """Length c + d of the spawning infix."""
        return self.c + self.d

    def as_fraction(self) -> Fraction:
        return Fraction(self.c, self.d)

    def __float__(self) -> float:
        return self.c / self.d

    def __str__(self) -> str:
        return f"{self.c}/{self.d}"


_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$")


def parse_rational(text: str) -> RationalParam:
    """Parse ``"c/d"``, an integer, or a decimal string such as ``"0.02"``.

    Decimals are converted exactly, so ``"0.02"`` is 1/50.
    """
    if not isinstance(text, str):
        raise DomainError(f"expected a string, got {type(text).__name__}")
    m = _FRACTION_RE.match(text)
    if m:
        num, den = int(m.group(1)), int(m.group(2))
        if den == 0:
            raise DomainError(f"zero denominator in {text!r}")
        value = Fraction(num, den)
    else:
        try:
            dec = Decimal(text.strip())
        except InvalidOperation:
            raise DomainError(f"malformed rational {text!r}") from None
        if not dec.is_finite():
            raise DomainError(f"malformed rational {text!r}")
        value = Fraction(dec)
    if value <= 0:
        raise DomainError(f"q must be positive, got {text!r}")
    return RationalParam(value.numerator, value.denominator)


def floor_div_q(i: int, q: RationalParam) -> int:
    """floor(i / q) computed as (i*d) // c."""
    return (i * q.d) // q.c


@dataclass(frozen=True)
class SpawningInfix:
    """The word 0^d 1^c inserted to grow suffix words."""

    zeros: int
    ones: int

    @classmethod
    def of(cls, q: RationalParam) -> "SpawningInfix":
        return cls(zeros=q.d, ones=q.c)

    def __len__(self) -> int:
        return self.zeros + self.ones

    def word(self) -> str:
        return "0" * self.zeros + "1" * self.ones


@dataclass(frozen=True)
class ModelPolynomial:
    """Exponent pairs (zeros, ones) of sum_{i<c} z^(1+floor(i/q)) y^i."""

    terms: tuple[tuple[int, int], ...]

    def degrees(self) -> list[int]:
        """Total degrees, i.e. the exponents of P(x, x)."""
        return [r + i for r, i in self.terms]

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __str__(self) -> str:
        def mono(r, i):
            zs = "z" if r == 1 else f"z^{r}"
            if i == 0:
                return zs
            return zs + ("y" if i == 1 else f"y^{i}")

        return " + ".join(mono(r, i) for r, i in self.terms)


def model_polynomial(q: RationalParam) -> ModelPolynomial:
    return ModelPolynomial(tuple((1 + floor_div_q(i, q), i) for i in range(q.c)))
