"""Restricted binary words W_{q,n}: counts, generating functions, recurrences."""
from .core import (
    DomainError,
    ModelPolynomial,
    RationalParam,
    ResourceError,
    SpawningInfix,
    floor_div_q,
    model_polynomial,
    parse_rational,
)
from .graycode import SearchOutcome, check_gray, parity_gap, search_1gray
from .limits import GrowthEstimate, dp_count, growth_rate, ratio_sweep
from .recurrence import RecurrenceSpec, compositions_reference, derive, generate, psi
from .series import (
    TruncatedBivariateSeries,
    TruncatedUnivariateSeries,
    length_series,
    series_add,
    series_inverse,
    series_mul,
    suffix_series,
    word_series,
    zero_popularity_series,
)
from .words import (
    BlockDecomposition,
    Census,
    FactorizationError,
    SuffixFactorization,
    census,
    enumerate_words,
    factorize,
    is_member,
    parse_blocks,
    suffix_elements,
)

__version__ = "0.1.0"
