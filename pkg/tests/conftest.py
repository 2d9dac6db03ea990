import re
from fractions import Fraction
from itertools import product

import pytest

from fibwords.core import RationalParam

GRID = ["1/5", "1/4", "1/3", "2/5", "1/2", "3/5", "2/3", "3/4", "4/5", "1",
        "5/4", "4/3", "3/2", "5/3", "2", "5/2", "3", "4", "5"]


def rp(text):
    f = Fraction(text)
    return RationalParam(f.numerator, f.denominator)


def naive_member(w, q):
    """Regex-based membership, written independently of fibwords.words."""
    return all(len(z) * q.c > len(o) * q.d for z, o in re.findall(r"(0+)(1*)", w))


def naive_words(q, n):
    return [w for w in ("".join(p) for p in product("01", repeat=n)) if naive_member(w, q)]


@pytest.fixture(params=GRID)
def grid_q(request):
    return rp(request.param)
