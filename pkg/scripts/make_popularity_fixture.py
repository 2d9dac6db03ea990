"""Regenerate src/fibwords/data/popularity_q1.json from the brute-force census.

The stored terms are compared against OEIS A6478 (shifted) by the test
suite; they are produced here by exhaustive enumeration, never typed in.
"""
import json
from pathlib import Path

from fibwords.core import RationalParam
from fibwords.words import census

TERMS = 10

if __name__ == "__main__":
    c = census(RationalParam(1, 1), TERMS - 1)
    out = {
        "q": "1/1",
        "source": "census over all 2^n words, n = 0..%d" % (TERMS - 1),
        "oeis": "A6478 (shifted)",
        "zero_popularity": [str(v) for v in c.zero_popularity],
    }
    path = Path(__file__).resolve().parents[1] / "src" / "fibwords" / "data" / "popularity_q1.json"
    path.write_text(json.dumps(out, indent=2) + "\n")
    print(path)
