"""Published reference data, read only by tests and ``verify``.

Nothing on a computational path imports this module.
"""
from __future__ import annotations

import json
from importlib import resources

# q -> (first 12 terms as printed, printed relation lags)
TABLE2 = {
    "1/5": ([1, 2, 3, 4, 5, 6, 7, 9, 12, 16, 21, 27], (1, 6)),
    "1/4": ([1, 2, 3, 4, 5, 6, 8, 11, 15, 20, 26, 34], (1, 5)),
    "1/3": ([1, 2, 3, 4, 5, 7, 10, 14, 19, 26, 36, 50], (1, 4)),
    "2/5": ([1, 2, 3, 4, 6, 9, 13, 18, 26, 38, 55, 79], (1, 4, 7)),
    "1/2": ([1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60, 88], (1, 3)),
    "3/5": ([1, 2, 3, 5, 8, 12, 19, 30, 46, 72, 113, 176], (1, 3, 6, 8)),
    "2/3": ([1, 2, 3, 5, 8, 12, 19, 30, 47, 74, 116, 182], (1, 3, 5)),
    "3/4": ([1, 2, 3, 5, 8, 13, 21, 33, 53, 85, 136, 218], (1, 3, 5, 7)),
    # printed exactly as published; the terms repeat the 3/5 row
    "4/5": ([1, 2, 3, 5, 8, 12, 19, 30, 46, 72, 113, 176], (1, 3, 5, 7, 9)),
    "1": ([1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233], (1, 2)),
    "5/4": ([1, 2, 4, 7, 13, 23, 42, 75, 136, 244, 441, 794], (1, 2, 4, 6, 8, 9)),
    "4/3": ([1, 2, 4, 7, 13, 23, 42, 75, 136, 245, 443, 799], (1, 2, 4, 6, 7)),
    "3/2": ([1, 2, 4, 7, 13, 23, 42, 76, 138, 250, 453, 821], (1, 2, 4, 5)),
    "5/3": ([1, 2, 4, 7, 13, 24, 44, 81, 148, 272, 499, 916], (1, 2, 4, 5, 7, 8)),
    "2": ([1, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504, 927], (1, 2, 3)),
    "5/2": ([1, 2, 4, 8, 15, 29, 56, 107, 206, 396, 761, 1463], (1, 2, 3, 5, 6, 7)),
    "3": ([1, 2, 4, 8, 15, 29, 56, 108, 208, 401, 773, 1490], (1, 2, 3, 4)),
    "4": ([1, 2, 4, 8, 16, 31, 61, 120, 236, 464, 912, 1793], (1, 2, 3, 4, 5)),
    "5": ([1, 2, 4, 8, 16, 32, 63, 125, 248, 492, 976, 1936], (1, 2, 3, 4, 5, 6)),
}


def table2_relation(q: str) -> str:
    return "w_n = " + " + ".join(f"w_{{n-{j}}}" for j in TABLE2[q][1])


TEST_GRID = list(TABLE2)

TABLE1 = {
    "1/2": ["0", "0001", "0000011", "0000000111", "0000000001111", "0000000000011111"],
    "2/3": ["0", "001", "000011", "00000111", "00000001111", "0000000011111"],
    "1": ["0", "001", "00011", "0000111", "000001111", "00000011111"],
    "2": ["0", "01", "0011", "00111", "0001111", "00011111"],
    "3/2": ["0", "01", "0011", "000111", "0001111", "000011111"],
}

GRAY_Q1_N5 = [
    "11111", "11110", "11100", "11000", "11001", "10001", "10000",
    "10010", "00010", "00011", "00001", "00000", "00100",
]

PARITY_Q23_N5 = {
    "odd": ["00001", "00100", "00010", "10000", "11001", "11100", "11111"],
    "even": ["00000", "10010", "10001", "11000", "11110"],
}

DECOMPOSITION_WORD = "111000010000110010"
DECOMPOSITIONS = {
    "1": "111 0 0 001 0 00011 001 0",
    "2": "111 0 0 0 01 0 0 0011 0 01 0",
}
REJECTED = {"1/2": "001"}


def popularity_fixture() -> dict:
    """Zero-popularity terms for q=1, written by scripts/make_popularity_fixture.py."""
    text = resources.files("fibwords").joinpath("data/popularity_q1.json").read_text()
    return json.loads(text)
