"""Gray codes over W_{q,n}: validation, parity obstruction, 1-Gray search."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .core import DomainError, RationalParam
from .words import enumerate_words

DEFAULT_BUDGET = 10**7


def hamming(u: str, v: str) -> int:
    return sum(a != b for a, b in zip(u, v))


def check_gray(words, k: int = 1) -> bool:
    """True iff consecutive words differ in at most ``k`` places and none repeat."""
    words = list(words)
    if len({len(w) for w in words}) > 1:
        raise DomainError("all words of a Gray code must have the same length")
    if len(set(words)) != len(words):
        return False
    return all(hamming(u, v) <= k for u, v in zip(words, words[1:]))


def parity_gap(q: RationalParam, n: int, cap: int | None = None) -> tuple[int, int]:
    """(odd, even): member counts by parity of the number of 1s."""
    counts = Counter(w.count("1") % 2 for w in enumerate_words(q, n, cap))
    return counts[1], counts[0]


@dataclass
class GrayGraph:
    """Words of W_{q,n} with edges between words at Hamming distance 1."""

    vertices: list[str]
    adjacency: list[list[int]]

    @classmethod
    def build(cls, q: RationalParam, n: int, cap: int | None = None) -> "GrayGraph":
        vertices = enumerate_words(q, n, cap)
        index = {w: j for j, w in enumerate(vertices)}
        adjacency = []
        for w in vertices:
            nbrs = []
            for p in range(n):
                flipped = w[:p] + ("1" if w[p] == "0" else "0") + w[p + 1:]
                j = index.get(flipped)
                if j is not None:
                    nbrs.append(j)
            adjacency.append(sorted(nbrs))
        return cls(vertices, adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {0}
        todo = [0]
        while todo:
            v = todo.pop()
            for u in self.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
        return len(seen) == len(self.vertices)

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        indptr = np.zeros(len(self.vertices) + 1, dtype=np.int64)
        for v, nbrs in enumerate(self.adjacency):
            indptr[v + 1] = indptr[v] + len(nbrs)
        indices = np.fromiter((u for nbrs in self.adjacency for u in nbrs), dtype=np.int64, count=int(indptr[-1]))
        return indptr, indices


@dataclass
class SearchOutcome:
    status: str  # "found" | "impossible" | "inconclusive"
    path: list[str] = field(default_factory=list)
    certificate: str | None = None
    nodes_expanded: int = 0
    odd: int = 0
    even: int = 0

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "path": self.path,
            "odd": self.odd,
            "even": self.even,
            "nodes": self.nodes_expanded,
            "certificate": self.certificate,
        }


def search_1gray(q: RationalParam, n: int, budget: int = DEFAULT_BUDGET, cap: int | None = None) -> SearchOutcome:
    """Look for an ordering of W_{q,n} in which neighbours differ in one bit.

    Edges join words of opposite ones-parity, so a parity imbalance above 1
    rules a code out before any search. Otherwise the backtracking
    Hamiltonian-path kernel runs from each start vertex, lowest degree first.
    """
    graph = GrayGraph.build(q, n, cap)
    odd = sum(w.count("1") % 2 for w in graph.vertices)
    even = len(graph.vertices) - odd
    if abs(odd - even) > 1:
        return SearchOutcome("impossible", certificate=f"parity gap: {odd} odd vs {even} even", odd=odd, even=even)
    if not graph.is_connected():
        return SearchOutcome("impossible", certificate="graph is disconnected", odd=odd, even=even)

    starts = sorted(range(len(graph.vertices)), key=lambda v: (graph.degree(v), graph.vertices[v]))
    if abs(odd - even) == 1:
        # both ends lie in the larger colour class
        major = 1 if odd > even else 0
        starts = [v for v in starts if graph.vertices[v].count("1") % 2 == major]
    indptr, indices = graph.csr()
    status, path, nodes = _kernels.hamiltonian_path(indptr, indices, np.asarray(starts, dtype=np.int64), int(budget))
    nodes = int(nodes)
    if status == 1:
        return SearchOutcome("found", [graph.vertices[v] for v in path], nodes_expanded=nodes, odd=odd, even=even)
    if status == 0:
        return SearchOutcome("impossible", certificate="exhaustive search found no path", nodes_expanded=nodes, odd=odd, even=even)
    return SearchOutcome("inconclusive", certificate=f"budget of {budget} nodes exhausted", nodes_expanded=nodes, odd=odd, even=even)
