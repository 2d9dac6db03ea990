import pytest

from fibwords.core import DomainError
from fibwords.fixtures import GRAY_Q1_N5, PARITY_Q23_N5
from fibwords.graycode import GrayGraph, check_gray, parity_gap, search_1gray
from fibwords.words import enumerate_words

from conftest import rp


def has_ham_path(graph):
    """Held-Karp style subset DP; independent of the backtracking kernel."""
    nv = len(graph.vertices)
    if nv <= 1:
        return True
    adj = [0] * nv
    for v, nbrs in enumerate(graph.adjacency):
        for u in nbrs:
            adj[v] |= 1 << u
    reach = [0] * (1 << nv)  # reach[mask] = bitset of possible path ends
    for v in range(nv):
        reach[1 << v] = 1 << v
    full = (1 << nv) - 1
    for mask in range(1, 1 << nv):
        ends = reach[mask]
        if not ends:
            continue
        if mask == full:
            return True
        e = ends
        while e:
            v = (e & -e).bit_length() - 1
            e &= e - 1
            nxt = adj[v] & ~mask
            while nxt:
                u = (nxt & -nxt).bit_length() - 1
                nxt &= nxt - 1
                reach[mask | (1 << u)] |= 1 << u
    return False


def test_paper_code_is_valid():
    assert check_gray(GRAY_Q1_N5, 1)
    assert sorted(GRAY_Q1_N5) == enumerate_words(rp("1"), 5)


def test_check_gray_rejects():
    assert not check_gray(GRAY_Q1_N5 + [GRAY_Q1_N5[-1]], 1)
    assert not check_gray(["00", "11"], 1)
    assert check_gray(["00", "11"], 2)
    assert check_gray([], 1)
    with pytest.raises(DomainError):
        check_gray(["0", "00"], 1)


def test_parity_gap():
    assert parity_gap(rp("2/3"), 5) == (7, 5)
    odd, even = parity_gap(rp("1"), 5)
    assert abs(odd - even) <= 1 and odd + even == 13
    assert parity_gap(rp("4"), 0) == (0, 1)
    ws = enumerate_words(rp("2/3"), 5)
    assert sorted(PARITY_Q23_N5["odd"]) == [w for w in ws if w.count("1") % 2]
    assert sorted(PARITY_Q23_N5["even"]) == [w for w in ws if not w.count("1") % 2]


def test_graph_is_bipartite_and_symmetric():
    g = GrayGraph.build(rp("3/2"), 7)
    for v, nbrs in enumerate(g.adjacency):
        assert v not in nbrs
        for u in nbrs:
            assert v in g.adjacency[u]
            assert g.vertices[u].count("1") % 2 != g.vertices[v].count("1") % 2


def test_search_examples():
    res = search_1gray(rp("2/3"), 5)
    assert res.status == "impossible" and (res.odd, res.even) == (7, 5)
    assert "parity" in res.certificate
    res = search_1gray(rp("1"), 5)
    assert res.status == "found" and check_gray(res.path, 1) and len(res.path) == 13
    res = search_1gray(rp("1"), 1)
    assert res.path in (["0", "1"], ["1", "0"])
    assert search_1gray(rp("1"), 0).path == [""]


def test_search_is_deterministic():
    a = search_1gray(rp("3/2"), 10)
    b = search_1gray(rp("3/2"), 10)
    assert a == b


def test_budget_gives_inconclusive():
    res = search_1gray(rp("1/2"), 9, budget=50)
    assert res.status == "inconclusive"


@pytest.mark.parametrize("g", ["1/5", "1/3", "1/2", "2/3", "3/4", "1", "4/3", "3/2", "2", "5/2", "3"])
def test_search_agrees_with_subset_dp(g):
    q = rp(g)
    for n in range(10):
        graph = GrayGraph.build(q, n)
        if len(graph.vertices) > 18:
            break
        res = search_1gray(q, n)
        assert res.status != "inconclusive"
        assert (res.status == "found") == has_ham_path(graph), (g, n)
        if res.status == "found":
            assert check_gray(res.path, 1) and sorted(res.path) == graph.vertices
