"""Hot loops: brute-force census scan and Hamiltonian-path search.

Each kernel is compiled with numba unless ``FIBWORDS_NO_NUMBA`` is set to a
truthy value (or numba is not importable). The census scan additionally has
a chunked, vectorised numpy implementation used when numba is off; the path
search runs as plain Python over the same arrays.
"""
from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("FIBWORDS_NO_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f


CHUNK = 1 << 20


@njit(cache=True)
def _census_row_numba(n, c, d):
    # counts[r] = members of length n with r zeros; bit n-1 is the first letter
    counts = np.zeros(n + 1, dtype=np.int64)
    total = np.int64(1) << n
    for x in range(total):
        a = 0
        b = 0
        ok = True
        zeros = 0
        for pos in range(n - 1, -1, -1):
            bit = (x >> pos) & 1
            if bit == 0:
                zeros += 1
                if b > 0:
                    if a > 0 and a * c <= b * d:
                        ok = False
                        break
                    a = 0
                    b = 0
                a += 1
            else:
                b += 1
        if ok and a > 0 and a * c <= b * d:
            ok = False
        if ok:
            counts[zeros] += 1
    return counts


def _census_row_numpy(n, c, d):
    counts = np.zeros(n + 1, dtype=np.int64)
    total = 1 << n
    for start in range(0, total, CHUNK):
        x = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        a = np.zeros_like(x)
        b = np.zeros_like(x)
        zeros = np.zeros_like(x)
        ok = np.ones(x.shape, dtype=bool)
        for pos in range(n - 1, -1, -1):
            bit = (x >> pos) & 1
            zero = bit == 0
            closing = zero & (b > 0)
            ok &= ~(closing & (a > 0) & (a * c <= b * d))
            a = np.where(closing, 0, a)
            b = np.where(closing, 0, b)
            a += zero
            b += ~zero
            zeros += zero
        ok &= ~((a > 0) & (a * c <= b * d))
        counts += np.bincount(zeros[ok], minlength=n + 1)
    return counts


def census_row(n: int, c: int, d: int) -> np.ndarray:
    """Return counts[r] of length-n members with r zeros, by brute force."""
    if HAS_NUMBA:
        return _census_row_numba(n, c, d)
    return _census_row_numpy(n, c, d)


@njit(cache=True)
def hamiltonian_path(indptr, indices, starts, budget):
    """Backtracking search for a Hamiltonian path.

    Returns (status, path, nodes) where status is 1 found, 0 exhausted,
    -1 budget exceeded.
    """
    nv = indptr.shape[0] - 1
    path = np.full(nv, -1, dtype=np.int64)
    if nv == 0:
        return 1, path, np.int64(0)
    maxdeg = 0
    for v in range(nv):
        if indptr[v + 1] - indptr[v] > maxdeg:
            maxdeg = indptr[v + 1] - indptr[v]
    cand = np.zeros((nv, maxdeg + 1), dtype=np.int64)
    ncand = np.zeros(nv, dtype=np.int64)
    pos = np.zeros(nv, dtype=np.int64)
    visited = np.zeros(nv, dtype=np.bool_)
    udeg = np.zeros(nv, dtype=np.int64)
    mark = np.zeros(nv, dtype=np.int64)
    queue = np.zeros(nv, dtype=np.int64)
    stamp = 0
    nodes = np.int64(0)

    for s_idx in range(starts.shape[0]):
        s = starts[s_idx]
        for v in range(nv):
            visited[v] = False
            udeg[v] = indptr[v + 1] - indptr[v]
        nodes += 1
        if nodes > budget:
            return -1, path, nodes
        # place the start vertex
        visited[s] = True
        for e in range(indptr[s], indptr[s + 1]):
            udeg[indices[e]] -= 1
        path[0] = s
        depth = 0
        feasible = True
        if nv > 1:
            stamp += 1
            feasible = _feasible(s, nv - 1, indptr, indices, visited, udeg, mark, queue, stamp)
        if not feasible:
            depth = -1
        else:
            _fill_candidates(s, 0, indptr, indices, visited, udeg, cand, ncand, pos)

        while depth >= 0:
            if depth == nv - 1:
                return 1, path, nodes
            if pos[depth] < ncand[depth]:
                v = cand[depth, pos[depth]]
                pos[depth] += 1
                nodes += 1
                if nodes > budget:
                    return -1, path, nodes
                visited[v] = True
                for e in range(indptr[v], indptr[v + 1]):
                    udeg[indices[e]] -= 1
                path[depth + 1] = v
                remaining = nv - depth - 2
                ok = True
                if remaining > 0:
                    stamp += 1
                    ok = _feasible(v, remaining, indptr, indices, visited, udeg, mark, queue, stamp)
                if ok:
                    depth += 1
                    _fill_candidates(v, depth, indptr, indices, visited, udeg, cand, ncand, pos)
                else:
                    visited[v] = False
                    for e in range(indptr[v], indptr[v + 1]):
                        udeg[indices[e]] += 1
                    path[depth + 1] = -1
            else:
                u = path[depth]
                visited[u] = False
                for e in range(indptr[u], indptr[u + 1]):
                    udeg[indices[e]] += 1
                path[depth] = -1
                depth -= 1
    return 0, path, nodes


@njit(cache=True)
def _fill_candidates(v, depth, indptr, indices, visited, udeg, cand, ncand, pos):
    # unvisited neighbours, fewest onward options first, ties by vertex index
    k = 0
    for e in range(indptr[v], indptr[v + 1]):
        u = indices[e]
        if not visited[u]:
            j = k
            while j > 0 and (udeg[cand[depth, j - 1]] > udeg[u]
                             or (udeg[cand[depth, j - 1]] == udeg[u] and cand[depth, j - 1] > u)):
                cand[depth, j] = cand[depth, j - 1]
                j -= 1
            cand[depth, j] = u
            k += 1
    ncand[depth] = k
    pos[depth] = 0


@njit(cache=True)
def _feasible(v, remaining, indptr, indices, visited, udeg, mark, queue, stamp):
    # every unvisited vertex reachable from v through unvisited vertices
    head = 0
    tail = 0
    reached = 0
    for e in range(indptr[v], indptr[v + 1]):
        u = indices[e]
        if not visited[u] and mark[u] != stamp:
            mark[u] = stamp
            queue[tail] = u
            tail += 1
    adj_stamp = stamp
    forced_ends = 0
    while head < tail:
        u = queue[head]
        head += 1
        reached += 1
        if udeg[u] == 0:
            if remaining > 1:
                return False
        for e in range(indptr[u], indptr[u + 1]):
            x = indices[e]
            if not visited[x] and mark[x] != adj_stamp:
                mark[x] = adj_stamp
                queue[tail] = x
                tail += 1
    if reached != remaining:
        return False
    # a vertex with a single unvisited neighbour, not adjacent to v, must end the path
    for u in range(mark.shape[0]):
        if not visited[u] and udeg[u] == 1:
            adjacent = False
            for e in range(indptr[v], indptr[v + 1]):
                if indices[e] == u:
                    adjacent = True
                    break
            if not adjacent:
                forced_ends += 1
                if forced_ends > 1:
                    return False
    return True
