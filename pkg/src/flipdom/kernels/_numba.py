"""Numba-jitted twins of the kernels in `flipdom.kernels._numpy`.

Same signatures and semantics; plain loops over the CSR arrays, which is
what numba compiles best.  All kernels are cached so repeated runs skip
compilation.
"""

import numpy as np
from numba import njit

BACKEND = "numba"


@njit(cache=True)
def cover_counts(indptr, indices, member):
    n1 = len(member)
    counts = np.zeros(n1, dtype=np.int64)
    for v in range(1, n1):
        c = np.int64(1) if member[v] else np.int64(0)
        for j in range(indptr[v], indptr[v + 1]):
            if member[indices[j]]:
                c += 1
        counts[v] = c
    return counts


@njit(cache=True)
def is_dominating(indptr, indices, member):
    n1 = len(member)
    for v in range(1, n1):
        if member[v]:
            continue
        covered = False
        for j in range(indptr[v], indptr[v + 1]):
            if member[indices[j]]:
                covered = True
                break
        if not covered:
            return False
    return True


@njit(cache=True)
def induced_edge_count(indptr, indices, member):
    total = 0
    n1 = len(member)
    for v in range(1, n1):
        if not member[v]:
            continue
        for j in range(indptr[v], indptr[v + 1]):
            if member[indices[j]]:
                total += 1
    return total // 2


@njit(cache=True)
def greedy_removal(indptr, indices, member):
    counts = cover_counts(indptr, indices, member)
    n1 = len(member)
    for v in range(1, n1):
        if counts[v] == 0:
            return False, member
    out = member.copy()
    for v in range(1, n1):
        if not out[v]:
            continue
        removable = counts[v] >= 2
        if removable:
            for j in range(indptr[v], indptr[v + 1]):
                if counts[indices[j]] < 2:
                    removable = False
                    break
        if removable:
            out[v] = False
            counts[v] -= 1
            for j in range(indptr[v], indptr[v + 1]):
                counts[indices[j]] -= 1
    return True, out


@njit(cache=True)
def greedy_independent(indptr, indices, allowed, seed):
    n1 = len(allowed)
    taken = seed.copy()
    blocked = np.zeros(n1, dtype=np.bool_)
    for v in range(1, n1):
        if seed[v]:
            for j in range(indptr[v], indptr[v + 1]):
                blocked[indices[j]] = True
    for v in range(1, n1):
        if allowed[v] and not taken[v] and not blocked[v]:
            taken[v] = True
            for j in range(indptr[v], indptr[v + 1]):
                blocked[indices[j]] = True
    return taken


@njit(cache=True)
def private_closed_mask(indptr, indices, member, v):
    counts = cover_counts(indptr, indices, member)
    out = np.zeros(len(member), dtype=np.bool_)
    for j in range(indptr[v], indptr[v + 1]):
        w = indices[j]
        if counts[w] == 1:
            out[w] = True
    if counts[v] == 1:
        out[v] = True
    return out


@njit(cache=True)
def is_minimal_dominating(indptr, indices, member):
    counts = cover_counts(indptr, indices, member)
    n1 = len(member)
    for v in range(1, n1):
        if counts[v] == 0:
            return False
    for v in range(1, n1):
        if not member[v]:
            continue
        has_private = counts[v] == 1
        if not has_private:
            for j in range(indptr[v], indptr[v + 1]):
                if counts[indices[j]] == 1:
                    has_private = True
                    break
        if not has_private:
            return False
    return True


@njit(cache=True)
def mis_successor(indptr, indices, member, j, out):
    """Greedy completion of ((I below j) minus N(j)) plus {j}.

    Writes the completed set ascending into out; returns its length when it
    is lexicographically greater than I (the member mask), else -1.
    """
    n1 = len(member)
    taken = np.zeros(n1, dtype=np.bool_)
    blocked = np.zeros(n1, dtype=np.bool_)
    nbr = np.zeros(n1, dtype=np.bool_)
    for t in range(indptr[j], indptr[j + 1]):
        nbr[indices[t]] = True
    for v in range(1, j):
        if member[v] and not nbr[v]:
            taken[v] = True
            for t in range(indptr[v], indptr[v + 1]):
                blocked[indices[t]] = True
    taken[j] = True
    for t in range(indptr[j], indptr[j + 1]):
        blocked[indices[t]] = True
    for v in range(1, n1):
        if not taken[v] and not blocked[v]:
            taken[v] = True
            for t in range(indptr[v], indptr[v + 1]):
                blocked[indices[t]] = True
    # candidate > I iff the smallest vertex where they differ belongs to I
    length = 0
    verdict = 0
    for v in range(1, n1):
        if taken[v]:
            out[length] = v
            length += 1
        if verdict == 0 and taken[v] != member[v]:
            verdict = 1 if member[v] else -1
    if verdict == 1:
        return length
    return -1


@njit(cache=True)
def girth(indptr, indices):
    n1 = len(indptr) - 1
    best = -1
    dist = np.empty(n1, dtype=np.int64)
    parent = np.empty(n1, dtype=np.int64)
    queue = np.empty(n1, dtype=np.int64)
    for r in range(1, n1):
        for i in range(n1):
            dist[i] = -1
            parent[i] = 0
        dist[r] = 0
        queue[0] = r
        head, tail = 0, 1
        while head < tail:
            a = queue[head]
            head += 1
            if best != -1 and 2 * dist[a] + 1 >= best:
                continue
            for j in range(indptr[a], indptr[a + 1]):
                b = indices[j]
                if dist[b] == -1:
                    dist[b] = dist[a] + 1
                    parent[b] = a
                    queue[tail] = b
                    tail += 1
                elif parent[a] != b and parent[b] != a:
                    cand = dist[a] + dist[b] + 1
                    if best == -1 or cand < best:
                        best = cand
    return best
