"""Pure-numpy implementations of the hot graph kernels.

Every kernel operates on a CSR adjacency (``indptr``/``indices``) with
1-based vertex ids; slot 0 of every per-vertex array is unused.  Membership
masks are boolean arrays of length n+1.  The functions here are the
fallback path; `flipdom.kernels._numba` provides jitted twins with the
same signatures.
"""

import numpy as np

BACKEND = "numpy"


def _segment_sums(indptr, values):
    # values is aligned with indices; returns per-vertex sums over each CSR row
    cs = np.concatenate(([0], np.cumsum(values, dtype=np.int64)))
    return cs[indptr[1:]] - cs[indptr[:-1]]


def cover_counts(indptr, indices, member):
    """cover[w] = number of vertices of D whose closed neighborhood contains w."""
    counts = np.zeros(len(member), dtype=np.int64)
    counts[1:] = _segment_sums(indptr, member[indices])[1:]
    counts += member
    counts[0] = 0
    return counts


def is_dominating(indptr, indices, member):
    return bool(cover_counts(indptr, indices, member)[1:].all())


def induced_edge_count(indptr, indices, member):
    """Number of edges of the subgraph induced by the mask."""
    inside = _segment_sums(indptr, member[indices])
    return int(inside[member].sum() // 2)


def greedy_removal(indptr, indices, member):
    """Repeatedly drop the smallest-index vertex whose removal keeps domination.

    Returns (ok, mask); ok is False when the input mask is not dominating,
    in which case the mask is meaningless.  A vertex is removable exactly
    when every vertex of its closed neighborhood is covered at least twice,
    and removability is monotone decreasing, so one ascending pass suffices.
    """
    counts = cover_counts(indptr, indices, member)
    if not counts[1:].all():
        return False, member
    out = member.copy()
    for v in np.flatnonzero(member):
        v = int(v)
        nb = indices[indptr[v]:indptr[v + 1]]
        if counts[v] >= 2 and (counts[nb] >= 2).all():
            out[v] = False
            counts[v] -= 1
            counts[nb] -= 1
    return True, out


def greedy_independent(indptr, indices, allowed, seed):
    """Lexicographically greedy maximal independent set.

    Starts from ``seed`` (assumed independent), then scans vertices in
    ascending order adding every allowed vertex with no selected neighbor.
    """
    n1 = len(allowed)
    taken = seed.copy()
    blocked = np.zeros(n1, dtype=np.bool_)
    for v in np.flatnonzero(seed):
        blocked[indices[indptr[v]:indptr[v + 1]]] = True
    for v in range(1, n1):
        if allowed[v] and not taken[v] and not blocked[v]:
            taken[v] = True
            blocked[indices[indptr[v]:indptr[v + 1]]] = True
    return taken


def private_closed_mask(indptr, indices, member, v):
    """Mask of N[v] \\ N[D \\ {v}] for a member v of D."""
    counts = cover_counts(indptr, indices, member)
    out = np.zeros(len(member), dtype=np.bool_)
    nb = indices[indptr[v]:indptr[v + 1]]
    out[nb] = counts[nb] == 1
    out[v] = counts[v] == 1
    return out


def is_minimal_dominating(indptr, indices, member):
    """Dominating and every member covers some vertex nobody else covers."""
    counts = cover_counts(indptr, indices, member)
    if not counts[1:].all():
        return False
    for v in np.flatnonzero(member):
        v = int(v)
        nb = indices[indptr[v]:indptr[v + 1]]
        if counts[v] != 1 and not (counts[nb] == 1).any():
            return False
    return True


def mis_successor(indptr, indices, member, j, out):
    """Greedy completion of ((I below j) minus N(j)) plus {j}.

    Writes the completed set ascending into out; returns its length when it
    is lexicographically greater than I (the member mask), else -1.
    """
    n1 = len(member)
    seed = np.zeros(n1, dtype=np.bool_)
    seed[:j] = member[:j]
    nbrj = indices[indptr[j]:indptr[j + 1]]
    seed[nbrj[nbrj < j]] = False
    seed[j] = True
    allowed = np.ones(n1, dtype=np.bool_)
    allowed[0] = False
    taken = greedy_independent(indptr, indices, allowed, seed)
    diff = np.flatnonzero(taken != member)
    if len(diff) == 0 or not member[diff[0]]:
        return -1
    cand = np.flatnonzero(taken)
    out[: len(cand)] = cand
    return len(cand)


def girth(indptr, indices):
    """Length of a shortest cycle, or -1 for a forest.

    One BFS per start vertex; a non-tree edge (a, b) seen from root r gives
    the candidate dist[a] + dist[b] + 1, and the minimum over all roots and
    edges is exact.
    """
    n1 = len(indptr) - 1
    best = -1
    dist = np.empty(n1, dtype=np.int64)
    parent = np.empty(n1, dtype=np.int64)
    queue = np.empty(n1, dtype=np.int64)
    for r in range(1, n1):
        dist[:] = -1
        parent[:] = 0
        dist[r] = 0
        queue[0] = r
        head, tail = 0, 1
        while head < tail:
            a = int(queue[head])
            head += 1
            if best != -1 and 2 * dist[a] + 1 >= best:
                continue
            for b in indices[indptr[a]:indptr[a + 1]]:
                b = int(b)
                if dist[b] == -1:
                    dist[b] = dist[a] + 1
                    parent[b] = a
                    queue[tail] = b
                    tail += 1
                elif parent[a] != b and parent[b] != a:
                    cand = int(dist[a] + dist[b] + 1)
                    if best == -1 or cand < best:
                        best = cand
    return best
