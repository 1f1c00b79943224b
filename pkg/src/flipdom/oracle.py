"""Brute-force reference enumerators.

These are deliberately simple and independent of the streaming engine:
plain subset scans over Python-int bitmasks.  They generate the ground
truth the test suite and the acceptance checks compare against.
"""

from __future__ import annotations

from flipdom.graph import Graph

MAX_VERTICES = 24
MAX_EDGES = 20


def _closed_bitmasks(g: Graph):
    masks = [0] * (g.n + 1)
    for v in g.vertices():
        m = 1 << (v - 1)
        for w in g.neighbors(v):
            m |= 1 << (int(w) - 1)
        masks[v] = m
    return masks


def brute_mds(g: Graph):
    """All minimal dominating sets, sorted lexicographically.

    Subsets are visited in Gray-code order so the per-vertex cover counts
    update incrementally (one closed neighborhood per step).
    """
    if g.n > MAX_VERTICES:
        raise ValueError(f"brute_mds is capped at {MAX_VERTICES} vertices")
    n = g.n
    if n == 0:
        return [()]
    closed = [[v] + [int(w) for w in g.neighbors(v)] for v in range(n + 1)]
    counts = [0] * (n + 1)
    uncovered = n
    current = 0
    results = []
    for i in range(1 << n):
        if i:
            bit = (i & -i).bit_length() - 1
            v = bit + 1
            if current >> bit & 1:
                current ^= 1 << bit
                for w in closed[v]:
                    counts[w] -= 1
                    if counts[w] == 0:
                        uncovered += 1
            else:
                current ^= 1 << bit
                for w in closed[v]:
                    counts[w] += 1
                    if counts[w] == 1:
                        uncovered -= 1
        if uncovered:
            continue
        members = [v for v in range(1, n + 1) if current >> (v - 1) & 1]
        if all(any(counts[w] == 1 for w in closed[v]) for v in members):
            results.append(tuple(members))
    results.sort()
    return results


def brute_mis(g: Graph):
    """All maximal independent sets, sorted lexicographically.

    A set is a maximal independent set iff it is independent and its
    closed neighborhoods cover every vertex.
    """
    if g.n > MAX_VERTICES:
        raise ValueError(f"brute_mis is capped at {MAX_VERTICES} vertices")
    n = g.n
    if n == 0:
        return [()]
    closed = _closed_bitmasks(g)
    open_masks = [0] + [closed[v] & ~(1 << (v - 1)) for v in range(1, n + 1)]
    full = (1 << n) - 1
    results = []
    for s in range(1 << n):
        cover = 0
        independent = True
        bits = s
        while bits:
            low = bits & -bits
            v = low.bit_length()
            if open_masks[v] & s:
                independent = False
                break
            cover |= closed[v]
            bits ^= low
        if independent and cover == full:
            results.append(tuple(v for v in range(1, n + 1) if s >> (v - 1) & 1))
    results.sort()
    return results


def brute_eds(root: Graph):
    """All minimal edge dominating sets of the root, sorted; edges are
    (u, v) pairs with u < v in ascending order."""
    edges = list(root.edges())
    m = len(edges)
    if m > MAX_EDGES:
        raise ValueError(f"brute_eds is capped at {MAX_EDGES} edges")
    if m == 0:
        return [()]
    # adj[i] = bitmask of edges sharing an endpoint with edge i, itself included
    touching = [0] * m
    incident = {}
    for i, (u, v) in enumerate(edges):
        incident.setdefault(u, []).append(i)
        incident.setdefault(v, []).append(i)
    for ids in incident.values():
        for i in ids:
            for j in ids:
                touching[i] |= 1 << j
    full = (1 << m) - 1
    results = []
    for s in range(1, 1 << m):
        members = [i for i in range(m) if s >> i & 1]
        cover = 0
        for i in members:
            cover |= touching[i]
        if cover != full:
            continue
        # minimal iff dropping any single member breaks coverage
        k = len(members)
        prefix = [0] * (k + 1)
        for idx, i in enumerate(members):
            prefix[idx + 1] = prefix[idx] | touching[i]
        suffix = [0] * (k + 1)
        for idx in range(k - 1, -1, -1):
            suffix[idx] = suffix[idx + 1] | touching[members[idx]]
        if all(prefix[idx] | suffix[idx + 1] != full for idx in range(k)):
            results.append(tuple(edges[i] for i in members))
    results.sort()
    return results
