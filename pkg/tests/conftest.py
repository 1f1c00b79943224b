"""Shared corpus builders for the test suite.

Everything is driven by seeded random.Random instances so every run sees
the same graphs.
"""

import random

from flipdom.graph import Graph, girth


def random_connected_root(rng, n_min=4, n_max=7, max_edges=12):
    """Random connected graph: random spanning tree plus extra edges."""
    n = rng.randint(n_min, n_max)
    verts = list(range(1, n + 1))
    rng.shuffle(verts)
    edges = set()
    for i in range(1, n):
        j = rng.randrange(i)
        a, b = verts[i], verts[j]
        edges.add((min(a, b), max(a, b)))
    possible = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)
                if (a, b) not in edges]
    rng.shuffle(possible)
    for e in possible:
        if len(edges) >= max_edges:
            break
        if rng.random() < 0.45:
            edges.add(e)
    return Graph(n, edges)


def random_bipartite_root(rng, n_min=4, n_max=7, max_edges=12):
    """Random connected bipartite graph: tree plus cross-class extras."""
    n = rng.randint(n_min, n_max)
    verts = list(range(1, n + 1))
    rng.shuffle(verts)
    edges = set()
    color = {verts[0]: 0}
    for i in range(1, n):
        j = rng.randrange(i)
        a, b = verts[i], verts[j]
        color[a] = color[b] ^ 1
        edges.add((min(a, b), max(a, b)))
    possible = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)
                if (a, b) not in edges and color[a] != color[b]]
    rng.shuffle(possible)
    for e in possible:
        if len(edges) >= max_edges:
            break
        if rng.random() < 0.45:
            edges.add(e)
    return Graph(n, edges)


def random_tree(rng, n_max=14, n_min=2):
    n = rng.randint(n_min, n_max)
    return Graph(n, [(rng.randint(1, i - 1), i) for i in range(2, n + 1)])


def random_girth7_graph(rng, n_max=14):
    """Unicyclic (cycle length >= 7) or theta graph with pendant trees."""
    if rng.random() < 0.5:
        c = rng.randint(7, min(12, n_max))
        edges = [(i, i + 1) for i in range(1, c)] + [(c, 1)]
        n = c
    else:
        p = rng.randint(3, 5)
        q = rng.randint(max(3, 7 - p), 6)
        edges, n, prev = [], 2, 1
        for _ in range(p - 1):
            n += 1
            edges.append((prev, n))
            prev = n
        edges.append((prev, 2))
        prev = 1
        for _ in range(q - 1):
            n += 1
            edges.append((prev, n))
            prev = n
        edges.append((prev, 2))
    while n < n_max and rng.random() < 0.4:
        a = rng.randint(1, n)
        n += 1
        edges.append((a, n))
    g = Graph(n, edges)
    assert girth(g) >= 7
    return g


def random_graph(rng, n_min=1, n_max=12, p=None):
    n = rng.randint(n_min, n_max)
    if p is None:
        p = rng.uniform(0.1, 0.6)
    edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)
             if rng.random() < p]
    return Graph(n, edges)
