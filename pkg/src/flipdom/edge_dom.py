"""Line-graph bridge: edge dominating sets via vertex domination.

An edge set is a (minimal) edge dominating set of a root graph exactly
when the corresponding vertex set is a (minimal) dominating set of the
line graph, so the streaming engine runs on the line graph and answers
translate back through the edge bijection.
"""

from __future__ import annotations

from collections import namedtuple
from itertools import combinations

from flipdom import driver
from flipdom.graph import Graph

BipartiteResult = namedtuple("BipartiteResult", ["bipartite", "coloring", "odd_cycle"])


class LineGraphMap:
    """Root graph, its line graph, and the edge <-> vertex bijection.

    Line-graph vertices are numbered by the ascending (u, v) order of the
    root's edges; that numbering fixes the canonical vertex order and with
    it every greedy step downstream.
    """

    __slots__ = ("root", "line", "edge_of_vertex", "_vertex_of_edge")

    def __init__(self, root: Graph):
        edges = list(root.edges())
        if not edges:
            raise ValueError("line graph of an edgeless root is undefined")
        self.root = root
        self.edge_of_vertex = tuple(edges)
        self._vertex_of_edge = {e: i + 1 for i, e in enumerate(edges)}
        incident = {}
        for e in edges:
            incident.setdefault(e[0], []).append(self._vertex_of_edge[e])
            incident.setdefault(e[1], []).append(self._vertex_of_edge[e])
        line_edges = set()
        for ids in incident.values():
            for a, b in combinations(ids, 2):
                line_edges.add((a, b) if a < b else (b, a))
        self.line = Graph(len(edges), line_edges)

    def vertex_of_edge(self, edge) -> int:
        u, v = edge
        return self._vertex_of_edge[(u, v) if u < v else (v, u)]

    def to_edges(self, vs):
        return tuple(self.edge_of_vertex[i - 1] for i in vs)

    def to_vertices(self, edge_set):
        return tuple(sorted(self.vertex_of_edge(e) for e in edge_set))


def line_graph(root: Graph) -> LineGraphMap:
    return LineGraphMap(root)


def is_bipartite(g: Graph) -> BipartiteResult:
    """BFS 2-coloring; returns the coloring or an odd cycle as witness.

    coloring is a tuple indexed by vertex (slot 0 unused); the odd cycle is
    a vertex sequence whose consecutive members and endpoints are adjacent.
    """
    color = [None] * (g.n + 1)
    parent = [0] * (g.n + 1)
    for start in g.vertices():
        if color[start] is not None:
            continue
        color[start] = 0
        queue = [start]
        head = 0
        while head < len(queue):
            a = queue[head]
            head += 1
            for b in g.neighbors(a):
                b = int(b)
                if color[b] is None:
                    color[b] = color[a] ^ 1
                    parent[b] = a
                    queue.append(b)
                elif color[b] == color[a]:
                    return BipartiteResult(False, None, _odd_cycle(parent, a, b))
    return BipartiteResult(True, tuple(color), None)


def _odd_cycle(parent, a, b):
    seen = {}
    x = a
    while x:
        seen[x] = None
        x = parent[x]
    x = b
    while x not in seen:
        x = parent[x]
    lca = x
    left = []
    x = a
    while x != lca:
        left.append(x)
        x = parent[x]
    right = []
    x = b
    while x != lca:
        right.append(x)
        x = parent[x]
    return tuple(left + [lca] + right[::-1])


def enumerate_min_eds(root: Graph, force_general: bool = False,
                      state: driver.DriverState = None, child_hook=None):
    """Stream every minimal edge dominating set of the root exactly once.

    Bipartite roots take the exact-children generator unless
    force_general requests the claw-free path (useful for cross-checks).
    The line graph is built constructively, so the structural guards of
    the free-standing entry points are unnecessary here.
    """
    lmap = LineGraphMap(root)
    if is_bipartite(root).bipartite and not force_general:
        gen = driver.BIPARTITE_GENERATOR
    else:
        gen = driver.LINE_GENERATOR
    stream = driver.enumerate_all(lmap.line, gen, state=state, child_hook=child_hook)
    return (lmap.to_edges(vs) for vs in stream)


def format_edge_set(edge_set) -> str:
    """Wire format: each edge "u-v" with u < v, space-separated, ascending."""
    return " ".join(f"{u}-{v}" for u, v in sorted(edge_set))
