"""Immutable undirected graphs and the order-sensitive set primitives.

Vertices are the integers 1..n; that index order is the canonical vertex
order every greedy and lexicographic step in this package uses.  Vertex
sets are plain sorted tuples of ints, which Python already compares in the
required lexicographic order ((1, 3) < (2,), so {1,3} precedes {2}).
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable, Iterator, Optional

import numpy as np

from flipdom import kernels

VertexSet = tuple


class GraphFormatError(ValueError):
    """Malformed edge-list input."""


class UnsupportedGraphError(Exception):
    """Input graph violates a structural guard (claw, diamond, girth).

    ``witness`` carries the offending structure: a vertex tuple for claw
    and diamond, the measured girth for the girth guard.
    """

    def __init__(self, reason, witness=None):
        super().__init__(reason)
        self.reason = reason
        self.witness = witness


class Graph:
    """Simple undirected graph over vertices 1..n, immutable after build.

    Adjacency is stored CSR-style (``indptr``/``indices``) with slot 0
    unused; neighbor lists are sorted ascending.
    """

    __slots__ = ("n", "m", "indptr", "indices", "_nbr_sets", "_nbr_lists")

    def __init__(self, n: int, edges: Iterable[tuple]):
        if n < 0:
            raise GraphFormatError("vertex count must be non-negative")
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"edge ({u},{v}) out of range 1..{n}")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            seen.add((u, v) if u < v else (v, u))
        deg = np.zeros(n + 2, dtype=np.int64)
        for u, v in seen:
            deg[u + 1] += 1
            deg[v + 1] += 1
        indptr = np.cumsum(deg)
        fill = indptr[:-1].copy()
        indices = np.zeros(2 * len(seen), dtype=np.int32)
        for u, v in sorted(seen):
            indices[fill[u]] = v
            fill[u] += 1
            indices[fill[v]] = u
            fill[v] += 1
        for v in range(1, n + 1):
            indices[indptr[v]:indptr[v + 1]].sort()
        self.n = n
        self.m = len(seen)
        self.indptr = indptr
        self.indices = indices
        self._nbr_sets: Optional[list] = None
        self._nbr_lists: Optional[list] = None

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def nbr_list(self, v: int) -> list:
        """Neighbors as a cached plain list, ascending."""
        if self._nbr_lists is None:
            ptr = self.indptr.tolist()
            idx = self.indices.tolist()
            self._nbr_lists = [[]] + [
                idx[ptr[w]:ptr[w + 1]] for w in range(1, self.n + 1)]
        return self._nbr_lists[v]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def nbr_set(self, v: int) -> frozenset:
        if self._nbr_sets is None:
            sets = [frozenset()] * (self.n + 1)
            for w in range(1, self.n + 1):
                sets[w] = frozenset(int(x) for x in self.neighbors(w))
            self._nbr_sets = sets
        return self._nbr_sets[v]

    def closed(self, v: int) -> frozenset:
        return self.nbr_set(v) | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbr_set(u)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edges(self) -> Iterator[tuple]:
        """All edges as (u, v) with u < v, in ascending lexicographic order."""
        for u in range(1, self.n + 1):
            for w in self.neighbors(u):
                if u < w:
                    yield (u, int(w))

    def check_vertex(self, v) -> int:
        v = int(v)
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")
        return v

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# vertex-set plumbing

def vset(vs: Iterable) -> VertexSet:
    """Normalize an iterable of vertex ids to a sorted tuple."""
    return tuple(sorted({int(v) for v in vs}))


def to_mask(g: Graph, vs: Iterable) -> np.ndarray:
    mask = np.zeros(g.n + 1, dtype=np.bool_)
    for v in vs:
        mask[g.check_vertex(v)] = True
    return mask


def from_mask(mask: np.ndarray) -> VertexSet:
    return tuple(int(v) for v in np.flatnonzero(mask))


def pack_vset(vs: Iterable) -> bytes:
    """Fixed-width big-endian encoding; bytewise order equals set order."""
    return np.asarray(tuple(vs), dtype=">u4").tobytes()


def unpack_vset(data: bytes) -> VertexSet:
    return tuple(int(v) for v in np.frombuffer(data, dtype=">u4"))


# ---------------------------------------------------------------------------
# domination primitives

def is_dominating(g: Graph, d: Iterable) -> bool:
    """True iff the closed neighborhood of d covers every vertex."""
    return bool(kernels.is_dominating(g.indptr, g.indices, to_mask(g, d)))


def private_closed(g: Graph, d: Iterable, v: int) -> VertexSet:
    """All vertices dominated by v but by no other member of d (P_D[v]).

    v must belong to d.  The open private neighbors P_D(v) are this set
    minus v itself.
    """
    dset = vset(d)
    v = g.check_vertex(v)
    if v not in dset:
        raise ValueError(f"vertex {v} is not in the dominating set")
    mask = kernels.private_closed_mask(g.indptr, g.indices, to_mask(g, dset), v)
    return from_mask(mask)


def private_neighbors(g: Graph, d: Iterable, v: int) -> VertexSet:
    """Open private neighbors P_D(v) = N(v) intersected with P_D[v]."""
    return tuple(w for w in private_closed(g, d, v) if w != v)


def is_minimal_dominating(g: Graph, d: Iterable) -> bool:
    return bool(kernels.is_minimal_dominating(g.indptr, g.indices, to_mask(g, d)))


def greedy_removal(g: Graph, d_prime: Iterable) -> VertexSet:
    """Minimize a dominating set by repeatedly deleting the smallest-index
    removable vertex.  Deterministic; raises if the input does not dominate."""
    ok, mask = kernels.greedy_removal(g.indptr, g.indices, to_mask(g, d_prime))
    if not ok:
        raise ValueError("greedy_removal requires a dominating set")
    return from_mask(mask)


def greedy_max_independent(g: Graph, s: Iterable) -> VertexSet:
    """Lexicographically first maximal independent set of G[s]."""
    allowed = to_mask(g, s)
    seed = np.zeros(g.n + 1, dtype=np.bool_)
    return from_mask(kernels.greedy_independent(g.indptr, g.indices, allowed, seed))


def induced_edge_count(g: Graph, d: Iterable) -> int:
    return int(kernels.induced_edge_count(g.indptr, g.indices, to_mask(g, d)))


def girth(g: Graph):
    """Length of a shortest cycle; math.inf for forests."""
    val = int(kernels.girth(g.indptr, g.indices))
    return math.inf if val < 0 else val


# ---------------------------------------------------------------------------
# structural validators

def find_claw(g: Graph):
    """First induced K_{1,3}, as (center, leaf, leaf, leaf), else None."""
    for c in g.vertices():
        nbrs = [int(x) for x in g.neighbors(c)]
        if len(nbrs) < 3:
            continue
        for i, a in enumerate(nbrs):
            na = g.nbr_set(a)
            for j in range(i + 1, len(nbrs)):
                b = nbrs[j]
                if b in na:
                    continue
                nb = g.nbr_set(b)
                for k in range(j + 1, len(nbrs)):
                    d = nbrs[k]
                    if d not in na and d not in nb:
                        return (c, a, b, d)
    return None


def find_diamond(g: Graph):
    """First induced K4-minus-an-edge, as (a, b, x, y) where a,b are the
    adjacent pair and x,y the non-adjacent pair, else None."""
    for a, b in g.edges():
        common = sorted(g.nbr_set(a) & g.nbr_set(b))
        for x, y in combinations(common, 2):
            if not g.has_edge(x, y):
                return (a, b, x, y)
    return None


# ---------------------------------------------------------------------------
# small constructors, used by tests, benchmarks and examples

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


# ---------------------------------------------------------------------------
# edge-list ingestion

def parse_edge_list(text: str) -> Graph:
    """Parse the plain-text edge-list format.

    One "u v" pair per line, 1-based ids, '#' starts a comment, blank lines
    ignored.  An optional leading header "p <n> <m>" fixes the vertex
    count; otherwise it is the maximum index seen.
    """
    header_n = None
    edges = []
    saw_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p":
            if saw_data or header_n is not None:
                raise GraphFormatError(f"line {lineno}: stray header")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: header must be 'p <n> <m>'")
            try:
                header_n = int(parts[1])
                int(parts[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer header") from None
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer endpoint") from None
        saw_data = True
        edges.append((u, v))
    if header_n is None:
        if not edges:
            raise GraphFormatError("empty input and no 'p' header to fix n")
        header_n = max(max(u, v) for u, v in edges)
    try:
        return Graph(header_n, edges)
    except GraphFormatError:
        raise
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def load_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())
