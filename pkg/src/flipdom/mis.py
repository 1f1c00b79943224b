"""Maximal independent sets in increasing lexicographic order.

The classic successor scheme: keep a min-heap of candidate sets, seeded
with the greedy (lexicographically first) maximal independent set.  When a
set I is popped and output, every vertex v_j outside I spawns a candidate:
keep the part of I below j, drop neighbors of v_j, add v_j, complete
greedily.  Candidates lexicographically above I enter the heap unless seen
before.  Every maximal independent set other than the first arises this
way from some smaller one, so the pop order is exactly lexicographic.

Sets travel through the heap in a fixed-width big-endian packing whose
bytewise order coincides with the set order, which keeps the queue compact
on large instances.
"""

from __future__ import annotations

import heapq
import math

import numpy as np

from flipdom import kernels
from flipdom.graph import Graph, VertexSet, greedy_max_independent, pack_vset, unpack_vset


def first_mis(g: Graph) -> VertexSet:
    """The lexicographically smallest maximal independent set."""
    return greedy_max_independent(g, g.vertices())


class MisEnumerator:
    """Resumable stream of maximal independent sets in lexicographic order.

    ``ops`` is an abstract operation counter (vertex/edge touches plus heap
    comparison charges); it backs the delay-bound checks without depending
    on wall-clock noise.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.ops = 0
        self.emitted = 0
        self._buf = np.empty(g.n + 1, dtype=np.int32)
        first = pack_vset(first_mis(g))
        self._heap = [first]
        self._seen = {first}

    def __iter__(self):
        return self

    def __next__(self) -> VertexSet:
        if not self._heap:
            raise StopIteration
        packed = heapq.heappop(self._heap)
        self.ops += self.g.n * max(1, int(math.log2(len(self._heap) + 2)))
        out = unpack_vset(packed)
        self._push_successors(out)
        self.emitted += 1
        return out

    def _push_successors(self, iset: VertexSet):
        g = self.g
        member = np.zeros(g.n + 1, dtype=np.bool_)
        for v in iset:
            member[v] = True
        buf = self._buf
        for j in range(1, g.n + 1):
            if member[j]:
                continue
            length = kernels.mis_successor(g.indptr, g.indices, member, j, buf)
            self.ops += g.n + 2 * g.m
            if length < 0:
                continue
            packed = buf[:length].astype(">u4").tobytes()
            if packed in self._seen:
                continue
            self._seen.add(packed)
            heapq.heappush(self._heap, packed)
            self.ops += g.n * max(1, int(math.log2(len(self._heap) + 1)))


def enumerate_mis(g: Graph):
    """Yield every maximal independent set exactly once, lexicographically."""
    return iter(MisEnumerator(g))
