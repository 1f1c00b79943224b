"""Parent computation, flip-pair inventory and the depth-first driver.

The driver walks the implicit digraph whose nodes are the minimal
dominating sets: the root's out-neighbors are the maximal independent sets
(streamed lexicographically), and every other node hands its flip pairs
(u, v) to a child generator.  A set is emitted the moment it first enters
the ledger; regenerated sets are skipped silently.  Stack records hold a
context plus a compact cursor per active pair, never a suspended
computation.
"""

from __future__ import annotations

import time
from bisect import bisect_left, insort
from collections import namedtuple
from dataclasses import dataclass, field

from flipdom import gen_bipartite, gen_girth7, gen_line
from flipdom.graph import (
    Graph,
    UnsupportedGraphError,
    find_claw,
    find_diamond,
    girth,
    greedy_max_independent,
    greedy_removal,
    is_minimal_dominating,
    pack_vset,
    private_neighbors,
    unpack_vset,
    vset,
)
from flipdom.mis import MisEnumerator

ParentResult = namedtuple("ParentResult", ["parent", "x_set", "z_set"])

ChildGenerator = namedtuple("ChildGenerator", ["name", "build_context", "next_child"])

LINE_GENERATOR = ChildGenerator("line", gen_line.build_context, gen_line.next_child)
BIPARTITE_GENERATOR = ChildGenerator(
    "bipartite-line", gen_bipartite.build_context, gen_bipartite.next_child)
GIRTH7_GENERATOR = ChildGenerator(
    "girth7", gen_girth7.build_context, gen_girth7.next_child)


def compute_parent(g: Graph, d, u, v, structure=None) -> ParentResult:
    """The unique parent of d with respect to flipping u and v.

    d must be minimal dominating, u a member with a neighbor inside d, and
    v an open private neighbor of u.  With structure="line" or "girth7"
    the respective shape of the greedy independent repair set is asserted.
    """
    d_t = vset(d)
    ds = set(d_t)
    u = g.check_vertex(u)
    v = g.check_vertex(v)
    if u not in ds:
        raise ValueError(f"vertex {u} is not in the set")
    if not (g.nbr_set(u) & ds):
        raise ValueError(f"vertex {u} has no neighbor inside the set")
    pd_u = private_neighbors(g, d_t, u)
    if v not in pd_u:
        raise ValueError(f"vertex {v} is not an open private neighbor of {u}")
    x_uv = greedy_max_independent(
        g, [x for x in pd_u if x not in g.closed(v)])
    d_prime = vset((ds - {u}) | set(x_uv) | {v})
    parent = greedy_removal(g, d_prime)
    z_uv = vset(set(d_prime) - set(parent))
    if structure == "line":
        assert x_uv == (), f"claw-free flip produced a non-empty repair set {x_uv}"
    elif structure == "girth7":
        expect = vset(set(pd_u) - {v})
        assert x_uv == expect, f"high-girth repair set {x_uv} != {expect}"
    return ParentResult(parent, x_uv, z_uv)


def flip_pairs(g: Graph, d_star):
    """All (u, v) with v in d_star isolated in the induced subgraph and u a
    neighbor of v, ascending by (v, u)."""
    ds = set(vset(d_star))
    pairs = []
    for v in sorted(ds):
        if g.nbr_set(v) & ds:
            continue
        for u in g.nbr_list(v):
            pairs.append((u, v))
    return pairs


@dataclass
class DelayStats:
    emitted: int
    max_delay: float
    mean_delay: float
    max_stack_depth: int
    ledger_size: int


@dataclass
class DriverState:
    """Ledger, stack bookkeeping and per-output delay counters."""

    emitted: int = 0
    max_stack_depth: int = 0
    _ledger: list = field(default_factory=list)
    _t_last: float = field(default=0.0)
    _delay_max: float = field(default=0.0)
    _delay_sum: float = field(default=0.0)

    def start(self):
        self._t_last = time.perf_counter()

    def ledger_contains(self, packed: bytes) -> bool:
        i = bisect_left(self._ledger, packed)
        return i < len(self._ledger) and self._ledger[i] == packed

    def ledger_add(self, packed: bytes):
        insort(self._ledger, packed)

    @property
    def ledger_size(self) -> int:
        return len(self._ledger)

    def ledger_sets(self):
        """Emitted sets in lexicographic order."""
        return [unpack_vset(p) for p in self._ledger]

    def note_emit(self):
        now = time.perf_counter()
        delta = now - self._t_last
        self._t_last = now
        self.emitted += 1
        self._delay_sum += delta
        if delta > self._delay_max:
            self._delay_max = delta

    def note_depth(self, depth: int):
        if depth > self.max_stack_depth:
            self.max_stack_depth = depth


def delay_stats(state: DriverState) -> DelayStats:
    mean = state._delay_sum / state.emitted if state.emitted else 0.0
    return DelayStats(state.emitted, state._delay_max, mean,
                      state.max_stack_depth, state.ledger_size)


class _NodeRecord:
    __slots__ = ("node", "pairs", "pair_idx", "ctx", "cursor", "cache")

    def __init__(self, node, pairs):
        self.node = node
        self.pairs = pairs
        self.pair_idx = 0
        self.ctx = None
        self.cursor = None
        self.cache = {}     # node-level reuse across flip pairs

    def advance(self, g, generator, child_hook):
        while True:
            if self.ctx is not None:
                out = generator.next_child(g, self.ctx, self.cursor)
                if out is not None:
                    emission, self.cursor = out
                    if child_hook is not None:
                        u, v = self.pairs[self.pair_idx - 1]
                        child_hook(self.node, u, v, emission)
                    return emission
                self.ctx = None
            if self.pair_idx >= len(self.pairs):
                return None
            u, v = self.pairs[self.pair_idx]
            self.pair_idx += 1
            self.ctx = generator.build_context(g, self.node, u, v, cache=self.cache)
            self.cursor = None


class _RootRecord:
    __slots__ = ("stream",)

    def __init__(self, stream):
        self.stream = stream

    def advance(self, g, generator, child_hook):
        return next(self.stream, None)


def enumerate_all(g: Graph, generator: ChildGenerator, state: DriverState = None,
                  child_hook=None):
    """Stream every minimal dominating set of g exactly once.

    The generator must, for each flip triple, emit a superset of the
    children of that triple with bounded per-item work.  An emission that
    is not a minimal dominating set aborts the run: filtering it would
    hide a generator bug.  child_hook(d_star, u, v, emission), when given,
    observes every child-generator emission before deduplication.
    """
    if state is None:
        state = DriverState()
    state.start()
    stack = [_RootRecord(MisEnumerator(g))]
    while stack:
        rec = stack[-1]
        out = rec.advance(g, generator, child_hook)
        if out is None:
            stack.pop()
            continue
        if not is_minimal_dominating(g, out):
            origin = "root" if isinstance(rec, _RootRecord) else f"node {rec.node}"
            raise RuntimeError(
                f"generator emitted a non-minimal dominating set {out} at {origin}")
        packed = pack_vset(out)
        if state.ledger_contains(packed):
            continue
        state.ledger_add(packed)
        state.note_emit()
        yield out
        stack.append(_NodeRecord(out, flip_pairs(g, out)))
        state.note_depth(len(stack) - 1)


def enumerate_mds_line(g: Graph, state: DriverState = None, child_hook=None):
    """Minimal dominating sets of a claw-free graph; guard runs eagerly."""
    claw = find_claw(g)
    if claw is not None:
        raise UnsupportedGraphError(f"input contains an induced claw {claw}", claw)
    return enumerate_all(g, LINE_GENERATOR, state=state, child_hook=child_hook)


def enumerate_mds_bipartite_line(g: Graph, state: DriverState = None,
                                 child_hook=None):
    claw = find_claw(g)
    if claw is not None:
        raise UnsupportedGraphError(f"input contains an induced claw {claw}", claw)
    diamond = find_diamond(g)
    if diamond is not None:
        raise UnsupportedGraphError(
            f"input contains an induced diamond {diamond}", diamond)
    return enumerate_all(g, BIPARTITE_GENERATOR, state=state, child_hook=child_hook)


def enumerate_mds_girth7(g: Graph, state: DriverState = None, child_hook=None):
    gv = girth(g)
    if gv < 7:
        raise UnsupportedGraphError(f"girth {gv} is below 7", gv)
    return enumerate_all(g, GIRTH7_GENERATOR, state=state, child_hook=child_hook)
