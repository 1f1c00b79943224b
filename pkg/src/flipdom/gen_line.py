"""Child generator for claw-free (line) graphs.

Given a minimal dominating set D*, an isolated vertex v of the induced
subgraph and a neighbor u, streams minimal dominating sets that contain
every child of D* with respect to flipping u and v, each one strictly
increasing the induced edge count.  Products of per-slot candidate sets
Z_i are walked by a compact cursor and each pick is finished with greedy
removal.
"""

from __future__ import annotations

from dataclasses import dataclass

from flipdom import _cases
from flipdom._cases import EXHAUSTED
from flipdom.graph import Graph, greedy_removal, vset


@dataclass
class LineFlipContext:
    d_star: tuple
    u: int
    v: int
    base: frozenset          # (D* \ {v}) | {u}
    x_list: tuple            # private neighbors of v outside N[u], ascending
    u_set: frozenset         # dominated-for-free region U
    r_set: frozenset         # union of the per-vertex exclusion cliques R_j
    z_lists: tuple           # candidate slots Z_1..Z_k, each ascending
    case: int
    case1_reason: str | None
    case3_j: int | None      # 1-based slot bounds for Case 3
    case3_jp: int | None
    z_minus_nu: tuple        # Z_i minus N(u), per slot
    case3_w: tuple           # N(u) cap Z_i, per slot


def build_context(g: Graph, d_star, u, v, cache=None) -> LineFlipContext:
    pre = _cases.flip_prelude(g, d_star, u, v, cache)
    d_t, rest, x_list, u_set, cover = pre.d_t, pre.rest, pre.x_list, pre.u_set, pre.cover
    base = rest | {u}
    k = len(x_list)
    if pre.bail_i:
        return LineFlipContext(d_t, u, v, base, x_list, u_set, frozenset(),
                               (), 1, "i", None, None, (), ())

    # R_j: for each member of D* \ {v} with an eligible anchor v_s (smallest
    # in-set neighbor, else u), the anchor-free part of its neighborhood is
    # a clique no Z may touch.  In-set anchors never equal v (v is isolated
    # in the induced subgraph), so that part is the same for every pair of
    # this node and worth caching.
    if cache is not None and "r_base" in cache:
        r_base, unanchored = cache["r_base"], cache["unanchored"]
    else:
        r_base = set()
        unanchored = set()
        ds = pre.ds
        for vj in d_t:
            anchor = None
            for w in g.nbr_list(vj):
                if w in ds:
                    anchor = w
                    break
            if anchor is None:
                unanchored.add(vj)
            else:
                r_base |= g.nbr_set(vj) - g.closed(anchor)
        r_base = frozenset(r_base)
        if cache is not None:
            cache["r_base"] = r_base
            cache["unanchored"] = unanchored
    r_set = set(r_base)
    nu_closed = g.closed(u)
    for vj in g.nbr_list(u):
        if vj != v and vj in unanchored:
            r_set |= g.nbr_set(vj) - nu_closed

    nv_closed = g.closed(v)
    x_set = set(x_list)
    z_lists = []
    for xi in x_list:
        zl = []
        for z in g.neighbors(xi):
            z = int(z)
            # candidates sit outside N[v] and D*, where a positive cover
            # count means adjacency to D* \ {v}
            if z in nv_closed or z in r_set or cover[z] == 0:
                continue
            if len(g.nbr_set(z) & x_set) != 1:
                continue
            zl.append(z)
        z_lists.append(tuple(zl))
    z_lists = tuple(z_lists)

    case, reason, j, jp = _cases.classify(g, u, rest, z_lists)
    if case == 1:
        return LineFlipContext(d_t, u, v, base, x_list, u_set, frozenset(r_set),
                               z_lists, 1, reason, None, None, (), ())
    nu = g.nbr_set(u)
    z_minus_nu = tuple(tuple(z for z in zl if z not in nu) for zl in z_lists)
    case3_w = tuple(tuple(z for z in zl if z in nu) for zl in z_lists)
    assert case != 3 or k >= 1
    return LineFlipContext(d_t, u, v, base, x_list, u_set, frozenset(r_set),
                           z_lists, case, None, j, jp, z_minus_nu, case3_w)


def next_child(g: Graph, ctx: LineFlipContext, cursor):
    """Emit the set at the cursor position and step the cursor.

    cursor None starts the stream; returns None when exhausted.
    """
    if ctx.case == 1 or cursor is EXHAUSTED:
        return None
    if cursor is None:
        cursor = _cases.first_position(ctx)
        if cursor is None:
            return None
    chosen = _cases.chosen_vertices(ctx, cursor)
    emission = greedy_removal(g, ctx.base | set(chosen))
    nxt = _cases.advance(ctx, cursor)
    return vset(emission), (nxt if nxt is not None else EXHAUSTED)


def children(g: Graph, ctx: LineFlipContext, cursor=None):
    """Iterator over (emission, resume_cursor) pairs from a cursor."""
    while True:
        out = next_child(g, ctx, cursor)
        if out is None:
            return
        emission, cursor = out
        yield emission, cursor
