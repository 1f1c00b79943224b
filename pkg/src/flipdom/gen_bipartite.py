"""Child generator for line graphs of bipartite roots.

Same case structure as the claw-free generator, but the exclusion sets are
sharper (per-vertex R_j via a three-way rule plus order-breaking sets S_j)
so that every product pick is already a minimal dominating set and exactly
a child of D*: emissions go out without greedy removal.
"""

from __future__ import annotations

from dataclasses import dataclass

from flipdom import _cases
from flipdom._cases import EXHAUSTED
from flipdom.graph import Graph, UnsupportedGraphError, vset


@dataclass
class BipFlipContext:
    d_star: tuple
    u: int
    v: int
    base: frozenset
    x_list: tuple
    u_set: frozenset
    r_list: dict             # vj -> exclusion set R_j
    s_list: dict             # vj -> exclusion set S_j
    z_lists: tuple
    case: int
    case1_reason: str | None
    case3_j: int | None
    case3_jp: int | None
    z_minus_nu: tuple
    case3_w: tuple


def _clique_split(g: Graph, vj: int):
    """Connected components of the neighborhood, verified to be at most
    two cliques; anything else is not a bipartite line graph."""
    nbrs = sorted(g.nbr_set(vj))
    comps = []
    unseen = set(nbrs)
    while unseen:
        start = min(unseen)
        comp = {start}
        frontier = [start]
        while frontier:
            a = frontier.pop()
            for b in g.nbr_set(a) & unseen - comp:
                comp.add(b)
                frontier.append(b)
        unseen -= comp
        comps.append(frozenset(comp))
    if len(comps) > 2:
        raise UnsupportedGraphError(
            f"neighborhood of {vj} splits into more than two cliques", vj)
    for comp in comps:
        for a in comp:
            if (comp - g.closed(a)):
                raise UnsupportedGraphError(
                    f"neighborhood of {vj} is not a union of cliques", vj)
    return comps


def build_context(g: Graph, d_star, u, v, cache=None) -> BipFlipContext:
    pre = _cases.flip_prelude(g, d_star, u, v, cache)
    d_t, rest, x_list, u_set, cover = pre.d_t, pre.rest, pre.x_list, pre.u_set, pre.cover
    base = rest | {u}
    if pre.bail_i:
        return BipFlipContext(d_t, u, v, base, x_list, u_set, {}, {},
                              (), 1, "i", None, None, (), ())

    nv_minus_nu = g.nbr_set(v) - g.closed(u)   # N(v) \ N[u]
    r_list = {}
    s_list = {}
    for vj in d_t:
        if vj == v:
            continue
        # closed private vertices of vj show up as cover count one
        p_closed = [int(w) for w in g.neighbors(vj) if cover[w] == 1]
        if cover[vj] == 1:
            p_closed.append(vj)
            p_closed.sort()
        p_out = [w for w in p_closed if w not in u_set]
        nvj = g.nbr_set(vj)
        touch = nvj & nv_minus_nu
        rj = frozenset()
        if p_out == [vj] and not touch:
            rj = nvj
        elif set(p_out) != {vj}:
            if all(len(g.nbr_set(x) & rest) >= 2 for x in touch):
                p_open_out = set(p_out) - {vj}
                if p_open_out:
                    for side in _clique_split(g, vj):
                        if p_open_out <= side:
                            rj = side
                            break
        if rj:
            r_list[vj] = rj
        for x in sorted(touch):
            if g.nbr_set(x) & rest != {vj}:
                continue
            nx = g.nbr_set(x)
            if all(w == vj or w in u_set or w not in nx for w in p_closed):
                sj = frozenset(w for w in nvj if w > vj)
                if sj:
                    s_list[vj] = sj
                break

    excluded = set()
    for s in r_list.values():
        excluded |= s
    for s in s_list.values():
        excluded |= s

    nv_closed = g.closed(v)
    z_lists = []
    for xi in x_list:
        zl = []
        for z in g.neighbors(xi):
            z = int(z)
            # outside N[v] a positive cover count means adjacency to D* \ {v}
            if z in nv_closed or z in excluded or cover[z] == 0:
                continue
            zl.append(z)
        z_lists.append(tuple(zl))
    z_lists = tuple(z_lists)

    case, reason, j, jp = _cases.classify(g, u, rest, z_lists)
    if case == 1:
        return BipFlipContext(d_t, u, v, base, x_list, u_set, r_list, s_list,
                              z_lists, 1, reason, None, None, (), ())
    nu = g.nbr_set(u)
    z_minus_nu = tuple(tuple(z for z in zl if z not in nu) for zl in z_lists)
    case3_w = tuple(tuple(z for z in zl if z in nu) for zl in z_lists)
    return BipFlipContext(d_t, u, v, base, x_list, u_set, r_list, s_list,
                          z_lists, case, None, j, jp, z_minus_nu, case3_w)


def next_child(g: Graph, ctx: BipFlipContext, cursor):
    """Emissions are exact children: no greedy removal happens here."""
    if ctx.case == 1 or cursor is EXHAUSTED:
        return None
    if cursor is None:
        cursor = _cases.first_position(ctx)
        if cursor is None:
            return None
    chosen = _cases.chosen_vertices(ctx, cursor)
    emission = vset(ctx.base | set(chosen))
    nxt = _cases.advance(ctx, cursor)
    return emission, (nxt if nxt is not None else EXHAUSTED)


def children(g: Graph, ctx: BipFlipContext, cursor=None):
    while True:
        out = next_child(g, ctx, cursor)
        if out is None:
            return
        emission, cursor = out
        yield emission, cursor
