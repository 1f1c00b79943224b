"""Child generator for graphs of girth at least 7.

The candidate slots are simply Z_i = N(y_i) \\ {v} for the private
neighbors y_i of v outside N[u].  On top of the Z product, the isolated
members of D* \\ {v} inside N(u) (the set W, split into X0/X1/X2) drive a
second layer: X0 always leaves, every subset X of X2 may leave provided
each of its private neighbors is re-dominated by a replacement vertex, and
all replacement products R are walked.  Every product pick is finished by
greedy removal.

Cursor layout: (z_position, x_bitmask, r_position), rightmost fastest.
The replacement lists depend on the chosen Z and X and are rebuilt from
the cursor, which keeps resumption at O(n+m).
"""

from __future__ import annotations

from dataclasses import dataclass

from flipdom._cases import EXHAUSTED, _odo_next, flip_validate
from flipdom.graph import Graph, greedy_removal, private_neighbors, vset


@dataclass
class GirthFlipContext:
    d_star: tuple
    u: int
    v: int
    base: frozenset          # (D* \ {v}) | {u}
    y_list: tuple            # private neighbors of v outside N[u]
    z_lists: tuple           # Z_i = N(y_i) \ {v}
    w_set: tuple             # isolated members of D* \ {v} adjacent to u
    x0: frozenset            # W members with no private neighbor
    x1: tuple                # W members with a degree-one private neighbor
    x2: tuple                # the rest of W; only these may be dropped per subset
    case1: bool


def build_context(g: Graph, d_star, u, v, cache=None) -> GirthFlipContext:
    d_t, ds, cover = flip_validate(g, d_star, u, v, cache)
    rest = ds - {v}
    nu_closed = g.closed(u)
    # open private neighborhoods fall out of the cover counts: a count of
    # one means the sole dominator is the set member at hand
    y_list = tuple(int(w) for w in g.neighbors(v)
                   if cover[w] == 1 and int(w) not in nu_closed)
    z_lists = tuple(
        tuple(int(z) for z in g.neighbors(y) if int(z) != v) for y in y_list
    )
    case1 = len(y_list) >= 1 and any(not zl for zl in z_lists)
    base = rest | {u}

    w_set = tuple(
        x for x in d_t
        if x != v and x in nu_closed and not (g.nbr_set(x) & rest)
    )
    x0, x1, x2 = [], [], []
    for x in w_set:
        priv = [int(w) for w in g.neighbors(x) if cover[w] == 1]
        if not priv:
            x0.append(x)
        elif any(g.degree(w) == 1 for w in priv):
            x1.append(x)
        else:
            x2.append(x)
    return GirthFlipContext(d_t, u, v, base, y_list, z_lists, w_set,
                            frozenset(x0), tuple(x1), tuple(x2), case1)


def _replacement_lists(g: Graph, ctx: GirthFlipContext, z_choice, x_subset):
    """Per chosen (Z, X): one list N(p) \\ {x_j} for every private neighbor p
    of every dropped x_j, measured against D' = base | Z."""
    d_prime = vset(ctx.base | set(z_choice))
    lists = []
    for xj in x_subset:
        priv = private_neighbors(g, d_prime, xj)
        assert priv, f"dropped vertex {xj} lost all private neighbors"
        for p in priv:
            rl = tuple(int(w) for w in g.neighbors(p) if int(w) != xj)
            assert rl, f"private neighbor {p} of {xj} has degree one"
            lists.append(rl)
    if __debug__:
        z_set = set(z_choice)
        flat = [set(rl) for rl in lists]
        for i, a in enumerate(flat):
            assert not (a & z_set), "replacement list collides with Z"
            for b in flat[i + 1:]:
                assert not (a & b), "replacement lists are not disjoint"
    return lists


def _decode_x(ctx: GirthFlipContext, bitmask: int):
    return tuple(x for i, x in enumerate(ctx.x2) if bitmask >> i & 1)


def next_child(g: Graph, ctx: GirthFlipContext, cursor):
    if ctx.case1 or cursor is EXHAUSTED:
        return None
    if cursor is None:
        cursor = ((0,) * len(ctx.z_lists), 0, ())
    z_pos, bitmask, r_pos = cursor
    z_choice = [ctx.z_lists[i][z_pos[i]] for i in range(len(z_pos))]
    x_subset = _decode_x(ctx, bitmask)
    r_lists = _replacement_lists(g, ctx, z_choice, x_subset)
    picks = [r_lists[i][r_pos[i]] for i in range(len(r_pos))]
    dropped = ctx.x0 | set(x_subset)
    d2 = (ctx.base | set(z_choice) | set(picks)) - dropped
    emission = greedy_removal(g, d2)

    nxt = _advance(g, ctx, z_pos, bitmask, r_pos, r_lists)
    return vset(emission), (nxt if nxt is not None else EXHAUSTED)


def _advance(g, ctx, z_pos, bitmask, r_pos, r_lists):
    nxt_r = _odo_next(r_pos, [len(rl) for rl in r_lists])
    if nxt_r is not None:
        return (z_pos, bitmask, nxt_r)
    if bitmask + 1 < (1 << len(ctx.x2)):
        bitmask += 1
        z_choice = [ctx.z_lists[i][z_pos[i]] for i in range(len(z_pos))]
        lists = _replacement_lists(g, ctx, z_choice, _decode_x(ctx, bitmask))
        return (z_pos, bitmask, (0,) * len(lists))
    nxt_z = _odo_next(z_pos, [len(zl) for zl in ctx.z_lists])
    if nxt_z is None:
        return None
    return (nxt_z, 0, ())


def children(g: Graph, ctx: GirthFlipContext, cursor=None):
    while True:
        out = next_child(g, ctx, cursor)
        if out is None:
            return
        emission, cursor = out
        yield emission, cursor
