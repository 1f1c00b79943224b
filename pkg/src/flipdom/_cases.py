"""Case classification and resumable product enumeration shared by the
line-graph and bipartite-line-graph child generators.

Both generators classify a flip context the same way:

  Case 1  nothing to generate (one of three bail-out conditions holds),
  Case 2  the flipped-in vertex u already has a neighbor in D* \\ {v};
          enumerate the full product Z_1 x ... x Z_k,
  Case 3  u must be dominated by the added set itself; walk slots
          t = j..j', picking w in N(u) cap Z_t and filling the remaining
          slots with Z_i \\ N(u) below t and Z_i above t.

A cursor is a compact tuple naming the next product position, so a
generator can be resumed from a stored cursor in O(n+m) work.  Positions
advance with the rightmost index moving fastest.
"""

from __future__ import annotations

from collections import namedtuple

import numpy as np

from flipdom import kernels
from flipdom.graph import vset

EXHAUSTED = ("exhausted",)

# cover holds closed cover counts with respect to the WHOLE set D*; counts
# with respect to D* \ {v} follow by subtracting one on N[v]
Prelude = namedtuple(
    "Prelude", ["d_t", "ds", "rest", "x_list", "u_set", "cover", "bail_i"])


def flip_validate(g, d_star, u, v, cache=None):
    """Validate a flip triple; returns (d_t, ds, cover).

    The sorted set, its frozenset and the full cover counts depend only on
    the node, so a per-node cache dict avoids recomputing them pair after
    pair.
    """
    if cache is not None and "d_t" in cache:
        d_t, ds, cover = cache["d_t"], cache["ds"], cache["cover"]
    else:
        d_t = vset(d_star)
        ds = frozenset(d_t)
        mask = np.zeros(g.n + 1, dtype=np.bool_)
        for x in d_t:
            mask[g.check_vertex(x)] = True
        cover = kernels.cover_counts(g.indptr, g.indices, mask).tolist()
        if cache is not None:
            cache.update(d_t=d_t, ds=ds, cover=cover)
    u = g.check_vertex(u)
    v = g.check_vertex(v)
    if v not in ds:
        raise ValueError(f"vertex {v} is not in the set")
    if g.nbr_set(v) & ds:
        raise ValueError(f"vertex {v} is not isolated in the induced subgraph")
    if u not in g.nbr_set(v):
        raise ValueError(f"{u} is not a neighbor of {v}")
    return d_t, ds, cover


def _solo_dominators(g, d_t, cover, cache):
    """Per node: maps every vertex with cover count one to its unique
    dominator inside the set."""
    if cache is not None and "solo" in cache:
        return cache["solo"]
    solo = {}
    for x in d_t:
        if cover[x] == 1:
            solo[x] = x
        for w in g.nbr_list(x):
            if cover[w] == 1:
                solo[w] = x
    if cache is not None:
        cache["solo"] = solo
    return solo


def flip_prelude(g, d_star, u, v, cache=None) -> Prelude:
    """Shared context pieces for the line and bipartite generators.

    bail_i reports condition (i): some x in D* \\ {v} has its whole closed
    neighborhood inside N[D* \\ {v, x}] union U.
    """
    d_t, ds, cover = flip_validate(g, d_star, u, v, cache)
    rest = ds - {v}
    nv_closed = g.closed(v)
    nu_closed = g.closed(u)
    # open private neighbors of v outside N[u]; a sole dominator shows up
    # as cover count one
    x_list = tuple(w for w in g.nbr_list(v)
                   if cover[w] == 1 and w not in nu_closed)
    u_set = set(nu_closed)
    for x in x_list:
        u_set |= g.closed(x) - nv_closed
        u_set.add(x)
    # condition (i) can only fire for a member whose private vertices all
    # lie inside U, so only the dominators of U members need the full scan
    solo = _solo_dominators(g, d_t, cover, cache)
    bail_i = False
    for x in {solo[w] for w in u_set if w in solo}:
        if x == v:
            continue
        # members of rest are never adjacent to v, so their own rest-cover
        # equals the full cover
        if cover[x] < 2 and x not in u_set:
            continue
        ok = True
        for w in g.nbr_list(x):
            if w in u_set:
                continue
            if cover[w] - (1 if w in nv_closed else 0) < 2:
                ok = False
                break
        if ok:
            bail_i = True
            break
    return Prelude(d_t, ds, rest, x_list, frozenset(u_set), cover, bail_i)


def classify(g, u, rest, z_lists):
    """Apply conditions (ii) and (iii) and pick the case.

    Condition (i) does not depend on the Z_i and is checked by the context
    builders beforehand.  Returns (case, reason, j, jp) with 1-based slot
    bounds for Case 3.
    """
    k = len(z_lists)
    if k >= 1 and any(not zl for zl in z_lists):
        return 1, "ii", None, None
    nu = g.nbr_set(u)
    if nu & rest:
        return 2, None, None, None
    if not any(z in nu for zl in z_lists for z in zl):
        return 1, "iii", None, None
    j = next(t for t in range(1, k + 1) if any(z in nu for z in z_lists[t - 1]))
    jp = k
    for t in range(j, k + 1):
        if all(z in nu for z in z_lists[t - 1]):
            jp = t
            break
    return 3, None, j, jp


def _odo_next(idx, lengths, skip=-1):
    out = list(idx)
    for i in range(len(out) - 1, -1, -1):
        if i == skip:
            continue
        out[i] += 1
        if out[i] < lengths[i]:
            return tuple(out)
        out[i] = 0
    return None


def _case3_factors(ctx, t):
    # slot t-1 is taken by w and ignored in the odometer
    return [
        ctx.z_minus_nu[i] if i < t - 1 else ctx.z_lists[i]
        for i in range(len(ctx.z_lists))
    ]


def _first_case3_from(ctx, t_start):
    for t in range(t_start, ctx.case3_jp + 1):
        if not ctx.case3_w[t - 1]:
            continue
        factors = _case3_factors(ctx, t)
        if any(not factors[i] for i in range(len(factors)) if i != t - 1):
            continue
        return (t, 0, (0,) * len(ctx.z_lists))
    return None


def first_position(ctx):
    if ctx.case == 2:
        return (0,) * len(ctx.z_lists)
    if ctx.case == 3:
        return _first_case3_from(ctx, ctx.case3_j)
    return None


def advance(ctx, pos):
    if ctx.case == 2:
        return _odo_next(pos, [len(zl) for zl in ctx.z_lists])
    t, wi, idx = pos
    factors = _case3_factors(ctx, t)
    nxt = _odo_next(idx, [len(f) for f in factors], skip=t - 1)
    if nxt is not None:
        return (t, wi, nxt)
    if wi + 1 < len(ctx.case3_w[t - 1]):
        return (t, wi + 1, (0,) * len(ctx.z_lists))
    return _first_case3_from(ctx, t + 1)


def chosen_vertices(ctx, pos):
    """The added set Z (with w in its slot for Case 3) at a position."""
    if ctx.case == 2:
        return [ctx.z_lists[i][pos[i]] for i in range(len(pos))]
    t, wi, idx = pos
    factors = _case3_factors(ctx, t)
    out = [
        factors[i][idx[i]] if i != t - 1 else ctx.case3_w[t - 1][wi]
        for i in range(len(factors))
    ]
    return out
