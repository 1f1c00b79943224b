"""Child generator for line graphs of bipartite roots."""

import random

from conftest import random_bipartite_root
from flipdom import gen_bipartite
from flipdom.driver import (
    BIPARTITE_GENERATOR,
    compute_parent,
    enumerate_all,
    flip_pairs,
)
from flipdom.edge_dom import LineGraphMap
from flipdom.graph import (
    Graph,
    cycle_graph,
    find_claw,
    find_diamond,
    is_minimal_dominating,
    path_graph,
)
from flipdom.oracle import brute_mds


def _collect(g, ctx):
    return [em for em, _cur in gen_bipartite.children(g, ctx)]


def test_l_p4_flip_from_singleton():
    # L(P4) = P3; flipping the lone dominator leaves nothing to generate
    p3 = path_graph(3)
    ctx = gen_bipartite.build_context(p3, (2,), 1, 2)
    assert ctx.x_list == (3,)
    assert ctx.case == 1 and ctx.case1_reason == "ii"
    assert _collect(p3, ctx) == []


def test_l_p4_flip_from_pair_is_barren():
    # D* = {1, 3} on P3: every candidate child set {2, 3} or similar fails
    # minimality, and condition (i) detects it up front
    p3 = path_graph(3)
    ctx = gen_bipartite.build_context(p3, (1, 3), 2, 1)
    assert ctx.case == 1 and ctx.case1_reason == "i"
    assert _collect(p3, ctx) == []


def test_single_edge_root():
    k2_line = Graph(1, [])   # L(K2) is the one-vertex graph
    assert flip_pairs(k2_line, (1,)) == []


def test_c6_has_no_children_at_all():
    # every minimal dominating set of C6 is independent, so no flip pair
    # of any of them generates anything
    c6 = cycle_graph(6)
    for d_star in brute_mds(c6):
        for (u, v) in flip_pairs(c6, d_star):
            ctx = gen_bipartite.build_context(c6, d_star, u, v)
            assert _collect(c6, ctx) == []


def test_c8_children_against_parent():
    # C8 is the line graph of the bipartite C8 and owns dominating sets
    # with edges, e.g. {1, 2, 5, 6}
    c8 = cycle_graph(8)
    found = 0
    for d_star in brute_mds(c8):
        for (u, v) in flip_pairs(c8, d_star):
            ctx = gen_bipartite.build_context(c8, d_star, u, v)
            for child in _collect(c8, ctx):
                assert is_minimal_dominating(c8, child)
                res = compute_parent(c8, child, u, v, structure="line")
                assert res.parent == d_star
                found += 1
    assert found


def test_structure_guards_pass_on_corpus():
    rng = random.Random(66)
    for _ in range(30):
        g = LineGraphMap(random_bipartite_root(rng)).line
        assert find_claw(g) is None
        assert find_diamond(g) is None


def test_exact_children_no_removal_needed():
    # every emission is already minimal and maps back to its parent
    rng = random.Random(67)
    for _ in range(40):
        g = LineGraphMap(random_bipartite_root(rng)).line
        for d_star in brute_mds(g):
            for (u, v) in flip_pairs(g, d_star):
                ctx = gen_bipartite.build_context(g, d_star, u, v)
                outs = _collect(g, ctx)
                assert len(outs) == len(set(outs))
                for child in outs:
                    assert is_minimal_dominating(g, child)
                    assert compute_parent(g, child, u, v).parent == d_star


def test_children_complete_for_every_child():
    rng = random.Random(68)
    for _ in range(40):
        g = LineGraphMap(random_bipartite_root(rng)).line
        for d in brute_mds(g):
            dset = set(d)
            for u in d:
                if not (g.nbr_set(u) & dset):
                    continue
                from flipdom.graph import private_neighbors
                for v in private_neighbors(g, d, u):
                    parent = compute_parent(g, d, u, v).parent
                    ctx = gen_bipartite.build_context(g, parent, u, v)
                    assert d in _collect(g, ctx)


def test_z_slots_are_disjoint():
    rng = random.Random(69)
    for _ in range(40):
        g = LineGraphMap(random_bipartite_root(rng)).line
        for d_star in brute_mds(g):
            for (u, v) in flip_pairs(g, d_star):
                ctx = gen_bipartite.build_context(g, d_star, u, v)
                seen = set()
                for zl in ctx.z_lists:
                    assert not (set(zl) & seen)
                    seen |= set(zl)
                    assert not (set(zl) & set(ctx.d_star))


def test_cursor_resume_matches_suffix():
    rng = random.Random(70)
    checked = 0
    for _ in range(30):
        g = LineGraphMap(random_bipartite_root(rng)).line
        for d_star in brute_mds(g):
            for (u, v) in flip_pairs(g, d_star):
                ctx = gen_bipartite.build_context(g, d_star, u, v)
                walk = list(gen_bipartite.children(g, ctx))
                for i in range(len(walk)):
                    resumed = [em for em, _c in
                               gen_bipartite.children(g, ctx, cursor=walk[i][1])]
                    assert resumed == [em for em, _c in walk[i + 1:]]
                    checked += 1
        if checked > 150:
            break
    assert checked


def test_enumeration_matches_oracle():
    rng = random.Random(71)
    for _ in range(50):
        g = LineGraphMap(random_bipartite_root(rng)).line
        got = list(enumerate_all(g, BIPARTITE_GENERATOR))
        assert len(got) == len(set(got))
        assert sorted(got) == brute_mds(g)
