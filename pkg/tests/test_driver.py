"""Parent computation, flip pairs, and the depth-first driver."""

import random

import pytest

from conftest import random_connected_root
from flipdom.driver import (
    ChildGenerator,
    DriverState,
    LINE_GENERATOR,
    compute_parent,
    delay_stats,
    enumerate_all,
    flip_pairs,
)
from flipdom.edge_dom import LineGraphMap
from flipdom.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    find_claw,
    induced_edge_count,
    is_minimal_dominating,
    path_graph,
    private_neighbors,
    vset,
)
from flipdom.oracle import brute_mds


def test_compute_parent_examples():
    c4 = cycle_graph(4)
    got = compute_parent(c4, (1, 2), 1, 4)
    assert got.parent == (2, 4) and got.x_set == () and got.z_set == ()
    got = compute_parent(c4, (2, 3), 2, 1)
    assert got.parent == (1, 3) and got.x_set == () and got.z_set == ()


def test_compute_parent_contract_violations():
    c4 = cycle_graph(4)
    with pytest.raises(ValueError):
        compute_parent(c4, (1, 3), 1, 2)   # G[D] edgeless: u has no D-neighbor
    with pytest.raises(ValueError):
        compute_parent(c4, (1, 2), 3, 4)   # u not in D
    with pytest.raises(ValueError):
        compute_parent(c4, (1, 2), 1, 3)   # v not a private neighbor of u


def test_parent_postconditions_randomized():
    rng = random.Random(44)
    for _ in range(60):
        root = random_connected_root(rng, 4, 6, 10)
        g = LineGraphMap(root).line
        for d in brute_mds(g):
            dset = set(d)
            for u in d:
                if not (g.nbr_set(u) & dset):
                    continue
                for v in private_neighbors(g, d, u):
                    res = compute_parent(g, d, u, v)
                    assert is_minimal_dominating(g, res.parent)
                    assert v in res.parent
                    assert set(res.x_set) <= set(res.parent)
                    assert not (g.nbr_set(v) & set(res.parent))
                    assert induced_edge_count(g, res.parent) < induced_edge_count(g, d)
                    # deterministic
                    assert compute_parent(g, d, u, v) == res


def test_flip_pairs():
    c4 = cycle_graph(4)
    assert flip_pairs(c4, (2, 4)) == [(1, 2), (3, 2), (1, 4), (3, 4)]
    assert flip_pairs(path_graph(3), (2,)) == [(1, 2), (3, 2)]
    assert flip_pairs(c4, (1, 2)) == []


def test_enumerate_all_small():
    assert sorted(enumerate_all(complete_graph(3), LINE_GENERATOR)) == \
        [(1,), (2,), (3,)]
    assert sorted(enumerate_all(path_graph(3), LINE_GENERATOR)) == [(1, 3), (2,)]
    got = list(enumerate_all(cycle_graph(4), LINE_GENERATOR))
    assert sorted(got) == brute_mds(cycle_graph(4))
    assert len(got) == len(set(got))


def test_single_vertex_graph():
    g = Graph(1, [])
    state = DriverState()
    assert list(enumerate_all(g, LINE_GENERATOR, state=state)) == [(1,)]
    assert delay_stats(state).emitted == 1


def test_delay_stats_fields():
    state = DriverState()
    list(enumerate_all(cycle_graph(4), LINE_GENERATOR, state=state))
    st = delay_stats(state)
    assert st.emitted == 6
    assert st.ledger_size == 6
    assert st.max_stack_depth >= 1
    assert st.max_delay >= st.mean_delay >= 0.0


def test_ledger_sets_sorted():
    state = DriverState()
    list(enumerate_all(cycle_graph(4), LINE_GENERATOR, state=state))
    led = state.ledger_sets()
    assert led == sorted(led) == brute_mds(cycle_graph(4))


def test_child_hook_sees_every_emission():
    seen = []
    g = cycle_graph(4)
    list(enumerate_all(g, LINE_GENERATOR,
                       child_hook=lambda d, u, v, c: seen.append((d, u, v, c))))
    assert seen
    for d_star, u, v, child in seen:
        assert is_minimal_dominating(g, child)
        assert induced_edge_count(g, child) > induced_edge_count(g, d_star)


def test_driver_aborts_on_bad_generator():
    # a generator emitting a non-minimal dominating set must abort the run
    def bad_build(g, d_star, u, v, cache=None):
        return ("ctx", d_star)

    def bad_next(g, ctx, cursor):
        if cursor is not None:
            return None
        return vset(range(1, g.n + 1)), "done"

    bad = ChildGenerator("bad", bad_build, bad_next)
    with pytest.raises(RuntimeError):
        list(enumerate_all(cycle_graph(4), bad))


def test_disconnected_inputs():
    # two components plus an isolated vertex; the isolated vertex belongs
    # to every minimal dominating set
    g = Graph(6, [(1, 2), (2, 3), (4, 5)])
    got = sorted(enumerate_all(g, LINE_GENERATOR))
    assert got == brute_mds(g)
    assert all(6 in d for d in got)

    rng = random.Random(46)
    for _ in range(40):
        n = rng.randint(1, 10)
        edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)
                 if rng.random() < 0.2]
        g = Graph(n, edges)
        if find_claw(g) is not None:
            continue
        assert sorted(enumerate_all(g, LINE_GENERATOR)) == brute_mds(g)


def test_stack_depth_bound_line_generator():
    # with the edge-monotone generator the stack never exceeds m + 1 records
    rng = random.Random(45)
    for _ in range(25):
        root = random_connected_root(rng, 4, 6, 9)
        g = LineGraphMap(root).line
        state = DriverState()
        list(enumerate_all(g, LINE_GENERATOR, state=state))
        assert delay_stats(state).max_stack_depth <= g.m + 1
