"""Self-checks for the brute-force reference enumerators."""

import random

import pytest

from conftest import random_connected_root, random_graph
from flipdom.edge_dom import LineGraphMap
from flipdom.graph import Graph, complete_graph, cycle_graph, path_graph
from flipdom.oracle import brute_eds, brute_mds, brute_mis


def test_brute_mds_small():
    assert brute_mds(path_graph(3)) == [(1, 3), (2,)]
    assert brute_mds(complete_graph(3)) == [(1,), (2,), (3,)]
    assert brute_mds(cycle_graph(4)) == [
        (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert brute_mds(Graph(1, [])) == [(1,)]


def test_brute_mis_small():
    assert brute_mis(path_graph(3)) == [(1, 3), (2,)]
    assert brute_mis(cycle_graph(4)) == [(1, 3), (2, 4)]
    assert brute_mis(Graph(2, [(1, 2)])) == [(1,), (2,)]


def test_brute_eds_small():
    assert brute_eds(path_graph(4)) == [((1, 2), (3, 4)), ((2, 3),)]
    assert brute_eds(complete_graph(3)) == [((1, 2),), ((1, 3),), ((2, 3),)]
    assert brute_eds(Graph(2, [(1, 2)])) == [((1, 2),)]


def test_caps_enforced():
    with pytest.raises(ValueError):
        brute_mds(Graph(25, []))
    with pytest.raises(ValueError):
        brute_mis(Graph(25, []))
    with pytest.raises(ValueError):
        brute_eds(complete_graph(7))  # 21 edges


def test_eds_equals_mds_of_line_graph():
    rng = random.Random(21)
    for _ in range(40):
        root = random_connected_root(rng, 4, 6, 10)
        lm = LineGraphMap(root)
        via_line = sorted(lm.to_edges(d) for d in brute_mds(lm.line))
        assert via_line == brute_eds(root)


def test_mis_subset_of_mds():
    rng = random.Random(22)
    for _ in range(60):
        g = random_graph(rng, n_min=1, n_max=10)
        mds = set(brute_mds(g))
        for mis in brute_mis(g):
            assert mis in mds


def test_results_sorted_lexicographically():
    rng = random.Random(23)
    for _ in range(40):
        g = random_graph(rng, n_min=1, n_max=9)
        for fam in (brute_mds(g), brute_mis(g)):
            assert fam == sorted(fam)
