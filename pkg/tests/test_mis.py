"""Lexicographic maximal-independent-set stream."""

import math
import random

from conftest import random_graph
from flipdom.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph
from flipdom.mis import MisEnumerator, enumerate_mis, first_mis
from flipdom.oracle import brute_mis


def test_first_mis():
    assert first_mis(path_graph(3)) == (1, 3)
    assert first_mis(complete_graph(3)) == (1,)
    assert first_mis(cycle_graph(4)) == (1, 3)


def test_enumerate_small():
    assert list(enumerate_mis(complete_graph(3))) == [(1,), (2,), (3,)]
    assert list(enumerate_mis(path_graph(3))) == [(1, 3), (2,)]
    assert list(enumerate_mis(cycle_graph(4))) == [(1, 3), (2, 4)]


def test_isolated_vertices_always_included():
    g = Graph(5, [(2, 3), (4, 5)])
    for mis in enumerate_mis(g):
        assert 1 in mis


def test_matches_brute_force_and_order():
    rng = random.Random(33)
    for _ in range(250):
        g = random_graph(rng, n_min=1, n_max=12)
        got = list(enumerate_mis(g))
        assert got == brute_mis(g)
        for a, b in zip(got, got[1:]):
            assert a < b


def test_two_streams_are_independent():
    g = cycle_graph(6)
    s1 = enumerate_mis(g)
    s2 = enumerate_mis(g)
    assert next(s1) == next(s2)
    rest1 = list(s1)
    assert next(s2) == rest1[0]


def test_stream_is_resumable_midway():
    g = star_graph(4)
    stream = MisEnumerator(g)
    first = next(stream)
    # the enumerator object carries its whole position; draining it later
    # continues exactly where it stopped
    remaining = list(stream)
    assert [first] + remaining == brute_mis(g)


def test_operation_counter_bounds_delay():
    # per-output work is O(n (m + n log |emitted|)) in counted operations
    rng = random.Random(34)
    c = 64
    for _ in range(40):
        g = random_graph(rng, n_min=2, n_max=12)
        stream = MisEnumerator(g)
        prev_ops = 0
        emitted = 0
        while True:
            try:
                next(stream)
            except StopIteration:
                break
            emitted += 1
            delta = stream.ops - prev_ops
            prev_ops = stream.ops
            bound = c * g.n * (g.m + g.n * max(1.0, math.log2(emitted + 1)))
            assert delta <= bound, (g.n, g.m, emitted, delta, bound)
