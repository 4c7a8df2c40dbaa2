from __future__ import annotations

import random

import pytest

from locwheel.cyclespace import (
    EdgeSpace,
    GeneratingSet,
    cycle_space_dimension,
    decompose_edge_set,
    enumerate_short_cycles,
    friendly_represent,
    gf2_rank,
    gf2_solve,
    is_friendly,
    represent,
    short_cycles_generate,
)
from locwheel.generators import (
    complete_graph,
    cycle_graph,
    random_connected_graph,
    subdivided_k4,
    wheel_graph,
)
from locwheel.graphs import INF, WeightedGraph, cycle_edges, cycle_length, is_geodesic_cycle
from tests.test_graphs import all_simple_cycles


def test_gf2_basics():
    assert gf2_rank([0b011, 0b110, 0b101]) == 2
    assert gf2_rank([0b001, 0b010, 0b100]) == 3
    assert gf2_solve([0b011, 0b110], 0b101) == [0, 1]
    assert gf2_solve([0b011, 0b110], 0b001) is None


def test_decompose_edge_set_figure_eight():
    g = WeightedGraph(range(5), [(0, 1, 1), (1, 2, 1), (0, 2, 1), (0, 3, 1), (3, 4, 1), (0, 4, 1)])
    cycles = decompose_edge_set(g, frozenset(g.edge_set()))
    assert sorted(cycles) == [(0, 1, 2), (0, 3, 4)]


def brute_short_geodesic_cycles(g, r):
    out = []
    for cyc in all_simple_cycles(g):
        if (r == INF or cycle_length(g, cyc) <= r) and is_geodesic_cycle(g, cyc):
            out.append(cyc)
    return sorted(out)


def test_enumerate_examples():
    k4 = complete_graph(4)
    assert sorted(enumerate_short_cycles(k4, 3)) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert enumerate_short_cycles(cycle_graph(8), 7) == []
    # W5, r=3: exactly the five center triangles (derived by brute force)
    w5 = wheel_graph(5)
    expect = brute_short_geodesic_cycles(w5, 3)
    assert sorted(enumerate_short_cycles(w5, 3)) == expect
    assert len(expect) == 5 and all(0 in c for c in expect)


def test_enumerate_spans_all_short_cycles():
    # Horton candidates may miss exotic geodesic cycles under ties, but they
    # must span every cycle of length <= r over GF(2).
    rng = random.Random(2)
    for _ in range(20):
        g = random_connected_graph(rng.randint(3, 7), rng, max_len=3)
        space = EdgeSpace(g)
        for r in (4, 7, INF):
            rows = [space.to_bits(cycle_edges(c)) for c in enumerate_short_cycles(g, r)]
            for cyc in all_simple_cycles(g):
                if r == INF or cycle_length(g, cyc) <= r:
                    assert gf2_solve(rows, space.to_bits(cycle_edges(cyc))) is not None


def test_short_cycles_generate_examples():
    assert short_cycles_generate(complete_graph(4), 3)
    assert not short_cycles_generate(cycle_graph(8), 7)
    assert short_cycles_generate(subdivided_k4(2), 6)


def test_generate_monotone_in_r():
    rng = random.Random(9)
    for _ in range(10):
        g = random_connected_graph(rng.randint(3, 7), rng, max_len=2)
        answers = [short_cycles_generate(g, r) for r in range(3, 12)]
        assert answers == sorted(answers)  # False* then True*


def test_geodesic_cycles_generate_at_infinity():
    # cross-checked against the fundamental-cycle-basis dimension
    rng = random.Random(4)
    for _ in range(20):
        g = random_connected_graph(rng.randint(2, 8), rng, max_len=3)
        assert short_cycles_generate(g, INF)
        assert cycle_space_dimension(g) == g.m - g.n + len(g.components())


def test_represent_k4_four_cycle():
    k4 = complete_graph(4)
    target = (0, 1, 2, 3)
    gs = represent(k4, 3, target)
    assert gs is not None
    # oracle: the GF(2) sum of the members equals the target edge set
    assert gs.check(k4, 3)
    assert all(cycle_length(k4, c) == 3 for c in gs.members)


def test_represent_singleton_and_none():
    k4 = complete_graph(4)
    tri = (0, 1, 2)
    gs = represent(k4, 3, tri)
    assert gs is not None and gs.check(k4, 3)
    c8 = cycle_graph(8)
    assert represent(c8, 7, tuple(range(8))) is None


def test_friendly_represent_fixed_point():
    k4 = complete_graph(4)
    # v0=0, v1=2, p = lex-least shortest path 0-2 (the direct edge)
    p = (0, 2)
    target = (0, 1, 3)  # contains v0, avoids v1; already friendly
    gs = friendly_represent(k4, 3, 0, 2, p, target)
    assert gs.check(k4, 3)
    assert gs.members == [(0, 1, 3)]


def test_friendly_represent_k4_avoiding_edge():
    # v0,v1 ends of an edge, p = that edge, target = 4-cycle avoiding p.
    k4 = complete_graph(4)
    p = (0, 1)
    target = (0, 2, 1, 3)  # 4-cycle 0-2-1-3, contains both 0 and 1, avoids edge 0-1
    gs = friendly_represent(k4, 3, 0, 1, p, target)
    assert gs.check(k4, 3)
    for c in gs.members:
        assert is_friendly(k4, 3, 0, 1, p, c)


def test_friendly_represent_wheel_center():
    # W5 with v0 = center: a valid cycle around the center is generated by pieces.
    w5 = wheel_graph(5)
    p = w5.shortest_path(0, 1)
    target = (0, 2, 3)  # piece through center avoiding v1=1? vertex 1 not on it
    gs = friendly_represent(w5, 3, 0, 1, p, target)
    assert gs.check(w5, 3)
    for c in gs.members:
        assert is_friendly(w5, 3, 0, 1, p, c)
        assert 0 in c  # pieces all pass through the hub


def test_friendly_represent_random_property():
    rng = random.Random(31)
    done = 0
    for _ in range(200):
        g = random_connected_graph(rng.randint(4, 7), rng, max_len=2)
        cycles = all_simple_cycles(g)
        if not cycles:
            continue
        target = cycles[rng.randrange(len(cycles))]
        v0 = target[0]
        outside = [v for v in g.vertices() if v not in target]
        if not outside:
            continue
        v1 = outside[0]
        p = g.shortest_path(v0, v1)
        if p is None:
            continue
        r = max(cycle_length(g, c) for c in cycles)
        try:
            gs = friendly_represent(g, r, v0, v1, p, target)
        except Exception:
            continue
        assert gs.check(g, r)
        assert all(is_friendly(g, r, v0, v1, p, c) for c in gs.members)
        done += 1
    assert done >= 50
