from __future__ import annotations

import itertools
import random

import pytest

from locwheel.generators import (
    complete_graph,
    cycle_graph,
    path_graph,
    random_connected_graph,
    theta_graph,
    wheel_graph,
)
from locwheel.graphs import INF, GraphError, WeightedGraph
from locwheel.localcut import (
    cut_at_pair,
    cut_at_vertex,
    explorer_neighbourhood,
    is_local_2separator,
    is_local_cutvertex,
    is_r_locally_2_connected,
    is_r_locally_3_connected,
    vertex_cut_groups,
)


def k4_minus_edge():
    # two triangles sharing edge 0-1
    return WeightedGraph(range(4), [(0, 1, 1), (0, 2, 1), (1, 2, 1), (0, 3, 1), (1, 3, 1)])


# -- local cutvertices -----------------------------------------------------------


def test_local_cutvertex_examples():
    c8 = cycle_graph(8)
    assert all(is_local_cutvertex(c8, v, 4) for v in c8.vertices())
    k4 = complete_graph(4)
    for r in (3, 5, 10, INF):
        assert not is_local_cutvertex(k4, 0, r)
    assert not is_local_cutvertex(c8, 0, 16)


def test_phantom_group_for_long_edge():
    # edge 0-1 of length 5 > r/2 forms its own slice group at r=4
    g = WeightedGraph(range(4), [(0, 1, 5), (0, 2, 1), (2, 3, 1), (3, 0, 1), (1, 2, 1)])
    groups = vertex_cut_groups(g, 0, 4)
    assert [1] in groups


def test_classical_cutvertex_at_infinity():
    rng = random.Random(13)
    for _ in range(25):
        g = random_connected_graph(rng.randint(3, 8), rng, max_len=3)
        for v in g.vertices():
            classical = len(g.remove_vertices([v]).components()) >= 2 and g.degree(v) >= 1
            assert is_local_cutvertex(g, v, INF) == classical


# -- explorer neighbourhoods and 2-separators --------------------------------------


def test_explorer_examples():
    k4 = complete_graph(4)
    nb = explorer_neighbourhood(k4, 0, 1, 3)
    assert nb.subgraph.n == 4
    assert len(nb.components) == 1  # 2 and 3 joined by an edge

    k23 = theta_graph(2, 2, 2)
    nb = explorer_neighbourhood(k23, 0, 1, 4)
    assert len(nb.components) == 3
    assert all(len(c) == 1 for c in nb.components)

    c8 = cycle_graph(8)
    nb = explorer_neighbourhood(c8, 0, 4, 8)
    assert len(nb.components) == 2
    assert sorted(map(len, nb.components)) == [3, 3]


def test_local_2separator_examples():
    k23 = theta_graph(2, 2, 2)
    assert is_local_2separator(k23, 0, 1, 4)
    k4 = complete_graph(4)
    assert not is_local_2separator(k4, 0, 1, 3)
    assert is_local_2separator(k4_minus_edge(), 0, 1, 3)


def test_classical_2separator_at_infinity_on_2_connected_graphs():
    rng = random.Random(17)
    checked = 0
    for _ in range(40):
        g = random_connected_graph(rng.randint(4, 8), rng, max_len=2)
        if any(is_local_cutvertex(g, v, INF) for v in g.vertices()):
            continue  # restrict to 2-connected graphs, where the notions agree
        for x, y in itertools.combinations(g.vertices(), 2):
            classical = len(g.remove_vertices([x, y]).components()) >= 2
            assert is_local_2separator(g, x, y, INF) == classical
            checked += 1
    assert checked > 30


# -- cutting ------------------------------------------------------------------------


def test_cut_cycle_to_path():
    # C_{r+1} at r=5: one cut yields a path with the same number of edges
    c6 = cycle_graph(6)
    res = cut_at_vertex(c6, 0, 5)
    assert res.graph.n == 7 and res.graph.m == 6
    comps = res.graph.components()
    assert len(comps) == 1
    degrees = sorted(res.graph.degree(v) for v in res.graph.vertices())
    assert degrees == [1, 1, 2, 2, 2, 2, 2]
    # slice farness: the two endpoints are the slices, at distance 6 > 5
    slices = sorted(res.slice_origin)
    assert res.graph.distance(slices[0], slices[1]) == 6


def test_cut_two_triangles_at_shared_vertex():
    g = WeightedGraph(range(5), [(0, 1, 1), (1, 2, 1), (2, 0, 1), (0, 3, 1), (3, 4, 1), (4, 0, 1)])
    assert is_local_cutvertex(g, 0, 3)
    res = cut_at_vertex(g, 0, 3)
    comps = res.graph.components()
    assert len(comps) == 2 and all(len(c) == 3 for c in comps)


def test_cut_pair_k23():
    k23 = theta_graph(2, 2, 2)
    res = cut_at_pair(k23, 0, 1, 4)
    comps = res.graph.components()
    assert len(comps) == 3
    for comp in comps:
        sub = res.graph.subgraph(comp)
        # each torso is a 4-cycle: middle vertex + two slices + torso path of length 2
        assert sub.n == 4 and sub.m == 4
        assert all(sub.degree(v) == 2 for v in comp)
    assert len(res.torso_paths) == 3
    assert all(tp.length == 2 for tp in res.torso_paths)


def test_cut_pair_k4_minus_edge():
    res = cut_at_pair(k4_minus_edge(), 0, 1, 3)
    comps = res.graph.components()
    assert len(comps) == 2
    for comp in comps:
        sub = res.graph.subgraph(comp)
        assert sub.n == 3 and sub.m == 3  # triangles
    assert all(tp.length == 1 for tp in res.torso_paths)
    assert res.op.consumed_xy == 1


def test_cut_farness_on_random_cuts():
    rng = random.Random(23)
    vertex_cuts = pair_cuts = 0
    for _ in range(300):
        g = random_connected_graph(rng.randint(3, 8), rng, max_len=3)
        r = rng.choice([3, 4, 6, 10])
        cut_v = [v for v in g.vertices() if is_local_cutvertex(g, v, r)]
        if cut_v:
            res = cut_at_vertex(g, cut_v[0], r)
            slices = sorted(res.slice_origin)
            for a, b in itertools.combinations(slices, 2):
                d = res.graph.distance(a, b)
                assert d == INF or d > r
            vertex_cuts += 1
    assert vertex_cuts >= 100


def test_cut_preconditions():
    with pytest.raises(GraphError):
        cut_at_vertex(complete_graph(4), 0, 3)
    with pytest.raises(GraphError):
        cut_at_pair(complete_graph(4), 0, 1, 3)


def test_edge_conservation_after_vertex_cut():
    rng = random.Random(29)
    for _ in range(60):
        g = random_connected_graph(rng.randint(3, 8), rng, max_len=2)
        r = rng.choice([3, 5, 8])
        for v in g.vertices():
            if is_local_cutvertex(g, v, r):
                res = cut_at_vertex(g, v, r)
                assert res.graph.m == g.m
                break


# -- local 2-/3-connectivity ----------------------------------------------------------


def test_local_connectivity_examples():
    k4 = complete_graph(4)
    assert is_r_locally_2_connected(k4, 3)
    assert is_r_locally_3_connected(k4, 3)
    c8 = cycle_graph(8)
    assert not is_r_locally_2_connected(c8, 4)  # no cycle of length <= 4
    w5 = wheel_graph(5)
    assert is_r_locally_3_connected(w5, 3)
    # no r-locally 2-connected graphs below r=3
    assert not is_r_locally_2_connected(k4, 2)


def test_gen_loc_con_as_test_generator():
    # every 3-connected small graph whose short cycles generate is locally
    # 3-connected (Lemma-level property used as a test oracle)
    from locwheel.cyclespace import short_cycles_generate

    rng = random.Random(37)
    found = 0
    for _ in range(80):
        g = random_connected_graph(rng.randint(4, 7), rng, max_len=1, extra_edge_prob=0.6)
        three_connected = all(
            len(g.remove_vertices(pair).components()) == 1
            for pair in itertools.combinations(g.vertices(), 2)
        ) and g.n >= 4
        if not three_connected:
            continue
        for r in (3, 4, 6, 10):
            if short_cycles_generate(g, r):
                assert is_r_locally_3_connected(g, r), (g.edges(), r)
                found += 1
    assert found >= 20


def test_wheels_have_no_local_2separator():
    # slice groups must join across either ball: {hub, rim} pairs of a unit
    # wheel are not local 2-separators even though the bi-ball splits
    for k in (5, 6, 7):
        w = wheel_graph(k)
        assert is_r_locally_3_connected(w, 3)


def test_pair_cut_farness():
    from locwheel.localcut import find_local_2separator

    rng = random.Random(41)
    pair_cuts = 0
    for _ in range(400):
        g = random_connected_graph(rng.randint(4, 8), rng, max_len=3)
        r = rng.choice([3, 4, 6, 10])
        pair = find_local_2separator(g, r)
        if pair is None:
            continue
        res = cut_at_pair(g, pair[0], pair[1], r)
        for orig in set(res.slice_origin.values()):
            slices = [s for s, o in res.slice_origin.items() if o == orig]
            for a, b in itertools.combinations(slices, 2):
                d = res.graph.distance(a, b)
                assert d == INF or d > r, (g.edges(), r, pair)
        pair_cuts += 1
    assert pair_cuts >= 60


def test_path_internal_vertices_are_local_cutvertices():
    p5 = path_graph(5)
    for r in (3, 7, INF):
        for v in (1, 2, 3):
            assert is_local_cutvertex(p5, v, r)
        assert not is_local_cutvertex(p5, 0, r)
