from __future__ import annotations

import json
import random

import pytest

from locwheel.decompose import (
    Certificate,
    DecideError,
    block_cut_decompose,
    component_kind,
    decide,
    parse_certificate,
    two_sep_decompose,
)
from locwheel.generators import (
    complete_graph,
    cycle_graph,
    path_graph,
    prism_counterexample,
    random_connected_graph,
    subdivided_k4,
    theta_graph,
    wheel_graph,
)
from locwheel.graphs import INF, WeightedGraph, embeds_as_subgraph
from locwheel.wheels import is_r_bounded, wheel_violations


# -- block-cut ---------------------------------------------------------------------


def test_block_cut_two_triangles_sharing_vertex():
    g = WeightedGraph(range(5), [(0, 1, 1), (1, 2, 1), (2, 0, 1),
                                 (0, 3, 1), (3, 4, 1), (4, 0, 1)])
    final, steps = block_cut_decompose(g, 3)
    comps = final.components()
    assert len(comps) == 2
    assert all(component_kind(final, c) == "cycle" for c in comps)
    assert len(steps) == 1


def test_block_cut_tree_to_edges():
    tree = WeightedGraph(range(6), [(0, 1, 1), (0, 2, 1), (1, 3, 1), (1, 4, 1), (2, 5, 1)])
    final, steps = block_cut_decompose(tree, 5)
    assert all(component_kind(final, c) == "edge" for c in final.components())
    assert final.m == tree.m


def test_block_cut_keeps_cycles_whole():
    c6 = cycle_graph(6)
    final, steps = block_cut_decompose(c6, 5)
    assert steps == []
    assert component_kind(final, final.components()[0]) == "cycle"


# -- 2-separator phase -----------------------------------------------------------------


def test_two_sep_k23():
    k23 = theta_graph(2, 2, 2)
    outcome, final, steps = two_sep_decompose(k23, 4)
    assert outcome == "torsos"
    comps = final.components()
    assert len(comps) == 3
    assert all(component_kind(final, c) == "cycle" for c in comps)
    assert len(steps) == 1


def test_two_sep_bare_cycle_untouched():
    outcome, final, steps = two_sep_decompose(cycle_graph(6), 6)
    assert outcome == "torsos" and steps == []


def test_two_sep_detects_locally_3_connected():
    outcome, torso, steps = two_sep_decompose(complete_graph(4), 3)
    assert outcome == "locally_3_connected"
    assert torso.n == 4


# -- decide ------------------------------------------------------------------------


def test_decide_k4_wheel():
    cert = decide(complete_graph(4), 3)
    assert cert.kind == "wheel"
    from locwheel.wheels import piece_lengths

    assert piece_lengths(complete_graph(4), cert.wheel) == [3, 3, 3]


def test_decide_c8_single_cycle_torso():
    for r in (3, 5, 8, INF):
        cert = decide(cycle_graph(8), r)
        assert cert.kind == "decomposition"
        kinds = [t["kind"] for t in cert.decomposition.torsos]
        assert kinds == ["cycle"]


def test_decide_k23_three_cycles():
    cert = decide(theta_graph(2, 2, 2), 4)
    assert cert.kind == "decomposition"
    assert [t["kind"] for t in cert.decomposition.torsos] == ["cycle"] * 3


def test_decide_r_below_three_degenerate():
    g = complete_graph(4)
    cert = decide(g, 2)
    assert cert.kind == "decomposition"
    assert len(cert.decomposition.torsos) == g.m
    assert all(t["kind"] == "edge" for t in cert.decomposition.torsos)
    assert cert.decomposition.cuts == []


def test_decide_wheel_lift_through_cuts():
    # a wheel glued behind a cut: pendant path forces a vertex cut first
    g = WeightedGraph(range(6), [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1),
                                 (1, 3, 1), (2, 3, 1), (0, 4, 1), (4, 5, 1)])
    cert = decide(g, 3)
    assert cert.kind == "wheel"
    sub = cert.wheel.subgraph(g)
    assert embeds_as_subgraph(g, sub, {v: v for v in sub.vertices()})
    assert is_r_bounded(g, cert.wheel, 3)


def test_decide_subdivided_k4_uses_torso_paths():
    # the planted wheel must survive lifting through pair cuts
    h = subdivided_k4(2)
    cert = decide(h, 6)
    assert cert.kind == "wheel"
    assert not wheel_violations(h, cert.wheel)
    assert is_r_bounded(h, cert.wheel, 6)


def test_decide_prism_family():
    # 3-connected, with a theta of parameter r; the oracle decides the branch
    from locwheel.certify import oracle_has_bounded_wheel, verify_certificate

    for r in (6, 8, 12):
        g = prism_counterexample(r)
        cert = decide(g, r)
        assert verify_certificate(g, cert).passed
        assert (cert.kind == "wheel") == oracle_has_bounded_wheel(g, r)


def test_certificate_json_roundtrip():
    for g, r in [(complete_graph(4), 3), (theta_graph(2, 2, 2), 4), (cycle_graph(8), 5)]:
        cert = decide(g, r)
        data = json.loads(cert.dumps())
        assert data["schema"] == 1
        again = parse_certificate(data)
        assert again.dumps() == cert.dumps()


def test_decide_deterministic():
    rng = random.Random(77)
    for _ in range(20):
        g = random_connected_graph(rng.randint(2, 7), rng, max_len=2)
        r = rng.choice([3, 4, 6, INF])
        assert decide(g, r).dumps() == decide(g, r).dumps()
