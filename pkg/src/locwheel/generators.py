"""Deterministic graph families used by the CLI, the demos and the tests."""

from __future__ import annotations

import random
from typing import List, Tuple

from .graphs import GraphError, WeightedGraph


def complete_graph(n: int) -> WeightedGraph:
    return WeightedGraph(range(n), [(i, j, 1) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int, lengths=None) -> WeightedGraph:
    if n < 3:
        raise GraphError("cycle needs >= 3 vertices")
    lengths = lengths or [1] * n
    return WeightedGraph(range(n), [(i, (i + 1) % n, lengths[i]) for i in range(n)])


def path_graph(n: int) -> WeightedGraph:
    return WeightedGraph(range(n), [(i, i + 1, 1) for i in range(n - 1)])


def wheel_graph(spokes: int, rim_lengths=None, spoke_lengths=None) -> WeightedGraph:
    """Wheel with center 0 and rim 1..spokes."""
    if spokes < 3:
        raise GraphError("wheel needs >= 3 spokes")
    rim_lengths = rim_lengths or [1] * spokes
    spoke_lengths = spoke_lengths or [1] * spokes
    edges = [(0, i + 1, spoke_lengths[i]) for i in range(spokes)]
    edges += [(i + 1, (i + 1) % spokes + 1, rim_lengths[i]) for i in range(spokes)]
    return WeightedGraph(range(spokes + 1), edges)


def subdivided_k4(k: int) -> WeightedGraph:
    """K4 with every edge subdivided into k unit edges (k=1 is K4 itself)."""
    if k < 1:
        raise GraphError("subdivision factor must be >= 1")
    edges: List[Tuple[int, int, int]] = []
    nxt = 4
    for u, v in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]:
        prev = u
        for _ in range(k - 1):
            edges.append((prev, nxt, 1))
            prev = nxt
            nxt += 1
        edges.append((prev, v, 1))
    return WeightedGraph(range(nxt), edges)


def theta_graph(a: int, b: int, c: int) -> WeightedGraph:
    """Two pole vertices joined by three internally disjoint unit paths of
    a, b and c edges (theta(2,2,2) is K_{2,3})."""
    if min(a, b, c) < 1 or sorted((a, b, c))[:2] == [1, 1]:
        raise GraphError("theta arms must have >= 1 edge and at most one single edge")
    edges = []
    nxt = 2
    for arm in (a, b, c):
        prev = 0
        for _ in range(arm - 1):
            edges.append((prev, nxt, 1))
            prev = nxt
            nxt += 1
        edges.append((prev, 1, 1))
    return WeightedGraph(range(nxt), edges)


def octahedron() -> WeightedGraph:
    g = complete_graph(6)
    for u, v in [(0, 5), (1, 4), (2, 3)]:
        g = g.remove_edge(u, v)
    return g


def prism_counterexample(r: int) -> WeightedGraph:
    """Triangular prism weighted so that it is 3-connected but not r-locally
    3-connected: {0,1} is an r-local 2-separator, there is no r-bounded
    wheel, yet a theta of parameter r and a short cycle avoiding the poles
    both exist.  Requires even r >= 6."""
    if r < 6 or r % 2:
        raise GraphError("prism family needs even r >= 6")
    w2 = r // 2 - 2
    # poles 0,1; arm A: 0-2-3-1, arm B: 0-4-5-1, arm C: edge 0-1
    return WeightedGraph(
        range(6),
        [
            (0, 2, 1), (2, 3, 1), (3, 1, w2),
            (0, 4, 1), (4, 5, 1), (5, 1, w2),
            (0, 1, r // 2),
            (2, 4, r // 2 - 1), (3, 5, r // 2 - 1),
        ],
    )


def random_connected_graph(n: int, rng: random.Random, max_len: int = 1,
                           extra_edge_prob: float = 0.35) -> WeightedGraph:
    """Random connected graph: a random spanning tree plus random extra edges."""
    if n < 1:
        raise GraphError("need n >= 1")
    edges = []
    present = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.append((u, v, rng.randint(1, max_len)))
        present.add((u, v))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in present and rng.random() < extra_edge_prob:
                edges.append((u, v, rng.randint(1, max_len)))
    return WeightedGraph(range(n), edges)
