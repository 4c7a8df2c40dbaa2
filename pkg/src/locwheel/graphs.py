"""Weighted simple graphs with integer edge lengths, plus the metric toolbox.

Vertices are opaque non-negative integers.  Edge lengths are positive
integers.  Radii may be half-integral (r/2 for integer r), so every
comparison against a radius is done on doubled lengths; no floats are used
except ``INF`` as the unreachable/infinite marker.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction
from heapq import heappop, heappush
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

INF = float("inf")

Edge = Tuple[int, int]  # normalized: u < v


class GraphError(ValueError):
    """Invalid graph input (unknown vertex, loop, parallel edge, bad length)."""


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


class WeightedGraph:
    """Simple undirected graph with positive integer edge lengths.

    Instances are treated as immutable after construction; derived graphs
    are produced by the ``with_*``/``subgraph`` constructors.  Iteration
    order is sorted everywhere so all algorithms built on top are
    deterministic.
    """

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Tuple[int, int, int]] = ()):
        self._adj: Dict[int, Dict[int, int]] = {}
        for v in vertices:
            self._add_vertex(int(v))
        for e in edges:
            if len(e) == 2:
                u, v = e  # type: ignore[misc]
                ln = 1
            else:
                u, v, ln = e
            self._add_edge(int(u), int(v), int(ln))
        self._dist_cache: Dict[int, Dict[int, int]] = {}
        self._spath_cache: Dict[Tuple[int, int], Optional[Tuple[int, ...]]] = {}

    def _add_vertex(self, v: int) -> None:
        if v < 0:
            raise GraphError(f"vertex ids must be non-negative, got {v}")
        self._adj.setdefault(v, {})

    def _add_edge(self, u: int, v: int, length: int) -> None:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if length < 1:
            raise GraphError(f"edge {u}-{v} has non-positive length {length}")
        self._add_vertex(u)
        self._add_vertex(v)
        if v in self._adj[u]:
            raise GraphError(f"duplicate edge {u}-{v}")
        self._adj[u][v] = length
        self._adj[v][u] = length

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def vertices(self) -> List[int]:
        return sorted(self._adj)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def edges(self) -> List[Tuple[int, int, int]]:
        out = []
        for u in sorted(self._adj):
            for v in sorted(self._adj[u]):
                if u < v:
                    out.append((u, v, self._adj[u][v]))
        return out

    def edge_set(self) -> List[Edge]:
        return [(u, v) for u, v, _ in self.edges()]

    def neighbors(self, v: int) -> List[int]:
        self._require(v)
        return sorted(self._adj[v])

    def degree(self, v: int) -> int:
        self._require(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def length(self, u: int, v: int) -> int:
        self._require(u)
        if v not in self._adj[u]:
            raise GraphError(f"no edge {u}-{v}")
        return self._adj[u][v]

    def _require(self, v: int) -> None:
        if v not in self._adj:
            raise GraphError(f"unknown vertex {v}")

    # -- derived graphs ---------------------------------------------------

    def subgraph(self, vertices: Iterable[int]) -> "WeightedGraph":
        """Induced subgraph on the given vertex set."""
        keep = set(vertices)
        for v in keep:
            self._require(v)
        edges = [(u, v, ln) for u, v, ln in self.edges() if u in keep and v in keep]
        return WeightedGraph(sorted(keep), edges)

    def remove_vertices(self, vertices: Iterable[int]) -> "WeightedGraph":
        drop = set(vertices)
        return self.subgraph([v for v in self._adj if v not in drop])

    def remove_edge(self, u: int, v: int) -> "WeightedGraph":
        self.length(u, v)
        k = edge_key(u, v)
        edges = [(a, b, ln) for a, b, ln in self.edges() if (a, b) != k]
        return WeightedGraph(self.vertices(), edges)

    def edge_subgraph(self, edges: Iterable[Edge]) -> "WeightedGraph":
        """Subgraph consisting of the given edges and their endpoints."""
        keep = {edge_key(*e) for e in edges}
        picked = [(u, v, ln) for u, v, ln in self.edges() if (u, v) in keep]
        if len(picked) != len(keep):
            raise GraphError("edge_subgraph: some edges not present")
        verts = sorted({w for u, v, _ in picked for w in (u, v)})
        return WeightedGraph(verts, picked)

    # -- connectivity ------------------------------------------------------

    def components(self) -> List[List[int]]:
        seen = set()
        comps = []
        for s in sorted(self._adj):
            if s in seen:
                continue
            stack, comp = [s], []
            seen.add(s)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in sorted(self._adj[x]):
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # -- metric -------------------------------------------------------------

    def distances_from(self, s: int) -> Dict[int, int]:
        """Dijkstra distances from s (memoized)."""
        self._require(s)
        if s in self._dist_cache:
            return self._dist_cache[s]
        dist: Dict[int, int] = {s: 0}
        heap: List[Tuple[int, int]] = [(0, s)]
        done = set()
        while heap:
            d, x = heappop(heap)
            if x in done:
                continue
            done.add(x)
            for y in sorted(self._adj[x]):
                nd = d + self._adj[x][y]
                if y not in dist or nd < dist[y]:
                    dist[y] = nd
                    heappush(heap, (nd, y))
        self._dist_cache[s] = dist
        return dist

    def distance(self, u: int, v: int):
        """Shortest-path length between u and v; INF when unreachable."""
        self._require(u)
        self._require(v)
        return self.distances_from(u).get(v, INF)

    def shortest_path(self, u: int, v: int) -> Optional[Tuple[int, ...]]:
        """Lexicographically least among the shortest u-v paths.

        The tie-break makes every construction that picks shortest paths
        reproducible.  Returns None when v is unreachable.
        """
        key = (u, v)
        if key in self._spath_cache:
            return self._spath_cache[key]
        self._require(u)
        self._require(v)
        dist_from_v = self.distances_from(v)
        if u not in dist_from_v:
            self._spath_cache[key] = None
            return None
        # walk greedily: always extend by the least neighbor that stays on
        # some shortest path, which yields the lex-least shortest path.
        path = [u]
        x = u
        while x != v:
            rem = dist_from_v[x]
            for y in sorted(self._adj[x]):
                if y in dist_from_v and self._adj[x][y] + dist_from_v[y] == rem:
                    path.append(y)
                    x = y
                    break
            else:  # pragma: no cover - unreachable by Dijkstra correctness
                raise AssertionError("shortest path reconstruction failed")
        res = tuple(path)
        self._spath_cache[key] = res
        return res

    def path_length(self, path: Sequence[int]) -> int:
        return sum(self.length(path[i], path[i + 1]) for i in range(len(path) - 1))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"WeightedGraph(n={self.n}, m={self.m})"


# -- spec operations ---------------------------------------------------------


def distance(g: WeightedGraph, u: int, v: int):
    return g.distance(u, v)


def ball(g: WeightedGraph, v: int, rho) -> WeightedGraph:
    """Subgraph induced on the vertices at distance <= rho from v.

    ``rho`` may be an int, a Fraction (for half-integral radii like r/2),
    or INF.  Comparison is exact: 2*distance <= 2*rho over integers.
    """
    g._require(v)
    if rho == INF:
        return g.subgraph(g.distances_from(v).keys())
    two_rho = 2 * Fraction(rho) if not isinstance(rho, int) else 2 * rho
    if two_rho < 0:
        raise GraphError(f"negative radius {rho}")
    dist = g.distances_from(v)
    inside = [w for w in sorted(dist) if 2 * dist[w] <= two_rho]
    return g.subgraph(inside)


def half_radius(r) -> Fraction:
    """r/2 as an exact value (Fraction), INF stays INF."""
    if r == INF:
        return INF
    return Fraction(int(r), 2)


def diameter(g: WeightedGraph):
    """Max pairwise distance; INF when disconnected; error on empty graph."""
    if g.n == 0:
        raise GraphError("diameter of empty graph")
    if not g.is_connected():
        return INF
    best = 0
    for u in g.vertices():
        d = g.distances_from(u)
        best = max(best, max(d.values()))
    return best


# -- cycles ------------------------------------------------------------------


def canonical_cycle(seq: Sequence[int]) -> Tuple[int, ...]:
    """Normalize a cyclic vertex sequence: least vertex first, lesser second."""
    seq = list(seq)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        raise GraphError(f"not a cycle: {seq}")
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if rot[1] > rot[-1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def cycle_edges(seq: Sequence[int]) -> frozenset:
    """Edge set of a cyclic vertex sequence."""
    n = len(seq)
    return frozenset(edge_key(seq[i], seq[(i + 1) % n]) for i in range(n))


def check_cycle(g: WeightedGraph, seq: Sequence[int]) -> None:
    if len(seq) < 3 or len(set(seq)) != len(seq):
        raise GraphError(f"not a cycle: {seq}")
    for i in range(len(seq)):
        g.length(seq[i], seq[(i + 1) % len(seq)])


def cycle_length(g: WeightedGraph, seq: Sequence[int]) -> int:
    n = len(seq)
    return sum(g.length(seq[i], seq[(i + 1) % n]) for i in range(n))


def cycle_from_edges(edges: Iterable[Edge]) -> Tuple[int, ...]:
    """Vertex sequence of the single cycle formed by the given edge set."""
    adj: Dict[int, List[int]] = {}
    cnt = 0
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
        cnt += 1
    if not adj:
        raise GraphError("empty edge set is not a cycle")
    for x, nbrs in adj.items():
        if len(nbrs) != 2:
            raise GraphError(f"edge set is not a single cycle (degree {len(nbrs)} at {x})")
    start = min(adj)
    seq = [start]
    prev = None
    x = start
    while True:
        a, b = sorted(adj[x])
        nxt = b if a == prev else a
        if nxt == start:
            break
        seq.append(nxt)
        prev, x = x, nxt
    if len(seq) != cnt:
        raise GraphError("edge set is not a single cycle (disconnected)")
    return canonical_cycle(seq)


def is_geodesic_cycle(g: WeightedGraph, cyc: Sequence[int]) -> bool:
    """True iff for every vertex pair of the cycle the shorter arc realizes
    the graph distance (so the cycle contains a shortest path for each pair)."""
    check_cycle(g, cyc)
    n = len(cyc)
    pref = [0]
    for i in range(n):
        pref.append(pref[-1] + g.length(cyc[i], cyc[(i + 1) % n]))
    total = pref[n]
    for i in range(n):
        for j in range(i + 1, n):
            arc = pref[j] - pref[i]
            shorter = min(arc, total - arc)
            if shorter != g.distance(cyc[i], cyc[j]):
                return False
    return True


def girth_length(g: WeightedGraph):
    """Length of a shortest cycle; INF if the graph is a forest."""
    best = INF
    for u, v, ln in g.edges():
        without = g.remove_edge(u, v)
        d = without.distance(u, v)
        if d != INF:
            best = min(best, d + ln)
    return best


# -- suppression --------------------------------------------------------------


def suppress_degree_two(g: WeightedGraph) -> Tuple[WeightedGraph, Dict[Edge, Tuple[int, ...]]]:
    """Iteratively replace degree-2 vertices by edges summing the two lengths.

    A suppression that would create a loop or a parallel edge is skipped,
    keeping the graph simple.  Returns the suppressed graph and a mapping
    from each surviving edge to the original path it represents.
    """
    adj = {v: dict(g._adj[v]) for v in g._adj}
    paths: Dict[Edge, Tuple[int, ...]] = {edge_key(u, v): (u, v) for u, v, _ in g.edges()}

    def path_for(u: int, v: int) -> Tuple[int, ...]:
        p = paths[edge_key(u, v)]
        return p if p[0] == u else p[::-1]

    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if len(adj[v]) != 2:
                continue
            a, b = sorted(adj[v])
            if b in adj[a]:
                continue  # would create a parallel edge (or loop when a == b)
            new_len = adj[v][a] + adj[v][b]
            pa = path_for(a, v)
            pb = path_for(v, b)
            del paths[edge_key(a, v)]
            del paths[edge_key(v, b)]
            paths[edge_key(a, b)] = pa + pb[1:] if a <= b else (pa + pb[1:])[::-1]
            del adj[v]
            del adj[a][v]
            del adj[b][v]
            adj[a][b] = new_len
            adj[b][a] = new_len
            changed = True
            break
    out = WeightedGraph(sorted(adj), [(u, v, adj[u][v]) for u in adj for v in adj[u] if u < v])
    return out, paths


def embeds_as_subgraph(g: WeightedGraph, h: WeightedGraph, vmap: Dict[int, int]) -> bool:
    """True iff vmap embeds h into g injectively with matching edge lengths."""
    if set(vmap) != set(h.vertices()):
        return False
    images = list(vmap.values())
    if len(set(images)) != len(images):
        return False
    if any(w not in g for w in images):
        return False
    for u, v, ln in h.edges():
        gu, gv = vmap[u], vmap[v]
        if not g.has_edge(gu, gv) or g.length(gu, gv) != ln:
            return False
    return True


# -- text format ---------------------------------------------------------------


def parse_graph(text: str) -> WeightedGraph:
    """Parse the plain text format: first line ``n m``, then m lines
    ``u v len`` (or ``u v`` meaning length 1) with 0-based vertex ids."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise GraphError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"bad header line: {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphError(f"bad header line: {lines[0]!r}") from exc
    if n < 0 or m < 0 or len(lines) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) == 2:
            u, v, w = int(parts[0]), int(parts[1]), 1
        elif len(parts) == 3:
            u, v, w = int(parts[0]), int(parts[1]), int(parts[2])
        else:
            raise GraphError(f"bad edge line: {ln!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex id out of range in line {ln!r}")
        edges.append((u, v, w))
    return WeightedGraph(range(n), edges)


def format_graph(g: WeightedGraph) -> str:
    """Canonical text form (inverse of parse_graph for 0..n-1 vertex ids)."""
    verts = g.vertices()
    if verts and verts != list(range(len(verts))):
        raise GraphError("format_graph requires contiguous 0-based vertex ids")
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v} {ln}" for u, v, ln in g.edges()]
    return "\n".join(lines) + "\n"


def graph_sha(g: WeightedGraph) -> str:
    """Hash of the graph used to tie certificates to their input."""
    payload = ";".join(f"{u},{v},{ln}" for u, v, ln in g.edges())
    payload = f"{g.n}|" + "|".join(map(str, g.vertices())) + "|" + payload
    return hashlib.sha256(payload.encode()).hexdigest()


def relabel_to_range(g: WeightedGraph) -> Tuple[WeightedGraph, Dict[int, int]]:
    """Relabel vertices to 0..n-1 (sorted order); returns (graph, old->new)."""
    old = g.vertices()
    ren = {v: i for i, v in enumerate(old)}
    edges = [(ren[u], ren[v], ln) for u, v, ln in g.edges()]
    return WeightedGraph(range(len(old)), edges), ren
