"""Wheel subdivisions: structure recovery, piece predicates, and the
explicit/bounded conversion chain."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .cyclespace import EdgeSpace, cycle_space_dimension, gf2_rank
from .graphs import (
    INF,
    GraphError,
    WeightedGraph,
    canonical_cycle,
    cycle_edges,
    cycle_length,
    edge_key,
    suppress_degree_two,
)


@dataclass
class WheelSubdivision:
    """A subdivision of a wheel inside a host graph.

    ``rim`` is the cyclic vertex sequence of the unique cycle avoiding the
    center; ``spokes`` run from the center to distinct rim vertices, listed
    in rim order.  ``embedding`` maps the subdivision's vertices into a
    larger graph when the wheel travels as a certificate.
    """

    center: int
    rim: Tuple[int, ...]
    spokes: List[Tuple[int, ...]]
    embedding: Dict[int, int] = field(default_factory=dict)

    def vertices(self) -> List[int]:
        vs = {self.center} | set(self.rim)
        for s in self.spokes:
            vs |= set(s)
        return sorted(vs)

    def edges(self) -> List[Tuple[int, int]]:
        out = set()
        n = len(self.rim)
        for i in range(n):
            out.add(edge_key(self.rim[i], self.rim[(i + 1) % n]))
        for s in self.spokes:
            for i in range(len(s) - 1):
                out.add(edge_key(s[i], s[i + 1]))
        return sorted(out)

    def subgraph(self, g: WeightedGraph) -> WeightedGraph:
        return g.edge_subgraph(self.edges())

    def to_json(self) -> dict:
        return {
            "center": self.center,
            "rim": list(self.rim),
            "spokes": [list(s) for s in self.spokes],
            "embedding": {str(k): v for k, v in sorted(self.embedding.items())},
        }

    @staticmethod
    def from_json(data: dict) -> "WheelSubdivision":
        return WheelSubdivision(
            int(data["center"]),
            tuple(data["rim"]),
            [tuple(s) for s in data["spokes"]],
            {int(k): int(v) for k, v in data.get("embedding", {}).items()},
        )


def wheel_violations(g: WeightedGraph, w: WheelSubdivision) -> List[str]:
    """Structural defects of a claimed wheel subdivision (empty when valid)."""
    bad: List[str] = []
    rim = w.rim
    if len(rim) < 3 or len(set(rim)) != len(rim):
        return ["rim is not a cycle"]
    for v in w.vertices():
        if v not in g:
            return [f"vertex {v} not in host graph"]
    n = len(rim)
    for i in range(n):
        if not g.has_edge(rim[i], rim[(i + 1) % n]):
            bad.append(f"rim edge {rim[i]}-{rim[(i + 1) % n]} missing")
    if w.center in rim:
        bad.append("center lies on the rim")
    if len(w.spokes) < 3:
        bad.append("fewer than three spokes")
    ends = []
    interior_seen: set = set()
    for s in w.spokes:
        if len(s) < 2 or s[0] != w.center:
            bad.append(f"spoke {s} does not start at the center")
            continue
        if len(set(s)) != len(s):
            bad.append(f"spoke {s} repeats a vertex")
        for i in range(len(s) - 1):
            if not g.has_edge(s[i], s[i + 1]):
                bad.append(f"spoke edge {s[i]}-{s[i + 1]} missing")
        if s[-1] not in rim:
            bad.append(f"spoke end {s[-1]} not on the rim")
        ends.append(s[-1])
        inner = set(s[1:-1])
        if inner & set(rim):
            bad.append(f"spoke {s} touches the rim internally")
        if inner & interior_seen:
            bad.append(f"spoke {s} shares interior vertices with another spoke")
        interior_seen |= inner
    if len(set(ends)) != len(ends):
        bad.append("spoke endpoints on the rim are not distinct")
    if bad:
        return bad
    # spokes must be listed in rim order
    pos = [rim.index(e) for e in ends]
    rotated = pos.index(min(pos))
    seq = pos[rotated:] + pos[:rotated]
    if seq != sorted(pos) and seq != [seq[0]] + sorted(pos[1:], reverse=True):
        bad.append("spokes are not in rim order")
    return bad


def is_wheel_subdivision(g: WeightedGraph, w: WheelSubdivision) -> bool:
    return not wheel_violations(g, w)


def _order_spokes(rim: Tuple[int, ...], spokes: List[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    return sorted(spokes, key=lambda s: rim.index(s[-1]))


def recognize_wheel_subdivision(h: WeightedGraph) -> Optional[WheelSubdivision]:
    """Recover the wheel structure of h, or None.

    When several vertices could serve as center (K4-shaped inputs), the
    smallest-id vertex of degree >= 3 wins.
    """
    if not h.is_connected():
        return None
    for c in h.vertices():
        if h.degree(c) < 3:
            continue
        spokes = []
        ok = True
        for u in h.neighbors(c):
            path = [c, u]
            prev, cur = c, u
            while cur != c and h.degree(cur) == 2:
                nxts = [z for z in h.neighbors(cur) if z != prev]
                prev, cur = cur, nxts[0]
                path.append(cur)
            if cur == c or path[-1] == c:
                ok = False
                break
            spokes.append(tuple(path))
        if not ok or len(spokes) < 3:
            continue
        spoke_edges = {edge_key(p[i], p[i + 1]) for p in spokes for i in range(len(p) - 1)}
        rim_edges = [e for e in ((u, v) for u, v, _ in h.edges()) if e not in spoke_edges]
        try:
            rim = cycle_from_edges_list(rim_edges)
        except GraphError:
            continue
        ends = {p[-1] for p in spokes}
        if not ends <= set(rim):
            continue
        interiors = {v for p in spokes for v in p[1:-1]}
        if interiors & set(rim) or c in rim:
            continue
        cand = WheelSubdivision(c, rim, _order_spokes(rim, spokes))
        if is_wheel_subdivision(h, cand) and set(cand.vertices()) == set(h.vertices()):
            return cand
    return None


def cycle_from_edges_list(edges) -> Tuple[int, ...]:
    from .graphs import cycle_from_edges

    return cycle_from_edges(edges)


def pieces_of(g: WeightedGraph, w: WheelSubdivision) -> List[Tuple[int, ...]]:
    """The piece cycles: consecutive spokes plus the rim segment between."""
    k = len(w.spokes)
    rim = w.rim
    n = len(rim)
    out = []
    for i in range(k):
        s1 = w.spokes[i]
        s2 = w.spokes[(i + 1) % k]
        a, b = rim.index(s1[-1]), rim.index(s2[-1])
        seg = []
        j = a
        while j != b:
            seg.append(rim[j])
            j = (j + 1) % n
        seg.append(rim[b])
        if k == 1:
            raise GraphError("wheel with a single spoke")
        cyc = list(s1) + seg[1:] + list(reversed(s2))[1:-1]
        out.append(canonical_cycle(cyc))
    return out


def piece_lengths(g: WeightedGraph, w: WheelSubdivision) -> List[int]:
    return [cycle_length(g, p) for p in pieces_of(g, w)]


def rim_length(g: WeightedGraph, w: WheelSubdivision) -> int:
    return cycle_length(g, w.rim)


def is_r_bounded(g: WeightedGraph, w: WheelSubdivision, r) -> bool:
    """All pieces no longer than r."""
    return all(l <= r for l in piece_lengths(g, w))


def has_r_explicit(g: WeightedGraph, w: WheelSubdivision, r) -> bool:
    """All pieces short, or all but one short with a short rim."""
    over = [l for l in piece_lengths(g, w) if l > r]
    if not over:
        return True
    return len(over) == 1 and rim_length(g, w) <= r


def wheel_cycles(w: WheelSubdivision) -> List[Tuple[int, ...]]:
    """Every cycle of the subdivision: the rim plus, for each spoke pair,
    the two cycles through the center (closed form, no search)."""
    out = [canonical_cycle(w.rim)]
    k = len(w.spokes)
    rim = w.rim
    n = len(rim)
    for i in range(k):
        for j in range(i + 1, k):
            s1, s2 = w.spokes[i], w.spokes[j]
            a, b = rim.index(s1[-1]), rim.index(s2[-1])
            for direction in (1, -1):
                seg = []
                t = a
                while t != b:
                    seg.append(rim[t])
                    t = (t + direction) % n
                seg.append(rim[b])
                cyc = list(s1) + seg[1:] + list(reversed(s2))[1:-1]
                out.append(canonical_cycle(cyc))
    seen = []
    for c in out:
        if c not in seen:
            seen.append(c)
    return seen


def is_r_local_wheel(g: WeightedGraph, w: WheelSubdivision, r) -> bool:
    """Do the cycles of length <= r of the subdivision generate its cycle
    space?  (r-bounded implies this; the rim alone never suffices.)"""
    sub = w.subgraph(g)
    space = EdgeSpace(sub)
    rows = [
        space.to_bits(cycle_edges(c))
        for c in wheel_cycles(w)
        if r == INF or cycle_length(sub, c) <= r
    ]
    return gf2_rank(rows) == cycle_space_dimension(sub)


# -- the conversion chain make_explicit -> explicit_to_bounded --------------------


def explicit_to_bounded(g: WeightedGraph, w: WheelSubdivision, r) -> WheelSubdivision:
    """Shrink a wheel with an r-explicit generating set to an r-bounded one.

    When one piece is too long, two adjacent short pieces plus the rim form
    a subdivision of K4; re-centered at the rim vertex between the two
    pieces, its pieces are the two old pieces and the old rim.
    """
    if not has_r_explicit(g, w, r):
        raise GraphError("wheel has no r-explicit generating set")
    lens = piece_lengths(g, w)
    if all(l <= r for l in lens):
        return w
    k = len(w.spokes)
    bad = lens.index(max(lens))
    pair = None
    for i in range(k):
        if i != bad and (i + 1) % k != bad and lens[i] <= r and lens[(i + 1) % k] <= r:
            pair = i
            break
    if pair is None:
        raise GraphError("no two adjacent short pieces")
    i = pair
    rim, n = w.rim, len(w.rim)
    s_i, s_mid, s_j = w.spokes[i], w.spokes[(i + 1) % k], w.spokes[(i + 2) % k]
    t_i, t_mid, t_j = rim.index(s_i[-1]), rim.index(s_mid[-1]), rim.index(s_j[-1])

    def rim_arc(a: int, b: int, direction: int) -> List[int]:
        seg = [rim[a]]
        t = a
        while t != b:
            t = (t + direction) % n
            seg.append(rim[t])
        return seg

    center = rim[t_mid]
    spoke_to_c = tuple([center] + list(reversed(s_mid))[1:])       # center .. old hub
    spoke_back = tuple(rim_arc(t_mid, t_i, -1))                    # center .. t_i
    spoke_fwd = tuple(rim_arc(t_mid, t_j, 1))                      # center .. t_j
    # new rim: old hub -> t_i via spoke i, long way around the rim to t_j,
    # then spoke j back to the old hub
    long_way = rim_arc(t_i, t_j, -1)
    new_rim_seq = list(s_i) + long_way[1:] + list(reversed(s_j))[1:-1]
    new_rim = canonical_cycle(new_rim_seq)
    out = WheelSubdivision(center, new_rim,
                           _order_spokes(new_rim, [spoke_to_c, spoke_back, spoke_fwd]),
                           dict(w.embedding))
    violations = wheel_violations(g, out)
    if violations or not is_r_bounded(g, out, r):
        raise AssertionError(f"explicit_to_bounded produced a bad wheel: {violations}")
    return out


class WheelLemmaGap(AssertionError):
    """A weighted wheel that is r-local but contains no r-explicit
    sub-wheel.  This refutes the explicit-conversion lemma for weighted
    wheels: a weighted K4 can be generated by two short triangles plus a
    geodesic quadrilateral while every centering has a long piece (e.g.
    lengths 1,5,5,3,1,5 at r = 10, threshold 11)."""


def make_explicit(g: WeightedGraph, w: WheelSubdivision, r) -> WheelSubdivision:
    """Find a sub-subdivision with an r-explicit generating set.

    Works on the suppressed weighted wheel: while some geodesic cycle of
    length <= r is neither a piece nor the rim, it crosses the hub and has
    a spoke chord; deleting that spoke strictly shrinks the wheel.
    """
    if not is_r_local_wheel(g, w, r):
        raise GraphError("wheel is not r-local")
    sub = w.subgraph(g)
    small, paths = suppress_degree_two(sub)
    ww = recognize_wheel_subdivision(small)
    if ww is None:
        raise AssertionError("suppressed wheel subdivision is not a wheel")

    while True:
        if len(ww.spokes) == 3:
            break
        offender = _short_geodesic_non_piece(small, ww, r)
        if offender is None:
            break
        # the offending cycle has a spoke chord: a spoke whose rim endpoint
        # is an interior attachment of the cycle's rim arc
        chord = _spoke_chord(small, ww, offender)
        small2 = small.remove_edge(chord[0], chord[1])
        small2, more_paths = suppress_degree_two(small2)
        # compose suppression mappings
        new_paths = {}
        for (a, b), p in more_paths.items():
            expanded: List[int] = [p[0]]
            for q1, q2 in zip(p, p[1:]):
                seg = paths[edge_key(q1, q2)]
                seg = seg if seg[0] == q1 else seg[::-1]
                expanded.extend(seg[1:])
            new_paths[(a, b)] = tuple(expanded)
        paths = new_paths
        small = small2
        ww = recognize_wheel_subdivision(small)
        if ww is None:
            raise AssertionError("spoke deletion destroyed the wheel")

    out = _expand_wheel(ww, paths, dict(w.embedding))
    violations = wheel_violations(g, out)
    if violations:
        raise AssertionError(f"make_explicit failed: {violations}")
    if not has_r_explicit(g, out, r):
        raise WheelLemmaGap(
            f"r-local wheel with piece lengths {piece_lengths(g, out)} and rim "
            f"{rim_length(g, out)} admits no r-explicit centering at r={r}")
    return out


def _short_geodesic_non_piece(small: WeightedGraph, ww: WheelSubdivision, r):
    from .graphs import is_geodesic_cycle

    pieces = {frozenset(cycle_edges(p)) for p in pieces_of(small, ww)}
    pieces.add(frozenset(cycle_edges(ww.rim)))
    best = None
    for cyc in wheel_cycles(ww):
        ln = cycle_length(small, cyc)
        if r != INF and ln > r:
            continue
        if frozenset(cycle_edges(cyc)) in pieces:
            continue
        if not is_geodesic_cycle(small, cyc):
            continue
        if best is None or (ln, cyc) < best:
            best = (ln, cyc)
    return None if best is None else best[1]


def _spoke_chord(small: WeightedGraph, ww: WheelSubdivision, cyc: Tuple[int, ...]):
    """A spoke of the suppressed wheel joining the hub to an interior rim
    attachment of the given hub cycle (always exists for a non-piece)."""
    edges = cycle_edges(cyc)
    for s in ww.spokes:
        e = edge_key(s[0], s[-1])
        if e not in edges and s[-1] in cyc and ww.center in cyc:
            return e
    raise AssertionError("no spoke chord on a non-piece geodesic cycle")


def _expand_wheel(ww: WheelSubdivision, paths: Dict, embedding: Dict[int, int]) -> WheelSubdivision:
    """Re-expand a suppressed wheel through the suppression mapping."""

    def expand_path(seq: Sequence[int]) -> List[int]:
        out = [seq[0]]
        for a, b in zip(seq, seq[1:]):
            seg = paths[edge_key(a, b)]
            seg = seg if seg[0] == a else seg[::-1]
            out.extend(seg[1:])
        return out

    rim_seq = expand_path(list(ww.rim) + [ww.rim[0]])[:-1]
    rim = canonical_cycle(rim_seq)
    spokes = [tuple(expand_path(s)) for s in ww.spokes]
    return WheelSubdivision(ww.center, rim, _order_spokes(rim, spokes), embedding)


def make_bounded(g: WeightedGraph, w: WheelSubdivision, r) -> WheelSubdivision:
    """r-local wheel subdivision -> r-bounded wheel subdivision inside it."""
    return explicit_to_bounded(g, make_explicit(g, w, r), r)


# -- generator -----------------------------------------------------------------


def generate_r_weighted_wheel(spokes: int, r: int, seed: int) -> Tuple[WeightedGraph, WheelSubdivision]:
    """Random weighted wheel whose subdivision is r-local (rejection sampled).

    Mixes fully r-bounded instances with explicit-but-unbounded ones (one
    long piece, short rim).
    """
    if spokes < 3:
        raise GraphError("need >= 3 spokes")
    rng = random.Random(seed)
    for _ in range(1000):
        cap = max(1, r // 3)
        rim_lengths = [rng.randint(1, cap) for _ in range(spokes)]
        spoke_lengths = [rng.randint(1, cap) for _ in range(spokes)]
        if rng.random() < 0.4:
            # push one piece past r by fattening a rim edge, keeping the rim short
            i = rng.randrange(spokes)
            room = r - sum(rim_lengths) + rim_lengths[i]
            if room > rim_lengths[i]:
                rim_lengths[i] = room
        from .generators import wheel_graph

        g = wheel_graph(spokes, rim_lengths, spoke_lengths)
        w = WheelSubdivision(0, tuple(range(1, spokes + 1)),
                             [(0, i) for i in range(1, spokes + 1)])
        if is_r_local_wheel(g, w, r):
            return g, w
    raise AssertionError("rejection sampling failed to build an r-local wheel")
