"""Independent verification of certificates and ground truth at desk scale.

The verifiers re-derive everything from the certificate and the input
graph: cut replays re-run the separator predicates, wheel checks re-walk
the subdivision.  The oracle enumerates every embedded wheel subdivision
outright, so agreement between decide() and the oracle is an executable
form of the dichotomy theorem.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .decompose import Certificate, CutState, CutStep, component_kind, decide
from .graphs import (
    INF,
    GraphError,
    WeightedGraph,
    diameter,
    edge_key,
    embeds_as_subgraph,
    graph_sha,
    suppress_degree_two,
)
from .localcut import cut_at_pair, cut_at_vertex, is_local_2separator, is_local_cutvertex
from .wheels import WheelSubdivision, is_r_bounded, piece_lengths, wheel_violations


@dataclass
class VerdictReport:
    violations: List[Tuple[str, str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def fail(self, invariant: str, location: str, detail: str) -> None:
        self.violations.append((invariant, location, detail))


# -- wheel verification ---------------------------------------------------------


def verify_wheel(g: WeightedGraph, r, w: WheelSubdivision) -> VerdictReport:
    report = VerdictReport()
    bad = wheel_violations(g, w)
    for b in bad:
        report.fail("wheel-structure", "wheel", b)
    if bad:
        return report
    vmap = w.embedding or {v: v for v in w.vertices()}
    sub = w.subgraph(g)
    if not embeds_as_subgraph(g, sub, vmap):
        report.fail("wheel-embedding", "wheel", "embedding map is not a subgraph embedding")
    for i, ln in enumerate(piece_lengths(g, w)):
        if r != INF and ln > r:
            report.fail("piece-length", f"piece {i}", f"length {ln} exceeds r={r}")
    d = diameter(sub)
    if r != INF and d > r:
        report.fail("wheel-diameter", "wheel", f"diameter {d} exceeds r={r}")
    return report


# -- decomposition verification -----------------------------------------------------


def verify_decomposition(g: WeightedGraph, r, cert: Certificate) -> VerdictReport:
    report = VerdictReport()
    d = cert.decomposition
    if r != INF and r < 3:
        _verify_degenerate(g, d, report)
        return report

    from .decompose import advance_edge_origin, initial_edge_origin

    current = g
    edge_origin = initial_edge_origin(g)
    consumed: List = []
    for k, step in enumerate(d.cuts):
        loc = f"cut {k}"
        op = step.op
        try:
            if op.kind == "vertex":
                v = op.targets[0]
                if not is_local_cutvertex(current, v, r):
                    report.fail("cut-locality", loc, f"{v} is not an r-local cutvertex")
                    return report
                res = cut_at_vertex(current, v, r)
            else:
                x, y = op.targets
                small, _ = suppress_degree_two(
                    current.subgraph(next(c for c in current.components() if x in c)))
                if x not in small or y not in small or not is_local_2separator(small, x, y, r):
                    report.fail("cut-locality", loc,
                                f"{{{x},{y}}} is not an r-local 2-separator (suppressed)")
                    return report
                res = cut_at_pair(current, x, y, r)
        except GraphError as exc:
            report.fail("cut-replay", loc, str(exc))
            return report
        if res.op.to_json() != op.to_json():
            report.fail("cut-replay", loc, "recorded cut differs from the replay")
            return report
        if {k_: v_ for k_, v_ in res.slice_origin.items()} != step.slice_origin:
            report.fail("cut-replay", loc, "slice mapping differs from the replay")
            return report
        # farness of the fresh slices
        for orig in sorted(set(res.slice_origin.values())):
            slices = sorted(s for s, o in res.slice_origin.items() if o == orig)
            for a, b in itertools.combinations(slices, 2):
                dist = res.graph.distance(a, b)
                if dist != INF and (r == INF or dist <= r):
                    report.fail("cut-farness", loc,
                                f"slices {a},{b} of {orig} at distance {dist} <= r")
        edge_origin, eaten = advance_edge_origin(edge_origin, res, k)
        if eaten is not None:
            consumed.append(eaten)
        current = res.graph

    # final slice farness across the whole history
    state = CutState(current, d.cuts)
    by_origin: Dict[int, List[int]] = {}
    for v in current.vertices():
        o = state.safe_origin(v)
        if o is not None and o != v:
            by_origin.setdefault(o, []).append(v)
    for o, slices in sorted(by_origin.items()):
        for a, b in itertools.combinations(sorted(slices), 2):
            dist = current.distance(a, b)
            if dist != INF and (r == INF or dist <= r):
                report.fail("cut-farness", "final", f"slices {a},{b} of {o} at distance {dist}")

    # torso multiset must equal the components of the replayed graph
    expected = []
    for comp in current.components():
        kind = component_kind(current, comp)
        if kind == "vertex":
            continue
        if kind is None:
            report.fail("torso-kind", "final", f"component {comp} is not a cycle or an edge")
            continue
        sub = current.subgraph(comp)
        expected.append((kind, tuple(comp), tuple((u, v, ln) for u, v, ln in sub.edges())))
    claimed = [
        (t["kind"], tuple(t["vertices"]), tuple((e[0], e[1], e[2]) for e in t["edges"]))
        for t in d.torsos
    ]
    if sorted(expected) != sorted(claimed):
        report.fail("torso-replay", "final", "torso multiset differs from the replay")

    _verify_torso_structure(g, d, report)
    _verify_edge_coverage(g, d, report, edge_origin, consumed)
    _verify_adhesion(current, d, report)
    return report


def _verify_degenerate(g: WeightedGraph, d, report: VerdictReport) -> None:
    if d.cuts:
        report.fail("degenerate", "cuts", "r < 3 decomposition must have no cuts")
    claimed = sorted(tuple(t["edges"][0]) for t in d.torsos)
    if claimed != [tuple(e) for e in
                   sorted([u, v, ln] for u, v, ln in g.edges())] or any(
            t["kind"] != "edge" for t in d.torsos):
        report.fail("degenerate", "torsos", "torsos are not exactly the edges of g")


def _verify_torso_structure(g: WeightedGraph, d, report: VerdictReport) -> None:
    for i, t in enumerate(d.torsos):
        verts = t["vertices"]
        edges = t["edges"]
        sub = WeightedGraph(verts, [(e[0], e[1], e[2]) for e in edges])
        kind = component_kind(sub, sub.vertices()) if sub.is_connected() else None
        if kind != t["kind"]:
            report.fail("torso-kind", f"torso {i}", f"claimed {t['kind']}, found {kind}")


def _verify_edge_coverage(g: WeightedGraph, d, report: VerdictReport,
                          edge_origin: Dict, consumed: List) -> None:
    """Every original edge appears in exactly one torso as an untagged edge,
    except edges joining a cut pair, which are absorbed into torso paths."""
    seen: Dict[Tuple[int, int], int] = {}
    for i, t in enumerate(d.torsos):
        tagged = {tuple(e) for e in t.get("tagged_edges", [])}
        for u, v, ln in t["edges"]:
            key = edge_key(u, v)
            origin = edge_origin.get(key)
            if origin is None:
                report.fail("edge-coverage", f"torso {i}",
                            f"edge {u}-{v} missing from the replayed graph")
                continue
            if origin[0] == "torso":
                if list(key) not in [list(e) for e in tagged] and tuple(key) not in tagged:
                    report.fail("edge-coverage", f"torso {i}",
                                f"torso-path edge {u}-{v} is not tagged")
                continue
            if tuple(key) in tagged:
                report.fail("edge-coverage", f"torso {i}",
                            f"original edge {u}-{v} is wrongly tagged")
                continue
            oe = origin[1]
            if not g.has_edge(*oe) or g.length(*oe) != ln:
                report.fail("edge-coverage", f"torso {i}",
                            f"edge {u}-{v} does not map to an edge of g")
                continue
            seen[oe] = seen.get(oe, 0) + 1
    for key, count in sorted(seen.items()):
        if count != 1:
            report.fail("edge-coverage", "global", f"edge {key} covered {count} times")
    missing = set(edge_key(u, v) for u, v, _ in g.edges()) - set(seen) - set(consumed)
    if missing:
        report.fail("edge-coverage", "global", f"edges never covered: {sorted(missing)}")


def _verify_adhesion(final: WeightedGraph, d, report: VerdictReport) -> None:
    state = CutState(final, d.cuts)
    originals = []
    for t in d.torsos:
        orig = set()
        for v in t["vertices"]:
            o = state.safe_origin(v)
            if o is not None:
                orig.add(o)
        originals.append(orig)
    for i in range(len(originals)):
        for j in range(i + 1, len(originals)):
            shared = originals[i] & originals[j]
            if len(shared) > 2:
                report.fail("adhesion", f"torsos {i},{j}", f"adhesion {sorted(shared)} > 2")


def verify_certificate(g: WeightedGraph, cert: Certificate) -> VerdictReport:
    report = VerdictReport()
    if cert.sha != graph_sha(g):
        report.fail("graph-hash", "certificate", "certificate is for a different graph")
        return report
    if cert.kind == "wheel":
        sub = verify_wheel(g, cert.r, cert.wheel)
    else:
        sub = verify_decomposition(g, cert.r, cert)
    report.violations.extend(sub.violations)
    return report


# -- brute-force oracle ---------------------------------------------------------------


def _all_cycles(g: WeightedGraph) -> List[Tuple[int, ...]]:
    from .graphs import canonical_cycle

    found = set()

    def extend(path: List[int]) -> None:
        last = path[-1]
        for y in g.neighbors(last):
            if y == path[0] and len(path) >= 3:
                found.add(canonical_cycle(path))
            elif y not in path and y > path[0]:
                extend(path + [y])

    for s in g.vertices():
        extend([s])
    return sorted(found)


def min_bounded_wheel_threshold(g: WeightedGraph, max_n: int = 10):
    """The least r for which g has an r-bounded wheel subdivision (INF when
    none exists): exhaustive search over centers, rims and spoke systems."""
    value, _ = min_bounded_wheel_witness(g, max_n)
    return value


def min_bounded_wheel_witness(g: WeightedGraph, max_n: int = 10):
    """(threshold, witness WheelSubdivision or None) for the best embedded
    wheel (least maximum piece length)."""
    if g.n > max_n:
        raise GraphError(f"oracle refuses graphs larger than {max_n} vertices")
    best = INF
    witness = None
    for c in g.vertices():
        if g.degree(c) < 3:
            continue
        rest = g.remove_vertices([c])
        for rim in _all_cycles(rest):
            value, spokes = _best_spoke_system(g, c, rim, best)
            if value < best:
                best = value
                ordered = sorted(spokes, key=lambda s: rim.index(s[-1]))
                witness = WheelSubdivision(c, rim, ordered)
    return best, witness


def _best_spoke_system(g: WeightedGraph, c: int, rim: Tuple[int, ...], cap):
    """(least max-piece-length, spoke paths) over >= 3 internally disjoint
    c-rim paths with distinct endpoints; (INF or cap, None) when nothing
    beats the cap."""
    n = len(rim)
    rim_set = set(rim)
    pref = [0]
    for i in range(n):
        pref.append(pref[-1] + g.length(rim[i], rim[(i + 1) % n]))
    total = pref[n]

    # enumerate simple c->rim paths avoiding the rim internally
    paths_to: Dict[int, List[Tuple[Tuple[int, ...], int]]] = {t: [] for t in rim}

    def walk(path: List[int], length: int) -> None:
        last = path[-1]
        for y in g.neighbors(last):
            if y == c or y in path:
                continue
            ln = length + g.length(last, y)
            if y in rim_set:
                paths_to[y].append((tuple(path) + (y,), ln))
            elif g.degree(y) >= 2:
                walk(path + [y], ln)

    walk([c], 0)

    best = cap
    best_spokes = None

    def piece_len(i: int, j: int, li: int, lj: int) -> int:
        # rim arc from rim[i] forward to rim[j]
        arc = (pref[j] - pref[i]) % total
        if arc == 0:
            arc = total
        return li + arc + lj

    ends = [t for t in rim if paths_to[t]]

    def choose(chosen: List[Tuple[int, Tuple[int, ...], int]], used: Set[int],
               start_idx: int) -> None:
        nonlocal best, best_spokes
        if len(chosen) >= 3:
            # pieces between cyclically consecutive endpoints
            worst = 0
            ok = True
            for (i1, _, l1), (i2, _, l2) in zip(chosen, chosen[1:] + [chosen[0]]):
                worst = max(worst, piece_len(i1, i2, l1, l2))
                if worst >= best:
                    ok = False
                    break
            if ok and worst < best:
                best = worst
                best_spokes = [p for _, p, _ in chosen]
        for idx in range(start_idx, len(ends)):
            t = ends[idx]
            i = rim.index(t)
            for path, ln in paths_to[t]:
                inner = set(path[1:-1])
                if inner & used:
                    continue
                chosen.append((i, path, ln))
                choose(chosen, used | inner, idx + 1)
                chosen.pop()

    choose([], set(), 0)
    return best, best_spokes


def oracle_has_bounded_wheel(g: WeightedGraph, r, max_n: int = 10) -> bool:
    """Exhaustive ground truth: does some embedded wheel subdivision have
    all pieces within r?  The search is independent of the decision
    pipeline; the final bound check goes through the shared definitional
    predicate so that the suite pins it."""
    _, witness = min_bounded_wheel_witness(g, max_n)
    if witness is None:
        return False
    return is_r_bounded(g, witness, r)


def has_k4_subdivision(g: WeightedGraph) -> bool:
    """Independent brute force: four branch vertices joined by six
    internally disjoint paths."""
    verts = [v for v in g.vertices() if g.degree(v) >= 3]
    pairs = [(a, b) for i, a in enumerate(verts) for b in verts[i + 1:]]

    def simple_paths(a: int, b: int, banned: Set[int]) -> Iterable[Tuple[int, ...]]:
        stack = [(a, (a,))]
        while stack:
            last, path = stack.pop()
            for y in g.neighbors(last):
                if y == b:
                    yield path + (b,)
                elif y not in path and y not in banned:
                    stack.append((y, path + (y,)))

    for quad in itertools.combinations(verts, 4):
        qs = set(quad)
        pairs6 = list(itertools.combinations(quad, 2))

        def assign(k: int, used: Set[int]) -> bool:
            if k == 6:
                return True
            a, b = pairs6[k]
            for path in simple_paths(a, b, (qs - {a, b}) | used):
                inner = set(path[1:-1])
                if inner & qs or inner & used:
                    continue
                if assign(k + 1, used | inner):
                    return True
            return False

        if assign(0, set()):
            return True
    return False


# -- graph enumeration -----------------------------------------------------------------


def canonical_form(g: WeightedGraph) -> Tuple:
    """Canonical adjacency signature under color-refined permutations."""
    verts = g.vertices()
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    adj = [[0] * n for _ in range(n)]
    for u, v, ln in g.edges():
        adj[idx[u]][idx[v]] = ln
        adj[idx[v]][idx[u]] = ln
    colors = [0] * n
    for _ in range(n):
        sigs = sorted(set(
            (colors[i], tuple(sorted((colors[j], adj[i][j]) for j in range(n) if adj[i][j])))
            for i in range(n)))
        new = [sigs.index(
            (colors[i], tuple(sorted((colors[j], adj[i][j]) for j in range(n) if adj[i][j]))))
            for i in range(n)]
        if new == colors:
            break
        colors = new
    classes: Dict[int, List[int]] = {}
    for i, c in enumerate(colors):
        classes.setdefault(c, []).append(i)
    orderings = [list(cl) for _, cl in sorted(classes.items())]

    best = None
    for perm_parts in itertools.product(*(itertools.permutations(p) for p in orderings)):
        perm = [i for part in perm_parts for i in part]
        sig = tuple(adj[perm[i]][perm[j]] for i in range(n) for j in range(i + 1, n))
        if best is None or sig < best:
            best = sig
    return (n, best)


def enumerate_connected_graphs(max_n: int) -> List[WeightedGraph]:
    """All connected unit-length graphs up to isomorphism with <= max_n
    vertices, by augmenting smaller graphs with one new vertex."""
    if max_n < 1:
        return []
    out: List[WeightedGraph] = [WeightedGraph([0])]
    prev = [WeightedGraph([0])]
    for n in range(2, max_n + 1):
        seen: Set[Tuple] = set()
        level: List[WeightedGraph] = []
        for g in prev:
            base = g.edges()
            for nbrs in range(1, 1 << (n - 1)):
                edges = list(base) + [
                    (i, n - 1, 1) for i in range(n - 1) if nbrs >> i & 1
                ]
                h = WeightedGraph(range(n), edges)
                key = canonical_form(h)
                if key in seen:
                    continue
                seen.add(key)
                level.append(h)
        out.extend(level)
        prev = level
    return out


EXPECTED_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


# -- the dichotomy suite -----------------------------------------------------------------


@dataclass
class SuiteRow:
    graph_id: int
    n: int
    m: int
    r: object
    branch: str
    verified: bool
    oracle_agrees: bool
    millis: int


def check_instance(g: WeightedGraph, r, decide_fn=decide) -> Tuple[SuiteRow, List]:
    t0 = time.time()
    violations: List[Tuple[str, str, str]] = []
    branch = "error"
    verified = agrees = False
    try:
        cert = decide_fn(g, r)
        branch = cert.kind
        report = verify_certificate(g, cert)
        violations.extend(report.violations)
        verified = report.passed
        oracle = oracle_has_bounded_wheel(g, r)
        agrees = oracle == (cert.kind == "wheel")
        if not agrees:
            violations.append(("oracle-agreement", "decide",
                               f"oracle={oracle} but decide chose {cert.kind}"))
    except Exception as exc:  # noqa: BLE001 - suite records every failure
        violations.append(("decide-crash", "decide", f"{type(exc).__name__}: {exc}"))
    ms = int((time.time() - t0) * 1000)
    return SuiteRow(0, g.n, g.m, r, branch, verified, agrees, ms), violations


def dichotomy_suite(max_n: int, rset: Sequence, decide_fn=decide,
                    progress=None) -> Tuple[VerdictReport, List[SuiteRow]]:
    """decide + verify + oracle agreement over every connected unit graph up
    to isomorphism with <= max_n vertices."""
    if max_n > 8:
        raise GraphError("suite capped at 8 vertices")
    report = VerdictReport()
    graphs = enumerate_connected_graphs(max_n)
    counts: Dict[int, int] = {}
    for g in graphs:
        counts[g.n] = counts.get(g.n, 0) + 1
    for n, count in sorted(counts.items()):
        if n in EXPECTED_CONNECTED_COUNTS and EXPECTED_CONNECTED_COUNTS[n] != count:
            report.fail("enumeration-count", f"n={n}",
                        f"found {count}, published count is {EXPECTED_CONNECTED_COUNTS[n]}")
    rows: List[SuiteRow] = []
    for gid, g in enumerate(graphs):
        for r in rset:
            row, violations = check_instance(g, r, decide_fn)
            row.graph_id = gid
            rows.append(row)
            for inv, loc, detail in violations:
                report.fail(inv, f"graph {gid} (n={g.n}, m={g.m}) r={r}: {loc}", detail)
        if progress is not None:
            progress(gid, len(graphs))
    return report, rows


def rows_to_csv(rows: List[SuiteRow]) -> str:
    lines = ["graph_id,n,m,r,branch,verified,oracle_agrees,millis"]
    for row in rows:
        r = "inf" if row.r == INF else row.r
        lines.append(f"{row.graph_id},{row.n},{row.m},{r},{row.branch},"
                     f"{str(row.verified).lower()},{str(row.oracle_agrees).lower()},{row.millis}")
    return "\n".join(lines) + "\n"
