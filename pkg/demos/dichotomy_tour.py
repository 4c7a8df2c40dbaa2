"""A tour of the decision engine on small named graphs.

For each graph and locality parameter r, `decide` returns exactly one of
two certificates: an r-bounded wheel subdivision embedded in the graph, or
a decomposition whose torsos are all cycles or single edges.  Both kinds
are checked here with the independent verifier and against the brute-force
oracle.
"""

from locwheel import WeightedGraph, decide, oracle_has_bounded_wheel, verify_certificate
from locwheel.generators import (
    complete_graph,
    cycle_graph,
    octahedron,
    subdivided_k4,
    theta_graph,
    wheel_graph,
)
from locwheel.graphs import INF
from locwheel.wheels import piece_lengths


def show(name, g, r):
    cert = decide(g, r)
    verified = verify_certificate(g, cert).passed
    oracle = oracle_has_bounded_wheel(g, r)
    print(f"\n{name}  (n={g.n}, m={g.m}, r={r})")
    if cert.kind == "wheel":
        w = cert.wheel
        print(f"  -> wheel: center {w.center}, rim {w.rim}, "
              f"piece lengths {piece_lengths(g, w)}")
    else:
        kinds = [t["kind"] for t in cert.decomposition.torsos]
        print(f"  -> decomposition: {len(cert.decomposition.cuts)} cuts, "
              f"torsos {kinds}")
    print(f"  verifier: {'pass' if verified else 'FAIL'}; "
          f"oracle agrees: {oracle == (cert.kind == 'wheel')}")


if __name__ == "__main__":
    show("K4", complete_graph(4), 3)
    show("C8", cycle_graph(8), 8)
    show("K_{2,3}", theta_graph(2, 2, 2), 4)
    show("5-wheel", wheel_graph(5), 3)
    show("octahedron", octahedron(), 3)
    show("subdivided K4 (every edge split in two)", subdivided_k4(2), 6)
    show("subdivided K4 below its wheel threshold", subdivided_k4(2), 5)
    show("two triangles over a shared vertex",
         WeightedGraph(range(5), [(0, 1, 1), (1, 2, 1), (2, 0, 1),
                                  (0, 3, 1), (3, 4, 1), (4, 0, 1)]), 3)
    show("C8 at infinity", cycle_graph(8), INF)
