"""The weighted four-vertex configuration where the dichotomy breaks.

On unit-length graphs the engine is exact (the exhaustive suite checks
every connected graph up to 7 vertices).  With general integer lengths a
weighted K4 can have its cycle space generated by two short triangles plus
a geodesic quadrilateral while every centering of the wheel has a piece
longer than r -- and, being 3-connected with everything nearby, it admits
no local cut either.  Neither certificate exists for it.
"""

from locwheel import WeightedGraph, DecideError, decide
from locwheel.certify import min_bounded_wheel_threshold
from locwheel.cyclespace import enumerate_short_cycles
from locwheel.graphs import cycle_length
from locwheel.localcut import is_r_locally_3_connected
from locwheel.wheels import is_r_local_wheel, piece_lengths, recognize_wheel_subdivision


def main() -> None:
    g = WeightedGraph([0, 1, 2, 3], [(0, 1, 5), (0, 2, 1), (0, 3, 3),
                                     (1, 2, 5), (1, 3, 1), (2, 3, 5)])
    r = 10
    print(f"weighted K4, r={r}")
    print(f"  edge lengths: {[(u, v, ln) for u, v, ln in g.edges()]}")
    print(f"  r-locally 3-connected: {is_r_locally_3_connected(g, r)}")

    shorts = enumerate_short_cycles(g, r)
    print(f"  geodesic cycles of length <= {r}: "
          f"{[(c, cycle_length(g, c)) for c in shorts]}")

    w = recognize_wheel_subdivision(g)
    print(f"  as a wheel centered {w.center}: pieces {piece_lengths(g, w)}")
    print(f"  cycles of length <= r generate its cycle space: "
          f"{is_r_local_wheel(g, w, r)}")
    print(f"  least max-piece over all centerings: "
          f"{min_bounded_wheel_threshold(g)} (> r: no r-bounded wheel)")

    try:
        decide(g, r)
        print("  decide: unexpectedly produced a certificate")
    except DecideError as exc:
        print(f"  decide reports: {exc}")


if __name__ == "__main__":
    main()
