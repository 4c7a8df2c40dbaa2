"""The wheel-finding pipeline, stage by stage, on a subdivided K4.

Locally 3-connected graphs either carry short geodesic triangles rich
enough to assemble a wheel directly, or a short geodesic cycle with at
least four edges.  In the second case a pre-fan of short cycles is built
across the cycle, reduced to a fan, and the fan either closes into a wheel
or yields the theta-graph machinery.
"""

from locwheel.generators import subdivided_k4
from locwheel.wheelfinder import (
    PieceObstruction,
    build_pre_fan,
    dichotomy,
    fan_to_wheel,
    find_wheel,
    reduce_to_fan,
)
from locwheel.wheels import is_r_local_wheel, piece_lengths, wheel_violations


def main() -> None:
    g = subdivided_k4(2)
    r = 6
    print(f"graph: subdivided K4, n={g.n}, m={g.m}, r={r}")

    branch = dichotomy(g, r)
    print(f"dichotomy branch: {branch[0]} -> {branch[1]}")

    o_ref = branch[1]
    picked = None
    for v0 in sorted(o_ref):
        for v1 in sorted(o_ref):
            if v0 == v1:
                continue
            try:
                picked = (v0, v1), build_pre_fan(g, r, o_ref, v0, v1)
                break
            except Exception:
                continue
        if picked:
            break
    (v0, v1), (pf, anchor, center, other) = picked
    print(f"pre-fan for pair ({v0},{v1}): center {center}, "
          f"{len(pf.pieces)} pieces, anchor cycle {anchor}")

    fan = reduce_to_fan(g, r, pf)
    print(f"fan: {len(fan.pieces)} pieces, start/end partners "
          f"{{{fan.start}, {fan.end}}}")

    res = fan_to_wheel(g, r, anchor, fan, other)
    if isinstance(res, PieceObstruction):
        print(f"obstruction piece {res.piece}: the theta machinery takes over")
    else:
        print("fan closed directly into a wheel")

    w = find_wheel(g, r)
    assert not wheel_violations(g, w) and is_r_local_wheel(g, w, r)
    print(f"\nfind_wheel: center {w.center}, rim {w.rim}")
    print(f"spokes: {w.spokes}")
    print(f"piece lengths: {piece_lengths(g, w)} (all within r={r})")


if __name__ == "__main__":
    main()
