"""Command-line front end: decide, verify, oracle, gen, suite, export-dot.

Exit codes: 10 = wheel certificate, 20 = decomposition certificate,
0 = verification passed, 1 = verification failed, 2 = bad input,
3 = internal contradiction (the operational definitions failed on this
input).  Outputs are byte-identical across runs for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import List

from .certify import (
    dichotomy_suite,
    oracle_has_bounded_wheel,
    rows_to_csv,
    verify_certificate,
)
from .decompose import Certificate, DecideError, decide, parse_certificate
from .generators import random_connected_graph, subdivided_k4, theta_graph, wheel_graph
from .graphs import INF, GraphError, WeightedGraph, format_graph, parse_graph
from .wheels import WheelSubdivision, generate_r_weighted_wheel, pieces_of


def _read_graph(path: str) -> WeightedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _parse_r(text: str):
    if text.lower() in ("inf", "infinity"):
        return INF
    return int(text)


def _write(path, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_decide(args) -> int:
    try:
        g = _read_graph(args.graph)
        r = _parse_r(args.r)
    except (OSError, ValueError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        cert = decide(g, r)
    except (DecideError, AssertionError) as exc:
        print(f"internal: {exc}", file=sys.stderr)
        return 3
    _write(args.out, cert.dumps())
    return 10 if cert.kind == "wheel" else 20


def cmd_verify(args) -> int:
    try:
        g = _read_graph(args.graph)
        with open(args.cert, "r", encoding="utf-8") as fh:
            cert = parse_certificate(json.load(fh))
    except (OSError, ValueError, KeyError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = verify_certificate(g, cert)
    if report.passed:
        print("certificate verified")
        return 0
    for invariant, loc, detail in report.violations:
        print(f"violation [{invariant}] at {loc}: {detail}")
    return 1


def cmd_oracle(args) -> int:
    try:
        g = _read_graph(args.graph)
        r = _parse_r(args.r)
    except (OSError, ValueError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print("true" if oracle_has_bounded_wheel(g, r) else "false")
    return 0


def cmd_gen(args) -> int:
    try:
        if args.family == "wheel":
            g, _ = generate_r_weighted_wheel(args.spokes, _parse_r(args.r), args.seed)
        elif args.family == "subdivided-k4":
            g = subdivided_k4(args.k)
        elif args.family == "theta":
            g = theta_graph(args.arms[0], args.arms[1], args.arms[2])
        elif args.family == "random":
            rng = random.Random(args.seed)
            g = random_connected_graph(args.n, rng, max_len=args.max_len)
        else:  # pragma: no cover - argparse restricts choices
            raise GraphError(f"unknown family {args.family}")
    except (GraphError, ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _write(args.out, format_graph(g))
    return 0


def _suite_worker(job):
    from .certify import check_instance

    gid, n, edges, r = job
    g = WeightedGraph(range(n), edges)
    row, violations = check_instance(g, r)
    row.graph_id = gid
    return row, violations


def cmd_suite(args) -> int:
    rset = [_parse_r(tok) for tok in args.r_set.split(",")]
    threads = int(os.environ.get("LOCWHEEL_THREADS", "1"))
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        from .certify import EXPECTED_CONNECTED_COUNTS, SuiteRow, enumerate_connected_graphs

        graphs = enumerate_connected_graphs(args.max_n)
        jobs = [(gid, g.n, g.edges(), r) for gid, g in enumerate(graphs) for r in rset]
        rows: List = []
        violations: List = []
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for row, viol in pool.map(_suite_worker, jobs):
                rows.append(row)
                violations.extend(viol)
        rows.sort(key=lambda row: (row.graph_id, str(row.r)))
        ok = not violations
    else:
        report, rows = dichotomy_suite(args.max_n, rset)
        violations = report.violations
        ok = report.passed
    _write(args.csv, rows_to_csv(rows))
    checked = len(rows)
    verified = sum(1 for row in rows if row.verified and row.oracle_agrees)
    print(f"{checked} instances, {verified} fully verified, "
          f"{len(violations)} violations", file=sys.stderr)
    for v in violations[:20]:
        print(f"violation {v[0]} at {v[1]}: {v[2]}", file=sys.stderr)
    return 0 if ok else 1


PALETTE = ["lightblue", "lightpink", "palegreen", "khaki", "plum", "lightsalmon",
           "lightcyan", "wheat"]


def cmd_export_dot(args) -> int:
    try:
        g = _read_graph(args.graph)
        with open(args.cert, "r", encoding="utf-8") as fh:
            cert = parse_certificate(json.load(fh))
    except (OSError, ValueError, KeyError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    lines = ["graph locwheel {", "  node [shape=circle];"]
    if cert.kind == "wheel":
        w = cert.wheel
        piece_of = {}
        for i, piece in enumerate(pieces_of(g, w)):
            closed = piece + (piece[0],)
            for a, b in zip(closed, closed[1:]):
                piece_of.setdefault(tuple(sorted((a, b))), []).append(i)
        lines.append(f'  {w.center} [style=filled, fillcolor=gray80, label="{w.center}"];')
        for u, v, ln in g.edges():
            key = (u, v)
            if key in piece_of:
                color = PALETTE[piece_of[key][0] % len(PALETTE)]
                lines.append(f'  {u} -- {v} [label="{ln}", penwidth=2, color={color}];')
            else:
                lines.append(f'  {u} -- {v} [label="{ln}", style=dashed];')
    else:
        for i, torso in enumerate(cert.decomposition.torsos):
            color = PALETTE[i % len(PALETTE)]
            lines.append(f"  subgraph cluster_{i} {{")
            lines.append(f'    label="torso {i} ({torso["kind"]})"; style=filled; color={color};')
            for v in torso["vertices"]:
                lines.append(f"    {v};")
            for u, v, ln in torso["edges"]:
                lines.append(f'    {u} -- {v} [label="{ln}"];')
            lines.append("  }")
    lines.append("}")
    _write(args.out, "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locwheel",
        description="r-bounded wheel subdivisions vs. width-2 local decompositions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="emit a wheel or decomposition certificate")
    p.add_argument("--graph", required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(fn=cmd_decide)

    p = sub.add_parser("verify", help="verify a certificate against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--r", required=False, help="unused; the certificate pins r")
    p.add_argument("--cert", required=True)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force ground truth (small graphs)")
    p.add_argument("--graph", required=True)
    p.add_argument("--r", required=True)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("gen", help="generate a graph family instance")
    p.add_argument("--family", required=True,
                   choices=["wheel", "subdivided-k4", "theta", "random"])
    p.add_argument("--spokes", type=int, default=5)
    p.add_argument("--r", default="6")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--arms", type=int, nargs=3, default=[2, 2, 2])
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--max-len", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("suite", help="exhaustive dichotomy suite")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--r-set", default="3,4,5,6,7,8,9,10,inf")
    p.add_argument("--csv", default="-")
    p.set_defaults(fn=cmd_suite)

    p = sub.add_parser("export-dot", help="render a certificate as Graphviz DOT")
    p.add_argument("--graph", required=True)
    p.add_argument("--cert", required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(fn=cmd_export_dot)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
