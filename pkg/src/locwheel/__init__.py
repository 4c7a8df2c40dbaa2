"""locwheel: r-bounded wheel subdivisions vs. width-2 local decompositions.

Given a weighted graph and a locality parameter r, the package either finds
an r-bounded subdivision of a wheel embedded in the graph or assembles a
graph-decomposition of locality r whose torsos are all cycles or single
edges, together with independent verifiers and a brute-force oracle.
"""

from .certify import (
    dichotomy_suite,
    enumerate_connected_graphs,
    has_k4_subdivision,
    min_bounded_wheel_threshold,
    oracle_has_bounded_wheel,
    verify_certificate,
    verify_decomposition,
    verify_wheel,
)
from .cyclespace import (
    enumerate_short_cycles,
    friendly_represent,
    represent,
    short_cycles_generate,
)
from .decompose import (
    Certificate,
    DecideError,
    block_cut_decompose,
    decide,
    parse_certificate,
    two_sep_decompose,
)
from .graphs import (
    INF,
    GraphError,
    WeightedGraph,
    ball,
    diameter,
    distance,
    embeds_as_subgraph,
    format_graph,
    graph_sha,
    is_geodesic_cycle,
    parse_graph,
    suppress_degree_two,
)
from .localcut import (
    cut_at_pair,
    cut_at_vertex,
    explorer_neighbourhood,
    is_local_2separator,
    is_local_cutvertex,
    is_r_locally_2_connected,
    is_r_locally_3_connected,
)
from .wheelfinder import dichotomy, find_wheel
from .wheels import (
    WheelSubdivision,
    generate_r_weighted_wheel,
    has_r_explicit,
    is_r_bounded,
    is_r_local_wheel,
    make_bounded,
    make_explicit,
    pieces_of,
    recognize_wheel_subdivision,
)

__all__ = [
    "INF",
    "Certificate",
    "DecideError",
    "GraphError",
    "WeightedGraph",
    "WheelSubdivision",
    "ball",
    "block_cut_decompose",
    "cut_at_pair",
    "cut_at_vertex",
    "decide",
    "diameter",
    "dichotomy",
    "dichotomy_suite",
    "distance",
    "embeds_as_subgraph",
    "enumerate_connected_graphs",
    "enumerate_short_cycles",
    "explorer_neighbourhood",
    "find_wheel",
    "format_graph",
    "friendly_represent",
    "generate_r_weighted_wheel",
    "graph_sha",
    "has_k4_subdivision",
    "has_r_explicit",
    "is_geodesic_cycle",
    "is_local_2separator",
    "is_local_cutvertex",
    "is_r_bounded",
    "is_r_local_wheel",
    "is_r_locally_2_connected",
    "is_r_locally_3_connected",
    "make_bounded",
    "make_explicit",
    "min_bounded_wheel_threshold",
    "oracle_has_bounded_wheel",
    "parse_certificate",
    "parse_graph",
    "pieces_of",
    "recognize_wheel_subdivision",
    "represent",
    "short_cycles_generate",
    "suppress_degree_two",
    "two_sep_decompose",
    "verify_certificate",
    "verify_decomposition",
    "verify_wheel",
]
