"""General position sets, colinear sets and Sierpinski products of graphs."""

from importlib import resources

from .graph import (
    DistanceMatrix,
    Graph,
    GraphError,
    all_pairs_distances,
    bridges,
    build_graph,
    in_interval,
    is_block_graph,
    is_convex_subset,
    is_isometric_subset,
    simplicial_vertices,
)
from .io import parse_graph6, parse_json, to_dot, write_graph6
from .product import ProductGraph, build_product, copy_vertices, enumerate_maps
from .sierpinski import GpsResult, Prediction, count_degree_nminus1, gps_lower, gps_max, predict
from .solver import (
    CollinearityOracle,
    SolveResult,
    SolverConfig,
    bridge_lower_bound,
    gp_block_graph,
    is_general_position,
    is_general_position_characterized,
    max_gp,
    xi,
    xi_max,
    xi_minus,
)


def output_schema() -> dict:
    """The JSON schema of every CLI output document."""
    import json

    return json.loads(resources.files(__package__).joinpath("schema/output.schema.json").read_text())


__version__ = "0.1.0"
