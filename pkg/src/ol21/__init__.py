"""Span labelings of oriented graphs under length-2 directed path constraints.

Adjacent vertices must get labels at least 2 apart; vertex pairs joined by a
length-2 path whose orientation pattern lies in a chosen subset S of
{P1, P2, P3} must get distinct labels. The package provides greedy and
block-inductive labelers with guaranteed span bounds, an exact branch-and-bound
solver, and generators (with verification oracles) for graph families whose
minimum span is provably large relative to their degrees.
"""

from .cliques import greedy_clique, max_clique
from .constructions import (
    CaseAnalysisGapError,
    ConstructionInvalidError,
    CoverageReport,
    KTooSmallError,
    NotPrimeError,
    PathWitness,
    TripleCopyVertex,
    pair_class_audit,
    plane_points,
    projective_plane_incidence,
    torus_coords,
    torus_digraph,
    torus_index,
    torus_path_witness,
    triple_copy,
    triple_point_indices,
    triple_vertex_index,
    triple_vertex_info,
    verify_inner_coverage,
)
from .digraph import (
    BlockDecomposition,
    DegreeSummary,
    DuplicateArcError,
    EdgeListParseError,
    GraphError,
    OppositeArcError,
    OrientedGraph,
    PathPattern,
    SelfLoopError,
    UnderlyingGraph,
    VertexOutOfRangeError,
    block_decomposition,
    block_degree_bound,
    build_graph,
    degrees,
    format_edge_list,
    induced_subdigraph_arcs,
    parse_edge_list,
    reverse,
    to_dot,
    two_path_pairs,
    underlying,
)
from .exact import (
    DEFAULT_NODE_BUDGET,
    BudgetExceededError,
    ExactResult,
    chromatic_number,
    exact_lambda,
    solve_constraints,
    undirected_l21_constraints,
    verify_empty_s_identity,
    verify_full_s_identity,
)
from .labeling import (
    ALL_PATTERNS,
    NO_PATTERNS,
    P1_ONLY,
    ConstraintGraph,
    Labeling,
    PartialLabelingError,
    block_inductive_label,
    build_constraints,
    constraint_set_name,
    first_fit,
    format_labeling,
    greedy_label,
    greedy_span_bound,
    is_valid,
    labeling_report,
    make_constraint_graph,
    parse_constraint_set,
    span_certificate_clique,
)
from .randgraph import (
    random_block_chain,
    random_degree_bounded_graph,
    random_oriented_graph,
    random_tree_orientation,
)

__version__ = "0.1.0"
