"""Graphs as XOR-combinations of tensor products, with certificates."""

from .algebra import TensorSummand, tensor_2sum, tensor_elementary, tensor_product, two_sum
from .builder import ComponentSummary, build_ppt_graph, component_summary, verify_components
from .graphs import (
    Graph,
    disjoint_union,
    format_edge_list,
    graph6_decode,
    graph6_encode,
    new_graph,
    parse_edge_list,
    standard_graph,
)
from .membership import (
    Certificate,
    GridLabeling,
    GridShape,
    Witness,
    census,
    edge_bound_check,
    elementary_decomposition,
    graph_from_quadruples,
    is_spanning_cross_like,
    pair_quadruples,
    verify_certificate,
)
from .recognition import has_independent_row_partition, prefilter, recognize, valid_labelings
from .t2 import (
    PairMatrix,
    gf2_rank,
    pair_matrix,
    t2_bruteforce_oracle,
    t2_exact,
    t2_min_over_labelings,
)
from .transpose import BlockMatrix, format_matrix_text, parse_matrix_text, partial_transpose, ppt_test

__all__ = [
    "BlockMatrix",
    "Certificate",
    "ComponentSummary",
    "Graph",
    "GridLabeling",
    "GridShape",
    "PairMatrix",
    "TensorSummand",
    "Witness",
    "build_ppt_graph",
    "census",
    "component_summary",
    "disjoint_union",
    "edge_bound_check",
    "elementary_decomposition",
    "format_edge_list",
    "format_matrix_text",
    "gf2_rank",
    "graph6_decode",
    "graph6_encode",
    "graph_from_quadruples",
    "has_independent_row_partition",
    "is_spanning_cross_like",
    "new_graph",
    "pair_matrix",
    "pair_quadruples",
    "parse_edge_list",
    "parse_matrix_text",
    "partial_transpose",
    "ppt_test",
    "prefilter",
    "recognize",
    "standard_graph",
    "t2_bruteforce_oracle",
    "t2_exact",
    "t2_min_over_labelings",
    "tensor_2sum",
    "tensor_elementary",
    "tensor_product",
    "two_sum",
    "valid_labelings",
    "verify_certificate",
    "verify_components",
]
