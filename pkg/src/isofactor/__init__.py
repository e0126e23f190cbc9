"""Exact tools for isolated toughness, grid-valued fractional factors,
component factors built from odd circuits and family trees, and the
tree family behind them.  All arithmetic is integer or Fraction; no
floats touch a comparison.
"""

from .component_factors import (
    FactorReport,
    FamilyTree,
    Invalid,
    OddCircuit,
    StructureReport,
    assign_circuit,
    classify_component,
    find_component_factor,
    minimal_factor,
    verify_minimal_structure,
)
from .condition import (
    ConditionVerdict,
    check_condition,
    isolated_toughness,
)
from .documents import (
    GraphDocument,
    document_for_graph,
    emit_document,
    emit_dot,
    emit_edgelist,
    emit_structured,
    parse_document,
    parse_graph,
)
from .enumeration import (
    all_trees,
    canonical_tree_form,
    connected_graphs,
    connected_graphs_up_to,
    graph_canonical_key,
    labeled_trees,
    tree_canonical_key,
    trees_up_to,
)
from .fractional import (
    FactorViolation,
    FractionalAssignment,
    FractionalFactorResult,
    alternate_shift,
    bruteforce_factor_exists,
    factor_from_subgraph,
    find_fractional_factor,
    gf_violation,
    iter_discrete_factors,
    multigraph_expand,
    vertex_signs,
    verify_factor,
)
from .graphs import (
    Bipartition,
    CapacityError,
    FamilyParams,
    Graph,
    MultiGraph,
    bipartition,
    build_graph,
    complete_graph,
    components,
    cycle_graph,
    iso_count,
    path_graph,
    star_graph,
)
from .rational import INFINITY, format_rational, parse_rational
from .trees import (
    CorollaryReport,
    MembershipCertificate,
    canonical_assignment,
    construct_blown_tree,
    corollary_report,
    enumerate_members,
    is_member,
    is_member_by_definition,
    pinned_assignment,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "CapacityError",
    "ConditionVerdict",
    "CorollaryReport",
    "FactorReport",
    "FactorViolation",
    "FamilyParams",
    "FamilyTree",
    "FractionalAssignment",
    "FractionalFactorResult",
    "Graph",
    "GraphDocument",
    "INFINITY",
    "Invalid",
    "MembershipCertificate",
    "MultiGraph",
    "OddCircuit",
    "StructureReport",
    "all_trees",
    "alternate_shift",
    "assign_circuit",
    "bipartition",
    "bruteforce_factor_exists",
    "build_graph",
    "canonical_assignment",
    "canonical_tree_form",
    "check_condition",
    "classify_component",
    "complete_graph",
    "components",
    "connected_graphs",
    "connected_graphs_up_to",
    "construct_blown_tree",
    "corollary_report",
    "cycle_graph",
    "document_for_graph",
    "emit_document",
    "emit_dot",
    "emit_edgelist",
    "emit_structured",
    "enumerate_members",
    "factor_from_subgraph",
    "find_component_factor",
    "find_fractional_factor",
    "format_rational",
    "gf_violation",
    "graph_canonical_key",
    "is_member",
    "is_member_by_definition",
    "iso_count",
    "isolated_toughness",
    "iter_discrete_factors",
    "labeled_trees",
    "minimal_factor",
    "multigraph_expand",
    "parse_document",
    "parse_graph",
    "parse_rational",
    "path_graph",
    "pinned_assignment",
    "star_graph",
    "tree_canonical_key",
    "trees_up_to",
    "verify_factor",
    "verify_minimal_structure",
    "vertex_signs",
]
