"""Rough graphs and even-vertex half-sum graceful labelings.

The package builds rough graphs from information tables (exact-rational
membership weights, max-membership edge rule), generates six structured
graph families, labels them with closed-form rules, and checks every
labeling against the induced edge function

    edge label = ceil((f(u) + f(v) + m) / 2)

where m is the graph's edge count. Closed-form edge labels are treated as
claims to be audited against that function, never as ground truth. An
exhaustive backtracking search finds or counts labelings on arbitrary
small graphs, with a compiled kernel when available.
"""

from .closed_form import (
    AuditReport,
    AuditRow,
    audit_family,
    audit_variants,
    closed_form_labeling,
    has_variants,
    label_comb,
    label_cycle,
    label_ladder,
    label_path,
    label_path_star,
    label_star,
)
from .errors import DomainError, ParameterError, ParseError, RoughGraceError
from .families import (
    FAMILY_NAMES,
    FamilyInstance,
    make_comb,
    make_cycle,
    make_family,
    make_ladder,
    make_path,
    make_path_star,
    make_star,
)
from .formats import (
    graph_from_dict,
    graph_to_dict,
    labeling_document,
    parse_labeling_document,
    read_information_system,
    resolve_target,
    to_dot,
)
from .graph import Edge, GraphStats, RoughGraph, build_rough_graph, graph_stats
from .labeling import (
    EdgeLabeling,
    VerificationReport,
    VertexLabeling,
    edge_sum,
    induce,
    induced_edge_label,
    verify,
)
from .rough import (
    InformationSystem,
    MembershipAssignment,
    Partition,
    assign_memberships,
    lower_approximation,
    partition_by_attributes,
    rough_membership,
    upper_approximation,
)
from .search import (
    SearchConfig,
    SearchResult,
    active_kernel_name,
    automorphism_count,
    available_kernels,
    count_labelings,
    search_labeling,
    search_order,
)

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "AuditRow",
    "DomainError",
    "Edge",
    "EdgeLabeling",
    "FAMILY_NAMES",
    "FamilyInstance",
    "GraphStats",
    "InformationSystem",
    "MembershipAssignment",
    "ParameterError",
    "ParseError",
    "Partition",
    "RoughGraceError",
    "RoughGraph",
    "SearchConfig",
    "SearchResult",
    "VerificationReport",
    "VertexLabeling",
    "active_kernel_name",
    "assign_memberships",
    "audit_family",
    "audit_variants",
    "automorphism_count",
    "available_kernels",
    "build_rough_graph",
    "closed_form_labeling",
    "count_labelings",
    "edge_sum",
    "graph_from_dict",
    "graph_stats",
    "graph_to_dict",
    "has_variants",
    "induce",
    "induced_edge_label",
    "label_comb",
    "label_cycle",
    "label_ladder",
    "label_path",
    "label_path_star",
    "label_star",
    "labeling_document",
    "lower_approximation",
    "make_comb",
    "make_cycle",
    "make_family",
    "make_ladder",
    "make_path",
    "make_path_star",
    "make_star",
    "parse_labeling_document",
    "partition_by_attributes",
    "read_information_system",
    "resolve_target",
    "rough_membership",
    "search_labeling",
    "search_order",
    "to_dot",
    "upper_approximation",
    "verify",
]
