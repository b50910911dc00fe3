"""Vertex deletion solvers, edge-to-vertex cut reductions, and split-graph tools."""

from kwaycut.errors import (
    CapacityError,
    GadgetConstructionError,
    InputError,
    KwaycutError,
    ParseError,
    SelfCheckError,
)
from kwaycut.fileformats import (
    SolutionRecord,
    emit_dot,
    emit_instance,
    instance_sha256,
    parse_instance,
)
from kwaycut.graph import (
    ComponentReport,
    Graph,
    component_count_after_deletion,
    components_after_edge_deletion,
    components_after_vertex_deletion,
    count_small_components,
    exhaustive_limit,
    is_bipartite,
    max_independent_set_size,
    pairwise_connectivity,
)
from kwaycut.reduction import (
    VARIANTS,
    CutEquivalenceReport,
    GadgetInstance,
    build_gadget,
    check_gadget_invariants,
    map_edge_cut_to_vertex_cut,
    map_vertex_cut_to_edge_cut,
    normalize_to_midpoints,
    verify_cut_equivalence,
)
from kwaycut.solvers import (
    CnpSolution,
    EdgeCutSolution,
    SmallComponentsSolution,
    VertexCutSolution,
    branch_and_bound_kvcp,
    brute_force_cnp,
    brute_force_kcut,
    brute_force_kvcp,
    brute_force_kvcp_weighted,
    brute_force_small_components,
    greedy_kvcp,
)
from kwaycut.splitgraphs import (
    CnpEquivalenceReport,
    ShapeReport,
    SplitPartition,
    check_cnp_equivalence,
    complete_bipartite_sides,
    recognize_split,
    residual_shape,
    solve_complete_bipartite,
    solve_split,
    validate_split_partition,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CnpEquivalenceReport",
    "CnpSolution",
    "ComponentReport",
    "CutEquivalenceReport",
    "EdgeCutSolution",
    "GadgetConstructionError",
    "GadgetInstance",
    "Graph",
    "InputError",
    "KwaycutError",
    "ParseError",
    "SelfCheckError",
    "ShapeReport",
    "SmallComponentsSolution",
    "SolutionRecord",
    "SplitPartition",
    "VARIANTS",
    "VertexCutSolution",
    "branch_and_bound_kvcp",
    "brute_force_cnp",
    "brute_force_kcut",
    "brute_force_kvcp",
    "brute_force_kvcp_weighted",
    "brute_force_small_components",
    "build_gadget",
    "check_cnp_equivalence",
    "check_gadget_invariants",
    "complete_bipartite_sides",
    "component_count_after_deletion",
    "components_after_edge_deletion",
    "components_after_vertex_deletion",
    "count_small_components",
    "emit_dot",
    "emit_instance",
    "exhaustive_limit",
    "greedy_kvcp",
    "instance_sha256",
    "is_bipartite",
    "map_edge_cut_to_vertex_cut",
    "map_vertex_cut_to_edge_cut",
    "max_independent_set_size",
    "normalize_to_midpoints",
    "pairwise_connectivity",
    "parse_instance",
    "recognize_split",
    "residual_shape",
    "solve_complete_bipartite",
    "solve_split",
    "validate_split_partition",
    "verify_cut_equivalence",
]
