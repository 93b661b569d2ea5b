"""Graph traversability toolkit: exact cycle-through/avoid decisions,
disjoint-path link extension, named graph families, and verification
suites, all over one immutable simple-graph type."""

from .graph import (
    Cycle,
    Graph,
    GraphError,
    Path,
    contract,
    delete_vertices,
    induced_subgraph,
    line_graph,
)
from .io import GraphFormatError, parse_graph, write_graph
from .analysis import (
    ClawWitness,
    CutSet,
    ThreeCutVerdict,
    biconnected_components,
    check_three_cut_structure,
    enumerate_cuts,
    find_claw,
    is_claw_free,
    vertex_connectivity,
)
from .links import (
    Fan,
    HypothesisError,
    Link,
    disjoint_paths,
    extend_fan,
    extend_link,
    extend_link_by_t,
    find_fan,
    is_k_linked_sets,
    is_k_linked_vertex,
    verify_no_refining_link,
)
from .cycles import (
    BudgetExceededError,
    CmnReport,
    InsufficientDegreeError,
    JoinedPath,
    JumperInput,
    RedirectedPaths,
    WheelSubdivision,
    apply_jumper,
    cyclability,
    find_cycle,
    find_wheel_subdivision,
    has_property_cmn,
)
from . import families
from .harness import PropertyReport, run_suite, suite_names

__all__ = [
    "Graph", "GraphError", "Path", "Cycle",
    "contract", "delete_vertices", "induced_subgraph", "line_graph",
    "GraphFormatError", "parse_graph", "write_graph",
    "ClawWitness", "CutSet", "ThreeCutVerdict",
    "find_claw", "is_claw_free", "vertex_connectivity",
    "enumerate_cuts", "check_three_cut_structure", "biconnected_components",
    "Fan", "Link", "HypothesisError",
    "disjoint_paths", "find_fan", "is_k_linked_vertex", "is_k_linked_sets",
    "extend_fan", "extend_link", "extend_link_by_t", "verify_no_refining_link",
    "BudgetExceededError", "CmnReport", "InsufficientDegreeError",
    "JumperInput", "JoinedPath", "RedirectedPaths", "WheelSubdivision",
    "find_cycle", "has_property_cmn", "cyclability", "apply_jumper",
    "find_wheel_subdivision",
    "families",
    "PropertyReport", "run_suite", "suite_names",
]
