"""Sensor placement against unreactive Markovian evaders.

Evaluate capture probabilities of Markovian evaders under sensor plans,
optimize placements under node or edge budgets, four-color planar
graphs, build the vertex-cover-derived 2-evader instances, and verify
the whole pipeline against independent brute-force oracles.
"""

from .coloring import COLOR_NAMES, four_color, verify_coloring
from .errors import (
    ColoringTimeoutError,
    DanglingEndpointError,
    DimensionMismatchError,
    DuplicateEdgeError,
    GraphFormatError,
    ImproperColoringError,
    InstanceTooLargeError,
    MissingColorError,
    PathExplosionError,
    SearchSpaceError,
    SelfLoopError,
    SingularSystemError,
    TransformError,
    UmeError,
    UnknownNodeError,
)
from .evaders import (
    EvaderChain,
    EvaderEnsemble,
    capture_probability,
    validate_chain,
    weighted_capture,
)
from .graphs import (
    DiGraph,
    UndirectedGraph,
    load_graph,
    parse_edge_list,
    random_planar_graph,
    random_planar_triangulation,
    to_directed,
    write_graph,
)
from .instance import UmeInstance
from .interdiction import (
    Budget,
    EfficiencyMap,
    InterdictionPlan,
    empty_plan,
    plan_from_nodes,
)
from .oracles import (
    VerificationReport,
    min_vertex_cover,
    oracle_capture_mc,
    oracle_capture_paths,
    verify_reduction,
)
from .reduction import (
    ReductionArtifacts,
    build_evaders,
    build_ume_graph,
    edge_traversal_report,
    reduce_pvc,
)
from .solvers import SolveResult, decide_perfect, solve_exact, solve_greedy
from .transforms import edge_to_node_instance, node_to_edge_instance

__version__ = "0.1.0"
