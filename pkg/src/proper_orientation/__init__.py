"""Proper orientations of graphs: exact solver, constructions and the 3-SAT reduction."""

from .bounds import BoundsReport, bounds, chromatic_number_exact, is_star_forest, regular_lower_bound
from .constructions import (
    ClassLabel,
    EdgeColoring,
    MatchingDecomposition,
    cubic_proper_orientation_number,
    edge_coloring_exact,
    greedy_orientation,
    matching_decomposition,
    orient_bipartite_odd_regular,
    orient_line_graph,
    perfect_matching,
)
from .errors import CapExceeded, GraphError, OrientationError, ParseError, PreconditionError, ReductionError
from .graph import (
    Graph,
    Orientation,
    VertexPartition,
    build_graph,
    is_bipartite,
    is_proper_orientation,
    line_graph,
    max_indegree,
    orient,
    regularity,
)
from .oracle import brute_force_oracle
from .reduction import (
    Formula,
    ReductionGraph,
    assignment_to_orientation,
    build_reduction,
    gadget_contract_check,
    incidence_graph,
    orientation_to_assignment,
    parse_cnf,
)
from .solver import SolveResult, decide, proper_orientation_number

__version__ = "0.1.0"
