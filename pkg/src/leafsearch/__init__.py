"""Min/max-leaf and min/max-internal first-in search trees for GS, BFS, LBFS."""

from .errors import (
    AssumptionViolatedError,
    BadParameterError,
    BudgetExceededError,
    DecompositionUnavailableError,
    DisconnectedError,
    DuplicateEdgeError,
    InvalidDecompositionError,
    InvalidSequenceError,
    LeafSearchError,
    MalformedClauseError,
    NotACliqueError,
    NotConnectedOrderingError,
    NotGSOrderingError,
    OutOfRangeError,
    ParseError,
    PrefixNotRealizedError,
    SelfLoopError,
)
from .engines import complete_from_clique_prefix, enumerate_orderings, run_plus
from .forcing import RuleSequence, ZSequence, find_rule_sequence, replay_rules
from .gadgets import (
    ReductionOutput,
    gen_family,
    grundy_instance_to_split,
    one_sided_grundy_longest,
    sat3_to_weakly_chordal,
    set_cover_to_split,
)
from .graph import (
    BFS,
    GS,
    LBFS,
    PARADIGMS,
    Decision,
    FTree,
    Graph,
    LayerPartition,
    Ordering,
    bfs_layers,
    build_graph,
    ftree_from_ordering,
    ordering_bandwidth,
    validate_ordering,
)
from .gs import (
    PathDecomposition,
    ftree_to_zstar,
    max_leaf_gs,
    min_cds,
    min_leaf_gs,
    pathdecomp_from_gs,
    validate_path_decomposition,
    zsequence_to_ordering,
)
from .layered import layer_leaf_count, layer_transition_valid
from .layered import solve as solve_layered_leaf
from .oracle import (
    LeafRange,
    SpanningLeafRange,
    brute_leaf_range,
    brute_longest_zsequence,
    brute_max_internal,
    brute_min_cds,
    brute_min_internal,
    brute_min_zstar,
    brute_spanning_leaf_range,
    is_weakly_chordal,
)
from .xp import (
    CircuitInstance,
    bfs_internal_xp,
    build_wcs_circuit,
    eval_wcs,
    gs_max_internal_xp,
    gs_min_internal_xp,
)
from .zforcing import (
    DependencyGraph,
    NiceTD,
    Signature,
    TreeDecomposition,
    bypass,
    exact_treewidth,
    heuristic_td,
    make_nice,
    min_zstar_tw,
    node_signatures,
    parse_td,
    process_node,
    read_td,
    validate_td,
)

__version__ = "0.1.0"
