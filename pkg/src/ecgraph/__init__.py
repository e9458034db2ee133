"""Algorithms and certificates for 2-edge-coloured multigraphs."""

from .core import (
    BLUE,
    RED,
    AlternatingCycle,
    AlternatingTrail,
    Colour,
    CycleFactor,
    Edge,
    EdgeColouredMultigraph,
    EulerianFactor,
    GraphError,
    VerifyResult,
    Witness,
    build_graph,
    graph_to_dict,
    parse_graph,
    serialize_graph,
    serialize_witness,
    verify_witness,
    witness_to_dict,
)
from .matching import Matching, MatchingError, PlainGraph, maximum_matching
from .factor import (
    ColourDeficient,
    alternating_cycle_factor,
    alternating_euler_tour,
    eulerian_factor,
    gadget_visit_counts,
    tour_factor_from_balanced_edges,
)
from .connect import (
    ConnectivityReport,
    alternating_path,
    alternating_trail,
    complete_multipartite_classes,
    is_colour_connected,
    is_trail_colour_connected,
    trail_to_path_complete_multipartite,
)
from .structure import (
    SimilarityPartition,
    blow_up,
    is_extension_of_m_closed,
    is_m_closed,
    m_closure,
    similar,
    similarity_partition,
)
from .merge import (
    DominationCertificate,
    Dominates,
    HamiltonianResult,
    Merged,
    MergeInternalError,
    MergeOutcome,
    NoEdgeBetween,
    alternating_hamiltonian_cycle,
    merge_cycles,
    merge_parallel_chords,
    merge_similar,
)
from .supereuler import (
    BipartiteDigraph,
    CompleteBipartiteVerdict,
    SupereulerianResult,
    UnsupportedClass,
    bb_from_digraph,
    bb_to_digraph,
    decide_complete_bipartite,
    merge_trails_pair,
    supereulerian,
)
from .reductions import (
    ReductionMap,
    fixture,
    fixture_names,
    generate,
    reduce_ham_to_supereulerian,
)
from .oracle import (
    BudgetExceeded,
    OracleBudget,
    oracle_alternating_path,
    oracle_alternating_trail,
    oracle_colour_connected,
    oracle_cycle_factor,
    oracle_eulerian_factor,
    oracle_ham_alternating,
    oracle_supereulerian,
    oracle_trail_colour_connected,
)
