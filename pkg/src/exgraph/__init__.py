"""Exact small-scale workbench for extremal graph problems.

Core substrate (graphs, predicates, canonical forms), named construction
families, exact copy/homomorphism counting with inequality verifiers,
budgeted extremal searches, and proof-style staged procedures.
"""

from .core import (
    BipartiteGraph,
    EliminationOrder,
    Graph,
    GraphError,
    OddCycle,
    ParseError,
    RootedGraph,
    are_isomorphic,
    canonical_form,
    canonical_relabel,
    codegree,
    degeneracy,
    elimination_is_valid,
    induced_bipartite_subgraph,
    is_almost_regular,
    is_bipartite,
    is_critical_r_degenerate,
    parse_graph,
    serialize_graph,
)
from .constructions import (
    ProductEdgeType,
    cartesian_product,
    complete,
    complete_bipartite,
    critical_family,
    cycle,
    glue,
    glued_prism,
    glued_prism_halves,
    glued_prism_minus,
    glued_prism_minus_witness,
    path,
    path_prism,
    prism,
)
from .counting import (
    Embedding,
    Relation,
    ThinCycleParams,
    automorphism_count,
    bad_hom_cycle_count,
    count_copies,
    count_embeddings,
    find_embedding,
    find_good_hom_cycle,
    four_cycle_census,
    hom_cycle,
    hom_cycle_convexity,
    min_nice_beta,
    overlap_relation,
    path_hom_between,
    profile_alpha_beta_gamma,
    relation_degree_params,
    share_vertex_relation,
    thin_cycle_auxiliary,
    verify_bad_cycle_bound,
    verify_embedding,
)
from .extremal import (
    Budget,
    SearchReport,
    bipartite_extremal_number,
    extremal_number,
    zarankiewicz_number,
)
from .procedures import (
    DEFAULT_SEED,
    Case2Trace,
    GlueFailure,
    GoodPartition,
    GoodPartitionFailure,
    PackingResult,
    balanced_bipartite_subgraph,
    case2_relation_pipeline,
    find_glued_copy,
    good_partition,
    good_partition_is_valid,
    greedy_pack,
    min_degree_peel,
)

__version__ = "0.1.0"
