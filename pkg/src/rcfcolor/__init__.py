"""Rainbow circuit-free colorings of binary matroids, at desk scale.

The package exposes exact, exhaustive engines for small ground sets:
matroid rank oracles over int bitmasks, binarity tests with explicit
four-point witnesses, coloring verdicts with certificates, reduction
searches, graph rigidity counts, and serial exchange bijections.
"""

from .binary import (
    BinaryMatroid,
    U24Witness,
    ensure_binary,
    find_u24_minor,
    gf2_rank,
    is_binary,
)
from .catalog import (
    FANO_ROWS,
    CatalogEntry,
    binary_catalog,
    doubled_triangle,
    fixtures,
    full_catalog,
    gf2_family,
    k5_minus_edge,
    k_complete,
    prism_graph,
)
from .coloring import (
    Coloring,
    Verdict,
    corollary_cut_class,
    corollary_parallel_class,
    enumerate_rcf_colorings,
    is_rainbow_circuit_free,
    is_standard,
    lemma_equiv_report,
    nonstandard_coloring,
    standard_coloring,
    theorem1_dual_verdict,
    theorem1_verdict,
)
from .core import (
    ContractionMatroid,
    DirectSumMatroid,
    DualMatroid,
    InputError,
    LoopError,
    Matroid,
    MatroidError,
    OracleMatroid,
    PartitionMatroid,
    RestrictionMatroid,
    SizeGuardError,
    TheoremViolationError,
    UniformMatroid,
    check_axioms,
    direct_sum,
    free_matroid,
    same_matroid,
)
from .formats import (
    dump_binary,
    dump_coloring,
    dump_graph,
    dump_uniform,
    load_coloring,
    load_family,
    load_matroid,
    parse_coloring,
    parse_matroid,
    parse_subset,
)
from .graphic import (
    Graph,
    GraphicMatroid,
    HennebergTrace,
    cographic_matroid,
    elementary_cuts,
    gen_gqj,
    gqj_circuit_family_masks,
    gqj_positions,
    gqj_spanning_tree_pair,
    h0_decomposition,
    is_sparse_23,
    is_tight_23,
    k_tree_contraction_coloring,
    pair_coloring,
    tight_graph_census,
)
from .lsbo import BasisPair, ExchangeBijection, lsbo_decide, lsbo_oracle, sbo_check
from .reduction import (
    CircuitFamily,
    conjecture_search,
    coloring_to_partition,
    covering_number,
    covering_number_search,
    is_rank_preserving_reduction,
    is_reduction,
    lucas_flat,
    partition_to_coloring,
    rank_bounds,
    restriction_contraction_sum,
    verify_family,
)
from .verify import CheckResult, check_names, run_checks

__version__ = "0.1.0"

__all__ = [
    "BasisPair",
    "BinaryMatroid",
    "CatalogEntry",
    "CheckResult",
    "CircuitFamily",
    "Coloring",
    "ContractionMatroid",
    "DirectSumMatroid",
    "DualMatroid",
    "ExchangeBijection",
    "FANO_ROWS",
    "Graph",
    "GraphicMatroid",
    "HennebergTrace",
    "InputError",
    "LoopError",
    "Matroid",
    "MatroidError",
    "OracleMatroid",
    "PartitionMatroid",
    "RestrictionMatroid",
    "SizeGuardError",
    "TheoremViolationError",
    "U24Witness",
    "UniformMatroid",
    "Verdict",
    "binary_catalog",
    "check_axioms",
    "check_names",
    "cographic_matroid",
    "coloring_to_partition",
    "conjecture_search",
    "corollary_cut_class",
    "corollary_parallel_class",
    "covering_number",
    "covering_number_search",
    "direct_sum",
    "doubled_triangle",
    "dump_binary",
    "dump_coloring",
    "dump_graph",
    "dump_uniform",
    "elementary_cuts",
    "ensure_binary",
    "enumerate_rcf_colorings",
    "find_u24_minor",
    "fixtures",
    "free_matroid",
    "full_catalog",
    "gen_gqj",
    "gf2_family",
    "gf2_rank",
    "gqj_circuit_family_masks",
    "gqj_positions",
    "gqj_spanning_tree_pair",
    "h0_decomposition",
    "is_binary",
    "is_rainbow_circuit_free",
    "is_rank_preserving_reduction",
    "is_reduction",
    "is_sparse_23",
    "is_standard",
    "is_tight_23",
    "k5_minus_edge",
    "k_complete",
    "k_tree_contraction_coloring",
    "lemma_equiv_report",
    "load_coloring",
    "load_family",
    "load_matroid",
    "lsbo_decide",
    "lsbo_oracle",
    "lucas_flat",
    "nonstandard_coloring",
    "pair_coloring",
    "parse_coloring",
    "parse_matroid",
    "parse_subset",
    "partition_to_coloring",
    "prism_graph",
    "rank_bounds",
    "restriction_contraction_sum",
    "run_checks",
    "same_matroid",
    "sbo_check",
    "standard_coloring",
    "theorem1_dual_verdict",
    "theorem1_verdict",
    "tight_graph_census",
    "verify_family",
]
