"""Lower bounds on the strong structurally controllable subspace dimension
of diffusively coupled networks, with rank-based validation evidence."""

from .bounds import (
    BoundsReport,
    InvariantViolation,
    bounds_report,
    check_theorems,
    combined_bound,
    raise_on_violation,
)
from .distances import DLMatrix, INF, distances_to_leader, dl_matrix
from .ensembles import (
    EnsembleConfig,
    SweepResult,
    gen_ba,
    gen_er,
    gen_named,
    run_ensemble,
)
from .graph import (
    Graph,
    GraphError,
    dumps_graph,
    from_edge_list,
    in_neighbors,
    loads_graph,
    out_neighbors,
    read_graph,
    reverse,
    validate_leaders,
    write_graph,
)
from .pmi import (
    DEFAULT_EXACT_CAP,
    DeltaResult,
    ExactCapExceeded,
    PmiSequence,
    delta,
    delta_from_dl,
    is_valid_pmi,
    longest_pmi_exact,
    longest_pmi_greedy,
)
from .rank import (
    RankEvidence,
    WeightSample,
    controllability_matrix,
    gamma_upper_estimate,
    laplacian,
    range_rank_invariance,
    rank_exact,
    rank_numeric,
    sample_weights,
)
from .verify import (
    VerificationSummary,
    find_strict_combined_example,
    run_exhaustive_suite,
    run_random_suite,
)
from .zero_forcing import DerivedSet, derived_set, is_zfs, zeta

__all__ = [
    "BoundsReport",
    "DLMatrix",
    "DeltaResult",
    "DerivedSet",
    "DEFAULT_EXACT_CAP",
    "EnsembleConfig",
    "ExactCapExceeded",
    "Graph",
    "GraphError",
    "INF",
    "InvariantViolation",
    "PmiSequence",
    "RankEvidence",
    "SweepResult",
    "VerificationSummary",
    "WeightSample",
    "bounds_report",
    "check_theorems",
    "combined_bound",
    "controllability_matrix",
    "delta",
    "delta_from_dl",
    "derived_set",
    "distances_to_leader",
    "dl_matrix",
    "dumps_graph",
    "find_strict_combined_example",
    "from_edge_list",
    "gamma_upper_estimate",
    "gen_ba",
    "gen_er",
    "gen_named",
    "in_neighbors",
    "is_valid_pmi",
    "is_zfs",
    "laplacian",
    "loads_graph",
    "longest_pmi_exact",
    "longest_pmi_greedy",
    "out_neighbors",
    "raise_on_violation",
    "range_rank_invariance",
    "rank_exact",
    "rank_numeric",
    "read_graph",
    "reverse",
    "run_ensemble",
    "run_exhaustive_suite",
    "run_random_suite",
    "sample_weights",
    "validate_leaders",
    "write_graph",
    "zeta",
]

__version__ = "0.1.0"
