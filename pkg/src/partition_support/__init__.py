"""Support invariants of the partition transfer graph G_n."""

from .atlas import (
    StratumAtlas,
    compute_atlas,
    first_occurrences,
    jump_counts,
    level_edge_matrix,
    level_graph,
    strata_counts,
    stratum_components,
    stratum_degree_summary,
)
from .partitions import (
    block_form,
    conjugate,
    divisor_count,
    enumerate_partitions,
    is_staircase,
    max_support_witness,
    rho,
    sigma,
    support_profile,
    triangular,
)
from .transfer import (
    TransferMove,
    apply_transfer,
    build_graph,
    degree_formula,
    neighbors,
    support_jump_formula,
    valid_moves,
)
from .verify import verify_theorems
