"""Gaussian graphical models on vertex- and edge-coloured DAGs."""

from .augmented import build_augmented, generic_rank, numeric_rank, row_in_span
from .estimator import (
    MleVerdict,
    classify,
    concentration,
    fit,
    log_likelihood,
    mle_set,
)
from .graphs import (
    ColouredDag,
    Edge,
    check_compatibility,
    finest_compatible_vertex_colouring,
    load_graph,
)
from .stability import StabilityVerdict, classify_stability, stabiliser_basis
from .structure import (
    find_unshielded_colliders,
    has_monochrome_edge,
    is_group,
    is_transitive,
    rcon_equivalent,
)
from .thresholds import compute_thresholds, threshold_bounds

__all__ = [
    "ColouredDag",
    "Edge",
    "MleVerdict",
    "StabilityVerdict",
    "build_augmented",
    "check_compatibility",
    "classify",
    "classify_stability",
    "compute_thresholds",
    "concentration",
    "find_unshielded_colliders",
    "finest_compatible_vertex_colouring",
    "fit",
    "generic_rank",
    "has_monochrome_edge",
    "is_group",
    "is_transitive",
    "load_graph",
    "log_likelihood",
    "mle_set",
    "numeric_rank",
    "rcon_equivalent",
    "row_in_span",
    "stabiliser_basis",
    "threshold_bounds",
]

__version__ = "0.1.0"
