"""Exact and extremal counts of properly (r, p)-colored hyperedges."""

__version__ = "0.1.0"

from hypercolor.errors import FeasibilityError, InvalidHypergraph, InvalidParameters
from hypercolor.exact import (
    BoundsResult,
    CountResult,
    M_bounds,
    M_exact,
    M_general,
    ParamSet,
    binomial,
    corollary_product,
    cumulative_below,
    exactly_count,
    m_exact,
    winning_threshold,
    x_recurrence,
)
from hypercolor.hypergraph import (
    ColorProfile,
    Coloring,
    Hypergraph,
    balanced_coloring,
    balanced_sizes,
    build_hypergraph,
    color_histogram,
    complete,
    complete_profile,
    is_strong_coloring,
    properly_colored_count,
    random_hypergraph,
)

__all__ = [
    "BoundsResult",
    "ColorProfile",
    "Coloring",
    "CountResult",
    "FeasibilityError",
    "Hypergraph",
    "InvalidHypergraph",
    "InvalidParameters",
    "M_bounds",
    "M_exact",
    "M_general",
    "ParamSet",
    "balanced_coloring",
    "balanced_sizes",
    "binomial",
    "build_hypergraph",
    "color_histogram",
    "complete",
    "complete_profile",
    "corollary_product",
    "cumulative_below",
    "exactly_count",
    "is_strong_coloring",
    "m_exact",
    "properly_colored_count",
    "random_hypergraph",
    "winning_threshold",
    "x_recurrence",
]
