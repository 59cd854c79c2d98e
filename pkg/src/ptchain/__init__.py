"""Longest and maximum-weight chains in pseudo-transitive DAGs, with
geometric maximum-independent-set applications."""

from .core import (
    ABSENT,
    E1,
    E2,
    ChainClass,
    PtGraph,
    ValidationReport,
    Violation,
    build_graph,
    classify_chain,
    topological_index,
    validate_pseudo_transitive,
    validate_strong,
    verify_chain,
)
from .dp import DpTables, dp_tables, max_weight_chain_dp, sum_deg_sq
from .errors import BudgetExceeded, InternalError, PtError
from .geometry import (
    ChordInterval,
    GeomInstance,
    Rect,
    Segment,
    build_order,
    disjoint,
    make_instance,
    mis_circle,
    mis_grounded_segments_exact,
    mis_grounded_segments_half,
    mis_rectangles,
)
from .oracle import GenSpec, brute_max_weight_chain, brute_mis, generate
from .transition import (
    TransitionGraph,
    TransitionResult,
    build_transition_graph,
    enumerate_chains,
    longest_chain_transition,
    omega_g2,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
