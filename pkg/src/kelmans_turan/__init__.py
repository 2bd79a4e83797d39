"""Kelmans operations, feasible graph parameters and brute-force Turán checks on small graphs."""

from __future__ import annotations

from .enumeration import ArgmaxResult, BudgetError, EmptyStreamError, EnumerationSpec, argmax_over, count_unlabeled, stream_labeled
from .families import FamilySpec, HypothesisError, degree_power_argmax, extremal_value, family, s_graph, s_plus_graph, w_graph
from .graph import Graph, GraphError, canonical_form, from_edges, from_upper_mask, is_isomorphic
from .io import from_graph6, read_graph, to_dot, to_graph6
from .kelmans import (
    KelmansStep,
    KelmansTrace,
    ThresholdError,
    bad_pairs,
    disintegration,
    eko_reduce,
    is_threshold,
    kelmans_op,
    threshold_graph,
)
from .parameters import ParameterKind, evaluate, signless_laplacian_radius, spectral_radius
from .structure import (
    Connectivity,
    ExtremalProblem,
    Pattern,
    circumference,
    is_free,
    long_cycle_free,
    longest_path_order,
    matching_free,
    matching_number,
    path_free,
)
from .verify import SweepReport, VerificationReport, verify_classical, verify_feasibility, verify_theorem

__version__ = "0.1.0"
