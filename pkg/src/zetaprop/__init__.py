"""Exact Lefschetz zeta functions, Alexander polynomials and closed-orbit
censuses for surface mapping tori given by combinatorial Morse data."""

from __future__ import annotations

from .cycles import (
    AlCycle,
    CycleCensus,
    TransferGraph,
    based_trace_oracle,
    build_transfer_graph,
    enumerate_cycles,
    verify_gamma_zeta,
)
from .errors import (
    BettiNotOne,
    EnumerationBudgetExceeded,
    IdentityViolated,
    PresentationError,
    ZetaPropError,
)
from .linalg import MatrixQ, det_one_minus_tA, kernel_basis, rank, trace_power
from .presentation import (
    Exchange,
    MorsePresentation,
    Slide,
    alexander,
    betti1,
    build_presentation,
    genus_shift_identity,
    homology_action,
    lescop_coefficient,
    parse,
    parse_file,
    propagator_boundary_h,
    transfer_matrices,
)
from .presets import load_preset, preset_names, preset_path
from .ring import (
    LaurentPolynomial,
    RationalFunction,
    T,
    TruncatedSeries,
    rf_to_series,
    series_exp,
    series_log,
)
from .zeta import GradedAction, lefschetz_number, zeta_function, zeta_log_derivative

__version__ = "0.1.0"

__all__ = [
    "AlCycle",
    "BettiNotOne",
    "CycleCensus",
    "EnumerationBudgetExceeded",
    "Exchange",
    "GradedAction",
    "IdentityViolated",
    "LaurentPolynomial",
    "MatrixQ",
    "MorsePresentation",
    "PresentationError",
    "RationalFunction",
    "Slide",
    "T",
    "TransferGraph",
    "TruncatedSeries",
    "ZetaPropError",
    "alexander",
    "based_trace_oracle",
    "betti1",
    "build_presentation",
    "build_transfer_graph",
    "det_one_minus_tA",
    "enumerate_cycles",
    "genus_shift_identity",
    "homology_action",
    "kernel_basis",
    "lefschetz_number",
    "lescop_coefficient",
    "load_preset",
    "parse",
    "parse_file",
    "preset_names",
    "preset_path",
    "propagator_boundary_h",
    "rank",
    "rf_to_series",
    "series_exp",
    "series_log",
    "trace_power",
    "transfer_matrices",
    "verify_gamma_zeta",
    "zeta_function",
    "zeta_log_derivative",
]
