"""Bell violation and GME concurrence of XXZ ring ground states."""

from ._core import (
    ChainParams,
    ConcurrenceResult,
    GroundState,
    MeasurementAngles,
    OptimizerConfig,
    SectorBoundary,
    ViolationResult,
    analytic_w,
    expectation,
    find_boundaries,
    gme_concurrence,
    global_ground,
    maximize,
    maximize_analytic,
    scan_analytic_w,
    scan_coupling,
    scan_field,
    sector_window_k1,
)

__all__ = [
    "ChainParams",
    "ConcurrenceResult",
    "GroundState",
    "MeasurementAngles",
    "OptimizerConfig",
    "SectorBoundary",
    "ViolationResult",
    "analytic_w",
    "expectation",
    "find_boundaries",
    "gme_concurrence",
    "global_ground",
    "maximize",
    "maximize_analytic",
    "scan_analytic_w",
    "scan_coupling",
    "scan_field",
    "sector_window_k1",
]
