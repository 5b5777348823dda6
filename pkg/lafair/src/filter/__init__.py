"""Discrete log-aesthetic surface filter."""

from ..curvature import CurvaturePlane
from .config import BoundaryPolicy, FilterConfig
from .exceptions import DegenerateRingError, FilterError
from .probe import RingProbe
from .solve import UpdateStatus, solve_offsets
from .step import FilterReport, StepReport, filter, filter_step
from .update import (
    VertexUpdate,
    curvature_at_offset,
    fit_curvature_plane,
    neighbor_centroid,
    solve_offset,
)

__all__ = [
    "BoundaryPolicy",
    "CurvaturePlane",
    "DegenerateRingError",
    "FilterConfig",
    "FilterError",
    "FilterReport",
    "RingProbe",
    "StepReport",
    "UpdateStatus",
    "VertexUpdate",
    "curvature_at_offset",
    "filter",
    "filter_step",
    "fit_curvature_plane",
    "neighbor_centroid",
    "solve_offset",
    "solve_offsets",
]
