"""Discrete surface energies and curvature-field diagnostics."""

from .affinity import CurvatureProfile, grid_profile, k_self_affinity_residual
from .energy import (
    EnergyReport,
    bending_energy,
    cotangent_weights,
    discrete_J_LAS,
    energy_report,
    face_gradients,
    k_plane_residual,
    mean_curvature,
    mean_k_plane_residual,
)
from .exceptions import (
    FunctionalError,
    GridShapeError,
    NoSurfaceAffinityError,
    RankDeficientFitError,
)
from .grid import GridField, minimal_surface_residual

__all__ = [
    "CurvatureProfile",
    "EnergyReport",
    "FunctionalError",
    "GridField",
    "GridShapeError",
    "NoSurfaceAffinityError",
    "RankDeficientFitError",
    "bending_energy",
    "cotangent_weights",
    "discrete_J_LAS",
    "energy_report",
    "face_gradients",
    "grid_profile",
    "k_plane_residual",
    "k_self_affinity_residual",
    "mean_curvature",
    "mean_k_plane_residual",
    "minimal_surface_residual",
]
