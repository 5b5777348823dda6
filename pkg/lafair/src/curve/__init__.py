"""Planar log-aesthetic curves: evaluation, sampling and analysis."""

from .analysis import (
    discrete_J_LAC,
    lcg_slope,
    self_affinity_residual,
    sigma_profile_length,
)
from .evaluate import (
    curvature_at,
    evaluate_point,
    radius_of_curvature,
    sample_curve,
    tangent_angle,
)
from .exceptions import (
    ConstantCurvatureError,
    CurvatureUndefinedError,
    CurveDomainError,
    CurveError,
    NoAffinityError,
    NonMonotoneCurvatureError,
    PolylineError,
    QuadratureError,
)
from .params import LACurveParams, QuadConfig, RadiusProfile
from .polyline import Polyline2D

__all__ = [
    "ConstantCurvatureError",
    "CurvatureUndefinedError",
    "CurveDomainError",
    "CurveError",
    "LACurveParams",
    "NoAffinityError",
    "NonMonotoneCurvatureError",
    "Polyline2D",
    "PolylineError",
    "QuadConfig",
    "QuadratureError",
    "RadiusProfile",
    "curvature_at",
    "discrete_J_LAC",
    "evaluate_point",
    "lcg_slope",
    "radius_of_curvature",
    "sample_curve",
    "self_affinity_residual",
    "sigma_profile_length",
    "tangent_angle",
]
