"""Discrete curvature quantities at mesh vertices."""

from .curvature import (
    CurvatureField,
    VertexCurvature,
    angle_deficit,
    corner_angles,
    curvature_field,
    gaussian_curvature_field,
    total_angle_deficit,
    vertex_area,
    vertex_curvature,
    vertex_normal,
    vertex_normals,
)
from .gauss_map import gauss_map_area_ratio
from .plane import CurvaturePlane, CurvaturePlanes, fit_curvature_planes, tangent_frames

__all__ = [
    "CurvatureField",
    "CurvaturePlane",
    "CurvaturePlanes",
    "VertexCurvature",
    "angle_deficit",
    "corner_angles",
    "curvature_field",
    "fit_curvature_planes",
    "gauss_map_area_ratio",
    "gaussian_curvature_field",
    "tangent_frames",
    "total_angle_deficit",
    "vertex_area",
    "vertex_curvature",
    "vertex_normal",
    "vertex_normals",
]
