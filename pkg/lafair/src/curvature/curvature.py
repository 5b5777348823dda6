"""Angle-deficit Gaussian curvature, vertex areas and normals."""

import numpy as np
from attrs import define, field

from ..mesh import (
    BoundaryVertexError,
    DegenerateFaceError,
    DegenerateNormalError,
    IsolatedVertexError,
    ScalarField,
    TriangleMesh,
)


def corner_angles(mesh: TriangleMesh) -> np.ndarray:
    """Interior angle at each face corner, `(F, 3)`.

    Uses `atan2(|u x v|, u . v)`, which stays accurate near 0 and pi.
    """
    v = mesh.vertices
    angles = np.empty(mesh.faces.shape, dtype=np.float64)
    for k in range(3):
        here = v[mesh.faces[:, k]]
        u = v[mesh.faces[:, (k + 1) % 3]] - here
        w = v[mesh.faces[:, (k + 2) % 3]] - here
        angles[:, k] = np.arctan2(
            np.linalg.norm(np.cross(u, w).reshape(-1, 3), axis=1),
            np.einsum("ij,ij->i", u, w),
        )
    return angles


@define(frozen=True, eq=False)
class CurvatureField:
    """Per-vertex deficit, barycentric area and Gaussian curvature.

    Boundary vertices use `pi - sum(theta)` as their deficit. Isolated vertices
    carry zero area and NaN curvature.
    """

    deficit: np.ndarray = field(repr=False)
    area: np.ndarray = field(repr=False)
    gaussian: np.ndarray = field(repr=False)
    is_boundary: np.ndarray = field(repr=False)
    is_isolated: np.ndarray = field(repr=False)

    @property
    def interior(self) -> np.ndarray:
        return ~(self.is_boundary | self.is_isolated)


@define(frozen=True)
class VertexCurvature:
    """Angle deficit, barycentric area and Gaussian curvature of one vertex."""

    deficit: float
    area: float
    gaussian: float
    is_boundary: bool = False


def curvature_field(mesh: TriangleMesh) -> CurvatureField:
    """Angle deficit, barycentric area and `K = deficit / area` at every vertex.

    Raises:
    ------
        DegenerateFaceError: A face has zero area.

    """
    if (flat := np.flatnonzero(mesh.face_areas <= 0.0)).size:
        raise DegenerateFaceError(int(flat[0]), f"Face {int(flat[0])} has zero area")

    n = mesh.n_vertices
    angle_sum = np.bincount(mesh.faces.ravel(), corner_angles(mesh).ravel(), n)
    area = np.bincount(mesh.faces.ravel(), np.repeat(mesh.face_areas, 3), n) / 3.0
    full = np.where(mesh.boundary, np.pi, 2.0 * np.pi)
    deficit = full - angle_sum
    with np.errstate(invalid="ignore", divide="ignore"):
        gaussian = np.where(mesh.isolated, np.nan, deficit / area)
    return CurvatureField(
        deficit=deficit,
        area=area,
        gaussian=gaussian,
        is_boundary=mesh.boundary.copy(),
        is_isolated=mesh.isolated.copy(),
    )


def angle_deficit(mesh: TriangleMesh, vertex: int) -> float:
    """`2 pi` minus the sum of incident face angles at an interior vertex.

    Raises:
    ------
        BoundaryVertexError: The vertex is on the boundary.
        IsolatedVertexError: The vertex has no incident faces.

    """
    vertex = mesh.check_vertex(vertex)
    if mesh.isolated[vertex]:
        raise IsolatedVertexError(vertex)
    if mesh.boundary[vertex]:
        raise BoundaryVertexError(vertex, "Angle deficit")
    return float(curvature_field(mesh).deficit[vertex])


def vertex_area(mesh: TriangleMesh, vertex: int) -> float:
    """One third of the summed area of the faces around `vertex`."""
    vertex = mesh.check_vertex(vertex)
    if mesh.isolated[vertex]:
        raise IsolatedVertexError(vertex)
    incident = (mesh.faces == vertex).any(axis=1)
    return float(mesh.face_areas[incident].sum() / 3.0)


def vertex_curvature(mesh: TriangleMesh, vertex: int) -> VertexCurvature:
    """Deficit, area and Gaussian curvature of one vertex, boundary included."""
    vertex = mesh.check_vertex(vertex)
    if mesh.isolated[vertex]:
        raise IsolatedVertexError(vertex)
    curvature = curvature_field(mesh)
    return VertexCurvature(
        deficit=float(curvature.deficit[vertex]),
        area=float(curvature.area[vertex]),
        gaussian=float(curvature.gaussian[vertex]),
        is_boundary=bool(curvature.is_boundary[vertex]),
    )


def gaussian_curvature_field(mesh: TriangleMesh) -> ScalarField:
    """Gaussian curvature at every vertex.

    Boundary vertices get `(pi - sum(theta)) / area`; use
    `curvature_field(mesh).is_boundary` to tell them apart.

    Raises:
    ------
        DegenerateFaceError: A face has zero area.
        IsolatedVertexError: A vertex is not referenced by any face.

    """
    if (isolated := np.flatnonzero(mesh.isolated)).size:
        raise IsolatedVertexError(int(isolated[0]))
    return ScalarField(curvature_field(mesh).gaussian)


def total_angle_deficit(mesh: TriangleMesh) -> float:
    """Sum of `2 pi - sum(theta)` over all referenced vertices.

    On a closed mesh this equals `2 pi` times the Euler characteristic.
    """
    angles = corner_angles(mesh).sum()
    used = mesh.n_vertices - int(mesh.isolated.sum())
    return float(2.0 * np.pi * used - angles)


def vertex_normals(mesh: TriangleMesh) -> np.ndarray:
    """Area-weighted unit normals, `(V, 3)`, NaN where undefined."""
    return mesh.vertex_normals


def vertex_normal(mesh: TriangleMesh, vertex: int) -> np.ndarray:
    """Area-weighted unit normal at `vertex`.

    Raises:
    ------
        IsolatedVertexError: The vertex has no incident faces.
        DegenerateNormalError: The incident face normals cancel out.

    """
    vertex = mesh.check_vertex(vertex)
    if mesh.isolated[vertex]:
        raise IsolatedVertexError(vertex)
    normal = mesh.vertex_normals[vertex]
    if not np.isfinite(normal).all():
        raise DegenerateNormalError(vertex)
    return normal.copy()
