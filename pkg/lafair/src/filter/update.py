"""Single-vertex view of the filter: centroid, plane fit, curvature probe, solve."""

from typing import Any

import numpy as np
from attrs import define, evolve, field

from ..curvature import CurvaturePlane, fit_curvature_planes, vertex_normal
from ..mesh import IsolatedVertexError, ScalarField, TriangleMesh
from .config import FilterConfig
from .exceptions import DegenerateRingError
from .probe import RingProbe
from .solve import UpdateStatus, solve_offsets


def _as_vector(value: Any) -> np.ndarray:
    vector = np.array(value, dtype=np.float64, copy=True).reshape(3)
    vector.setflags(write=False)
    return vector


@define(frozen=True, eq=False)
class VertexUpdate:
    """Candidate position `centroid + phi * normal` of one vertex."""

    vertex: int
    centroid: np.ndarray = field(converter=_as_vector)
    normal: np.ndarray = field(converter=_as_vector)
    phi: float = field(default=0.0, converter=float)
    status: UpdateStatus = field(default=UpdateStatus.PENDING, converter=UpdateStatus)

    @normal.validator
    def _unit(self, _: Any, normal: np.ndarray) -> None:
        if abs(np.linalg.norm(normal) - 1.0) > 1e-9:
            raise ValueError(f"Normal of vertex {self.vertex} is not a unit vector")

    @status.validator
    def _fallback_at_centroid(self, _: Any, status: UpdateStatus) -> None:
        if status is UpdateStatus.FALLBACK_CENTROID and self.phi != 0:
            raise ValueError("A centroid fallback must have phi = 0")

    @property
    def position(self) -> np.ndarray:
        return self.centroid + self.phi * self.normal

    @classmethod
    def at(cls, mesh: TriangleMesh, vertex: int) -> "VertexUpdate":
        """Unsolved update of `vertex`; boundary vertices start out frozen."""
        return cls(
            vertex=vertex,
            centroid=neighbor_centroid(mesh, vertex),
            normal=vertex_normal(mesh, vertex),
            status=UpdateStatus.FROZEN if mesh.boundary[vertex] else UpdateStatus.PENDING,
        )


def neighbor_centroid(mesh: TriangleMesh, vertex: int) -> np.ndarray:
    """Mean position of the one-ring neighbors of `vertex`."""
    vertex = mesh.check_vertex(vertex)
    if mesh.isolated[vertex]:
        raise IsolatedVertexError(vertex)
    return mesh.neighbor_centroids[vertex].copy()


def fit_curvature_plane(
    mesh: TriangleMesh,
    vertex: int,
    field: ScalarField,
    ring_depth: int,
) -> CurvaturePlane:
    """Least-squares plane of `field` around `vertex` in its tangent chart.

    Samples are the non-boundary vertices within `ring_depth` edges, the
    vertex itself excluded. A rank-deficient fit is returned with
    `degenerate=True`, `c0 = c1 = 0` and `c2` the sample mean.
    """
    vertex = mesh.check_vertex(vertex)
    field.check(mesh)
    planes = fit_curvature_planes(
        mesh,
        field.values,
        ring_depth,
        vertices=np.array([vertex]),
        usable=~mesh.boundary,
    )
    return planes[0]


def _probe(mesh: TriangleMesh, update: VertexUpdate) -> RingProbe:
    return RingProbe.build(
        mesh,
        np.array([update.vertex]),
        update.centroid[None, :],
        update.normal[None, :],
    )


def curvature_at_offset(mesh: TriangleMesh, update: VertexUpdate, phi: float) -> float:
    """Gaussian curvature of the vertex moved to `centroid + phi * normal`,
    with its neighbors in place.

    Raises:
    ------
        DegenerateRingError: The moved one-ring has zero area.

    """
    value = float(_probe(mesh, update).curvature(np.array([phi]))[0])
    if not np.isfinite(value):
        raise DegenerateRingError(update.vertex, phi)
    return value


def solve_offset(
    mesh: TriangleMesh,
    update: VertexUpdate,
    target_k: float,
    cfg: FilterConfig = FilterConfig(),
) -> VertexUpdate:
    """Solve for the offset that gives `target_k` at the vertex.

    The search starts on the side of the centroid where the vertex currently
    lies. When no offset is found the update falls back to the centroid.
    """
    if not np.isfinite(target_k):
        raise ValueError(f"Target curvature must be finite, got {target_k}")
    rows = np.array([update.vertex])
    current = mesh.vertices[update.vertex] - update.centroid
    phi, status = solve_offsets(
        _probe(mesh, update),
        np.array([target_k]),
        side=np.array([1.0 if current @ update.normal >= 0 else -1.0]),
        initial_range=cfg.initial_range(mesh, rows),
        tol=cfg.tolerance(mesh),
        range_expansions=cfg.range_expansions,
        max_bisections=cfg.max_bisections,
    )
    return evolve(update, phi=float(phi[0]), status=UpdateStatus(int(status[0])))
