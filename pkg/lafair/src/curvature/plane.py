"""Least-squares planes of a vertex field in tangent-plane coordinates."""

from typing import Any

import numpy as np
from attrs import define, field

from ..mesh import TriangleMesh

RANK_TOLERANCE = 1e-10


def tangent_frames(normals: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Deterministic orthonormal tangent bases `(e1, e2)` for unit normals.

    `e1` is the world axis least aligned with the normal, projected into the
    tangent plane; `e2 = n x e1`. For `n = z` this gives `e1 = x`, `e2 = y`.
    """
    normals = np.atleast_2d(normals)
    axis = np.zeros_like(normals)
    axis[np.arange(len(normals)), np.argmin(np.abs(normals), axis=1)] = 1.0
    e1 = axis - np.einsum("ij,ij->i", axis, normals)[:, None] * normals
    with np.errstate(invalid="ignore", divide="ignore"):
        e1 /= np.linalg.norm(e1, axis=1)[:, None]
    return e1, np.cross(normals, e1)


@define(frozen=True, eq=False)
class CurvaturePlanes:
    """Batch of fitted planes `K(s, t) = c0 s + c1 t + c2`.

    `(s, t)` are coordinates along `(e1, e2)` relative to the vertex position.
    Rows flagged `degenerate` fell back to `c0 = c1 = 0` and `c2` the mean of
    the samples (or the vertex's own value when there are none).
    """

    vertices: np.ndarray = field(repr=False)
    c0: np.ndarray = field(repr=False)
    c1: np.ndarray = field(repr=False)
    c2: np.ndarray = field(repr=False)
    origin: np.ndarray = field(repr=False)
    normal: np.ndarray = field(repr=False)
    e1: np.ndarray = field(repr=False)
    e2: np.ndarray = field(repr=False)
    samples: np.ndarray = field(repr=False)
    degenerate: np.ndarray = field(repr=False)
    residual_rms: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, row: int) -> "CurvaturePlane":
        return CurvaturePlane(
            c0=float(self.c0[row]),
            c1=float(self.c1[row]),
            c2=float(self.c2[row]),
            origin=self.origin[row],
            normal=self.normal[row],
            frame=(self.e1[row], self.e2[row]),
            samples=int(self.samples[row]),
            degenerate=bool(self.degenerate[row]),
        )


@define(frozen=True, eq=False)
class CurvaturePlane:
    """Fitted plane of the curvature field around one vertex."""

    c0: float
    c1: float
    c2: float
    origin: np.ndarray = field(repr=False)
    normal: np.ndarray = field(repr=False)
    frame: tuple[np.ndarray, np.ndarray] = field(repr=False)
    samples: int = 0
    degenerate: bool = False

    def __call__(self, point: Any) -> float:
        """Evaluate the plane at a 3D point projected into the chart."""
        offset = np.asarray(point, dtype=np.float64) - self.origin
        return float(
            self.c0 * offset @ self.frame[0] + self.c1 * offset @ self.frame[1] + self.c2
        )


def fit_curvature_planes(
    mesh: TriangleMesh,
    values: np.ndarray,
    ring_depth: int,
    vertices: np.ndarray | None = None,
    usable: np.ndarray | None = None,
) -> CurvaturePlanes:
    """Fit `values` over the neighbors within `ring_depth` edges of each vertex.

    Neighbor positions are projected into the tangent plane of the vertex
    normal. The vertex itself never contributes to its own fit.

    Args:
    ----
        mesh (TriangleMesh): The mesh.
        values (np.ndarray): One value per vertex.
        ring_depth (int): Neighborhood depth, at least 1.
        vertices (np.ndarray | None): Vertices to fit; all when None.
        usable (np.ndarray | None): Mask of vertices allowed as samples; all
            vertices with finite values when None.

    """
    if ring_depth < 1:
        raise ValueError(f"ring_depth must be at least 1, got {ring_depth}")
    values = np.asarray(values, dtype=np.float64)
    rows = np.arange(mesh.n_vertices) if vertices is None else np.asarray(vertices, np.int64)
    usable = np.isfinite(values) if usable is None else usable & np.isfinite(values)

    origin = mesh.vertices[rows]
    normal = mesh.vertex_normals[rows]
    e1, e2 = (np.nan_to_num(e) for e in tangent_frames(normal))

    reach = mesh.topology.neighborhood(ring_depth)[rows].tocsr()
    owner = np.repeat(np.arange(len(rows)), np.diff(reach.indptr))
    neighbor = reach.indices
    keep = usable[neighbor]
    owner, neighbor = owner[keep], neighbor[keep]

    offset = mesh.vertices[neighbor] - origin[owner]
    s = np.einsum("ij,ij->i", offset, e1[owner])
    t = np.einsum("ij,ij->i", offset, e2[owner])
    k = values[neighbor]

    n = np.bincount(owner, minlength=len(rows)).astype(np.float64)

    def per_row(weights: np.ndarray) -> np.ndarray:
        return np.bincount(owner, weights, len(rows))

    with np.errstate(invalid="ignore", divide="ignore"):
        mean_s, mean_t, mean_k = (per_row(x) / n for x in (s, t, k))
        ds, dt, dk = s - mean_s[owner], t - mean_t[owner], k - mean_k[owner]
        css, ctt, cst = per_row(ds * ds), per_row(dt * dt), per_row(ds * dt)
        csk, ctk = per_row(ds * dk), per_row(dt * dk)
        det = css * ctt - cst**2

        degenerate = (
            (n < 3)
            | ~np.isfinite(normal).all(axis=1)
            | (det <= RANK_TOLERANCE * (css + ctt) ** 2)
        )
        c0 = np.where(degenerate, 0.0, (csk * ctt - ctk * cst) / det)
        c1 = np.where(degenerate, 0.0, (ctk * css - csk * cst) / det)
    c2 = np.where(
        degenerate,
        np.where(n > 0, mean_k, values[rows]),
        mean_k - c0 * mean_s - c1 * mean_t,
    )

    residual = k - (c0[owner] * s + c1[owner] * t + c2[owner])
    with np.errstate(invalid="ignore", divide="ignore"):
        residual_rms = np.sqrt(per_row(residual**2) / n)
    residual_rms = np.where(n > 0, residual_rms, 0.0)

    return CurvaturePlanes(
        vertices=rows,
        c0=c0,
        c1=c1,
        c2=c2,
        origin=origin,
        normal=normal,
        e1=e1,
        e2=e2,
        samples=n.astype(np.int64),
        degenerate=degenerate,
        residual_rms=residual_rms,
    )
