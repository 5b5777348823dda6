"""Curvature of a one-ring as its center moves along a line."""

import numpy as np
from attrs import define, field

from ..mesh import TriangleMesh


@define(frozen=True, eq=False)
class RingProbe:
    """Gaussian curvature of a batch of one-rings as a function of the offset
    `phi` of their centers along `centroid + phi * normal`.

    With `A_k = X_k - centroid`, the vectors from the moved center are
    `x_k = A_k - phi N`, so every dot product between them is a quadratic in
    `phi` whose coefficients are computed once. Probing a new `phi` only
    evaluates those quadratics.

    Neighbor pairs are stored padded to the largest degree in the batch;
    `mask` marks the real ones.
    """

    vertices: np.ndarray = field(repr=False)
    closed: np.ndarray = field(repr=False)
    mask: np.ndarray = field(repr=False)
    cross_ab: np.ndarray = field(repr=False)  # A_k . A_k+1
    normal_ab: np.ndarray = field(repr=False)  # N . (A_k + A_k+1)
    square_a: np.ndarray = field(repr=False)  # |A_k|^2
    square_b: np.ndarray = field(repr=False)  # |A_k+1|^2
    normal_a: np.ndarray = field(repr=False)  # N . A_k
    normal_b: np.ndarray = field(repr=False)  # N . A_k+1
    normal_sq: np.ndarray = field(repr=False)  # |N|^2

    @classmethod
    def build(
        cls,
        mesh: TriangleMesh,
        vertices: np.ndarray,
        centroid: np.ndarray,
        normal: np.ndarray,
    ) -> "RingProbe":
        """Precompute the quadratic coefficients for `vertices`.

        Args:
        ----
            mesh (TriangleMesh): Mesh holding the (fixed) neighbor positions.
            vertices (np.ndarray): `(B,)` center vertices.
            centroid (np.ndarray): `(B, 3)` line origins.
            normal (np.ndarray): `(B, 3)` line directions.

        """
        vertices = np.asarray(vertices, dtype=np.int64)
        centroid = np.asarray(centroid, dtype=np.float64).reshape(-1, 3)
        normal = np.asarray(normal, dtype=np.float64).reshape(-1, 3)

        rings = mesh.topology.padded_rings[vertices]
        degree = mesh.topology.degree[vertices]
        closed = ~mesh.boundary[vertices]
        width = rings.shape[1]

        column = np.arange(width)
        following = (column[None, :] + 1) % np.maximum(degree, 1)[:, None]
        n_pairs = np.where(closed, degree, np.maximum(degree - 1, 0))
        mask = column[None, :] < n_pairs[:, None]

        a = mesh.vertices[np.where(mask, rings, 0)] - centroid[:, None, :]
        b = (
            mesh.vertices[np.where(mask, np.take_along_axis(rings, following, axis=1), 0)]
            - centroid[:, None, :]
        )
        n = normal[:, None, :]
        return cls(
            vertices=vertices,
            closed=closed,
            mask=mask,
            cross_ab=np.sum(a * b, axis=2),
            normal_ab=np.sum(n * (a + b), axis=2),
            square_a=np.sum(a * a, axis=2),
            square_b=np.sum(b * b, axis=2),
            normal_a=np.sum(n * a, axis=2),
            normal_b=np.sum(n * b, axis=2),
            normal_sq=np.sum(normal * normal, axis=1),
        )

    def __len__(self) -> int:
        return len(self.vertices)

    def curvature(self, phi: np.ndarray, rows: np.ndarray | None = None) -> np.ndarray:
        """Gaussian curvature at offsets `phi`, one per (selected) row.

        Rows whose ring has zero area give NaN.
        """
        sel = slice(None) if rows is None else rows
        p = np.asarray(phi, dtype=np.float64).reshape(-1, 1)
        nn = self.normal_sq[sel][:, None] * p * p

        dot = self.cross_ab[sel] - p * self.normal_ab[sel] + nn
        square_a = self.square_a[sel] - 2.0 * p * self.normal_a[sel] + nn
        square_b = self.square_b[sel] - 2.0 * p * self.normal_b[sel] + nn
        cross = np.sqrt(np.maximum(square_a * square_b - dot * dot, 0.0))

        mask = self.mask[sel]
        angle = np.where(mask, np.arctan2(cross, dot), 0.0).sum(axis=1)
        area = np.where(mask, 0.5 * cross, 0.0).sum(axis=1) / 3.0
        full = np.where(self.closed[sel], 2.0 * np.pi, np.pi)
        with np.errstate(invalid="ignore", divide="ignore"):
            gaussian = (full - angle) / area
        return np.where(area > 0, gaussian, np.nan)
