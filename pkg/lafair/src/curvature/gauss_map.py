"""Gauss-map area ratio as an independent curvature estimate."""

import numpy as np

from ..mesh import BoundaryVertexError, DegenerateNormalError, TriangleMesh


def _spherical_excess(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Signed area of the spherical triangles `(a, b, c)` of unit vectors.

    Positive when the triangle is counter-clockwise seen from outside the
    unit sphere.
    """
    numerator = np.einsum("ij,ij->i", a, np.cross(b, c))
    denominator = (
        1.0
        + np.einsum("ij,ij->i", a, b)
        + np.einsum("ij,ij->i", b, c)
        + np.einsum("ij,ij->i", c, a)
    )
    return 2.0 * np.arctan2(numerator, denominator)


def gauss_map_area_ratio(mesh: TriangleMesh, vertex: int) -> float:
    """Signed area of the one-ring's normal image over its surface area.

    The image of each incident face is the spherical triangle spanned by the
    center normal and the normals of the two neighbors. The surface area is the
    full area of the incident faces, so the ratio estimates Gaussian curvature.

    Raises:
    ------
        BoundaryVertexError: The vertex is on the boundary.
        DegenerateNormalError: A normal in the one-ring is undefined.

    """
    ring = mesh.one_ring(vertex)
    if ring.is_boundary:
        raise BoundaryVertexError(ring.center, "Gauss-map area ratio")

    normals = mesh.vertex_normals
    involved = (ring.center, *ring.neighbors)
    if (bad := [v for v in involved if not np.isfinite(normals[v]).all()]):
        raise DegenerateNormalError(bad[0])

    pairs = np.array(ring.pairs, dtype=np.int64)
    center = np.broadcast_to(normals[ring.center], (len(pairs), 3))
    image_area = _spherical_excess(center, normals[pairs[:, 0]], normals[pairs[:, 1]]).sum()

    incident = (mesh.faces == ring.center).any(axis=1)
    return float(image_area / mesh.face_areas[incident].sum())
