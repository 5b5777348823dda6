"""Analytic test meshes and normal-direction noise."""

from enum import StrEnum

import numpy as np

from .mesh import TriangleMesh

_GOLDEN = (1.0 + np.sqrt(5.0)) / 2.0

_ICOSAHEDRON_VERTICES = np.array(
    [
        [-1, _GOLDEN, 0],
        [1, _GOLDEN, 0],
        [-1, -_GOLDEN, 0],
        [1, -_GOLDEN, 0],
        [0, -1, _GOLDEN],
        [0, 1, _GOLDEN],
        [0, -1, -_GOLDEN],
        [0, 1, -_GOLDEN],
        [_GOLDEN, 0, -1],
        [_GOLDEN, 0, 1],
        [-_GOLDEN, 0, -1],
        [-_GOLDEN, 0, 1],
    ],
    dtype=np.float64,
)

_ICOSAHEDRON_FACES = np.array(
    [
        [0, 11, 5], [0, 5, 1], [0, 1, 7], [0, 7, 10], [0, 10, 11],
        [1, 5, 9], [5, 11, 4], [11, 10, 2], [10, 7, 6], [7, 1, 8],
        [3, 9, 4], [3, 4, 2], [3, 2, 6], [3, 6, 8], [3, 8, 9],
        [4, 9, 5], [2, 4, 11], [6, 2, 10], [8, 6, 7], [9, 8, 1],
    ],
    dtype=np.int64,
)


class MeshKind(StrEnum):
    PLANE = "plane"
    SPHERE = "sphere"
    CYLINDER = "cylinder"
    SADDLE = "saddle"


def _grid_faces(rows: int, cols: int, wrap: bool = False) -> np.ndarray:
    """Two CCW triangles per cell of a `(rows + 1) x (cols + 1)` vertex grid.

    With `wrap`, the last column is joined to the first and the grid has
    `cols` vertices per row.
    """
    width = cols if wrap else cols + 1
    i, j = np.meshgrid(np.arange(rows), np.arange(cols), indexing="ij")
    i, j = i.ravel(), j.ravel()
    j_next = (j + 1) % width
    v00 = i * width + j
    v01 = i * width + j_next
    v10 = (i + 1) * width + j
    v11 = (i + 1) * width + j_next
    faces = np.empty((2 * v00.size, 3), dtype=np.int64)
    faces[0::2] = np.column_stack([v00, v01, v11])
    faces[1::2] = np.column_stack([v00, v11, v10])
    return faces


def plane(resolution: int, size: float = 1.0) -> TriangleMesh:
    """`resolution x resolution` grid of the square `[-size/2, size/2]^2` at z = 0."""
    ticks = np.linspace(-size / 2, size / 2, resolution + 1)
    y, x = np.meshgrid(ticks, ticks, indexing="ij")
    vertices = np.column_stack([x.ravel(), y.ravel(), np.zeros(x.size)])
    return TriangleMesh(vertices, _grid_faces(resolution, resolution))


def saddle(resolution: int, size: float = 2.0) -> TriangleMesh:
    """Grid of z = x^2 - y^2 over `[-size/2, size/2]^2`."""
    grid = plane(resolution, size).vertices.copy()
    grid[:, 2] = grid[:, 0] ** 2 - grid[:, 1] ** 2
    return TriangleMesh(grid, _grid_faces(resolution, resolution))


def cylinder(resolution: int, radius: float = 1.0, height: float = 2.0) -> TriangleMesh:
    """Open cylinder around the z axis with `resolution` rows of `4 * resolution`
    (at least 3) quads each.
    """
    around = max(3, 4 * resolution)
    angle = 2.0 * np.pi * np.arange(around) / around
    z = np.linspace(-height / 2, height / 2, resolution + 1)
    zz, aa = np.meshgrid(z, angle, indexing="ij")
    vertices = np.column_stack(
        [radius * np.cos(aa.ravel()), radius * np.sin(aa.ravel()), zz.ravel()]
    )
    return TriangleMesh(vertices, _grid_faces(resolution, around, wrap=True))


def icosphere(level: int, radius: float = 1.0) -> TriangleMesh:
    """Icosahedron subdivided `level` times, projected onto the sphere after
    every subdivision. Has `10 * 4**level + 2` vertices.
    """
    vertices = list(_ICOSAHEDRON_VERTICES / np.linalg.norm(_ICOSAHEDRON_VERTICES[0]))
    faces = _ICOSAHEDRON_FACES.tolist()

    for _ in range(level):
        midpoints: dict[tuple[int, int], int] = {}

        def midpoint(a: int, b: int) -> int:
            key = (a, b) if a < b else (b, a)
            if key not in midpoints:
                point = vertices[a] + vertices[b]
                vertices.append(point / np.linalg.norm(point))
                midpoints[key] = len(vertices) - 1
            return midpoints[key]

        subdivided = []
        for a, b, c in faces:
            ab, bc, ca = midpoint(a, b), midpoint(b, c), midpoint(c, a)
            subdivided.extend([[a, ab, ca], [b, bc, ab], [c, ca, bc], [ab, bc, ca]])
        faces = subdivided

    return TriangleMesh(radius * np.array(vertices), faces)


def gen_mesh(
    kind: MeshKind | str,
    resolution: int,
    *,
    size: float | None = None,
    radius: float = 1.0,
    height: float = 2.0,
) -> TriangleMesh:
    """Generate an analytic test surface.

    Args:
    ----
        kind (MeshKind | str): One of plane, sphere, cylinder, saddle.
        resolution (int): Grid cells per side for plane/saddle, rows for the
            cylinder, subdivision level for the sphere.
        size (float | None): Side length of plane (default 1) and saddle
            (default 2).
        radius (float): Sphere and cylinder radius.
        height (float): Cylinder height.

    Raises:
    ------
        ValueError: Unknown kind, or resolution below 1 (below 0 for spheres).

    """
    kind = MeshKind(kind)
    minimum = 0 if kind is MeshKind.SPHERE else 1
    if resolution < minimum:
        raise ValueError(f"Resolution for {kind} must be at least {minimum}")

    match kind:
        case MeshKind.PLANE:
            return plane(resolution, 1.0 if size is None else size)
        case MeshKind.SADDLE:
            return saddle(resolution, 2.0 if size is None else size)
        case MeshKind.CYLINDER:
            return cylinder(resolution, radius, height)
        case MeshKind.SPHERE:
            return icosphere(resolution, radius)


def add_noise(mesh: TriangleMesh, amplitude: float, seed: int) -> TriangleMesh:
    """Displace every vertex along its normal by a uniform offset in
    `[-amplitude, amplitude]` drawn from a generator seeded with `seed`.

    Vertices without a normal are left in place.
    """
    if amplitude < 0:
        raise ValueError(f"Noise amplitude must be non-negative, got {amplitude}")
    if amplitude == 0:
        return mesh

    rng = np.random.default_rng(seed)
    offsets = rng.uniform(-amplitude, amplitude, mesh.n_vertices)
    normals = np.nan_to_num(mesh.vertex_normals, nan=0.0)
    return mesh.with_vertices(mesh.vertices + offsets[:, None] * normals)
