"""Indexed triangle mesh."""

from functools import cached_property
from typing import Any

import numpy as np
from attrs import define, field

from .exceptions import DegenerateFaceError, VertexIndexError
from .topology import Topology, VertexRing

AREA_TOLERANCE = 1e-12


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def _as_vertices(value: Any) -> np.ndarray:
    array = np.array(value, dtype=np.float64, copy=True)
    return _readonly(array.reshape(-1, 3))


def _as_faces(value: Any) -> np.ndarray:
    array = np.array(value, dtype=np.int64, copy=True)
    return _readonly(array.reshape(-1, 3))


@define(frozen=True, slots=False, eq=False)
class TriangleMesh:
    """Immutable triangle mesh with counter-clockwise oriented faces.

    Construction validates face indices, face areas and manifoldness, and
    derives the one-ring adjacency. Meshes that only move vertices (see
    `with_vertices`) share the adjacency of their parent.

    Attributes
    ----------
        vertices (np.ndarray): `(V, 3)` float64 vertex positions.
        faces (np.ndarray): `(F, 3)` int64 vertex indices.

    """

    vertices: np.ndarray = field(converter=_as_vertices)
    faces: np.ndarray = field(converter=_as_faces)
    _topology: Topology | None = field(default=None, repr=False)

    def __attrs_post_init__(self) -> None:
        if self._topology is not None:
            return
        self._validate_faces()
        object.__setattr__(
            self,
            "_topology",
            Topology.from_faces(self.faces, len(self.vertices)),
        )

    def _validate_faces(self) -> None:
        if not self.faces.size:
            return
        n_vertices = len(self.vertices)
        out_of_range = (self.faces < 0) | (self.faces >= n_vertices)
        if (bad := np.flatnonzero(out_of_range)).size:
            face = int(bad[0] // 3)
            raise DegenerateFaceError(
                face, f"Face {face} references a vertex outside 0..{n_vertices - 1}"
            )
        f = self.faces
        repeated = (f[:, 0] == f[:, 1]) | (f[:, 1] == f[:, 2]) | (f[:, 2] == f[:, 0])
        if (bad := np.flatnonzero(repeated)).size:
            raise DegenerateFaceError(int(bad[0]), f"Face {int(bad[0])} repeats a vertex")
        threshold = AREA_TOLERANCE * self.bounding_box_diagonal**2
        if (bad := np.flatnonzero(self.face_areas <= threshold)).size:
            raise DegenerateFaceError(
                int(bad[0]),
                f"Face {int(bad[0])} has area {self.face_areas[bad[0]]:.3g}"
                f" (tolerance {threshold:.3g})",
            )

    @property
    def topology(self) -> Topology:
        assert self._topology is not None
        return self._topology

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def with_vertices(self, vertices: Any) -> "TriangleMesh":
        """Return a mesh with the same faces and new vertex positions.

        The adjacency is reused and the faces are not re-validated.
        """
        moved = TriangleMesh(vertices, self.faces, topology=self.topology)
        if moved.n_vertices != self.n_vertices:
            raise ValueError(
                f"Expected {self.n_vertices} vertices, got {moved.n_vertices}"
            )
        return moved

    def check_vertex(self, vertex: int) -> int:
        if not 0 <= vertex < self.n_vertices:
            raise VertexIndexError(vertex, self.n_vertices)
        return int(vertex)

    def one_ring(self, vertex: int) -> VertexRing:
        """Cyclically ordered neighbors of `vertex`."""
        return self.topology.ring(self.check_vertex(vertex))

    @property
    def edges(self) -> np.ndarray:
        """Unique undirected edges as `(E, 2)` index pairs, smaller index first."""
        return self.topology.edges

    @property
    def boundary(self) -> np.ndarray:
        """Boolean mask of vertices on an open fan."""
        return self.topology.boundary

    @property
    def isolated(self) -> np.ndarray:
        """Boolean mask of vertices without incident faces."""
        return self.topology.isolated

    @cached_property
    def face_cross(self) -> np.ndarray:
        """Per-face `(b - a) x (c - a)`; twice the area times the unit normal."""
        a, b, c = (self.vertices[self.faces[:, k]] for k in range(3))
        return _readonly(np.cross(b - a, c - a).reshape(-1, 3))

    @cached_property
    def face_areas(self) -> np.ndarray:
        return _readonly(0.5 * np.linalg.norm(self.face_cross, axis=1))

    @cached_property
    def face_normals(self) -> np.ndarray:
        with np.errstate(invalid="ignore", divide="ignore"):
            return _readonly(self.face_cross / (2.0 * self.face_areas[:, None]))

    @cached_property
    def vertex_normals(self) -> np.ndarray:
        """Area-weighted unit vertex normals; NaN where the weighted sum vanishes."""
        accumulated = np.zeros_like(self.vertices)
        for k in range(3):
            np.add.at(accumulated, self.faces[:, k], self.face_cross)
        length = np.linalg.norm(accumulated, axis=1)
        scale = 1e-14 * np.max(length, initial=0.0)
        with np.errstate(invalid="ignore", divide="ignore"):
            normals = accumulated / length[:, None]
        normals[length <= scale] = np.nan
        return _readonly(normals)

    @cached_property
    def neighbor_centroids(self) -> np.ndarray:
        """Mean one-ring neighbor position per vertex; NaN for isolated vertices."""
        adjacency = self.topology.adjacency.astype(np.float64)
        degree = self.topology.degree
        with np.errstate(invalid="ignore", divide="ignore"):
            return _readonly((adjacency @ self.vertices) / degree[:, None])

    @cached_property
    def surface_area(self) -> float:
        return float(self.face_areas.sum())

    @cached_property
    def mean_edge_length(self) -> float:
        if not self.edges.size:
            return 0.0
        d = self.vertices[self.edges[:, 0]] - self.vertices[self.edges[:, 1]]
        return float(np.linalg.norm(d, axis=1).mean())

    @cached_property
    def incident_edge_length(self) -> np.ndarray:
        """Mean length of the edges incident to each vertex (0 if isolated)."""
        i, j = self.edges.T
        length = np.linalg.norm(self.vertices[i] - self.vertices[j], axis=1)
        total = np.bincount(i, length, self.n_vertices) + np.bincount(
            j, length, self.n_vertices
        )
        return _readonly(total / np.maximum(self.topology.degree, 1))

    @cached_property
    def bounding_box_diagonal(self) -> float:
        if not self.n_vertices:
            return 0.0
        return float(np.linalg.norm(self.vertices.max(axis=0) - self.vertices.min(axis=0)))

    @property
    def euler_characteristic(self) -> int:
        """V - E + F over referenced vertices."""
        used = self.n_vertices - int(self.isolated.sum())
        return used - len(self.edges) + self.n_faces

    @property
    def is_closed(self) -> bool:
        return self.n_faces > 0 and not self.topology.boundary_edges.size
