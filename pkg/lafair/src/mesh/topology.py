"""One-ring adjacency derived from a face array."""

from functools import cached_property

import numpy as np
from attrs import define, field
from scipy import sparse

from .exceptions import NonManifoldEdgeError, NonManifoldVertexError


@define(frozen=True, slots=False)
class VertexRing:
    """Cyclically ordered neighbors of a vertex.

    Consecutive neighbors (wrapping around for interior vertices) form a face
    with the center, in the orientation of the mesh faces.
    """

    center: int
    neighbors: tuple[int, ...]
    is_boundary: bool

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Consecutive neighbor pairs, each spanning one incident face."""
        n = len(self.neighbors)
        stop = n - 1 if self.is_boundary else n
        return tuple(
            (self.neighbors[k], self.neighbors[(k + 1) % n]) for k in range(max(stop, 0))
        )


def _halfedges(faces: np.ndarray) -> np.ndarray:
    return np.concatenate([faces[:, [0, 1]], faces[:, [1, 2]], faces[:, [2, 0]]])


def _check_edges(faces: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Return unique undirected edges and the boundary mask, or raise."""
    if not faces.size:
        return np.empty((0, 2), dtype=np.int64), np.empty(0, dtype=bool)
    directed = _halfedges(faces)
    _, inverse, counts = np.unique(
        directed, axis=0, return_inverse=True, return_counts=True
    )
    if (dup := np.flatnonzero(counts > 1)).size:
        edge = directed[np.flatnonzero(inverse.ravel() == dup[0])[0]]
        raise NonManifoldEdgeError(
            (int(edge[0]), int(edge[1])),
            f"Edge {tuple(int(v) for v in edge)} is used twice in the same direction",
        )

    undirected = np.sort(directed, axis=1)
    edges, counts = np.unique(undirected, axis=0, return_counts=True)
    if (over := np.flatnonzero(counts > 2)).size:
        edge = edges[over[0]]
        raise NonManifoldEdgeError(
            (int(edge[0]), int(edge[1])),
            f"Edge {tuple(int(v) for v in edge)} is shared by {counts[over[0]]} faces",
        )
    return edges.reshape(-1, 2), counts == 1


def _walk_fan(vertex: int, successor: dict[int, int]) -> tuple[tuple[int, ...], bool]:
    targets = set(successor.values())
    starts = [n for n in successor if n not in targets]
    if len(starts) > 1:
        raise NonManifoldVertexError(vertex)

    start = starts[0] if starts else min(successor)
    ring = [start]
    while (nxt := successor.get(ring[-1])) is not None and nxt != start:
        if len(ring) > len(successor):
            raise NonManifoldVertexError(vertex)
        ring.append(nxt)

    expected = len(successor) + (1 if starts else 0)
    if len(ring) != expected:
        raise NonManifoldVertexError(vertex)
    return tuple(ring), bool(starts)


@define(frozen=True, slots=False)
class Topology:
    """Connectivity of a manifold triangle mesh.

    Built once per face array and shared between meshes that only differ in
    vertex positions.
    """

    n_vertices: int
    rings: tuple[tuple[int, ...], ...] = field(repr=False)
    boundary: np.ndarray = field(repr=False)
    isolated: np.ndarray = field(repr=False)
    edges: np.ndarray = field(repr=False)
    boundary_edges: np.ndarray = field(repr=False)

    @classmethod
    def from_faces(cls, faces: np.ndarray, n_vertices: int) -> "Topology":
        """Derive adjacency from oriented faces.

        Raises:
        ------
            NonManifoldEdgeError: An edge is shared by more than two faces or
                traversed twice in the same direction.
            NonManifoldVertexError: The faces around a vertex form several fans.

        """
        edges, on_boundary = _check_edges(faces)

        successor: list[dict[int, int]] = [{} for _ in range(n_vertices)]
        for i, j, k in faces.tolist():
            successor[i][j] = k
            successor[j][k] = i
            successor[k][i] = j

        rings: list[tuple[int, ...]] = []
        boundary = np.zeros(n_vertices, dtype=bool)
        for vertex, succ in enumerate(successor):
            if not succ:
                rings.append(())
                continue
            ring, is_boundary = _walk_fan(vertex, succ)
            rings.append(ring)
            boundary[vertex] = is_boundary

        isolated = np.array([not r for r in rings], dtype=bool)
        for array in (boundary, isolated, edges):
            array.setflags(write=False)
        return cls(
            n_vertices=n_vertices,
            rings=tuple(rings),
            boundary=boundary,
            isolated=isolated,
            edges=edges,
            boundary_edges=edges[on_boundary],
        )

    def ring(self, vertex: int) -> VertexRing:
        return VertexRing(
            center=vertex,
            neighbors=self.rings[vertex],
            is_boundary=bool(self.boundary[vertex]),
        )

    @cached_property
    def degree(self) -> np.ndarray:
        return np.fromiter((len(r) for r in self.rings), dtype=np.int64, count=self.n_vertices)

    @cached_property
    def padded_rings(self) -> np.ndarray:
        """Rings as a `(V, max_degree)` index array padded with -1."""
        width = int(self.degree.max(initial=0))
        padded = np.full((self.n_vertices, width), -1, dtype=np.int64)
        for vertex, ring in enumerate(self.rings):
            padded[vertex, : len(ring)] = ring
        padded.setflags(write=False)
        return padded

    @cached_property
    def adjacency(self) -> sparse.csr_array:
        """Symmetric vertex adjacency matrix."""
        i, j = self.edges.T
        data = np.ones(2 * len(i), dtype=np.int8)
        return sparse.csr_array(
            (data, (np.concatenate([i, j]), np.concatenate([j, i]))),
            shape=(self.n_vertices, self.n_vertices),
        )

    @cached_property
    def _neighborhoods(self) -> dict[int, sparse.csr_array]:
        return {}

    def neighborhood(self, depth: int) -> sparse.csr_array:
        """Vertices reachable within `depth` edges, excluding the vertex itself."""
        if depth in self._neighborhoods:
            return self._neighborhoods[depth]
        adjacency = self.adjacency.astype(np.int64)
        reach = adjacency.copy()
        power = adjacency
        for _ in range(depth - 1):
            power = (power @ adjacency).astype(bool).astype(np.int64)
            reach = reach + power
        coo = sparse.coo_array(reach)
        keep = (coo.row != coo.col) & (coo.data != 0)
        result = sparse.csr_array(
            (np.ones(int(keep.sum()), dtype=bool), (coo.row[keep], coo.col[keep])),
            shape=coo.shape,
        )
        result.sort_indices()
        self._neighborhoods[depth] = result
        return result
