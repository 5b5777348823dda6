"""Exceptions raised while reading, validating and querying triangle meshes."""

from pathlib import Path


class MeshError(Exception):
    """Base class for mesh errors."""


class ObjParseError(MeshError):
    """Exception raised when an OBJ file cannot be parsed.

    Args:
    ----
        path (Path): The file being read.
        line (int): 1-based line number of the offending record.
        reason (str): What is wrong with the record.

    """

    def __init__(self, path: Path, line: int, reason: str) -> None:
        self.path = path
        self.line = line
        super().__init__(f"{path}:{line}: {reason}")


class NonManifoldEdgeError(MeshError):
    """Exception raised when an edge is used by more than two faces, or twice in
    the same direction (inconsistent orientation).
    """

    def __init__(self, edge: tuple[int, int], msg: str | None = None) -> None:
        self.edge = edge
        super().__init__(
            msg or f"Edge {edge} is non-manifold or inconsistently oriented"
        )


class NonManifoldVertexError(MeshError):
    """Exception raised when the faces around a vertex form more than one fan."""

    def __init__(self, vertex: int, msg: str | None = None) -> None:
        self.vertex = vertex
        super().__init__(msg or f"Faces around vertex {vertex} do not form a single fan")


class DegenerateFaceError(MeshError):
    """Exception raised for faces with repeated indices or (near) zero area."""

    def __init__(self, face: int, msg: str | None = None) -> None:
        self.face = face
        super().__init__(msg or f"Face {face} is degenerate")


class VertexIndexError(MeshError, IndexError):
    """Exception raised when a vertex index is out of range."""

    def __init__(self, vertex: int, n_vertices: int) -> None:
        self.vertex = vertex
        super().__init__(f"Vertex {vertex} out of range for mesh with {n_vertices} vertices")


class BoundaryVertexError(MeshError):
    """Exception raised when an interior-only quantity is requested on the boundary."""

    def __init__(self, vertex: int, quantity: str) -> None:
        self.vertex = vertex
        super().__init__(f"{quantity} is undefined at boundary vertex {vertex}")


class IsolatedVertexError(MeshError):
    """Exception raised for vertices without incident faces."""

    def __init__(self, vertex: int) -> None:
        self.vertex = vertex
        super().__init__(f"Vertex {vertex} has no incident faces")


class DegenerateNormalError(MeshError):
    """Exception raised when incident face normals cancel out."""

    def __init__(self, vertex: int) -> None:
        self.vertex = vertex
        super().__init__(f"Normal at vertex {vertex} has zero length (fold-over geometry)")
