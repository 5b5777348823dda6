"""Triangle mesh storage, adjacency, validation and OBJ I/O."""

from .exceptions import (
    BoundaryVertexError,
    DegenerateFaceError,
    DegenerateNormalError,
    IsolatedVertexError,
    MeshError,
    NonManifoldEdgeError,
    NonManifoldVertexError,
    ObjParseError,
    VertexIndexError,
)
from .field import ScalarField
from .generate import MeshKind, add_noise, cylinder, gen_mesh, icosphere, plane, saddle
from .io import load_mesh, save_mesh
from .mesh import TriangleMesh
from .topology import Topology, VertexRing


def one_ring(mesh: TriangleMesh, vertex: int) -> VertexRing:
    """Cyclically ordered neighbors of `vertex`; see `TriangleMesh.one_ring`."""
    return mesh.one_ring(vertex)


__all__ = [
    "BoundaryVertexError",
    "DegenerateFaceError",
    "DegenerateNormalError",
    "IsolatedVertexError",
    "MeshError",
    "MeshKind",
    "NonManifoldEdgeError",
    "NonManifoldVertexError",
    "ObjParseError",
    "ScalarField",
    "Topology",
    "TriangleMesh",
    "VertexIndexError",
    "VertexRing",
    "add_noise",
    "cylinder",
    "gen_mesh",
    "icosphere",
    "load_mesh",
    "one_ring",
    "plane",
    "saddle",
    "save_mesh",
]
