"""Wavefront OBJ reading and writing."""

from logging import LoggerAdapter, getLogger
from pathlib import Path

import numpy as np

from .exceptions import ObjParseError
from .mesh import TriangleMesh


def _resolve_index(token: str, n_vertices: int, path: Path, line: int) -> int:
    try:
        index = int(token.split("/", 1)[0])
    except ValueError as exc:
        raise ObjParseError(path, line, f"invalid vertex reference '{token}'") from exc
    if index == 0:
        raise ObjParseError(path, line, "vertex index 0 is invalid (OBJ indices are 1-based)")
    # Negative indices count back from the last vertex defined so far
    return index - 1 if index > 0 else n_vertices + index


def load_mesh(
    path: Path,
    logger: LoggerAdapter = LoggerAdapter(getLogger(), {"label": "mesh"}),
) -> TriangleMesh:
    """Read a triangle mesh from an ASCII OBJ file.

    Only `v` and `f` records are used. Texture and normal references in face
    records (`f 1/1/1 ...`) are accepted and ignored. Other records are skipped
    and counted.

    Raises:
    ------
        ObjParseError: A line is not valid UTF-8, a record cannot be parsed, a face
            is not a triangle, or a face references an undefined vertex.
        NonManifoldEdgeError | NonManifoldVertexError | DegenerateFaceError:
            The mesh fails validation.

    """
    vertices: list[tuple[float, float, float]] = []
    faces: list[tuple[int, int, int]] = []
    face_lines: list[int] = []
    skipped: dict[str, int] = {}

    with open(path, "rb") as handle:
        for line_no, encoded in enumerate(handle, start=1):
            try:
                raw = encoded.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise ObjParseError(path, line_no, "invalid UTF-8") from exc
            tokens = raw.split("#", 1)[0].split()
            if not tokens:
                continue
            match tokens:
                case ["v", x, y, z, *_]:
                    try:
                        vertices.append((float(x), float(y), float(z)))
                    except ValueError as exc:
                        raise ObjParseError(path, line_no, "invalid vertex coordinate") from exc
                case ["v", *_]:
                    raise ObjParseError(path, line_no, "vertex record needs three coordinates")
                case ["f", a, b, c]:
                    faces.append(
                        tuple(  # type: ignore[arg-type]
                            _resolve_index(t, len(vertices), path, line_no) for t in (a, b, c)
                        )
                    )
                    face_lines.append(line_no)
                case ["f", *refs]:
                    raise ObjParseError(
                        path, line_no, f"face with {len(refs)} vertices (only triangles are supported)"
                    )
                case [record, *_]:
                    skipped[record] = skipped.get(record, 0) + 1

    face_array = np.array(faces, dtype=np.int64).reshape(-1, 3)
    bad = np.flatnonzero(((face_array < 0) | (face_array >= len(vertices))).any(axis=1))
    if bad.size:
        raise ObjParseError(path, face_lines[bad[0]], "face references an undefined vertex")

    if skipped:
        logger.warning(
            f"Skipped {sum(skipped.values())} unsupported records in {path.name} "
            f"({', '.join(f'{k}: {v}' for k, v in sorted(skipped.items()))})"
        )

    mesh = TriangleMesh(np.array(vertices, dtype=np.float64).reshape(-1, 3), face_array)
    logger.debug(f"Loaded {path} (V={mesh.n_vertices}, F={mesh.n_faces})")
    return mesh


def save_mesh(mesh: TriangleMesh, path: Path, header: str | None = None) -> None:
    """Write a mesh as ASCII OBJ with 1-based indices.

    Coordinates are written with 17 significant digits so that reading the file
    back reproduces them exactly.
    """
    lines = [f"# {header}"] if header else []
    lines.append(f"# vertices: {mesh.n_vertices} faces: {mesh.n_faces}")
    lines.extend(f"v {x:.17g} {y:.17g} {z:.17g}" for x, y, z in mesh.vertices.tolist())
    lines.extend(f"f {i + 1} {j + 1} {k + 1}" for i, j, k in mesh.faces.tolist())
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
