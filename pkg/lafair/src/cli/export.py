"""CSV, PLY and JSON writers for command outputs."""

import csv
import json
from pathlib import Path
from typing import Any, Mapping

import numpy as np

from lafair.src.curvature import CurvatureField
from lafair.src.curve import LACurveParams, Polyline2D, curvature_at, tangent_angle
from lafair.src.mesh import TriangleMesh

CURVATURE_COLUMNS = ("vertex_id", "x", "y", "z", "area", "deficit", "K", "is_boundary")
CURVE_COLUMNS = ("s", "x", "y", "theta", "kappa")
REPORT_SCHEMA_VERSION = 1

# Consistency constant of the median absolute deviation for normal data
MAD_SCALE = 1.4826
NAN_COLOR = (128, 128, 128)


def _number(value: float) -> str:
    return f"{value:.17g}"


def _write_csv(path: Path, header: tuple[str, ...], rows: Any) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def write_curvature_csv(path: Path, mesh: TriangleMesh, field: CurvatureField) -> None:
    """One row per vertex: position, mixed area, angle deficit, K, boundary flag."""
    _write_csv(
        path,
        CURVATURE_COLUMNS,
        (
            (
                vertex,
                *map(_number, mesh.vertices[vertex]),
                _number(field.area[vertex]),
                _number(field.deficit[vertex]),
                _number(field.gaussian[vertex]),
                int(field.is_boundary[vertex]),
            )
            for vertex in range(mesh.n_vertices)
        ),
    )


def write_curve_csv(path: Path, params: LACurveParams, curve: Polyline2D) -> None:
    """One row per sample: arc length, point, tangent angle and curvature."""
    s = np.asarray(curve.s)
    theta = tangent_angle(params, s)
    kappa = curvature_at(params, s)
    _write_csv(
        path,
        CURVE_COLUMNS,
        (
            tuple(map(_number, row))
            for row in zip(s, curve.points[:, 0], curve.points[:, 1], theta, kappa)
        ),
    )


def diverging_colors(values: np.ndarray) -> np.ndarray:
    """Blue-white-red colors, symmetric about zero.

    Values are scaled by three robust standard deviations
    (`3 * 1.4826 * MAD`) and clamped to `[-1, 1]`; NaN is drawn gray.
    """
    values = np.asarray(values, dtype=np.float64)
    finite = values[np.isfinite(values)]
    limit = 0.0
    if finite.size:
        limit = 3.0 * MAD_SCALE * float(np.median(np.abs(finite - np.median(finite))))
        if limit == 0.0:
            limit = float(np.max(np.abs(finite)))
    t = np.clip(np.nan_to_num(values / limit if limit > 0 else np.zeros_like(values)), -1, 1)

    rgb = np.ones((len(values), 3))
    cold, hot = t < 0, t > 0
    rgb[cold, 0] = rgb[cold, 1] = 1.0 + t[cold]
    rgb[hot, 1] = rgb[hot, 2] = 1.0 - t[hot]
    colors = np.round(255.0 * rgb).astype(np.uint8)
    colors[~np.isfinite(values)] = NAN_COLOR
    return colors


def write_curvature_ply(path: Path, mesh: TriangleMesh, values: np.ndarray) -> None:
    """Binary little-endian PLY with float64 positions and uint8 colors."""
    colors = diverging_colors(values)
    header = "\n".join(
        [
            "ply",
            "format binary_little_endian 1.0",
            "comment vertex colors: gaussian curvature, blue < 0 < red",
            f"element vertex {mesh.n_vertices}",
            "property double x",
            "property double y",
            "property double z",
            "property uchar red",
            "property uchar green",
            "property uchar blue",
            f"element face {mesh.n_faces}",
            "property list uchar int vertex_indices",
            "end_header",
        ]
    )
    vertices = np.empty(
        mesh.n_vertices,
        dtype=[
            ("x", "<f8"),
            ("y", "<f8"),
            ("z", "<f8"),
            ("red", "u1"),
            ("green", "u1"),
            ("blue", "u1"),
        ],
    )
    vertices["x"], vertices["y"], vertices["z"] = mesh.vertices.T
    vertices["red"], vertices["green"], vertices["blue"] = colors.T

    faces = np.empty(mesh.n_faces, dtype=[("count", "u1"), ("indices", "<i4", (3,))])
    faces["count"] = 3
    faces["indices"] = mesh.faces

    with open(path, "wb") as handle:
        handle.write(f"{header}\n".encode("ascii"))
        handle.write(vertices.tobytes())
        handle.write(faces.tobytes())


def _json_default(value: Any) -> Any:
    match value:
        case np.generic():
            return value.item()
        case np.ndarray():
            return value.tolist()
        case Path():
            return str(value)
        case _:
            raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def write_json(path: Path, data: Mapping[str, Any]) -> None:
    """Write a versioned JSON report."""
    payload = {"schema_version": REPORT_SCHEMA_VERSION, **data}
    path.write_text(
        json.dumps(payload, indent=2, default=_json_default) + "\n",
        encoding="utf-8",
    )
