"""lafair command-line interface."""

from .cli import SCHEMA, handle_errors, main
from .exceptions import (
    DigestMismatchError,
    ManifestError,
    OutputValidationError,
    VertexCountMismatchError,
)
from .export import diverging_colors, write_curvature_csv, write_curvature_ply, write_curve_csv
from .manifest import RunManifest, file_digest, manifest_path

__all__ = [
    "SCHEMA",
    "DigestMismatchError",
    "ManifestError",
    "OutputValidationError",
    "RunManifest",
    "VertexCountMismatchError",
    "diverging_colors",
    "file_digest",
    "handle_errors",
    "main",
    "manifest_path",
    "write_curvature_csv",
    "write_curvature_ply",
    "write_curve_csv",
]
