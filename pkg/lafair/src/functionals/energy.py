"""Bending energy, J_LAS and curvature-plane residuals of triangle meshes."""

import numpy as np
from attrs import asdict, define
from scipy import sparse

from ..curvature import curvature_field, fit_curvature_planes, total_angle_deficit
from ..mesh import DegenerateFaceError, ScalarField, TriangleMesh
from .exceptions import RankDeficientFitError


def cotangent_weights(mesh: TriangleMesh) -> sparse.csr_array:
    """Symmetric matrix of `(cot a + cot b) / 2` for every edge.

    Raises:
    ------
        DegenerateFaceError: A face has zero area.

    """
    v = mesh.vertices
    rows, cols, weights = [], [], []
    for k in range(3):
        here, i, j = (mesh.faces[:, (k + m) % 3] for m in range(3))
        u, w = v[i] - v[here], v[j] - v[here]
        cross = np.linalg.norm(np.cross(u, w).reshape(-1, 3), axis=1)
        if (flat := np.flatnonzero(cross == 0)).size:
            raise DegenerateFaceError(int(flat[0]), f"Face {int(flat[0])} has no cotangent weight")
        cot = np.einsum("ij,ij->i", u, w) / cross
        rows.extend([i, j])
        cols.extend([j, i])
        weights.extend([0.5 * cot, 0.5 * cot])
    return sparse.csr_array(
        (np.concatenate(weights), (np.concatenate(rows), np.concatenate(cols))),
        shape=(mesh.n_vertices, mesh.n_vertices),
    )


def mean_curvature(mesh: TriangleMesh) -> np.ndarray:
    """Signed mean curvature from the cotangent mean-curvature normal.

    `|H| = |Lx| / 2` with `L` the cotangent Laplace-Beltrami operator over
    barycentric areas; positive where `Lx` points against the vertex normal
    (convex, for outward normals). Isolated vertices get NaN.
    """
    weights = cotangent_weights(mesh)
    area = curvature_field(mesh).area
    degree = weights.sum(axis=1)
    with np.errstate(invalid="ignore", divide="ignore"):
        laplacian = (weights @ mesh.vertices - degree[:, None] * mesh.vertices) / area[:, None]
    sign = np.sign(-np.einsum("ij,ij->i", laplacian, np.nan_to_num(mesh.vertex_normals)))
    return np.where(sign == 0, 1.0, sign) * 0.5 * np.linalg.norm(laplacian, axis=1)


def bending_energy(mesh: TriangleMesh) -> float:
    """`sum (4 H^2 - 2 K) A` over interior vertices."""
    field = curvature_field(mesh)
    interior = field.interior
    h = mean_curvature(mesh)[interior]
    return float(
        np.sum((4.0 * h**2 - 2.0 * field.gaussian[interior]) * field.area[interior])
    )


def face_gradients(mesh: TriangleMesh, values: np.ndarray) -> np.ndarray:
    """Gradient of the piecewise-linear interpolant of `values`, per face."""
    values = np.asarray(values, dtype=np.float64)
    v = mesh.vertices
    gradient = np.zeros((mesh.n_faces, 3))
    normal = mesh.face_normals
    for k in range(3):
        opposite = v[mesh.faces[:, (k + 2) % 3]] - v[mesh.faces[:, (k + 1) % 3]]
        gradient += values[mesh.faces[:, k], None] * np.cross(normal, opposite)
    if (flat := np.flatnonzero(mesh.face_areas <= 0)).size:
        raise DegenerateFaceError(int(flat[0]), f"Face {int(flat[0])} has zero area")
    return gradient / (2.0 * mesh.face_areas[:, None])


def discrete_J_LAS(mesh: TriangleMesh, field: ScalarField) -> float:  # noqa: N802
    """`sum area_f sqrt(1 + |grad K|_f^2)` over faces."""
    field.check(mesh)
    gradient = face_gradients(mesh, field.values)
    return float(np.sum(mesh.face_areas * np.sqrt(1.0 + np.sum(gradient**2, axis=1))))


def k_plane_residual(
    mesh: TriangleMesh,
    field: ScalarField,
    ring_depth: int,
    *,
    strict: bool = False,
) -> ScalarField:
    """Per-vertex RMS deviation of `field` from its fitted curvature plane.

    Samples are the non-boundary vertices within `ring_depth` edges. Where the
    fit is rank deficient, the residual is taken about the sample mean.

    Raises:
    ------
        RankDeficientFitError: With `strict`, an interior vertex cannot be fitted.

    """
    field.check(mesh)
    planes = fit_curvature_planes(mesh, field.values, ring_depth, usable=~mesh.boundary)
    if strict:
        interior = ~(mesh.boundary | mesh.isolated)
        if (bad := np.flatnonzero(planes.degenerate & interior)).size:
            raise RankDeficientFitError(int(bad[0]), int(planes.samples[bad[0]]))
    return ScalarField(planes.residual_rms)


def mean_k_plane_residual(mesh: TriangleMesh, ring_depth: int) -> float:
    """Mean plane-fit residual of the Gaussian curvature over interior vertices."""
    curvature = curvature_field(mesh)
    interior = curvature.interior
    if not interior.any():
        return 0.0
    values = np.where(curvature.is_isolated, 0.0, curvature.gaussian)
    residual = k_plane_residual(mesh, ScalarField(values), ring_depth)
    return float(residual.values[interior].mean())


@define(frozen=True)
class EnergyReport:
    """Energies and diagnostics of one mesh.

    Attributes
    ----------
        bending (float): Discrete bending energy.
        j_las (float): `discrete_J_LAS` of the Gaussian curvature.
        k_plane_residual (float): RMS over interior vertices of the per-vertex
            curvature-plane residual.
        area (float): Total surface area.
        total_angle_deficit (float): Sum of angle deficits.
        euler_characteristic (int): V - E + F.

    """

    bending: float
    j_las: float
    k_plane_residual: float
    area: float
    total_angle_deficit: float
    euler_characteristic: int

    def as_dict(self) -> dict:
        return asdict(self)


def energy_report(mesh: TriangleMesh, ring_depth: int = 2) -> EnergyReport:
    """Evaluate all energies of `mesh` with Gaussian curvature as the field."""
    curvature = curvature_field(mesh)
    interior = curvature.interior
    gaussian = ScalarField(np.where(curvature.is_isolated, 0.0, curvature.gaussian))
    residual = k_plane_residual(mesh, gaussian, ring_depth).values[interior]
    return EnergyReport(
        bending=bending_energy(mesh),
        j_las=discrete_J_LAS(mesh, gaussian),
        k_plane_residual=float(np.sqrt(np.mean(residual**2))) if residual.size else 0.0,
        area=mesh.surface_area,
        total_angle_deficit=total_angle_deficit(mesh),
        euler_characteristic=mesh.euler_characteristic,
    )
