"""Jacobi filter steps and the iterated filter."""

import time
from logging import LoggerAdapter, getLogger
from typing import Any

import numpy as np
from attrs import asdict, define, field
from humanfriendly import format_timespan
from mpire import WorkerPool

from ..curvature import curvature_field, fit_curvature_planes
from ..functionals import mean_k_plane_residual
from ..mesh import TriangleMesh
from .config import BoundaryPolicy, FilterConfig
from .probe import RingProbe
from .solve import UpdateStatus, solve_offsets


@define(frozen=True)
class StepReport:
    """Outcome of one filter step.

    Attributes
    ----------
        iteration (int): 1-based step number.
        solved (int): Vertices moved to a solved offset.
        fallback (int): Vertices moved to their neighbor centroid.
        frozen (int): Vertices left in place (boundary or undefined normal).
        reverted (int): Moved vertices put back to undo flipped faces.
        max_displacement (float): Largest vertex displacement.
        rms_displacement (float): RMS vertex displacement.
        mean_k_residual (float): Mean curvature-plane residual after the step.
        elapsed_ms (float): Wall time of the step.

    """

    iteration: int
    solved: int
    fallback: int
    frozen: int
    reverted: int
    max_displacement: float
    rms_displacement: float
    mean_k_residual: float
    elapsed_ms: float


@define(frozen=True)
class FilterReport:
    """Aggregate of a filter run."""

    iterations: int
    threads: int
    initial_mean_k_residual: float
    steps: tuple[StepReport, ...] = field(converter=tuple)
    elapsed_ms: float

    @property
    def final_mean_k_residual(self) -> float:
        return self.steps[-1].mean_k_residual if self.steps else self.initial_mean_k_residual

    def as_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["final_mean_k_residual"] = self.final_mean_k_residual
        return data


@define(frozen=True, eq=False)
class _StepContext:
    mesh: TriangleMesh
    gaussian: np.ndarray
    usable: np.ndarray
    cfg: FilterConfig
    tol: float


def _solve_chunk(context: _StepContext, rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Offsets and statuses of `rows`, independent of how rows are chunked."""
    mesh, cfg = context.mesh, context.cfg
    if not rows.size:
        return np.zeros(0), np.zeros(0, dtype=np.int8)

    planes = fit_curvature_planes(
        mesh, context.gaussian, cfg.ring_depth, vertices=rows, usable=context.usable
    )
    centroid = mesh.neighbor_centroids[rows]
    normal = mesh.vertex_normals[rows]
    current = np.einsum("ij,ij->i", mesh.vertices[rows] - centroid, normal)
    return solve_offsets(
        RingProbe.build(mesh, rows, centroid, normal),
        planes.c2,
        side=np.where(current >= 0, 1.0, -1.0),
        initial_range=cfg.initial_range(mesh, rows),
        tol=context.tol,
        range_expansions=cfg.range_expansions,
        max_bisections=cfg.max_bisections,
    )


def _revert_flips(old: TriangleMesh, new: np.ndarray) -> np.ndarray:
    """Put back moved vertices until no face normal reverses; return their indices."""
    faces = old.faces
    displacement = np.linalg.norm(new - old.vertices, axis=1)
    reverted: list[np.ndarray] = []
    while True:
        a, b, c = (new[faces[:, k]] for k in range(3))
        orientation = np.einsum("ij,ij->i", np.cross(b - a, c - a), old.face_cross)
        moved = displacement[faces]
        flipped = (orientation <= 0) & (moved.max(axis=1) > 0)
        if not flipped.any():
            break
        worst = np.unique(faces[flipped, np.argmax(moved[flipped], axis=1)])
        new[worst] = old.vertices[worst]
        displacement[worst] = 0.0
        reverted.append(worst)
    return np.unique(np.concatenate(reverted)) if reverted else np.zeros(0, dtype=np.int64)


def _boundary_midpoints(mesh: TriangleMesh, vertices: np.ndarray) -> np.ndarray:
    ends = np.array([(r[0], r[-1]) for r in (mesh.topology.rings[v] for v in vertices)])
    return 0.5 * (mesh.vertices[ends[:, 0]] + mesh.vertices[ends[:, 1]])


def filter_step(
    mesh: TriangleMesh,
    cfg: FilterConfig = FilterConfig(),
    logger: LoggerAdapter = LoggerAdapter(getLogger(), {"label": "filter"}),
    *,
    iteration: int = 1,
) -> tuple[TriangleMesh, StepReport]:
    """Move every interior vertex towards the curvature plane of its neighbors.

    The Gaussian curvature is computed once from the input mesh; each interior
    vertex then gets its own plane fit (target `c2`) and offset solve, and
    all new positions are committed together. Faces whose normal reverses are
    repaired by reverting the most displaced of their vertices.
    """
    start = time.perf_counter()
    curvature = curvature_field(mesh)
    normals = mesh.vertex_normals
    movable = curvature.interior & np.isfinite(normals).all(axis=1)
    rows = np.flatnonzero(movable)

    context = _StepContext(
        mesh=mesh,
        gaussian=np.where(curvature.is_isolated, np.nan, curvature.gaussian),
        usable=~mesh.boundary,
        cfg=cfg,
        tol=cfg.tolerance(mesh),
    )

    if cfg.threads > 1 and rows.size > cfg.threads:
        chunks = np.array_split(rows, cfg.threads)
        with WorkerPool(
            n_jobs=cfg.threads,
            shared_objects=context,
            start_method="fork",
        ) as pool:
            results = pool.map(_solve_chunk, [(chunk,) for chunk in chunks])
        phi = np.concatenate([r[0] for r in results])
        status = np.concatenate([r[1] for r in results])
    else:
        phi, status = _solve_chunk(context, rows)

    positions = mesh.vertices.copy()
    positions[rows] = mesh.neighbor_centroids[rows] + phi[:, None] * normals[rows]

    frozen = mesh.n_vertices - rows.size
    if cfg.boundary_policy is BoundaryPolicy.LAPLACE:
        edge = np.flatnonzero(mesh.boundary)
        positions[edge] = _boundary_midpoints(mesh, edge)
        frozen -= edge.size

    reverted = _revert_flips(mesh, positions)
    moved = mesh.with_vertices(positions)
    displacement = np.linalg.norm(positions - mesh.vertices, axis=1)
    # reverted vertices count as neither solved nor fallback
    kept = ~np.isin(rows, reverted)

    report = StepReport(
        iteration=iteration,
        solved=int(np.sum(kept & (status == UpdateStatus.SOLVED))),
        fallback=int(np.sum(kept & (status == UpdateStatus.FALLBACK_CENTROID))),
        frozen=int(frozen),
        reverted=int(reverted.size),
        max_displacement=float(displacement.max(initial=0.0)),
        rms_displacement=float(np.sqrt(np.mean(displacement**2))) if displacement.size else 0.0,
        mean_k_residual=mean_k_plane_residual(moved, cfg.ring_depth),
        elapsed_ms=1e3 * (time.perf_counter() - start),
    )
    logger.debug(
        f"Step {iteration}: {report.solved} solved, {report.fallback} fallback, "
        f"{report.reverted} reverted, max displacement {report.max_displacement:.3g}"
    )
    return moved, report


def filter(  # pylint: disable=redefined-builtin
    mesh: TriangleMesh,
    cfg: FilterConfig = FilterConfig(),
    logger: LoggerAdapter = LoggerAdapter(getLogger(), {"label": "filter"}),
) -> tuple[TriangleMesh, FilterReport]:
    """Apply `cfg.iterations` filter steps."""
    start = time.perf_counter()
    initial = mean_k_plane_residual(mesh, cfg.ring_depth)
    steps: list[StepReport] = []
    for iteration in range(1, cfg.iterations + 1):
        mesh, step = filter_step(mesh, cfg, logger, iteration=iteration)
        steps.append(step)
        logger.info(
            f"Iteration {iteration}/{cfg.iterations}: mean plane residual "
            f"{step.mean_k_residual:.4g} ({format_timespan(step.elapsed_ms / 1e3)})"
        )
    elapsed = time.perf_counter() - start
    logger.info(f"Filtered {mesh.n_vertices} vertices in {format_timespan(elapsed)}")
    return mesh, FilterReport(
        iterations=cfg.iterations,
        threads=cfg.threads,
        initial_mean_k_residual=initial,
        steps=steps,
        elapsed_ms=1e3 * elapsed,
    )
