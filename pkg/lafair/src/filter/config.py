"""Filter configuration."""

from enum import StrEnum
from typing import Any, Mapping

import numpy as np
from attrs import define, field
from attrs.validators import ge, gt, instance_of, optional

from ..mesh import TriangleMesh

CURVATURE_TOLERANCE = 1e-6


class BoundaryPolicy(StrEnum):
    FREEZE = "freeze"
    LAPLACE = "laplace"


def _optional_float(value: Any) -> float | None:
    return None if value is None else float(value)


@define(frozen=True)
class FilterConfig:
    """Settings of the surface filter.

    Attributes
    ----------
        iterations (int): Number of filter steps.
        ring_depth (int): Neighborhood depth of the curvature-plane fit.
        bisect_tol (float | None): Accepted curvature error. Defaults to
            `1e-6 / mean_edge_length**2` of the mesh being filtered.
        phi_range_init (float | None): Initial half-width of the offset
            bracket. Defaults to the mean incident edge length per vertex.
        range_expansions (int): Bracket doublings before falling back to the
            neighbor centroid.
        max_bisections (int): Bisection steps before falling back.
        boundary_policy (BoundaryPolicy): `freeze` keeps boundary vertices in
            place, `laplace` moves them to the midpoint of their boundary
            neighbors.
        threads (int): Worker processes for the per-vertex solves.

    """

    iterations: int = field(default=10, validator=[instance_of(int), ge(0)])
    ring_depth: int = field(default=2, validator=[instance_of(int), ge(1)])
    bisect_tol: float | None = field(
        default=None, converter=_optional_float, validator=optional(gt(0))
    )
    phi_range_init: float | None = field(
        default=None, converter=_optional_float, validator=optional(gt(0))
    )
    range_expansions: int = field(default=8, validator=[instance_of(int), ge(0)])
    max_bisections: int = field(default=60, validator=[instance_of(int), ge(1)])
    boundary_policy: BoundaryPolicy = field(
        default=BoundaryPolicy.FREEZE, converter=BoundaryPolicy
    )
    threads: int = field(default=1, validator=[instance_of(int), ge(1)])

    @classmethod
    def from_config(cls, section: Mapping[str, Any]) -> "FilterConfig":
        """Build from the `filter` section of a resolved config.

        Unset (None) values fall back to the defaults above.
        """
        known = {a.name for a in cls.__attrs_attrs__}  # type: ignore[attr-defined]
        return cls(**{k: v for k, v in section.items() if k in known and v is not None})

    def tolerance(self, mesh: TriangleMesh) -> float:
        if self.bisect_tol is not None:
            return self.bisect_tol
        return CURVATURE_TOLERANCE / mesh.mean_edge_length**2

    def initial_range(self, mesh: TriangleMesh, vertices: np.ndarray) -> np.ndarray:
        if self.phi_range_init is not None:
            return np.full(len(vertices), self.phi_range_init)
        return mesh.incident_edge_length[vertices].copy()
