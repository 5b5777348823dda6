"""Curvature fields sampled on regular grids."""

from typing import Any, Callable

import numpy as np
from attrs import define, field
from attrs.validators import gt

from .exceptions import GridShapeError


def _as_grid(value: Any) -> np.ndarray:
    array = np.array(value, dtype=np.float64, copy=True)
    array.setflags(write=False)
    return array


@define(frozen=True, eq=False)
class GridField:
    """Samples `K(s, t)` on a regular grid; axis 0 runs along `s`, axis 1 along `t`."""

    values: np.ndarray = field(converter=_as_grid)
    spacing: float = field(converter=float, validator=gt(0))

    @values.validator
    def _shape(self, _: Any, values: np.ndarray) -> None:
        if values.ndim != 2 or min(values.shape) < 3:
            raise GridShapeError(values.shape)

    @property
    def nx(self) -> int:
        return self.values.shape[0]

    @property
    def ny(self) -> int:
        return self.values.shape[1]

    @classmethod
    def from_function(
        cls,
        fn: Callable[[np.ndarray, np.ndarray], np.ndarray],
        origin: tuple[float, float],
        shape: tuple[int, int],
        spacing: float,
    ) -> "GridField":
        """Sample `fn(s, t)` on `shape` nodes starting at `origin`."""
        s = origin[0] + spacing * np.arange(shape[0])
        t = origin[1] + spacing * np.arange(shape[1])
        ss, tt = np.meshgrid(s, t, indexing="ij")
        return cls(fn(ss, tt), spacing)


def minimal_surface_residual(grid: GridField) -> np.ndarray:
    """Minimal-graph operator of the field at interior nodes, `(nx - 2, ny - 2)`.

    Evaluates `(1 + K_t^2) K_ss - 2 K_s K_t K_st + (1 + K_s^2) K_tt` with
    central differences. Affine fields give zero up to rounding.
    """
    k, h = grid.values, grid.spacing
    center = k[1:-1, 1:-1]
    k_s = (k[2:, 1:-1] - k[:-2, 1:-1]) / (2 * h)
    k_t = (k[1:-1, 2:] - k[1:-1, :-2]) / (2 * h)
    k_ss = (k[2:, 1:-1] - 2 * center + k[:-2, 1:-1]) / h**2
    k_tt = (k[1:-1, 2:] - 2 * center + k[1:-1, :-2]) / h**2
    k_st = (k[2:, 2:] - k[2:, :-2] - k[:-2, 2:] + k[:-2, :-2]) / (4 * h**2)
    return (1 + k_t**2) * k_ss - 2 * k_s * k_t * k_st + (1 + k_s**2) * k_tt
