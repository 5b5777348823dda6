"""Per-vertex scalar fields."""

from typing import Any

import numpy as np
from attrs import define, field

from .mesh import TriangleMesh


def _as_values(value: Any) -> np.ndarray:
    array = np.array(value, dtype=np.float64, copy=True).reshape(-1)
    array.setflags(write=False)
    return array


@define(frozen=True, eq=False)
class ScalarField:
    """One finite real value per mesh vertex."""

    values: np.ndarray = field(converter=_as_values)

    @values.validator
    def _finite(self, _: Any, value: np.ndarray) -> None:
        if not np.isfinite(value).all():
            bad = int(np.flatnonzero(~np.isfinite(value))[0])
            raise ValueError(f"Field value at vertex {bad} is not finite")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: Any) -> Any:
        return self.values[index]

    def check(self, mesh: TriangleMesh) -> "ScalarField":
        """Return self, or raise if the field does not match the mesh."""
        if len(self) != mesh.n_vertices:
            raise ValueError(
                f"Field has {len(self)} values but the mesh has {mesh.n_vertices} vertices"
            )
        return self
