"""Planar polylines with discrete arc length and curvature."""

from functools import cached_property
from typing import Any

import numpy as np
from attrs import define, field


def _as_points(value: Any) -> np.ndarray:
    points = np.array(value, dtype=np.float64, copy=True).reshape(-1, 2)
    points.setflags(write=False)
    return points


def _as_optional_array(value: Any) -> np.ndarray | None:
    if value is None:
        return None
    array = np.array(value, dtype=np.float64, copy=True).reshape(-1)
    array.setflags(write=False)
    return array


@define(frozen=True, slots=False, eq=False)
class Polyline2D:
    """Ordered 2D points, optionally with the arc lengths they were sampled at.

    Discrete quantities use chord lengths for arc length and the
    circumscribed circle of consecutive point triples for curvature.
    """

    points: np.ndarray = field(converter=_as_points)
    s: np.ndarray | None = field(default=None, converter=_as_optional_array, kw_only=True)

    @points.validator
    def _distinct(self, _: Any, points: np.ndarray) -> None:
        if len(points) < 2:
            raise ValueError(f"A polyline needs at least 2 points, got {len(points)}")
        if (bad := np.flatnonzero(self._chords(points) == 0)).size:
            raise ValueError(f"Points {bad[0]} and {bad[0] + 1} coincide")

    @s.validator
    def _aligned(self, _: Any, s: np.ndarray | None) -> None:
        if s is not None and len(s) != len(self.points):
            raise ValueError(f"Expected {len(self.points)} arc lengths, got {len(s)}")

    @staticmethod
    def _chords(points: np.ndarray) -> np.ndarray:
        return np.linalg.norm(np.diff(points, axis=0), axis=1)

    def __len__(self) -> int:
        return len(self.points)

    @cached_property
    def chord_lengths(self) -> np.ndarray:
        return self._chords(self.points)

    @cached_property
    def arc_length(self) -> np.ndarray:
        """Cumulative chord length at each point, starting at 0."""
        return np.concatenate([[0.0], np.cumsum(self.chord_lengths)])

    @property
    def length(self) -> float:
        return float(self.arc_length[-1])

    @cached_property
    def tangent_angles(self) -> np.ndarray:
        """Direction of each chord."""
        d = np.diff(self.points, axis=0)
        return np.arctan2(d[:, 1], d[:, 0])

    @cached_property
    def curvature(self) -> np.ndarray:
        """Signed curvature at the interior points (positive turning left)."""
        a = self.points[1:-1] - self.points[:-2]
        b = self.points[2:] - self.points[1:-1]
        c = self.points[2:] - self.points[:-2]
        cross = a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]
        lengths = (
            np.linalg.norm(a, axis=1) * np.linalg.norm(b, axis=1) * np.linalg.norm(c, axis=1)
        )
        # |cross| is twice the triangle area; kappa = 4 area / (|a||b||c|)
        return 2.0 * cross / lengths

    @cached_property
    def radius(self) -> np.ndarray:
        """Radius of curvature at the interior points (inf where collinear)."""
        with np.errstate(divide="ignore"):
            return 1.0 / np.abs(self.curvature)
