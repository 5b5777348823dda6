"""Log-aesthetic curve parameters and quadrature settings."""

from typing import Any, Mapping, Protocol

import numpy as np
from attrs import define, field
from attrs.validators import ge, gt, instance_of


class RadiusProfile(Protocol):
    """Anything that maps arc lengths to radii of curvature."""

    def __call__(self, s: np.ndarray) -> np.ndarray:
        ...


def _as_point(value: Any) -> tuple[float, float]:
    x, y = value
    return (float(x), float(y))


@define(frozen=True)
class LACurveParams:
    """Log-aesthetic curve segment.

    The radius of curvature is `(c0 s + c1) ** (1 / alpha)` for `alpha != 0`
    and `c0 exp(c1 s)` for `alpha == 0`. `c2` is the tangent angle at `s = 0`
    and `p0` the start point.
    """

    alpha: float = field(converter=float)
    c0: float = field(converter=float)
    c1: float = field(converter=float)
    c2: float = field(default=0.0, converter=float)
    p0: tuple[float, float] = field(default=(0.0, 0.0), converter=_as_point)

    @classmethod
    def clothoid(cls, c0: float, c1: float, **kwargs: Any) -> "LACurveParams":
        """Curvature `c0 s + c1` (slope -1)."""
        return cls(-1.0, c0, c1, **kwargs)

    @classmethod
    def nielsen_spiral(cls, c0: float, c1: float, **kwargs: Any) -> "LACurveParams":
        """Radius `c0 exp(c1 s)` (slope 0)."""
        return cls(0.0, c0, c1, **kwargs)

    @classmethod
    def logarithmic_spiral(cls, c0: float, c1: float, **kwargs: Any) -> "LACurveParams":
        """Radius `c0 s + c1` (slope 1)."""
        return cls(1.0, c0, c1, **kwargs)

    @classmethod
    def circle_involute(cls, c0: float, c1: float, **kwargs: Any) -> "LACurveParams":
        """Radius `sqrt(c0 s + c1)` (slope 2)."""
        return cls(2.0, c0, c1, **kwargs)

    @classmethod
    def circle(cls, radius: float, **kwargs: Any) -> "LACurveParams":
        return cls(0.0, radius, 0.0, **kwargs)


@define(frozen=True)
class QuadConfig:
    """Tolerances for adaptive Gauss-Kronrod quadrature."""

    epsabs: float = field(default=1e-10, converter=float, validator=gt(0))
    epsrel: float = field(default=1e-10, converter=float, validator=ge(0))
    limit: int = field(default=200, validator=[instance_of(int), gt(0)])

    @classmethod
    def from_config(cls, section: Mapping[str, Any]) -> "QuadConfig":
        """Build from the `quadrature` section of a resolved config."""
        return cls(**{k: v for k, v in section.items() if v is not None})
