"""Self-affinity of Gaussian-curvature fields K(s, t)."""

from typing import Callable

import numpy as np
from scipy.interpolate import RectBivariateSpline
from scipy.optimize import brentq

from .exceptions import NoSurfaceAffinityError
from .grid import GridField

AFFINITY_SEARCH = np.logspace(-6, 6, 241)

CurvatureProfile = Callable[[np.ndarray, np.ndarray], np.ndarray]


def grid_profile(grid: GridField) -> CurvatureProfile:
    """Bicubic spline through the grid samples, NaN outside the grid.

    Parameters are measured from node `(0, 0)`.
    """
    s = grid.spacing * np.arange(grid.nx)
    t = grid.spacing * np.arange(grid.ny)
    spline = RectBivariateSpline(
        s, t, grid.values, kx=min(3, grid.nx - 1), ky=min(3, grid.ny - 1)
    )

    def profile(ss: np.ndarray, tt: np.ndarray) -> np.ndarray:
        ss, tt = np.broadcast_arrays(np.asarray(ss, float), np.asarray(tt, float))
        inside = (ss >= 0) & (ss <= s[-1]) & (tt >= 0) & (tt <= t[-1])
        values = np.full(ss.shape, np.nan)
        if inside.any():
            values[inside] = spline.ev(ss[inside], tt[inside])
        return values

    return profile


def _solve_scale(mismatch: Callable[[float], float], b: float, d: float) -> float:
    values = np.array([mismatch(x) for x in AFFINITY_SEARCH])
    if (exact := np.flatnonzero(values == 0)).size:
        return float(AFFINITY_SEARCH[exact[0]])
    signs = np.sign(values)
    change = np.flatnonzero(
        np.isfinite(values[:-1]) & np.isfinite(values[1:]) & (signs[:-1] != signs[1:])
    )
    if not change.size:
        raise NoSurfaceAffinityError(b, d, "no scale factor in [1e-6, 1e6]")
    lo, hi = AFFINITY_SEARCH[change[0]], AFFINITY_SEARCH[change[0] + 1]
    return float(brentq(mismatch, lo, hi, xtol=1e-14, rtol=4 * np.finfo(float).eps))


def k_self_affinity_residual(
    field: GridField | CurvatureProfile,
    b: float,
    d: float,
    samples: int,
    *,
    extent: tuple[float, float] | None = None,
) -> float:
    """Deviation of a curvature field from self-affinity.

    With `f = K(0, 0) / K(b, d)`, the scales `a, c > 0` are chosen so that
    `K(s_max, 0) / K(a s_max + b, d) = f` and `K(0, t_max) / K(b, c t_max + d) = f`.
    The result is the largest relative deviation
    `|K(s, t) / K(a s + b, c t + d) - f| / |f|` over `samples x samples`
    equally spaced points of `[0, s_max] x [0, t_max]`.

    Separable power fields `(c0 s + c1)^(1/alpha) (c2 t + c3)^(1/beta)`,
    which include the single-parameter fields `(c0 s + c1)^(1/alpha)`, and
    constant fields have zero residual for every `b` and `d`.

    Args:
    ----
        field: Sampled field, interpolated by `grid_profile`, or a function `K(s, t)`.
        b: Shift along `s`.
        d: Shift along `t`.
        samples: Points per axis.
        extent: `(s_max, t_max)`. Defaults to half the grid for a `GridField`
            and to `(1, 1)` for a function.

    Raises:
    ------
        ValueError: `b` or `d` is not positive, or `samples` is below 2.
        NoSurfaceAffinityError: `f` is zero or undefined, no scale satisfies the
            condition, or a mapped point leaves the grid.

    """
    if not (b > 0 and d > 0):
        raise ValueError(f"b and d must be positive, got b={b}, d={d}")
    if samples < 2:
        raise ValueError(f"At least 2 samples are required, got {samples}")

    if isinstance(field, GridField):
        k = grid_profile(field)
        span = field.spacing * (field.nx - 1), field.spacing * (field.ny - 1)
        s_max, t_max = extent or (span[0] / 2, span[1] / 2)
    else:
        k = field
        s_max, t_max = extent or (1.0, 1.0)

    def at(s: float, t: float) -> float:
        with np.errstate(all="ignore"):
            return float(np.asarray(k(np.asarray(s), np.asarray(t))))

    def ratio(numerator: float, denominator: float) -> float:
        with np.errstate(all="ignore"):
            value = np.float64(numerator) / np.float64(denominator)
        return float(value) if np.isfinite(value) else np.nan

    f = ratio(at(0.0, 0.0), at(b, d))
    if not np.isfinite(f) or f == 0:
        raise NoSurfaceAffinityError(b, d, f"K(0, 0) / K(b, d) = {f}")

    s_end, t_end = at(s_max, 0.0), at(0.0, t_max)
    a = _solve_scale(lambda x: ratio(s_end, at(x * s_max + b, d)) - f, b, d)
    c = _solve_scale(lambda x: ratio(t_end, at(b, x * t_max + d)) - f, b, d)

    ss, tt = np.meshgrid(
        np.linspace(0.0, s_max, samples), np.linspace(0.0, t_max, samples), indexing="ij"
    )
    with np.errstate(all="ignore"):
        deviation = np.abs(k(ss, tt) / k(a * ss + b, c * tt + d) - f) / abs(f)
    if not np.isfinite(deviation).all():
        raise NoSurfaceAffinityError(b, d, f"samples map outside the field (a={a:g}, c={c:g})")
    return float(deviation.max())
