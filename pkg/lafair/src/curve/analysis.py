"""Logarithmic curvature graph, self-affinity and the J_LAC functional."""

from typing import Callable

import numpy as np
from scipy.optimize import brentq

from .evaluate import radius_of_curvature
from .exceptions import (
    ConstantCurvatureError,
    CurveError,
    CurvatureUndefinedError,
    NoAffinityError,
    NonMonotoneCurvatureError,
    PolylineError,
)
from .params import LACurveParams, RadiusProfile
from .polyline import Polyline2D

MIN_LCG_POINTS = 10
CONSTANT_RADIUS_TOLERANCE = 1e-6
AFFINITY_SEARCH = np.logspace(-6, 6, 241)


def _interior_radius(curve: Polyline2D) -> tuple[np.ndarray, np.ndarray]:
    """Arc length and finite radius of curvature at interior points."""
    if len(curve) < 3:
        raise PolylineError(f"At least 3 points are required, got {len(curve)}")
    radius = curve.radius
    if (collinear := np.flatnonzero(~np.isfinite(radius))).size:
        raise CurvatureUndefinedError(int(collinear[0]) + 1)
    return curve.arc_length[1:-1], radius


def lcg_slope(curve: Polyline2D) -> float:
    """Slope of the logarithmic curvature graph of a sampled curve.

    Fits `log(rho |ds/drho|)` against `log(rho)` by least squares, with
    `ds/drho` from central differences. The points next to either end are
    discarded.

    Raises:
    ------
        PolylineError: Fewer than 10 points.
        CurvatureUndefinedError: Three consecutive points are collinear.
        ConstantCurvatureError: The radius of curvature is (nearly) constant.
        NonMonotoneCurvatureError: The radius does not change monotonically.

    """
    if len(curve) < MIN_LCG_POINTS:
        raise PolylineError(f"At least {MIN_LCG_POINTS} points are required, got {len(curve)}")
    s, rho = _interior_radius(curve)

    if np.ptp(rho) <= CONSTANT_RADIUS_TOLERANCE * rho.max():
        raise ConstantCurvatureError()

    drho = rho[2:] - rho[:-2]
    ds = s[2:] - s[:-2]
    direction = np.sign(drho)
    if (flip := np.flatnonzero(direction != direction[0])).size or direction[0] == 0:
        raise NonMonotoneCurvatureError(int(flip[0]) + 2 if flip.size else 2)

    rho_c = rho[1:-1]
    y = np.log(rho_c * np.abs(ds / drho))
    x = np.log(rho_c)
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def self_affinity_residual(
    curve: LACurveParams | RadiusProfile,
    b: float,
    samples: int,
    *,
    s_max: float = 1.0,
) -> float:
    """Deviation from self-affinity of a radius-of-curvature profile.

    With `f = rho(0) / rho(b)`, finds the scale `a > 0` for which
    `rho(s) / rho(a s + b) = f` holds at `s = s_max`, and returns the largest
    relative deviation `|rho(s) / rho(a s + b) - f| / f` over `samples`
    equally spaced `s` in `[0, s_max]`. Log-aesthetic curves have zero
    residual for every `b`.

    Raises:
    ------
        ValueError: `b` is not positive or `samples` is below 2.
        NoAffinityError: No `a` in `[1e-6, 1e6]` satisfies the condition.

    """
    if not b > 0:
        raise ValueError(f"b must be positive, got {b}")
    if samples < 2:
        raise ValueError(f"At least 2 samples are required, got {samples}")

    rho: Callable[[np.ndarray], np.ndarray]
    if isinstance(curve, LACurveParams):
        rho = lambda s: np.asarray(radius_of_curvature(curve, s))  # noqa: E731
    else:
        rho = lambda s: np.asarray(curve(np.asarray(s, dtype=np.float64)))  # noqa: E731

    ratio = float(rho(np.float64(0.0)) / rho(np.float64(b)))
    probe = float(rho(np.float64(s_max)))

    def mismatch(a: float) -> float:
        try:
            return probe / float(rho(np.float64(a * s_max + b))) - ratio
        except CurveError:
            return np.nan

    values = np.array([mismatch(a) for a in AFFINITY_SEARCH])
    if (exact := np.flatnonzero(values == 0)).size:
        a = float(AFFINITY_SEARCH[exact[0]])
    else:
        signs = np.sign(values)
        change = np.flatnonzero(
            np.isfinite(values[:-1]) & np.isfinite(values[1:]) & (signs[:-1] != signs[1:])
        )
        if not change.size:
            raise NoAffinityError(b)
        lo, hi = AFFINITY_SEARCH[change[0]], AFFINITY_SEARCH[change[0] + 1]
        a = float(brentq(mismatch, lo, hi, xtol=1e-14, rtol=4 * np.finfo(float).eps))

    s = np.linspace(0.0, s_max, samples)
    deviation = np.abs(rho(s) / rho(a * s + b) - ratio) / ratio
    return float(deviation.max())


def sigma_profile_length(s: np.ndarray, sigma: np.ndarray) -> float:
    """Length of the polyline `(s_i, sigma_i)` in the s-sigma plane.

    Equals the trapezoidal sum of `sqrt(1 + (d sigma / ds)^2) ds`.
    """
    s, sigma = np.asarray(s, dtype=np.float64), np.asarray(sigma, dtype=np.float64)
    return float(np.hypot(np.diff(s), np.diff(sigma)).sum())


def discrete_J_LAC(curve: Polyline2D, alpha: float) -> float:  # noqa: N802
    """Discrete `J_LAC`: the s-sigma profile length with `sigma = rho^alpha`,
    over the interior points of the polyline.

    Raises:
    ------
        CurvatureUndefinedError: Three consecutive points are collinear.

    """
    s, rho = _interior_radius(curve)
    return sigma_profile_length(s, rho**alpha)
