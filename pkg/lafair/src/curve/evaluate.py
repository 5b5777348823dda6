"""Radius, tangent angle and points of log-aesthetic curves."""

import warnings
from typing import overload

import numpy as np
from scipy.integrate import IntegrationWarning, quad, quad_vec

from .exceptions import CurveDomainError, QuadratureError
from .params import LACurveParams, QuadConfig
from .polyline import Polyline2D


def _check_domain(params: LACurveParams, s: np.ndarray, *, flat_ok: bool = False) -> None:
    """Raise unless the radius of curvature is positive and finite on `s`.

    With `flat_ok`, zero curvature (an inflection of a curve with negative
    alpha, where the radius is infinite) is accepted.
    """
    if params.alpha == 0:
        if params.c0 <= 0:
            raise CurveDomainError(
                float(np.ravel(s)[0]), f"radius scale c0={params.c0:g} must be positive")
        return
    radicand = params.c0 * s + params.c1
    valid = radicand >= 0 if flat_ok and params.alpha < 0 else radicand > 0
    if (bad := np.flatnonzero(~valid)).size:
        raise CurveDomainError(
            float(np.ravel(s)[bad[0]]),
            f"c0 * s + c1 = {np.ravel(radicand)[bad[0]]:g} is not positive",
        )


@overload
def radius_of_curvature(params: LACurveParams, s: float) -> float:
    ...


@overload
def radius_of_curvature(params: LACurveParams, s: np.ndarray) -> np.ndarray:
    ...


def radius_of_curvature(params: LACurveParams, s: float | np.ndarray) -> float | np.ndarray:
    """Radius of curvature at arc length `s`.

    Raises:
    ------
        CurveDomainError: The radius is not positive and finite at `s`.

    """
    s_arr = np.asarray(s, dtype=np.float64)
    _check_domain(params, np.atleast_1d(s_arr))
    if params.alpha == 0:
        rho = params.c0 * np.exp(params.c1 * s_arr)
    else:
        rho = (params.c0 * s_arr + params.c1) ** (1.0 / params.alpha)
    if (bad := np.flatnonzero(~(np.isfinite(rho) & (rho > 0)))).size:
        raise CurveDomainError(float(np.ravel(s_arr)[bad[0]]), "radius is zero or overflows")
    return float(rho) if np.ndim(rho) == 0 else rho


def curvature_at(params: LACurveParams, s: float | np.ndarray) -> float | np.ndarray:
    """Curvature `1 / rho(s)`, zero at the inflection of a curve with negative alpha.

    Raises:
    ------
        CurveDomainError: The curvature is not finite at `s`.

    """
    s_arr = np.asarray(s, dtype=np.float64)
    _check_domain(params, np.atleast_1d(s_arr), flat_ok=True)
    if params.alpha == 0:
        kappa = np.exp(-params.c1 * s_arr) / params.c0
    else:
        kappa = (params.c0 * s_arr + params.c1) ** (-1.0 / params.alpha)
    return float(kappa) if np.ndim(kappa) == 0 else kappa


def _antiderivative(params: LACurveParams, s: np.ndarray) -> np.ndarray:
    """An antiderivative of `1 / rho(s)`."""
    alpha, c0, c1 = params.alpha, params.c0, params.c1
    if alpha == 0:
        if c1 == 0:
            return s / c0
        return -np.exp(-c1 * s) / (c0 * c1)
    if c0 == 0:
        return s / c1 ** (1.0 / alpha)
    u = c0 * s + c1
    if alpha == 1:
        return np.log(u) / c0
    return alpha / ((alpha - 1.0) * c0) * u ** ((alpha - 1.0) / alpha)


@overload
def tangent_angle(params: LACurveParams, s: float) -> float:
    ...


@overload
def tangent_angle(params: LACurveParams, s: np.ndarray) -> np.ndarray:
    ...


def tangent_angle(params: LACurveParams, s: float | np.ndarray) -> float | np.ndarray:
    """Tangent angle `theta(s)` with `theta(0) = c2` and `d theta / ds = 1 / rho`.

    Raises:
    ------
        CurveDomainError: The radius degenerates between 0 and `s`.

    """
    s_arr = np.asarray(s, dtype=np.float64)
    # rho^alpha is linear in s, so checking the endpoints covers [0, s]
    _check_domain(params, np.append(np.ravel(s_arr), 0.0), flat_ok=True)
    theta = params.c2 + _antiderivative(params, s_arr) - _antiderivative(params, np.float64(0.0))
    return float(theta) if np.ndim(theta) == 0 else theta


def _rotate(vector: np.ndarray, angle: float) -> np.ndarray:
    cos, sin = np.cos(angle), np.sin(angle)
    return np.stack([cos * vector[0] - sin * vector[1], sin * vector[0] + cos * vector[1]])


def evaluate_point(
    params: LACurveParams,
    s: float,
    quad_config: QuadConfig = QuadConfig(),
) -> np.ndarray:
    """Point at arc length `s`: `p0` plus the integral of the unit tangent.

    The tangent is integrated without the phase `c2`, and the result rotated
    by `c2`.

    Raises:
    ------
        CurveDomainError: The radius degenerates between 0 and `s`.
        QuadratureError: Adaptive quadrature does not reach the tolerance.

    """
    tangent_angle(params, s)
    if s == 0:
        return np.array(params.p0, dtype=np.float64)

    def phase(u: float) -> float:
        return tangent_angle(params, u) - params.c2

    integral = np.empty(2)
    with warnings.catch_warnings():
        warnings.simplefilter("error", IntegrationWarning)
        try:
            for axis, fn in enumerate((np.cos, np.sin)):
                integral[axis], _ = quad(
                    lambda u, fn=fn: fn(phase(u)),
                    0.0,
                    s,
                    epsabs=quad_config.epsabs,
                    epsrel=quad_config.epsrel,
                    limit=quad_config.limit,
                )
        except IntegrationWarning as exc:
            raise QuadratureError(s, f"Quadrature did not converge on [0, {s:g}]: {exc}") from exc

    return np.asarray(params.p0) + _rotate(integral, params.c2)


def sample_curve(
    params: LACurveParams,
    s_max: float,
    n: int,
    quad_config: QuadConfig = QuadConfig(),
) -> Polyline2D:
    """Sample `n` points at uniform arc-length spacing `s_max / (n - 1)`.

    Each segment between consecutive samples is integrated separately with a
    vector-valued adaptive quadrature, and the segments are accumulated.

    Raises:
    ------
        ValueError: `n` is below 2 or `s_max` is not positive.
        CurveDomainError: The radius degenerates on `[0, s_max]`.
        QuadratureError: Adaptive quadrature does not reach the tolerance.

    """
    if n < 2:
        raise ValueError(f"At least 2 samples are required, got {n}")
    if not s_max > 0:
        raise ValueError(f"s_max must be positive, got {s_max}")

    s = np.linspace(0.0, s_max, n)
    tangent_angle(params, s)
    start, step = s[:-1], np.diff(s)

    def segment(tau: float) -> np.ndarray:
        angle = tangent_angle(params, start + step * tau) - params.c2
        return np.stack([step * np.cos(angle), step * np.sin(angle)])

    increments, _, info = quad_vec(
        segment,
        0.0,
        1.0,
        epsabs=quad_config.epsabs,
        epsrel=quad_config.epsrel,
        limit=quad_config.limit,
        full_output=True,
    )
    if info.status != 0:
        raise QuadratureError(s_max, f"Quadrature did not converge on [0, {s_max:g}]: {info.message}")

    offsets = np.concatenate([np.zeros((2, 1)), np.cumsum(increments, axis=1)], axis=1)
    points = np.asarray(params.p0)[:, None] + _rotate(offsets, params.c2)
    return Polyline2D(points.T, s=s)
