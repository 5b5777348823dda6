"""Bracketed bisection for the normal offsets of many vertices at once."""

from enum import IntEnum

import numpy as np

from .probe import RingProbe


class UpdateStatus(IntEnum):
    SOLVED = 0
    FALLBACK_CENTROID = 1
    FROZEN = 2
    PENDING = 3

    def __str__(self) -> str:
        return self.name.lower()


def solve_offsets(
    probe: RingProbe,
    target: np.ndarray,
    *,
    side: np.ndarray,
    initial_range: np.ndarray,
    tol: float | np.ndarray,
    range_expansions: int,
    max_bisections: int,
) -> tuple[np.ndarray, np.ndarray]:
    """Find offsets whose ring curvature is within `tol` of `target`.

    Per row, `phi = 0` is accepted when it already satisfies the tolerance.
    Otherwise a sign change of `K(phi) - target` is searched on `[0, side r]`
    and then `[-side r, 0]`, doubling `r` from `initial_range` up to
    `range_expansions` times, and the bracket is bisected. Rows without a
    bracket or a converged bisection fall back to `phi = 0`.

    Args:
    ----
        probe (RingProbe): Rings of the rows.
        target (np.ndarray): `(B,)` target curvatures.
        side (np.ndarray): `(B,)` +1 or -1, the half-line searched first.
        initial_range (np.ndarray): `(B,)` positive initial half-widths.
        tol (float | np.ndarray): Accepted absolute curvature error.
        range_expansions (int): Bracket doublings.
        max_bisections (int): Bisection steps.

    Returns:
    -------
        tuple[np.ndarray, np.ndarray]: `(B,)` offsets and `(B,)` int8 status
            codes (`UpdateStatus.SOLVED` or `UpdateStatus.FALLBACK_CENTROID`).

    """
    size = len(probe)
    target = np.asarray(target, dtype=np.float64)
    tol = np.broadcast_to(np.asarray(tol, dtype=np.float64), (size,))
    side = np.where(np.asarray(side) < 0, -1.0, 1.0)

    phi = np.zeros(size)
    status = np.full(size, UpdateStatus.FALLBACK_CENTROID, dtype=np.int8)

    at_zero = probe.curvature(np.zeros(size)) - target
    start_sign = np.sign(at_zero)
    done = np.abs(at_zero) < tol
    status[done] = UpdateStatus.SOLVED

    far_end = np.zeros(size)
    bracketed = np.zeros(size, dtype=bool)
    pending = np.flatnonzero(~done & np.isfinite(at_zero))
    radius = np.asarray(initial_range, dtype=np.float64).copy()

    for _ in range(range_expansions + 1):
        if not pending.size:
            break
        for direction in (1.0, -1.0):
            if not pending.size:
                break
            end = direction * side[pending] * radius[pending]
            value = probe.curvature(end, pending) - target[pending]
            hit = np.abs(value) < tol[pending]
            phi[pending[hit]] = end[hit]
            status[pending[hit]] = UpdateStatus.SOLVED
            crossed = ~hit & np.isfinite(value) & (np.sign(value) != start_sign[pending])
            far_end[pending[crossed]] = end[crossed]
            bracketed[pending[crossed]] = True
            pending = pending[~(hit | crossed)]
        radius[pending] *= 2.0

    active = np.flatnonzero(bracketed)
    near_end = np.zeros(size)
    for _ in range(max_bisections):
        if not active.size:
            break
        middle = 0.5 * (near_end[active] + far_end[active])
        value = probe.curvature(middle, active) - target[active]
        hit = np.abs(value) < tol[active]
        phi[active[hit]] = middle[hit]
        status[active[hit]] = UpdateStatus.SOLVED
        same = np.sign(value) == start_sign[active]
        near_end[active] = np.where(same, middle, near_end[active])
        far_end[active] = np.where(same, far_end[active], middle)
        active = active[~hit & np.isfinite(value)]

    return phi, status
