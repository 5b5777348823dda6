"""Exceptions for log-aesthetic curve evaluation and analysis."""


class CurveError(Exception):
    """Base class for curve errors."""


class CurveDomainError(CurveError):
    """Exception raised when the radius of curvature is not positive and finite.

    Args:
    ----
        s (float): Arc length where the curve degenerates.
        reason (str): What degenerates.

    """

    def __init__(self, s: float, reason: str) -> None:
        self.s = s
        super().__init__(f"Curve is undefined at s={s:g}: {reason}")


class QuadratureError(CurveError):
    """Exception raised when adaptive quadrature does not converge."""

    def __init__(self, s: float, msg: str | None = None) -> None:
        self.s = s
        super().__init__(msg or f"Quadrature did not converge on [0, {s:g}]")


class PolylineError(CurveError):
    """Exception raised for polylines unfit for the requested analysis."""


class CurvatureUndefinedError(PolylineError):
    """Exception raised when three consecutive points are collinear."""

    def __init__(self, index: int) -> None:
        self.index = index
        super().__init__(f"Radius of curvature is undefined at point {index} (collinear points)")


class ConstantCurvatureError(PolylineError):
    """Exception raised when the logarithmic curvature graph is undefined."""

    def __init__(self, msg: str | None = None) -> None:
        super().__init__(msg or "constant curvature: the logarithmic curvature graph is undefined")


class NonMonotoneCurvatureError(PolylineError):
    """Exception raised when the radius of curvature is not strictly monotone."""

    def __init__(self, index: int) -> None:
        self.index = index
        super().__init__(f"Radius of curvature is not monotone (changes direction near point {index})")


class NoAffinityError(CurveError):
    """Exception raised when no scale factor maps the curve onto itself."""

    def __init__(self, b: float) -> None:
        self.b = b
        super().__init__(f"No scale factor a > 0 satisfies the self-affinity condition for b={b:g}")
