"""Exceptions raised while evaluating surface functionals."""


class FunctionalError(Exception):
    """Base class for functional evaluation errors."""


class RankDeficientFitError(FunctionalError):
    """Exception raised when the tangent-plane projections of a neighborhood
    are (nearly) collinear, so a curvature plane cannot be fitted.
    """

    def __init__(self, vertex: int, samples: int) -> None:
        self.vertex = vertex
        self.samples = samples
        super().__init__(
            f"Curvature plane at vertex {vertex} is rank deficient ({samples} samples)"
        )


class GridShapeError(FunctionalError, ValueError):
    """Exception raised for grids too small for second differences."""

    def __init__(self, shape: tuple[int, ...]) -> None:
        self.shape = shape
        super().__init__(f"Grid of shape {shape} needs at least 3 x 3 nodes")


class NoSurfaceAffinityError(FunctionalError):
    """Exception raised when a curvature field cannot be mapped onto itself."""

    def __init__(self, b: float, d: float, reason: str) -> None:
        self.b = b
        self.d = d
        super().__init__(f"No self-affine map for b={b:g}, d={d:g}: {reason}")
