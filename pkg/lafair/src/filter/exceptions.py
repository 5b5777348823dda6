"""Exceptions raised by the log-aesthetic surface filter."""


class FilterError(Exception):
    """Base class for filter errors."""


class DegenerateRingError(FilterError):
    """Exception raised when the one-ring of a probed vertex collapses."""

    def __init__(self, vertex: int, phi: float, msg: str | None = None) -> None:
        self.vertex = vertex
        self.phi = phi
        super().__init__(msg or f"One-ring of vertex {vertex} is degenerate at offset {phi:g}")
