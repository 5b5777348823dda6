"""Exceptions for the lafair command-line interface."""

from pathlib import Path


class ManifestError(Exception):
    """A run manifest cannot be read or replayed.

    Args:
    ----
        path (Path): The manifest file.
        reason (str): What is wrong with it.

    """

    def __init__(self, path: Path, reason: str, msg: str | None = None) -> None:
        self.path = path
        self.reason = reason
        super().__init__(msg or f"Manifest {path}: {reason}")


class DigestMismatchError(ManifestError):
    """A replayed output differs from the recorded one."""

    def __init__(
        self,
        path: Path,
        output: str,
        expected: str,
        actual: str | None,
        msg: str | None = None,
    ) -> None:
        self.output = output
        self.expected = expected
        self.actual = actual
        super().__init__(
            path,
            f"'{output}' digest {actual or 'missing'} does not match recorded {expected}",
            msg,
        )


class VertexCountMismatchError(Exception):
    """A mesh and its reference have different vertex counts."""

    def __init__(self, n_mesh: int, n_reference: int, msg: str | None = None) -> None:
        self.n_mesh = n_mesh
        self.n_reference = n_reference
        super().__init__(
            msg
            or f"Mesh has {n_mesh} vertices but the reference has {n_reference}"
            " (vertices are matched by index)"
        )


class OutputValidationError(Exception):
    """A written output does not read back as expected."""

    def __init__(self, path: Path, reason: str, msg: str | None = None) -> None:
        self.path = path
        super().__init__(msg or f"Output {path} is invalid: {reason}")
