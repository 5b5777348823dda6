"""Configuration errors."""

from typing import Sequence


class ConfigError(Exception):
    """A configuration does not satisfy its schema.

    Args:
    ----
        errors (Sequence[str]): One message per violated constraint.
        msg (str | None): Overrides the default message.

    """

    errors: tuple[str, ...]

    def __init__(self, errors: Sequence[str], msg: str | None = None) -> None:
        self.errors = tuple(errors)
        super().__init__(msg or f"Invalid configuration: {'; '.join(self.errors)}")
