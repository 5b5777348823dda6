"""lafair logging module."""

from .util import (
    ExternalFilter,
    handle_warnings,
    setup_console_handler,
    setup_file_handler,
)

__all__ = [
    "ExternalFilter",
    "handle_warnings",
    "setup_console_handler",
    "setup_file_handler",
]
