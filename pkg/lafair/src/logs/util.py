"""Logging utilities"""

import inspect
import logging
import warnings
from functools import cache
from pathlib import Path
from typing import Any, Callable

from attrs import define
from rich.logging import RichHandler

CONSOLE_FORMAT = "%(label)s: %(message)s"
FILE_FORMAT = "%(asctime)s : %(levelname)s : %(label)s : %(message)s"

# numpy reports invalid and divide-by-zero operations as RuntimeWarning
ROUTED_WARNINGS: tuple[type[Warning], ...] = (UserWarning, RuntimeWarning)


@define
class ExternalFilter(logging.Filter):
    """Drop log records that do not originate below one of the given roots."""

    internal_roots: tuple[Path, ...]

    def filter(self, record: logging.LogRecord) -> bool:
        return self._is_internal(Path(record.pathname), self.internal_roots)

    @staticmethod
    @cache
    def _is_internal(path: Path, roots: tuple[Path, ...]) -> bool:
        return any(path.is_relative_to(r) for r in roots)


def _showwarning(fallback: Callable) -> Callable:
    def inner(
        message: Warning | str,
        category: type[Warning],
        *args: Any,
        **kwargs: Any,
    ) -> None:
        if not issubclass(category, ROUTED_WARNINGS):
            fallback(message, category, *args, **kwargs)
            return

        logger = logging.getLogger()
        caller = inspect.stack()[2]
        logger.handle(
            logger.makeRecord(
                name=logger.name,
                level=logging.WARNING,
                fn=caller.filename,
                lno=caller.lineno,
                msg=message.args[0] if isinstance(message, Warning) else message,
                args=(),
                exc_info=None,
                func=caller.function,
                extra={"label": category.__name__},
            )
        )

    inner.routed = True  # type: ignore[attr-defined]
    return inner


def handle_warnings() -> None:
    """Route user and numerical warnings through the root logger, labelled with
    the warning category. Repeated calls install the hook once.
    """
    if not getattr(warnings.showwarning, "routed", False):
        warnings.showwarning = _showwarning(warnings.showwarning)


def _formatter(fmt: str, label: str, datefmt: str | None = None) -> logging.Formatter:
    return logging.Formatter(fmt, datefmt=datefmt, defaults={"label": label})


def setup_console_handler(
    logger: logging.Logger = logging.getLogger(),
    filters: tuple[logging.Filter, ...] = (),
    level: int | str = logging.INFO,
) -> RichHandler:
    """Replace the handlers of a logger with a single rich console handler.

    Records are formatted as `<label>: <message>`, where the label is
    supplied by a `LoggerAdapter` and defaults to `lafair`.
    """
    console_handler = RichHandler(show_path=False)
    console_handler.setFormatter(_formatter(CONSOLE_FORMAT, "lafair", "%H:%M:%S"))
    console_handler.setLevel(level)
    for filter_ in filters:
        console_handler.addFilter(filter_)
    logger.setLevel(logging.DEBUG)
    logger.handlers = [console_handler]
    return console_handler


def setup_file_handler(
    path: Path,
    logger: logging.Logger = logging.getLogger(),
    filters: tuple[logging.Filter, ...] = (),
) -> logging.FileHandler:
    """Add a DEBUG-level file handler writing to `path`, creating its parent
    directories.
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    file_handler = logging.FileHandler(path)
    file_handler.setFormatter(_formatter(FILE_FORMAT, "external"))
    for filter_ in filters:
        file_handler.addFilter(filter_)
    file_handler.setLevel(logging.DEBUG)
    logger.addHandler(file_handler)
    return file_handler
