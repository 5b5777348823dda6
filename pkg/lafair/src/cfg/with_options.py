"""Command-line options generated from a schema section."""

from functools import wraps
from pathlib import Path
from typing import Any, Callable

import rich_click as click

from .config import Config
from .exceptions import ConfigError
from .schema import Schema
from .util import load_yaml


def with_options(schema: Schema, section: str) -> Callable:
    """Creates a decorator adding one option per flag of a schema section.

    The decorated command also gets `--config_file`. The callback receives
    the resolved `Config` of the section as the `config` keyword. Values are
    taken, in order of precedence, from the command line, the environment,
    the section in the config file and the schema default.

    Examples:
    --------
        @cli.command()
        @with_options(schema, "filter")
        def filter_(config: Config, **kwargs):
            ...

    """
    subschema = schema.section(section)

    def wrapper(callback: Callable) -> Callable:
        @wraps(callback)
        def inner(*args: Any, config_file: Path | None, **kwargs: Any) -> Any:
            file_data: dict = {}
            if config_file is not None:
                try:
                    file_data = load_yaml(config_file) or {}
                except Exception as exc:
                    raise click.FileError(str(config_file), str(exc)) from exc
                if not isinstance(file_data, dict):
                    raise ConfigError([f"{config_file}: expected a mapping of sections"])

            overrides = {flag.key: kwargs.pop(flag.param) for flag in subschema.flags}
            config = Config.resolve(subschema, file_data.get(section) or {}, overrides)
            return callback(*args, config=config, **kwargs)

        for flag in reversed(subschema.flags):
            inner = flag.click_option(inner)
        return click.option(
            "--config_file",
            type=click.Path(exists=True, dir_okay=False, path_type=Path),
            default=None,
            help=f"YAML file with a '{section}' section",
        )(inner)

    return wrapper
