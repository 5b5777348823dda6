"""Config for lafair."""

from .config import Config
from .exceptions import ConfigError
from .flag import Flag
from .jsonschema_ import get_flags, validate
from .schema import Schema
from .with_options import with_options

__all__ = [
    "Config",
    "ConfigError",
    "Flag",
    "Schema",
    "get_flags",
    "validate",
    "with_options",
]
