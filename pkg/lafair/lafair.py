"""Package root and version."""

from importlib.metadata import PackageNotFoundError, version
from importlib.util import find_spec
from pathlib import Path

spec = find_spec("lafair")
LAFAIR_ROOT = Path(spec.origin).parent  # type: ignore[union-attr, arg-type]

try:
    LAFAIR_VERSION = version("lafair")
except PackageNotFoundError:  # pragma: no cover
    LAFAIR_VERSION = "0+unknown"
