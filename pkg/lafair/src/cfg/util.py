"""Utility functions for working with YAML configuration files"""

from typing import Any

from ruamel.yaml import YAML
from ruamel.yaml.compat import StringIO


def dump_yaml(data: Any) -> str:
    """Dumps data to a YAML string, writing null as `~`."""
    with StringIO() as handle:
        yaml = YAML(typ="rt")
        yaml.representer.add_representer(
            type(None),
            lambda dumper, *_: dumper.represent_scalar("tag:yaml.org,2002:null", "~"),
        )
        yaml.dump(data, handle)
        return handle.getvalue()


def load_yaml(path: Any) -> Any:
    """Load a YAML file with the safe loader."""
    with open(path, encoding="utf-8") as handle:
        return YAML(typ="safe").load(handle)
