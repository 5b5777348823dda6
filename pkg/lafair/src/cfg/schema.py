"""Schema for configuration data"""

from functools import cached_property
from pathlib import Path
from typing import Any, Iterator, Mapping

from attrs import define, field
from frozendict import frozendict
from ruamel.yaml import CommentedMap

from lafair.src import util

from .flag import Flag
from .jsonschema_ import get_flags
from .util import dump_yaml, load_yaml


@define(frozen=True, slots=False)
class Schema(Mapping):
    """A JSON schema (with `alias` and `envvar` keys) for the
    lafair configuration.

    The top level holds one object per config section (`filter`,
    `quadrature`, ...), each holding leaf properties.

    Example:
    -------
        ```python
        schema = Schema.from_file(LAFAIR_ROOT / "schema.base.yaml")
        schema.section("filter").flags  # Flags of the filter section
        print(schema.example_config)
        ```

    """

    data: frozendict = field(converter=util.freeze, factory=frozendict)

    @classmethod
    def from_file(cls, path: Path) -> "Schema":
        """Load the schema from a YAML file."""
        return cls(load_yaml(path) or {})

    def __getitem__(self, key: str) -> Any:
        return self.data[key]

    def __iter__(self) -> Iterator[str]:
        return iter(self.data)

    def __len__(self) -> int:
        return len(self.data)

    def as_dict(self) -> dict:
        return util.unfreeze(self.data)

    @property
    def sections(self) -> tuple[str, ...]:
        return tuple(self.data.get("properties", {}))

    def section(self, name: str) -> "Schema":
        """The subschema of one section.

        Raises:
        ------
            KeyError: The schema has no such section.

        """
        if name not in self.sections:
            raise KeyError(f"Unknown config section '{name}' (expected one of {self.sections})")
        return Schema(self.data["properties"][name])

    @cached_property
    def flags(self) -> list[Flag]:
        return get_flags(self.data)

    @cached_property
    def defaults(self) -> dict[str, Any]:
        """Nested mapping of the schema defaults; leaves without one are left out."""
        result: dict = {}
        for flag in self.flags:
            if flag.default is not None:
                node = result
                for k in flag.key[:-1]:
                    node = node.setdefault(k, {})
                node[flag.key[-1]] = flag.default
        return result

    @cached_property
    def example_config(self) -> str:
        """Generate a commented example configuration from the schema.

        Leaves without a default are written as `~`.
        """
        _map = CommentedMap()
        for flag in self.flags:
            node = _map
            for k in flag.key[:-1]:
                if k not in node:
                    node[k] = CommentedMap()
                node = node[k]
            node[flag.key[-1]] = flag.default

            comment = f"{flag.description} [{flag.type}]" if flag.description else f"[{flag.type}]"
            if flag.enum:
                comment = f"{comment} one of: {', '.join(map(str, flag.enum))}"
            if flag.envvar:
                comment = f"{comment} (env: {flag.envvar})"
            node.yaml_set_comment_before_after_key(
                flag.key[-1],
                before=comment,
                indent=2 * (len(flag.key) - 1),
            )
        return dump_yaml(_map)
