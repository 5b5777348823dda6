"""Configuration object based on a schema."""

from copy import deepcopy
from functools import reduce
from typing import Any, Iterator, Mapping, Sequence

from attrs import define, field
from frozendict import frozendict

from lafair.src import util

from .jsonschema_ import validate
from .schema import Schema


@define(frozen=True)
class Config(Mapping):
    """Resolved, validated and frozen configuration.

    Supports attribute access (`config.filter.iterations`) and nested key
    access with sequences of strings (`config["filter", "iterations"]`).

    Example:
    -------
        ```python
        schema = Schema.from_file(path)
        config = Config.resolve(schema, file_data, {("filter", "iterations"): 3})
        FilterConfig.from_config(config.filter)
        ```

    """

    data: frozendict = field(converter=util.freeze, factory=frozendict)

    @classmethod
    def resolve(
        cls,
        schema: Schema,
        file_data: Mapping[str, Any] | None = None,
        overrides: Mapping[tuple[str, ...], Any] | None = None,
    ) -> "Config":
        """Merge schema defaults, config file data and explicit overrides.

        Later sources take precedence. `None` overrides are ignored.

        Raises:
        ------
            ConfigError: The merged configuration violates the schema.

        """
        merged = util.merge_mappings(
            deepcopy(schema.defaults),
            util.unfreeze(dict(file_data or {})),
        )
        for key, value in (overrides or {}).items():
            if value is None:
                continue
            node = merged
            for k in key[:-1]:
                node = node.setdefault(k, {})
            node[key[-1]] = value
        validate(schema, merged)
        return cls(merged)

    def __getitem__(self, key: str | Sequence[str]) -> Any:
        match key:
            case str(k):
                value = self.data[k]
            case (*k,):
                value = reduce(lambda d, k_: d[k_], k, self.data)
            case k:
                raise TypeError(f"Key {k} is not a string or a sequence of strings")
        return Config(value) if isinstance(value, Mapping) else value

    def __getattr__(self, key: str) -> Any:
        if key.startswith("_") or key == "data":
            raise AttributeError(key)
        try:
            return self[key]
        except KeyError as exc:
            raise AttributeError(
                f"'{self.__class__.__name__}' object has no attribute '{key}'"
            ) from exc

    def __contains__(self, key: object) -> bool:
        try:
            self[key]  # type: ignore[index]  # pylint: disable=pointless-statement
            return True
        except (KeyError, TypeError):
            return False

    def __iter__(self) -> Iterator[str]:
        return iter(self.data)

    def __len__(self) -> int:
        return len(self.data)

    def as_dict(self) -> dict:
        return util.unfreeze(self.data)
