"""JSON Schema validators for lafair configuration files."""

from functools import cache, partial
from typing import Any, Callable, Generator, Mapping

from frozendict import frozendict
from jsonschema.protocols import Validator
from jsonschema.validators import Draft7Validator, create, extend

from lafair.src import util

from .exceptions import ConfigError
from .flag import Flag

NullValidator = create(
    meta_schema=Draft7Validator.META_SCHEMA,
    type_checker=Draft7Validator.TYPE_CHECKER,
)


def _update_path(validators: dict[str, Callable], _path: tuple[str, ...]) -> None:
    for _validator in validators.values():
        if isinstance(_validator, partial) and "_path" in _validator.keywords:
            _validator.keywords.update({"_path": _path})


def properties_(
    validator: Validator,
    properties: dict[str, dict],
    instance: Any,
    schema: dict,
    flags: dict[tuple[str, ...], Flag],
    _path: tuple[str, ...] = (),
) -> Generator:
    """Collect a `Flag` for every leaf property, descending into objects."""
    del instance, schema  # Unused
    for prop, subschema in properties.items():
        key = (*_path, prop)
        if "properties" in subschema:
            _update_path(validator.VALIDATORS, key)
            yield from validator.descend(None, subschema, path=prop, schema_path=prop)
            _update_path(validator.VALIDATORS, _path)
            continue

        alias = subschema.get("alias", ())
        flags[key] = Flag(
            key=key,
            type=subschema.get("type"),
            description=subschema.get("description"),
            default=subschema.get("default"),
            enum=subschema.get("enum"),
            min=subschema.get("minimum"),
            max=subschema.get("maximum"),
            exclusive_min=subschema.get("exclusiveMinimum"),
            alias=(alias,) if isinstance(alias, str) else alias,
            envvar=subschema.get("envvar"),
        )


@cache
def _get_flags(schema: frozendict) -> tuple[Flag, ...]:
    flags: dict[tuple[str, ...], Flag] = {}
    extend(
        NullValidator,
        validators={"properties": partial(properties_, flags=flags, _path=())},
    )(util.unfreeze(schema)).validate(None)
    return tuple(flags.values())


def get_flags(schema: Mapping[str, Any]) -> list[Flag]:
    """Get the flags for a configuration schema, in declaration order."""
    return [*_get_flags(util.freeze(dict(schema)))]


def validate(schema: Mapping[str, Any], instance: Mapping[str, Any]) -> None:
    """Validate `instance` against `schema`.

    Raises:
    ------
        ConfigError: One or more constraints are violated.

    """
    errors = sorted(
        Draft7Validator(util.unfreeze(dict(schema))).iter_errors(util.unfreeze(dict(instance))),
        key=lambda e: [str(p) for p in e.path],
    )
    if errors:
        raise ConfigError(
            [
                f"{'.'.join(str(p) for p in e.path) or '<root>'}: {e.message}"
                for e in errors
            ]
        )
