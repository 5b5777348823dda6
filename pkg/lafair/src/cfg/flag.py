"""Flag class for command-line options."""

from typing import Any, Callable, Literal, SupportsFloat, Type, get_args

import rich_click as click
from attrs import define, field

SCHEMA_TYPES = Literal["string", "number", "integer", "boolean"]


def _convert_float(value: SupportsFloat | None) -> float | None:
    return float(value) if value is not None else None


def click_type(
    type_: SCHEMA_TYPES | None = None,
    enum: list | None = None,
    min_: float | None = None,
    max_: float | None = None,
    exclusive_min: float | None = None,
) -> Type | click.ParamType:
    """Translate jsonschema type to a click parameter type."""
    match type_:
        case _ if enum:
            return click.Choice(enum, case_sensitive=False)
        case "number" if exclusive_min is not None:
            return click.FloatRange(exclusive_min, max_, min_open=True)
        case "number" if min_ is not None or max_ is not None:
            return click.FloatRange(min_, max_)
        case "number":
            return float
        case "integer" if min_ is not None or max_ is not None:
            return click.IntRange(
                None if min_ is None else int(min_),
                None if max_ is None else int(max_),
            )
        case "integer":
            return int
        case "boolean":
            return bool
        case _:
            return str


@define(slots=False)
class Flag:
    """A leaf of the configuration schema, exposed as a command-line option.

    Attributes
    ----------
        key (tuple[str, ...]): Path of the leaf, e.g. `("filter", "iterations")`.
        type (SCHEMA_TYPES | None): The JSONSchema type of the flag.
        description (str | None): Help text.
        default (Any): Schema default, or None.
        enum (list[Any] | None): Allowed values.
        min (float | None): Inclusive lower bound.
        max (float | None): Inclusive upper bound.
        exclusive_min (float | None): Exclusive lower bound.
        alias (tuple[str, ...]): Extra option names (without dashes).
        envvar (str | None): Environment variable read when the option is absent.

    """

    key: tuple[str, ...] = field(converter=tuple)
    type: SCHEMA_TYPES | None = field(default=None)
    description: str | None = field(default=None)
    default: Any = field(default=None)
    enum: list[Any] | None = field(default=None)
    min: float | None = field(default=None, converter=_convert_float)
    max: float | None = field(default=None, converter=_convert_float)
    exclusive_min: float | None = field(default=None, converter=_convert_float)
    alias: tuple[str, ...] = field(default=(), converter=tuple)
    envvar: str | None = field(default=None)

    @type.validator
    def _type(self, attribute: str, value: str | None) -> None:
        del attribute  # Unused

        if value not in [*get_args(SCHEMA_TYPES), None]:
            raise ValueError(f"Invalid type: {value}")

    @property
    def click_type(self) -> Type | click.ParamType:
        return click_type(
            type_=self.type,
            enum=self.enum,
            min_=self.min,
            max_=self.max,
            exclusive_min=self.exclusive_min,
        )

    @property
    def flag(self) -> str:
        """The option name, i.e. the last part of the key."""
        return self.key[-1]

    @property
    def param(self) -> str:
        """The python name of the parameter, unique across sections."""
        return "_".join(self.key)

    @property
    def click_option(self) -> Callable:
        """Construct a click.option decorator from a Flag.

        The option default is always None so that the config file can fill
        in anything not given on the command line or in the environment.
        """
        help_ = self.description or ""
        if self.envvar:
            help_ = f"{help_} [env var: {self.envvar}]".strip()
        return click.option(
            self.param,
            f"--{self.flag}",
            *(f"--{a}" for a in self.alias),
            type=self.click_type,
            default=None,
            envvar=self.envvar,
            help=help_,
            show_default=str(self.default) if self.default is not None else False,
        )
