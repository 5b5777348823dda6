"""Utilities to freeze/unfreeze configuration snapshots."""

from functools import singledispatch
from typing import Any

from frozendict import frozendict


@singledispatch
def freeze(data: Any) -> Any:
    """Return hashable scalars unchanged."""
    return data


@freeze.register
def _(data: dict) -> frozendict:
    return frozendict({k: freeze(v) for k, v in data.items()})


@freeze.register
def _(data: list | tuple) -> tuple:
    return tuple(freeze(v) for v in data)


@singledispatch
def unfreeze(data: Any) -> Any:
    """Return mutable scalars unchanged."""
    return data


@unfreeze.register
def _(data: dict | frozendict) -> dict:
    return {k: unfreeze(v) for k, v in data.items()}


@unfreeze.register
def _(data: tuple) -> list:
    return [unfreeze(v) for v in data]
