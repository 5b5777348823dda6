"""Utility functions for lafair."""

from .freeze import freeze, unfreeze
from .mappings import merge_mappings

__all__ = [
    "freeze",
    "unfreeze",
    "merge_mappings",
]
