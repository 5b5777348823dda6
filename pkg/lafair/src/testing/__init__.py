"""Testing utilities for lafair."""

from .fixture import lafair_cli, run_definition
from .util import (
    check_files,
    check_identical,
    create_structure,
    execute_step,
    fail_from_click_result,
    invoke,
    parametrize_from_yaml,
)

__all__ = [
    "check_files",
    "check_identical",
    "create_structure",
    "execute_step",
    "fail_from_click_result",
    "invoke",
    "lafair_cli",
    "parametrize_from_yaml",
    "run_definition",
]
