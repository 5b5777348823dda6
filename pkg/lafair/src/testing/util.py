"""Testing utilities for lafair."""

import json
import logging
import traceback
from pathlib import Path
from typing import Any, Callable

from click.testing import CliRunner, Result
from pytest import LogCaptureFixture, fail, mark, param
from ruamel.yaml import YAML

from lafair.src.cli import main

_YAML = YAML(typ="safe", pure=True)


def create_structure(root: Path, structure: dict) -> None:
    """Create a directory structure from definition YAML."""
    for path, content in structure.items():
        if isinstance(content, dict):
            (root / path).mkdir(parents=True, exist_ok=True)
            create_structure(root / path, content)
        else:
            (root / path).write_text(content)


def fail_from_click_result(result: Result | None, reason: str) -> None:
    """Fail a test with a message and a click result."""
    if result:
        fail(
            pytrace=False,
            reason=(
                f"{reason}\n"
                f"Exit code: {result.exit_code}\n"
                f"Output:\n{result.output}"
                + (
                    "Traceback:\n" + "".join(traceback.format_exception(result.exception))
                    if result.exception and not isinstance(result.exception, SystemExit)
                    else ""
                )
            ),
        )
    else:
        fail(pytrace=False, reason=reason)


def invoke(
    runner: CliRunner,
    args: list[str],
    env: dict[str, str] | None = None,
) -> Result:
    """Invoke the lafair CLI, leaving the log handlers to pytest."""
    _handlers = logging.getLogger().handlers.copy()
    try:
        return runner.invoke(main, [str(a) for a in args], env=env)
    finally:
        logging.getLogger().handlers = _handlers


def execute_step(
    runner: CliRunner,
    step: dict[str, Any],
    caplog: LogCaptureFixture,
    env: dict[str, str] | None = None,
) -> Result:
    """Run one command of a definition and check its exit code, output and logs."""
    caplog.clear()
    result = invoke(runner, step["args"], env=env)

    if result.exit_code != (expected := step.get("exit_code", 0)):
        fail_from_click_result(
            result,
            f"Unexpected exit code for {step['args']}: expected {expected}",
        )

    for output_line in step.get("output") or []:
        if output_line not in result.output:
            fail_from_click_result(
                result,
                f"Command output not found\nMissing output:\n{output_line}",
            )

    for log_line in step.get("logs") or []:
        if log_line not in (captured := "\n".join(caplog.messages)):
            fail_from_click_result(
                result,
                f"Log message not found\nMissing line:\n{log_line}\n\nCaptured:\n{captured}\n",
            )
    return result


def check_files(root: Path, files: dict[str, dict[str, Any] | None]) -> None:
    """Check produced files.

    Each entry may hold `exists` (default true), `lines` (line count),
    `contains` (substrings), `json` (expected top-level values) and
    `json_len` (expected lengths of top-level lists).
    """
    for name, checks in files.items():
        checks = checks or {}
        path = root / name
        if path.exists() != checks.get("exists", True):
            fail(pytrace=False, reason=f"Expected {name} to exist: {checks.get('exists', True)}")
        if not path.exists():
            continue
        text = path.read_text(encoding="utf-8", errors="replace")
        if (lines := checks.get("lines")) is not None and len(text.splitlines()) != lines:
            fail(
                pytrace=False,
                reason=f"{name} has {len(text.splitlines())} lines, expected {lines}",
            )
        for fragment in checks.get("contains") or []:
            if fragment not in text:
                fail(pytrace=False, reason=f"{name} does not contain '{fragment}'")
        if "json" in checks or "json_len" in checks:
            data = json.loads(text)
            for key, value in (checks.get("json") or {}).items():
                if data.get(key) != value:
                    fail(pytrace=False, reason=f"{name}: {key}={data.get(key)!r}, expected {value!r}")
            for key, length in (checks.get("json_len") or {}).items():
                if len(data.get(key) or ()) != length:
                    fail(pytrace=False, reason=f"{name}: len({key}) != {length}")


def check_identical(root: Path, pairs: list[list[str]]) -> None:
    """Check that each pair of files is byte-identical."""
    for first, second in pairs:
        if (root / first).read_bytes() != (root / second).read_bytes():
            fail(pytrace=False, reason=f"{first} and {second} differ")


def parametrize_from_yaml(paths: list[Path]) -> Callable:
    """Parametrize a test from a YAML file."""

    def wrapper(func: Callable) -> Callable:
        return mark.parametrize(
            "definition",
            [
                param(definition, id=definition.get("id", path.stem))
                for path, documents in [(p, _YAML.load_all(p)) for p in paths]
                for definitions in documents
                for definition in (
                    definitions if isinstance(definitions, list) else [definitions]
                )
            ],
        )(func)

    return wrapper
