import logging
from pathlib import Path
from typing import Callable, Iterator

from click.testing import CliRunner, Result
from pytest import LogCaptureFixture, fixture
from pytest_mock import MockerFixture

from .util import check_files, check_identical, create_structure, execute_step, invoke


@fixture()
def run_definition(
    tmp_path: Path,
    caplog: LogCaptureFixture,
    mocker: MockerFixture,
) -> Iterator[Callable]:
    """Run a sequence of lafair commands from a definition YAML file."""
    _runner = CliRunner()
    _handlers = logging.getLogger().handlers.copy()
    mocker.patch("lafair.src.logs.setup_console_handler")

    def inner(definition: dict) -> None:
        with (
            _runner.isolated_filesystem(tmp_path) as td,
            caplog.at_level(logging.DEBUG),
        ):
            root = Path(td)
            create_structure(root, definition.get("structure") or {})
            for step in definition.get("steps") or []:
                execute_step(_runner, step, caplog, env=definition.get("env"))
            check_files(root, definition.get("files") or {})
            check_identical(root, definition.get("identical") or [])

    yield inner
    logging.getLogger().handlers = _handlers


@fixture()
def lafair_cli(
    caplog: LogCaptureFixture,
    mocker: MockerFixture,
) -> Iterator[Callable[..., Result]]:
    """Invoke the lafair CLI with console logging captured by pytest."""
    _runner = CliRunner()
    mocker.patch("lafair.src.logs.setup_console_handler")

    def inner(*args: str | Path, env: dict[str, str] | None = None) -> Result:
        with caplog.at_level(logging.DEBUG):
            return invoke(_runner, [str(a) for a in args], env=env)

    yield inner
