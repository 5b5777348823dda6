"""CLI for log-aesthetic mesh fairing"""

import rich_click as click

from .src.cli import main


def run() -> None:
    click.rich_click.DEFAULT_STRING = "[{}]"
    main()  # pylint: disable=no-value-for-parameter


if __name__ == "__main__":
    run()
