"""Options and input handling shared by the graph commands."""

from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape

from chf_cli.config.schema import Settings
from chf_cli.core.errors import ChfError

console = Console()

EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2


def graph_option() -> Path | None:
    return typer.Option(None, "--graph", "-g", help="Graph file", exists=False, dir_okay=False)


def builtin_option() -> str | None:
    return typer.Option(None, "--builtin", "-b", help="Builtin graph name (see `chf builtins`)")


def labeling_option() -> Path | None:
    return typer.Option(None, "--z", help="Edge labeling file (`<dart> <value>` lines)")


def zero_option() -> bool:
    return typer.Option(False, "--zero", help="Use the zero labeling (the default without --z)")


def base_option() -> str | None:
    return typer.Option(None, "--base", help="Base dart name, overriding the graph's")


def tolerance_option() -> float | None:
    return typer.Option(None, "--tol", help="Float tolerance (default from settings)")


@contextmanager
def input_errors() -> Iterator[None]:
    """Report bad input on the console and exit with status 2."""
    try:
        yield
    except (ChfError, OSError, ValidationError) as e:
        console.print(f"[red]Error:[/red] {escape(str(e))}", highlight=False)
        raise typer.Exit(EXIT_INPUT_ERROR)


def get_settings(ctx: typer.Context) -> Settings:
    """Settings loaded by the root callback, or from the environment."""
    if isinstance(ctx.obj, Settings):
        return ctx.obj
    return Settings.from_env()
