"""Main CLI entry point for chf-cli."""

import logging
from pathlib import Path

import typer
from rich.console import Console
from rich.logging import RichHandler

from chf_cli import __version__
from chf_cli.commands import builtins, generators, info, init, net, system, verify
from chf_cli.commands.common import input_errors
from chf_cli.config.schema import Settings

app = typer.Typer(
    name="chf",
    help="Fuchsian groups, shear systems and triangle nets of trivalent dessins d'enfants.",
    no_args_is_help=True,
    rich_markup_mode="rich",
)

console = Console()

# Register commands
app.command("info", help="Summarize a graph")(info.info)
app.command("generators", help="Face generators of the Fuchsian group")(generators.generators)
app.command("system", help="Parabolicity system and its solutions")(system.system)
app.command("net", help="Triangle net, fundamental domain and SVG")(net.net)
app.command("verify", help="Run the property suites")(verify.verify)
app.command("builtins", help="List builtin graphs")(builtins.list_builtins)
app.command("init", help="Write an example settings file")(init.init_settings)


def version_callback(value: bool) -> None:
    """Print version and exit."""
    if value:
        console.print(f"[bold blue]chf-cli[/bold blue] version {__version__}")
        raise typer.Exit()


def configure_logging(verbose: bool) -> None:
    """Send chf_cli log records through rich; DEBUG when verbose."""
    logger = logging.getLogger("chf_cli")
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        logger.addHandler(RichHandler(console=Console(stderr=True), show_path=False))
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)


@app.callback()
def main(
    ctx: typer.Context,
    version: bool | None = typer.Option(
        None,
        "--version",
        "-V",
        callback=version_callback,
        is_eager=True,
        help="Show version and exit.",
    ),
    config: Path | None = typer.Option(None, "--config", "-c", help="Settings YAML file"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress to stderr"),
) -> None:
    """
    [bold blue]chf-cli[/bold blue] - Chekhov-Fock coordinates of dessins d'enfants.

    [dim]Get started:[/dim]
        chf builtins
        chf generators --builtin theta --zero
    """
    configure_logging(verbose)
    with input_errors():
        ctx.obj = Settings.load(config)


if __name__ == "__main__":
    app()
