"""Run the property suites against one graph."""

from pathlib import Path

import typer
from rich.markup import escape
from rich.table import Table

from chf_cli.commands.common import (
    EXIT_VERIFY_FAILED,
    base_option,
    builtin_option,
    console,
    get_settings,
    graph_option,
    input_errors,
    tolerance_option,
)
from chf_cli.config.schema import CommandConfig
from chf_cli.core.errors import ChfError
from chf_cli.core.verify import PROPERTIES, run_suite


def verify(
    ctx: typer.Context,
    graph: Path | None = graph_option(),
    builtin_name: str | None = builtin_option(),
    base: str | None = base_option(),
    tol: float | None = tolerance_option(),
    seed: int | None = typer.Option(None, "--seed", help="Random seed (default from settings)"),
    samples: int | None = typer.Option(None, "--samples", help="Samples per property"),
    properties: list[str] | None = typer.Option(
        None,
        "--property",
        "-p",
        help="Run only this property (repeatable)",
    ),
) -> None:
    """Check the homomorphism, net, trace and integer-model properties.

    Exits with status 1 and names the first failing property.

    Example:
        chf verify --builtin cube --seed 7 --samples 50
    """
    settings = get_settings(ctx)
    with input_errors():
        config = CommandConfig(
            command="verify",
            graph_path=graph,
            builtin=builtin_name,
            base=base,
            tolerance=settings.tolerance if tol is None else tol,
        )
        g = config.load_graph()
        unknown = [name for name in properties or [] if name not in PROPERTIES]
        if unknown:
            raise ChfError(f"unknown property {unknown[0]!r} (known: {', '.join(PROPERTIES)})")
    eps = config.base_dart(g)
    options = settings.verify_options(seed, samples, config.tolerance)

    console.print(f"[dim]seed {options.seed}, samples {options.samples}, tol {options.tolerance:g}[/dim]")
    results = run_suite(g, eps, options, properties or None)

    table = Table(title=f"Properties of {g.name or 'graph'} {g.case_label()}")
    table.add_column("Property", style="bold")
    table.add_column("Result")
    table.add_column("Checks", justify="right")
    for result in results:
        verdict = "[green]PASS[/green]" if result.passed else "[red]FAIL[/red]"
        table.add_row(result.name, verdict, str(result.checks))
    console.print(table)

    failures = [r for r in results if not r.passed]
    if failures:
        first = failures[0]
        console.print(f"[red]Property failed:[/red] {first.name}: {escape(first.detail)}")
        raise typer.Exit(EXIT_VERIFY_FAILED)
    console.print("[green]All properties hold.[/green]")
