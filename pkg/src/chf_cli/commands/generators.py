"""Face generators of the Fuchsian group of a labeled graph."""

from pathlib import Path

import typer
from rich.table import Table

from chf_cli.commands.common import (
    base_option,
    builtin_option,
    console,
    get_settings,
    graph_option,
    input_errors,
    labeling_option,
    tolerance_option,
    zero_option,
)
from chf_cli.config.schema import CommandConfig
from chf_cli.core.chf import (
    FuchsianGenerator,
    fuchsian_generators,
    is_parabolic,
    parabolic_fixed_point,
    relation_holds,
)
from chf_cli.core.mobius import Mobius, format_extended


def _trace(m: Mobius) -> str:
    t = m.trace()
    return str(t) if isinstance(t, int) else f"{t:.12g}"


def _fixed_point(generator: FuchsianGenerator, tol: float) -> str:
    if not is_parabolic(generator.matrix, tol):
        return "-"
    return format_extended(parabolic_fixed_point(generator.matrix, tol))


def format_generators(generators: list[FuchsianGenerator], tol: float) -> str:
    """One ``gamma_i <matrix> <fixed point> <word>`` line per generator."""
    return "".join(
        f"gamma_{i} {g.matrix} {_fixed_point(g, tol)} {g.word}\n"
        for i, g in enumerate(generators, start=1)
    )


def generators(
    ctx: typer.Context,
    graph: Path | None = graph_option(),
    builtin_name: str | None = builtin_option(),
    labeling: Path | None = labeling_option(),
    zero: bool = zero_option(),
    base: str | None = base_option(),
    tol: float | None = tolerance_option(),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write generators as text"),
) -> None:
    """List each face generator with its matrix, trace, parabolicity and cusp.

    Example:
        chf generators --builtin theta --zero
    """
    settings = get_settings(ctx)
    with input_errors():
        config = CommandConfig(
            command="generators",
            graph_path=graph,
            builtin=builtin_name,
            labeling_path=labeling,
            zero=zero,
            base=base,
            tolerance=settings.tolerance if tol is None else tol,
        )
        g = config.load_graph()
        z = config.load_labeling(g)
    eps = config.base_dart(g)
    tolerance = config.tolerance

    result = fuchsian_generators(g, z, eps)

    table = Table(title=f"Face generators ({g.case_label()}, base {g.dart_names[eps]})")
    table.add_column("γ", style="bold")
    table.add_column("Deg", justify="right")
    table.add_column("Matrix", no_wrap=True)
    table.add_column("Trace", justify="right")
    table.add_column("Parabolic")
    table.add_column("Fixed point")
    for i, generator in enumerate(result, start=1):
        parabolic = is_parabolic(generator.matrix, tolerance)
        table.add_row(
            f"γ{i}",
            str(generator.loop.degree),
            generator.matrix.pretty(),
            _trace(generator.matrix),
            "[green]yes[/green]" if parabolic else "[yellow]no[/yellow]",
            _fixed_point(generator, tolerance),
        )
    console.print(table)

    for i, generator in enumerate(result, start=1):
        console.print(f"γ{i} = {generator.word}", highlight=False, soft_wrap=True)

    if g.genus() == 0:
        if relation_holds(result, tolerance):
            console.print(f"\nRelation γ{len(result)}···γ1 = 1: [green]OK[/green]")
        else:
            console.print(f"\nRelation γ{len(result)}···γ1 = 1: [red]FAILED[/red]")
    else:
        console.print(f"\n[dim]Relation check skipped: genus {g.genus()}[/dim]")

    if out:
        with input_errors():
            out.write_text(format_generators(result, tolerance), encoding="utf-8")
        console.print(f"[green]Wrote[/green] {out}")
