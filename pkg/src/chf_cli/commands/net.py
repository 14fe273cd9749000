"""Generate and render the net of triangles."""

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
from chf_cli.core.net import format_triangles, fundamental_domain, generate_net, is_farey
from chf_cli.core.render import Window, render_svg


def net(
    ctx: typer.Context,
    graph: Path | None = graph_option(),
    builtin_name: str | None = builtin_option(),
    labeling: Path | None = labeling_option(),
    zero: bool = zero_option(),
    base: str | None = base_option(),
    depth: int = typer.Option(3, "--depth", "-d", help="Number of side crossings from T0"),
    domain: bool = typer.Option(False, "--domain", help="Fundamental domain instead of the net"),
    svg: Path | None = typer.Option(None, "--svg", help="Write an SVG drawing"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write the triangle list"),
    fill: bool = typer.Option(False, "--fill", help="Color triangles by depth"),
    xmin: float = typer.Option(-3.0, "--xmin", help="Left edge of the drawing"),
    xmax: float = typer.Option(3.0, "--xmax", help="Right edge of the drawing"),
    height: float = typer.Option(3.0, "--height", help="Height of the drawing"),
    tol: float | None = tolerance_option(),
) -> None:
    """Expand the net from T0 = (-1, 0, inf) and write it as text and SVG.

    Example:
        chf net --builtin theta --zero --depth 4 --svg theta.svg --out theta.txt
    """
    settings = get_settings(ctx)
    with input_errors():
        config = CommandConfig(
            command="net",
            graph_path=graph,
            builtin=builtin_name,
            labeling_path=labeling,
            zero=zero,
            base=base,
            depth=depth,
            svg_path=svg,
            out_path=out,
            tolerance=settings.tolerance if tol is None else tol,
        )
        g = config.load_graph()
        z = config.load_labeling(g)
        eps = config.base_dart(g)
        if domain:
            nodes = fundamental_domain(g, z, eps)
        else:
            nodes = generate_net(g, z, eps, config.depth, settings.depth_limit, config.tolerance)

    table = Table(title="Fundamental domain" if domain else f"Net of depth {config.depth}")
    table.add_column("Property", style="bold")
    table.add_column("Value")
    table.add_row("Triangles", str(len(nodes)))
    if z.is_zero:
        farey = all(is_farey(node.triangle) for node in nodes)
        table.add_row("Farey", "yes" if farey else "no")
    console.print(table)

    text = format_triangles(nodes)
    with input_errors():
        if config.out_path:
            config.out_path.write_text(text, encoding="utf-8")
            console.print(f"[green]Wrote[/green] {config.out_path}")
        if config.svg_path:
            window = Window(xmin, xmax, height)
            render_svg(nodes, config.svg_path, window, settings.svg_width, fill)
            console.print(f"[green]Wrote[/green] {config.svg_path}")
    if not config.out_path and not config.svg_path:
        console.print(text, end="", highlight=False)
