"""The parabolicity system of a graph and its solution family."""

from pathlib import Path

import typer

from chf_cli.commands.common import base_option, builtin_option, console, graph_option, input_errors
from chf_cli.config.schema import CommandConfig
from chf_cli.core.shear_system import format_family, parabolic_family


def system(
    graph: Path | None = graph_option(),
    builtin_name: str | None = builtin_option(),
    base: str | None = base_option(),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write the system and basis as text"),
) -> None:
    """Print the face equations and the relations solving them.

    Example:
        chf system --builtin tetrahedron
    """
    with input_errors():
        config = CommandConfig(command="system", graph_path=graph, builtin=builtin_name, base=base)
        g = config.load_graph()

    family = parabolic_family(g)
    faces, edges = family.system.shape

    console.print(f"[bold]Face system[/bold] ({faces} faces, {edges} edges)")
    for equation in family.system.equations():
        console.print(f"  {equation}", highlight=False)

    console.print()
    if family.dimension == 0:
        names = " = ".join(g.edge_names)
        console.print(f"This system has the only solution {names} = 0", highlight=False)
    else:
        console.print("[bold]Solution[/bold]")
        for relation in family.relations:
            console.print(f"  {relation}", highlight=False)
    console.print(f"Dimension of the family: {family.dimension}")

    if out:
        with input_errors():
            out.write_text(format_family(family), encoding="utf-8")
        console.print(f"[green]Wrote[/green] {out}")
