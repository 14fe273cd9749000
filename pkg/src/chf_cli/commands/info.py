"""Combinatorial summary of a graph."""

import logging
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
)
from chf_cli.config.schema import CommandConfig
from chf_cli.core.cartography import is_regular, monodromy_order
from chf_cli.core.errors import ClosureBoundError

logger = logging.getLogger(__name__)


def info(
    ctx: typer.Context,
    graph: Path | None = graph_option(),
    builtin_name: str | None = builtin_option(),
    base: str | None = base_option(),
) -> None:
    """Show counts, the <...|...> case label, genus, regularity and monodromy order.

    Example:
        chf info --builtin theta
    """
    settings = get_settings(ctx)
    with input_errors():
        config = CommandConfig(command="info", graph_path=graph, builtin=builtin_name, base=base)
        g = config.load_graph()
    eps = config.base_dart(g)

    try:
        order = str(monodromy_order(g, settings.closure_bound))
    except ClosureBoundError as e:
        logger.debug("%s", e)
        order = f"> {settings.closure_bound}"

    table = Table(title=f"Graph {g.name}" if g.name else "Graph")
    table.add_column("Property", style="bold")
    table.add_column("Value")

    table.add_row("Case", g.case_label())
    table.add_row("Vertices", str(g.vertex_count))
    table.add_row("Edges", str(g.edge_count))
    table.add_row("Faces", str(g.face_count))
    table.add_row("Genus", str(g.genus()))
    table.add_row("Darts", str(g.dart_count))
    table.add_row("Base dart", g.dart_names[eps])
    table.add_row("Regular", "regular" if is_regular(g, eps) else "irregular")
    table.add_row("Monodromy order", order)

    console.print(table)
