"""List the builtin graphs."""

from rich.table import Table

from chf_cli.commands.common import console
from chf_cli.core.builtins import builtin, builtin_names


def list_builtins() -> None:
    """Show each builtin graph with its case label and genus."""
    table = Table(title="Builtin graphs")
    table.add_column("Name", style="bold")
    table.add_column("Case")
    table.add_column("Genus", justify="right")
    table.add_column("Darts", justify="right")

    for name in builtin_names():
        g = builtin(name)
        table.add_row(name, g.case_label(), str(g.genus()), str(g.dart_count))

    console.print(table)
