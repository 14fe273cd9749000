"""Builtin dessins used by the examples and the verification suites."""

from __future__ import annotations

from functools import cache
from typing import TYPE_CHECKING

from chf_cli.core.errors import UnknownBuiltinError
from chf_cli.core.ribbon_graph import parse_graph

if TYPE_CHECKING:
    from chf_cli.core.ribbon_graph import RibbonGraph

BUILTIN_TEXTS: dict[str, str] = {
    "theta": """\
# two vertices joined by three edges, <3,3|2,2,2>
vertex u: B A C
vertex v: B' C' A'
edge A A'
edge B B'
edge C C'
base B
""",
    "tetrahedron": """\
# <3,3,3,3|3,3,3,3>
vertex o: A C B
vertex p: E A' F
vertex q: F' B' D
vertex r: D' C' E'
edge A A'
edge B B'
edge C C'
edge D D'
edge E E'
edge F F'
base A
""",
    "cube": """\
# outer square o0..o3, inner square i0..i3, <3,3,3,3,3,3,3,3|4,4,4,4,4,4>
vertex o0: A I D'
vertex o1: B J A'
vertex o2: C K B'
vertex o3: D M C'
vertex i0: E H' I'
vertex i1: F E' J'
vertex i2: K' G F'
vertex i3: G' M' H
edge A A'
edge B B'
edge C C'
edge D D'
edge E E'
edge F F'
edge G G'
edge H H'
edge I I'
edge J J'
edge K K'
edge M M'
base A
""",
    "quotient411": """\
# a loop at each vertex, <3,3|4,1,1>
vertex u: A B B'
vertex v: A' C C'
edge A A'
edge B B'
edge C C'
base B
""",
    "twisted_theta": """\
# theta graph with one vertex rotation reversed, genus 1, <3,3|6>
vertex u: A B C
vertex v: A' B' C'
edge A A'
edge B B'
edge C C'
base A
""",
}


def builtin_names() -> list[str]:
    return list(BUILTIN_TEXTS)


@cache
def builtin(name: str) -> RibbonGraph:
    """Parse a builtin graph by name.

    Raises:
        UnknownBuiltinError: If no builtin has that name.
    """
    try:
        text = BUILTIN_TEXTS[name]
    except KeyError:
        known = ", ".join(BUILTIN_TEXTS)
        raise UnknownBuiltinError(f"unknown builtin {name!r} (known: {known})")
    return parse_graph(text, name=name)
