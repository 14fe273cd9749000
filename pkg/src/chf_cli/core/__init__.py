"""Ribbon graphs, the cartography group, CHF matrices, shear systems and nets."""

from chf_cli.core.builtins import builtin, builtin_names
from chf_cli.core.ribbon_graph import EdgeLabeling, RibbonGraph, parse_graph, parse_labeling

__all__ = ["EdgeLabeling", "RibbonGraph", "builtin", "builtin_names", "parse_graph", "parse_labeling"]
