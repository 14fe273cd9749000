"""The parabolicity system on edge shears and its exact solution space.

A face generator is parabolic exactly when the shears around the face sum to
zero, so the cusped labelings of a graph form the nullspace of the face-edge
incidence matrix.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

import sympy

from chf_cli.core.mobius import format_extended

if TYPE_CHECKING:
    from collections.abc import Sequence

    from chf_cli.core.ribbon_graph import RibbonGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FaceEdgeMatrix:
    """Rows are faces, columns are edges; entry (f, e) counts the darts of e on the boundary of f."""

    rows: tuple[tuple[int, ...], ...]
    edge_names: tuple[str, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.edge_names)

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.rows]

    def column_sums(self) -> list[int]:
        return [sum(column) for column in zip(*self.rows)] if self.rows else []

    def equations(self) -> list[str]:
        """One ``a + b = 0`` line per face."""
        return [_render_row(row, self.edge_names) for row in self.rows]

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(len(self.rows), len(self.edge_names), lambda i, j: self.rows[i][j])


@dataclass(frozen=True)
class ParabolicFamily:
    """Solution space of the parabolicity system."""

    system: FaceEdgeMatrix
    basis: tuple[tuple[Fraction, ...], ...]
    relations: tuple[str, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def rank(self) -> int:
        return len(self.system.edge_names) - self.dimension


def build_system(graph: RibbonGraph) -> FaceEdgeMatrix:
    rows = []
    for face in graph.faces():
        row = [0] * graph.edge_count
        for d in face:
            row[graph.edge_of[d]] += 1
        rows.append(tuple(row))
    return FaceEdgeMatrix(tuple(rows), graph.edge_names)


def _to_fraction(value: sympy.Expr) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def nullspace(m: FaceEdgeMatrix) -> list[tuple[Fraction, ...]]:
    """Exact rational basis of {z : m z = 0}, one vector per free column of the reduced echelon form."""
    _, columns = m.shape
    if not m.rows:
        return [tuple(Fraction(int(i == j)) for j in range(columns)) for i in range(columns)]
    basis = [tuple(_to_fraction(x) for x in vector) for vector in m.to_sympy().nullspace()]
    logger.debug("system %dx%d has nullity %d", *m.shape, len(basis))
    return basis


def _term(coefficient: Fraction, name: str) -> str:
    magnitude = abs(coefficient)
    return name if magnitude == 1 else f"{format_extended(magnitude)}{name}"


def _render_row(row: Sequence[Fraction | int], names: Sequence[str]) -> str:
    terms = [(Fraction(c), n) for c, n in zip(row, names, strict=True) if c != 0]
    if not terms:
        return "0 = 0"
    if len(terms) == 2 and terms[0][0] == -terms[1][0] and abs(terms[0][0]) == 1:
        return f"{terms[0][1]} = {terms[1][1]}"
    first_coefficient, first_name = terms[0]
    text = ("-" if first_coefficient < 0 else "") + _term(first_coefficient, first_name)
    for coefficient, name in terms[1:]:
        text += (" - " if coefficient < 0 else " + ") + _term(coefficient, name)
    return f"{text} = 0"


def relations(m: FaceEdgeMatrix) -> list[str]:
    """Independent relations equivalent to the system.

    Elimination pivots on the last edges first, so later edges are expressed
    through earlier ones (``a = d`` rather than ``d = a`` style).
    """
    _, columns = m.shape
    if not m.rows:
        return []
    reversed_matrix = m.to_sympy().extract(list(range(len(m.rows))), list(range(columns - 1, -1, -1)))
    reduced, pivots = reversed_matrix.rref()
    rows: list[list[Fraction]] = []
    for i in reversed(range(len(pivots))):
        row = [_to_fraction(reduced[i, columns - 1 - j]) for j in range(columns)]
        rows.append(_shorten(row, rows))
    return [_render_row(row, m.edge_names) for row in rows]


def _support(row: Sequence[Fraction]) -> int:
    return sum(1 for x in row if x != 0)


def _shorten(row: list[Fraction], earlier: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Add or subtract earlier relations while that drops terms (``a + b + f`` becomes ``c = f``)."""
    improved = True
    while improved:
        improved = False
        for other in earlier:
            for sign in (-1, 1):
                candidate = [x + sign * y for x, y in zip(row, other, strict=True)]
                if 0 < _support(candidate) < _support(row):
                    row, improved = candidate, True
    return row


def parabolic_family(graph: RibbonGraph) -> ParabolicFamily:
    system = build_system(graph)
    return ParabolicFamily(system, tuple(nullspace(system)), tuple(relations(system)))


def format_family(family: ParabolicFamily) -> str:
    """Line-oriented machine-readable form: ``edges``, ``row`` and ``basis`` records."""
    faces, edges = family.system.shape
    lines = [
        f"# system {faces}x{edges} rank {family.rank} dimension {family.dimension}",
        "edges " + " ".join(family.system.edge_names),
    ]
    lines.extend("row " + " ".join(str(x) for x in row) for row in family.system.rows)
    lines.extend("basis " + " ".join(format_extended(x) for x in vector) for vector in family.basis)
    return "\n".join(lines) + "\n"
