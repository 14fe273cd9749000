"""Trivalent ribbon graphs (dessins d'enfants) stored as dart permutations.

A dart is an oriented edge. ``rho0`` turns a dart counterclockwise around its
origin vertex and ``rho1`` reverses it. Faces are the orbits of
``phi(d) = rho1(rho0(rho0(d)))``.

Graph file format (UTF-8, one statement per line, ``#`` starts a comment):

```text
# theta graph <3,3|2,2,2>
vertex u: B A C
vertex v: B' C' A'
edge A A'
edge B B'
edge C C'
base B
```

Darts are numbered in the order they appear in ``vertex`` statements.
"""

from __future__ import annotations

import logging
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING

from chf_cli.core.errors import GraphFormatError, GraphValidationError, LabelingFormatError

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Mapping, Sequence

logger = logging.getLogger(__name__)

DartId = int

_NAME = re.compile(r"[A-Za-z0-9_'.+\-]+")
_WORD = re.compile(r"\S+")


def _tokens(text: str, offset: int = 0) -> list[tuple[str, int]]:
    """Split text into (token, 1-based column) pairs."""
    return [(m.group(), offset + m.start() + 1) for m in _WORD.finditer(text)]


def _check_name(name: str, line: int, column: int) -> None:
    if not _NAME.fullmatch(name):
        raise GraphFormatError(f"invalid name {name!r}", line, column)


@dataclass(frozen=True)
class RibbonGraph:
    """A connected trivalent ribbon graph.

    ``edges`` keeps the declaration order of the edge pairs; it drives edge
    naming and the column order of the shear system.
    """

    dart_names: tuple[str, ...]
    rho0: tuple[DartId, ...]
    rho1: tuple[DartId, ...]
    edges: tuple[tuple[DartId, DartId], ...]
    vertex_names: tuple[str, ...]
    base: DartId = 0
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        n = len(self.rho0)
        if n == 0:
            raise GraphValidationError("graph has no darts")
        if len(self.rho1) != n or len(self.dart_names) != n:
            raise GraphValidationError("permutation tables and dart names differ in length")
        if len(set(self.dart_names)) != n:
            raise GraphValidationError("dart names must be unique")
        for perm, label in ((self.rho0, "rho0"), (self.rho1, "rho1")):
            if sorted(perm) != list(range(n)):
                raise GraphValidationError(f"{label} is not a permutation of the darts")
        for d in range(n):
            if self.rho0[d] == d or self.rho0[self.rho0[self.rho0[d]]] != d:
                raise GraphValidationError(
                    f"vertex of dart {self.dart_names[d]!r} does not have valence 3"
                )
            if self.rho1[d] == d:
                raise GraphValidationError(f"dart {self.dart_names[d]!r} is unpaired")
            if self.rho1[self.rho1[d]] != d:
                raise GraphValidationError("rho1 is not an involution")
        paired = sorted(d for edge in self.edges for d in edge)
        if paired != list(range(n)) or any(self.rho1[a] != b for a, b in self.edges):
            raise GraphValidationError("edge list does not match rho1")
        if len(self.vertex_names) != n // 3:
            raise GraphValidationError("one vertex name is required per rho0 cycle")
        if not 0 <= self.base < n:
            raise GraphValidationError(f"base dart {self.base} out of range")
        if len(self._reachable(0)) != n:
            raise GraphValidationError("graph is disconnected")

    @classmethod
    def from_permutations(
        cls,
        rho0: Sequence[DartId],
        rho1: Sequence[DartId],
        base: DartId = 0,
        dart_names: Sequence[str] | None = None,
        name: str = "",
    ) -> RibbonGraph:
        """Build a graph from raw permutation tables; edges are ordered by their smaller dart."""
        n = len(rho0)
        names = tuple(dart_names) if dart_names is not None else tuple(f"d{i}" for i in range(n))
        edges = tuple((d, rho1[d]) for d in range(n) if d < rho1[d])
        vertices = tuple(f"v{k}" for k in range(n // 3))
        return cls(names, tuple(rho0), tuple(rho1), edges, vertices, base, name)

    def _reachable(self, start: DartId) -> set[DartId]:
        seen = {start}
        queue = deque([start])
        while queue:
            d = queue.popleft()
            for nxt in (self.rho0[d], self.rho1[d]):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return seen

    @property
    def dart_count(self) -> int:
        return len(self.rho0)

    @cached_property
    def vertex_cycles(self) -> tuple[tuple[DartId, ...], ...]:
        """rho0-orbits, each starting at its smallest dart, ordered by that dart."""
        return _orbits(self.dart_count, lambda d: self.rho0[d])

    @property
    def edge_pairs(self) -> tuple[tuple[DartId, DartId], ...]:
        return self.edges

    @cached_property
    def edge_of(self) -> tuple[int, ...]:
        """Edge index of every dart."""
        table = [0] * self.dart_count
        for index, (a, b) in enumerate(self.edges):
            table[a] = table[b] = index
        return tuple(table)

    @cached_property
    def edge_names(self) -> tuple[str, ...]:
        """Lowercase name of each edge's first dart (``A``/``A'`` gives ``a``)."""
        return tuple(self.dart_names[a].lower() for a, _ in self.edges)

    def phi(self, d: DartId) -> DartId:
        """Face traversal: rho0 twice, then rho1."""
        return self.rho1[self.rho0[self.rho0[d]]]

    @cached_property
    def _faces(self) -> tuple[tuple[DartId, ...], ...]:
        return _orbits(self.dart_count, self.phi)

    def faces(self) -> list[tuple[DartId, ...]]:
        """Orbits of the face permutation, each starting at its smallest dart."""
        return list(self._faces)

    @cached_property
    def face_of(self) -> tuple[int, ...]:
        table = [0] * self.dart_count
        for index, face in enumerate(self._faces):
            for d in face:
                table[d] = index
        return tuple(table)

    @property
    def vertex_count(self) -> int:
        return self.dart_count // 3

    @property
    def edge_count(self) -> int:
        return self.dart_count // 2

    @property
    def face_count(self) -> int:
        return len(self._faces)

    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count

    def genus(self) -> int:
        """Genus g of the surface, from 2 - 2g = V - E + F."""
        chi = self.euler_characteristic()
        if chi > 2 or chi % 2:
            raise GraphValidationError(f"V - E + F = {chi} must be even and at most 2")
        return (2 - chi) // 2

    def dual_valences(self) -> list[int]:
        """Face degrees in decreasing order."""
        return sorted((len(f) for f in self._faces), reverse=True)

    def case_label(self) -> str:
        """The ``<a1,...,an|b1,...,bm>`` notation: vertex valences, then dual valences."""
        vertices = ",".join("3" for _ in range(self.vertex_count))
        duals = ",".join(str(b) for b in self.dual_valences())
        return f"<{vertices}|{duals}>"

    def dart_id(self, name: str) -> DartId:
        try:
            return self.dart_names.index(name)
        except ValueError:
            raise GraphValidationError(f"unknown dart {name!r}")

    def with_base(self, base: DartId) -> RibbonGraph:
        return RibbonGraph(
            self.dart_names,
            self.rho0,
            self.rho1,
            self.edges,
            self.vertex_names,
            base,
            self.name,
        )

    def canonical(self) -> RibbonGraph:
        """Renumber darts so vertex k owns darts 3k, 3k+1, 3k+2 in rotation order."""
        order = [d for cycle in self.vertex_cycles for d in cycle]
        new_id = {old: new for new, old in enumerate(order)}
        rho0 = [0] * self.dart_count
        rho1 = [0] * self.dart_count
        for old in range(self.dart_count):
            rho0[new_id[old]] = new_id[self.rho0[old]]
            rho1[new_id[old]] = new_id[self.rho1[old]]
        vertex_of_cycle = self._vertex_name_by_cycle()
        return RibbonGraph(
            tuple(self.dart_names[old] for old in order),
            tuple(rho0),
            tuple(rho1),
            tuple((new_id[a], new_id[b]) for a, b in self.edges),
            tuple(vertex_of_cycle[cycle] for cycle in self.vertex_cycles),
            new_id[self.base],
            self.name,
        )

    def _vertex_name_by_cycle(self) -> dict[tuple[DartId, ...], str]:
        # vertex_names follow the order of vertex_cycles
        return dict(zip(self.vertex_cycles, self.vertex_names, strict=True))

    def serialize(self) -> str:
        """Write the graph in the file format; parse_graph of the result equals canonical()."""
        lines = [f"# {self.name} {self.case_label()}" if self.name else f"# {self.case_label()}"]
        for cycle, vname in zip(self.vertex_cycles, self.vertex_names, strict=True):
            darts = " ".join(self.dart_names[d] for d in cycle)
            lines.append(f"vertex {vname}: {darts}")
        for a, b in self.edges:
            lines.append(f"edge {self.dart_names[a]} {self.dart_names[b]}")
        lines.append(f"base {self.dart_names[self.base]}")
        return "\n".join(lines) + "\n"


def _orbits(n: int, step: Callable[[DartId], DartId]) -> tuple[tuple[DartId, ...], ...]:
    seen = [False] * n
    result: list[tuple[DartId, ...]] = []
    for start in range(n):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        d = step(start)
        while d != start:
            seen[d] = True
            cycle.append(d)
            d = step(d)
        result.append(tuple(cycle))
    return tuple(result)


def faces(graph: RibbonGraph) -> list[tuple[DartId, ...]]:
    return graph.faces()


def genus(graph: RibbonGraph) -> int:
    return graph.genus()


def parse_graph(text: str, name: str = "") -> RibbonGraph:
    """Parse the graph file format into a validated RibbonGraph.

    Raises:
        GraphFormatError: On a syntax error (with line and column).
        GraphValidationError: On valence, pairing or connectivity violations.
    """
    dart_ids: dict[str, DartId] = {}
    dart_names: list[str] = []
    rho0: list[DartId] = []
    vertex_names: list[str] = []
    pending_edges: list[tuple[tuple[str, int], tuple[str, int], int]] = []
    base_ref: tuple[str, int, int] | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = _tokens(line)
        if not tokens:
            continue
        keyword, column = tokens[0]

        if keyword == "vertex":
            head, sep, tail = line.partition(":")
            if not sep:
                raise GraphFormatError("expected ':' after the vertex name", lineno, len(line) + 1)
            name_tokens = _tokens(head)[1:]
            if len(name_tokens) != 1:
                raise GraphFormatError("expected exactly one vertex name", lineno, column)
            vname, vcol = name_tokens[0]
            _check_name(vname, lineno, vcol)
            darts = _tokens(tail, len(head) + 1)
            if len(darts) != 3:
                raise GraphValidationError(
                    f"vertex {vname!r} on line {lineno} has valence {len(darts)}, expected 3"
                )
            for dname, dcol in darts:
                _check_name(dname, lineno, dcol)
                if dname in dart_ids:
                    raise GraphValidationError(f"dart {dname!r} declared twice (line {lineno})")
            first = len(dart_names)
            for i, (dname, _) in enumerate(darts):
                dart_ids[dname] = first + i
                dart_names.append(dname)
                rho0.append(first + (i + 1) % 3)
            vertex_names.append(vname)

        elif keyword == "edge":
            if len(tokens) != 3:
                raise GraphFormatError("expected 'edge <dart> <dart>'", lineno, column)
            pending_edges.append((tokens[1], tokens[2], lineno))

        elif keyword == "base":
            if len(tokens) != 2:
                raise GraphFormatError("expected 'base <dart>'", lineno, column)
            if base_ref is not None:
                raise GraphFormatError("duplicate base statement", lineno, column)
            base_ref = (tokens[1][0], lineno, tokens[1][1])

        else:
            raise GraphFormatError(f"unknown statement {keyword!r}", lineno, column)

    if not dart_names:
        raise GraphValidationError("graph has no vertices")

    rho1: list[DartId | None] = [None] * len(dart_names)
    edges: list[tuple[DartId, DartId]] = []
    for (da, ca), (db, cb), lineno in pending_edges:
        for dname, dcol in ((da, ca), (db, cb)):
            if dname not in dart_ids:
                raise GraphFormatError(f"unknown dart {dname!r}", lineno, dcol)
        a, b = dart_ids[da], dart_ids[db]
        if a == b:
            raise GraphValidationError(f"edge on line {lineno} pairs dart {da!r} with itself")
        for d in (a, b):
            if rho1[d] is not None:
                raise GraphValidationError(f"dart {dart_names[d]!r} is paired twice")
        rho1[a], rho1[b] = b, a
        edges.append((a, b))

    unpaired = [dart_names[d] for d, partner in enumerate(rho1) if partner is None]
    if unpaired:
        raise GraphValidationError(f"unpaired darts: {', '.join(unpaired)}")

    base = 0
    if base_ref is not None:
        bname, lineno, bcol = base_ref
        if bname not in dart_ids:
            raise GraphFormatError(f"unknown base dart {bname!r}", lineno, bcol)
        base = dart_ids[bname]

    graph = RibbonGraph(
        tuple(dart_names),
        tuple(rho0),
        tuple(d for d in rho1 if d is not None),
        tuple(edges),
        tuple(vertex_names),
        base,
        name,
    )
    logger.debug(
        "parsed graph %s: %d darts, %d faces", name or "<text>", graph.dart_count, graph.face_count
    )
    return graph


@dataclass(frozen=True)
class EdgeLabeling:
    """Shear coordinates z, one exact rational per edge.

    Values live on edges, so a dart and its reverse always read the same value.
    """

    edge_of: tuple[int, ...]
    values: tuple[Fraction, ...]

    @classmethod
    def zero(cls, graph: RibbonGraph) -> EdgeLabeling:
        return cls(graph.edge_of, tuple(Fraction(0) for _ in graph.edges))

    @classmethod
    def from_edges(cls, graph: RibbonGraph, values: Iterable[Fraction | int]) -> EdgeLabeling:
        vals = tuple(Fraction(v) for v in values)
        if len(vals) != graph.edge_count:
            raise LabelingFormatError(f"expected {graph.edge_count} edge values, got {len(vals)}")
        return cls(graph.edge_of, vals)

    @classmethod
    def from_darts(cls, graph: RibbonGraph, values: Mapping[DartId, Fraction]) -> EdgeLabeling:
        """Build from values keyed by either dart of an edge; unlisted edges default to 0."""
        by_edge: dict[int, Fraction] = {}
        for d, value in values.items():
            edge = graph.edge_of[d]
            if edge in by_edge and by_edge[edge] != value:
                raise LabelingFormatError(
                    f"edge {graph.edge_names[edge]!r} labeled twice with different values"
                )
            by_edge[edge] = Fraction(value)
        return cls(graph.edge_of, tuple(by_edge.get(e, Fraction(0)) for e in range(len(graph.edges))))

    def at(self, dart: DartId) -> Fraction:
        """z(d), identical for d and rho1(d)."""
        return self.values[self.edge_of[dart]]

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def serialize(self, graph: RibbonGraph) -> str:
        return "".join(
            f"{graph.dart_names[a]} {value}\n"
            for (a, _), value in zip(graph.edges, self.values, strict=True)
        )


def parse_labeling(text: str, graph: RibbonGraph) -> EdgeLabeling:
    """Parse ``<dart> <value>`` lines; values are exact rationals such as ``-1/2`` or ``0.25``."""
    values: dict[DartId, Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) != 2:
            raise LabelingFormatError(f"line {lineno}: expected '<dart> <value>'")
        dname, token = tokens
        if dname not in graph.dart_names:
            raise LabelingFormatError(f"line {lineno}: unknown dart {dname!r}")
        try:
            value = Fraction(token)
        except (ValueError, ZeroDivisionError):
            raise LabelingFormatError(f"line {lineno}: {token!r} is not a real number")
        d = graph.dart_id(dname)
        if d in values or graph.rho1[d] in values:
            raise LabelingFormatError(f"line {lineno}: edge of {dname!r} labeled twice")
        values[d] = value
    return EdgeLabeling.from_darts(graph, values)
