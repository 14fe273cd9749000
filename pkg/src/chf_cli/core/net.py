"""The Chekhov-Fock net: ideal triangles of the upper half-plane generated from T0 = (-1, 0, inf).

A node carries ``C = CHF(w)^-1`` for some word w together with the dart
``d = w eps``. Its sides ``C[0, inf]``, ``C[inf, -1]`` and ``C[-1, 0]`` carry
the dual labels ``z(d)``, ``z(rho0 d)`` and ``z(rho0^2 d)``. Crossing a side
multiplies the carrier on the right by an L power and an edge matrix.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from chf_cli.core.cartography import coset_representatives
from chf_cli.core.chf import chf_eval, matrix_L, matrix_X
from chf_cli.core.errors import DepthLimitError, SideError
from chf_cli.core.mobius import DEFAULT_TOLERANCE, INF, ExtendedReal, Infinity, Mobius, format_extended

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from chf_cli.core.ribbon_graph import DartId, EdgeLabeling, RibbonGraph

logger = logging.getLogger(__name__)

DEFAULT_DEPTH_LIMIT = 8

# T0 corners in side order: side j joins BASE_POINTS[j] and BASE_POINTS[j + 1]
BASE_POINTS: tuple[ExtendedReal, ExtendedReal, ExtendedReal] = (Fraction(0), INF, Fraction(-1))

# L power that rotates side j of T0 onto [0, inf], and the matching rotation of the dart
_SIDE_TWIST = (0, 2, 1)
_SIDE_DART_ROTATION = (0, 1, 2)

Side = int | tuple[ExtendedReal, ExtendedReal]
TriangleKey = tuple[tuple[int, Fraction | int], ...]


def _point_key(x: ExtendedReal, exact: bool, tol: float) -> tuple[int, Fraction | int]:
    if isinstance(x, Infinity):
        return (1, 0)
    if exact and isinstance(x, Fraction):
        return (0, x)
    return (0, round(float(x) / tol))


@dataclass(frozen=True)
class IdealTriangle:
    """Three distinct points of the extended real line."""

    vertices: tuple[ExtendedReal, ExtendedReal, ExtendedReal]

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, (Fraction, Infinity)) for v in self.vertices)

    def sides(self) -> list[tuple[ExtendedReal, ExtendedReal]]:
        v = self.vertices
        return [(v[0], v[1]), (v[1], v[2]), (v[2], v[0])]

    def key(self, exact: bool | None = None, tol: float = DEFAULT_TOLERANCE) -> TriangleKey:
        """Sorted vertex keys with inf last; float vertices fall in boxes of width tol."""
        if exact is None:
            exact = self.is_exact
        return tuple(sorted(_point_key(v, exact, tol) for v in self.vertices))

    def canonical(self) -> tuple[ExtendedReal, ...]:
        finite: list[Fraction | float] = sorted(
            v if isinstance(v, Fraction) else float(v)
            for v in self.vertices
            if not isinstance(v, Infinity)
        )
        return (*finite, INF) if len(finite) < 3 else tuple(finite)

    def format(self) -> str:
        return " ".join(format_extended(v) for v in self.canonical())


T0 = IdealTriangle((Fraction(-1), Fraction(0), INF))


def _same_point(x: ExtendedReal, y: ExtendedReal, tol: float) -> bool:
    if isinstance(x, Infinity) or isinstance(y, Infinity):
        return isinstance(x, Infinity) and isinstance(y, Infinity)
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x == y
    return abs(float(x) - float(y)) <= tol * max(1.0, abs(float(x)))


@dataclass(frozen=True)
class NetNode:
    """A triangle of the net with the carrier and dart that produced it."""

    carrier: Mobius
    dart: DartId
    depth: int
    dual_labels: tuple[Fraction, Fraction, Fraction]

    @property
    def corners(self) -> tuple[ExtendedReal, ExtendedReal, ExtendedReal]:
        """Images of 0, inf, -1; side j joins corners j and j + 1."""
        c = self.carrier
        return (c.apply(BASE_POINTS[0]), c.apply(BASE_POINTS[1]), c.apply(BASE_POINTS[2]))

    @property
    def triangle(self) -> IdealTriangle:
        return IdealTriangle(self.corners)

    def side_index(self, side: Side, tol: float = DEFAULT_TOLERANCE) -> int:
        """Index 0, 1 or 2 of a side given by index or by its endpoints.

        Raises:
            SideError: If the geodesic is not a side of the triangle.
        """
        if isinstance(side, int):
            if side not in (0, 1, 2):
                raise SideError(f"side index {side} is not 0, 1 or 2")
            return side
        p, q = side
        corners = self.corners
        for j in range(3):
            u, v = corners[j], corners[(j + 1) % 3]
            if (_same_point(p, u, tol) and _same_point(q, v, tol)) or (
                _same_point(p, v, tol) and _same_point(q, u, tol)
            ):
                return j
        raise SideError(
            f"[{format_extended(p)}, {format_extended(q)}] is not a side of "
            f"({self.triangle.format()})"
        )

    def side_label(self, side: Side, tol: float = DEFAULT_TOLERANCE) -> Fraction:
        """The dual label z* of a side."""
        return self.dual_labels[self.side_index(side, tol)]


def _node(carrier: Mobius, dart: DartId, depth: int, graph: RibbonGraph, z: EdgeLabeling) -> NetNode:
    labels = (z.at(dart), z.at(graph.rho0[dart]), z.at(graph.rho0[graph.rho0[dart]]))
    return NetNode(carrier, dart, depth, labels)


def initial_triangle(graph: RibbonGraph, z: EdgeLabeling, eps: DartId) -> NetNode:
    """T0 with identity carrier; the label across [0, inf] is z(eps)."""
    return _node(Mobius.identity(), eps, 0, graph, z)


def neighbor(
    node: NetNode,
    side: Side,
    graph: RibbonGraph,
    z: EdgeLabeling,
    tol: float = DEFAULT_TOLERANCE,
) -> NetNode:
    """The triangle across a side: the side is rotated onto [0, inf], crossed with X_{z*}, rotated back.

    Raises:
        SideError: If the side does not belong to the node's triangle.
    """
    j = node.side_index(side, tol)
    d = node.dart
    for _ in range(_SIDE_DART_ROTATION[j]):
        d = graph.rho0[d]
    carrier = node.carrier @ (matrix_L() ** _SIDE_TWIST[j]) @ matrix_X(z.at(d))
    if not carrier.is_exact():
        carrier = carrier.renormalize()
    return _node(carrier, graph.rho1[d], node.depth + 1, graph, z)


def generate_net(
    graph: RibbonGraph,
    z: EdgeLabeling,
    eps: DartId,
    depth: int,
    limit: int = DEFAULT_DEPTH_LIMIT,
    tol: float = DEFAULT_TOLERANCE,
) -> list[NetNode]:
    """Breadth-first expansion from T0, one node per distinct triangle, in discovery order.

    Raises:
        DepthLimitError: If depth is negative or above limit.
    """
    if depth < 0 or depth > limit:
        raise DepthLimitError(f"depth {depth} outside 0..{limit}")
    exact = z.is_zero
    start = initial_triangle(graph, z, eps)
    seen = {start.triangle.key(exact, tol)}
    nodes = [start]
    queue = deque([start])
    while queue:
        node = queue.popleft()
        if node.depth >= depth:
            continue
        for side in range(3):
            nxt = neighbor(node, side, graph, z, tol)
            key = nxt.triangle.key(exact, tol)
            if key in seen:
                continue
            seen.add(key)
            nodes.append(nxt)
            queue.append(nxt)
    logger.debug("net of depth %d has %d triangles", depth, len(nodes))
    return nodes


def fundamental_domain(graph: RibbonGraph, z: EdgeLabeling, eps: DartId) -> list[NetNode]:
    """One marked triangle CHF(w_d)^-1 T0 per dart d, in coset-representative order.

    The marked side is ``C[0, inf]``. Marked triangles are pairwise distinct;
    darts of one vertex reached through r0 share their underlying triangle.
    """
    nodes = []
    for d, w in coset_representatives(graph, eps).items():
        carrier = chf_eval(w, graph, z, eps).inverse()
        nodes.append(_node(carrier, d, w.crossings, graph, z))
    return nodes


def marked_key(
    node: NetNode, exact: bool | None = None, tol: float = DEFAULT_TOLERANCE
) -> tuple[TriangleKey, TriangleKey]:
    """Triangle key together with the key of the marked side C[0, inf]."""
    triangle = node.triangle
    if exact is None:
        exact = triangle.is_exact
    corners = node.corners
    side = tuple(sorted(_point_key(v, exact, tol) for v in corners[:2]))
    return triangle.key(exact, tol), side


def find_triangle(
    nodes: Iterable[NetNode], triangle: IdealTriangle, tol: float = DEFAULT_TOLERANCE
) -> NetNode | None:
    """The first node whose triangle has the same vertices, compared pointwise within tol."""
    target = triangle.canonical()
    for node in nodes:
        candidate = node.triangle.canonical()
        if all(_same_point(p, q, tol) for p, q in zip(target, candidate, strict=True)):
            return node
    return None


def _as_pair(x: ExtendedReal) -> tuple[int, int] | None:
    if isinstance(x, Infinity):
        return (1, 0)
    if isinstance(x, Fraction):
        return (x.numerator, x.denominator)
    return None


def is_farey(triangle: IdealTriangle) -> bool:
    """Rational-or-inf vertices, every pair p/q, r/s with |ps - qr| = 1 (inf is 1/0)."""
    pairs = [_as_pair(v) for v in triangle.vertices]
    if any(p is None for p in pairs):
        return False
    for i in range(3):
        first, second = pairs[i], pairs[(i + 1) % 3]
        assert first is not None and second is not None
        p, q = first
        r, s = second
        if abs(p * s - q * r) != 1:
            return False
    return True


def _sort_key(triangle: IdealTriangle) -> tuple[tuple[int, float | Fraction], ...]:
    return tuple(
        (1, 0) if isinstance(v, Infinity) else (0, v if isinstance(v, Fraction) else float(v))
        for v in triangle.canonical()
    )


def format_triangles(nodes: Sequence[NetNode]) -> str:
    """Sidecar text: one ``p1 p2 p3`` line per triangle, sorted canonically."""
    triangles = sorted((node.triangle for node in nodes), key=_sort_key)
    return "".join(f"{t.format()}\n" for t in triangles)
