"""SVG drawings of net triangles in the upper half-plane."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from chf_cli.core.errors import RenderError
from chf_cli.core.mobius import ExtendedReal, Infinity

if TYPE_CHECKING:
    from collections.abc import Sequence
    from pathlib import Path

    from chf_cli.core.net import NetNode

logger = logging.getLogger(__name__)

_CLAMP = 1e6
_STROKE = "#1f3b73"


@dataclass(frozen=True)
class Window:
    """Visible region ``[xmin, xmax] x [0, height]`` of the upper half-plane."""

    xmin: float = -3.0
    xmax: float = 3.0
    height: float = 3.0

    def __post_init__(self) -> None:
        if self.xmax <= self.xmin or self.height <= 0:
            raise RenderError(f"empty window [{self.xmin}, {self.xmax}] x [0, {self.height}]")


def _num(x: float) -> str:
    return f"{max(-_CLAMP, min(_CLAMP, x)):.4f}"


class _Canvas:
    def __init__(self, window: Window, width: int) -> None:
        self.window = window
        self.scale = width / (window.xmax - window.xmin)
        self.width = width
        self.height = window.height * self.scale

    def x(self, t: float) -> str:
        return _num((t - self.window.xmin) * self.scale)

    def length(self, r: float) -> str:
        return _num(r * self.scale)

    @property
    def top(self) -> str:
        return _num(0.0)

    @property
    def bottom(self) -> str:
        return _num(self.height)


def _finite(points: Sequence[ExtendedReal]) -> list[float]:
    return sorted(float(p) for p in points if not isinstance(p, Infinity))


def _geodesic(canvas: _Canvas, p: ExtendedReal, q: ExtendedReal) -> str:
    ends = _finite((p, q))
    if len(ends) == 1:
        x = canvas.x(ends[0])
        return f'<line x1="{x}" y1="{canvas.bottom}" x2="{x}" y2="{canvas.top}"/>'
    left, right = ends
    r = canvas.length((right - left) / 2)
    return (
        f'<path d="M {canvas.x(left)} {canvas.bottom} '
        f'A {r} {r} 0 0 1 {canvas.x(right)} {canvas.bottom}"/>'
    )


def _tile(canvas: _Canvas, vertices: Sequence[ExtendedReal]) -> str:
    ends = _finite(vertices)
    y = canvas.bottom
    if len(ends) == 2:
        p, q = ends
        r = canvas.length((q - p) / 2)
        return (
            f"M {canvas.x(p)} {y} A {r} {r} 0 0 1 {canvas.x(q)} {y} "
            f"L {canvas.x(q)} {canvas.top} L {canvas.x(p)} {canvas.top} Z"
        )
    p, q, s = ends
    outer = canvas.length((s - p) / 2)
    right = canvas.length((s - q) / 2)
    left = canvas.length((q - p) / 2)
    return (
        f"M {canvas.x(p)} {y} A {outer} {outer} 0 0 1 {canvas.x(s)} {y} "
        f"A {right} {right} 0 0 0 {canvas.x(q)} {y} "
        f"A {left} {left} 0 0 0 {canvas.x(p)} {y} Z"
    )


def _fill_color(depth: int) -> str:
    return f"hsl({(depth * 47) % 360},60%,85%)"


def svg_document(
    nodes: Sequence[NetNode],
    window: Window | None = None,
    width: int = 800,
    fill: bool = False,
) -> str:
    """Deterministic SVG 1.1 text: optional depth-colored tiles, then each distinct side once."""
    window = window or Window()
    canvas = _Canvas(window, width)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{canvas.width}" height="{_num(canvas.height)}" '
        f'viewBox="0 0 {canvas.width} {_num(canvas.height)}">',
        f'<rect x="0" y="0" width="{canvas.width}" height="{_num(canvas.height)}" fill="white"/>',
    ]
    if fill:
        lines.append('<g stroke="none" fill-rule="evenodd">')
        for node in nodes:
            lines.append(f'<path fill="{_fill_color(node.depth)}" d="{_tile(canvas, node.corners)}"/>')
        lines.append("</g>")

    drawn: set[str] = set()
    for node in nodes:
        for p, q in node.triangle.sides():
            drawn.add(_geodesic(canvas, p, q))
    lines.append(f'<g stroke="{_STROKE}" stroke-width="1" fill="none">')
    lines.extend(sorted(drawn))
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_svg(
    nodes: Sequence[NetNode],
    path: Path,
    window: Window | None = None,
    width: int = 800,
    fill: bool = False,
) -> None:
    """Write svg_document to path.

    Raises:
        RenderError: If the file cannot be written.
    """
    document = svg_document(nodes, window, width, fill)
    try:
        path.write_text(document, encoding="utf-8")
    except OSError as e:
        raise RenderError(f"cannot write {path}: {e}") from e
    logger.debug("wrote %d triangles to %s", len(nodes), path)
