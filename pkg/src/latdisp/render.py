"""Plain-text and SVG views of regions.

ASCII marks region points with ``#`` on a ``.`` lattice, one row per y
value, highest y first.  The hexagonal model shears each row by one
column per y step so neighbors sit adjacent on screen.  SVG draws filled
circles on a light lattice; hexagonal points are placed on the true
unit-spacing lattice with the y axis at 60 degrees.  Three-dimensional
regions are shown layer by layer.
"""

from __future__ import annotations

import math
from typing import Iterable

from .anticodes import Region
from .lattice import Model

__all__ = ["ascii_region", "svg_region"]

_SCALE = 24
_PAD = 20


def _rows(points: Iterable[tuple[int, int]]) -> tuple[range, range, set]:
    pts = set(points)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return (range(min(xs), max(xs) + 1), range(min(ys), max(ys) + 1), pts)


def _ascii_2d(points, shear: bool) -> str:
    xspan, yspan, pts = _rows(points)
    lines = []
    for y in reversed(yspan):
        indent = " " * (y - yspan.start) if shear else ""
        cells = ("#" if (x, y) in pts else "." for x in xspan)
        lines.append(indent + " ".join(cells))
    return "\n".join(lines)


def ascii_region(region: Region) -> str:
    """Text rendering with exactly ``region.size`` ``#`` marks."""
    if not region.points:
        return "(empty)"
    if region.model is Model.HEX2:
        return _ascii_2d(region.points, shear=True)
    if region.model is not Model.GRID3:
        return _ascii_2d(region.points, shear=False)
    blocks = []
    zs = sorted({p[2] for p in region.points})
    for z in zs:
        layer = [(x, y) for x, y, pz in region.points if pz == z]
        blocks.append(f"z={z}\n" + _ascii_2d(layer, shear=False))
    return "\n\n".join(blocks)


def _hex_xy(x: int, y: int) -> tuple[float, float]:
    return x + y / 2, y * math.sqrt(3) / 2


def _svg_circles(points, plane, dx: float = 0.0):
    xspan, yspan, pts = _rows(points)
    back, front = [], []
    for y in yspan:
        for x in xspan:
            px, py = plane(x, y)
            cx = _PAD + dx + (px - plane(xspan.start, yspan.start)[0]) * _SCALE
            cy = _PAD + (plane(xspan.start, yspan.stop - 1)[1] - py) * _SCALE
            if (x, y) in pts:
                front.append(f'<circle class="pt" cx="{cx:.1f}" cy="{cy:.1f}"'
                             ' r="7" fill="#20603d"/>')
            else:
                back.append(f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="2"'
                            ' fill="#c8c8c8"/>')
    width = dx + (plane(xspan.stop - 1, yspan.stop - 1)[0]
                  - plane(xspan.start, yspan.start)[0]) * _SCALE
    height = (plane(xspan.start, yspan.stop - 1)[1]
              - plane(xspan.start, yspan.start)[1]) * _SCALE
    return back + front, width, height


def svg_region(region: Region) -> str:
    """SVG rendering whose ``class="pt"`` circles are the region points."""
    if not region.points:
        body, width, height = [], 0.0, 0.0
    elif region.model is Model.HEX2:
        body, width, height = _svg_circles(region.points, _hex_xy)
    elif region.model is not Model.GRID3:
        body, width, height = _svg_circles(region.points, lambda x, y: (x, y))
    else:
        body, width, height = [], 0.0, 0.0
        dx = 0.0
        for z in sorted({p[2] for p in region.points}):
            layer = [(x, y) for x, y, pz in region.points if pz == z]
            circles, w, h = _svg_circles(layer, lambda x, y: (x, y), dx)
            body.extend(circles)
            width = dx + w
            height = max(height, h)
            dx = width + 2 * _SCALE
    total_w = width + 2 * _PAD
    total_h = height + 2 * _PAD
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{total_w:.0f}" height="{total_h:.0f}" '
            f'viewBox="0 0 {total_w:.0f} {total_h:.0f}">')
    rect = f'<rect width="{total_w:.0f}" height="{total_h:.0f}" fill="#fff"/>'
    return "\n".join([head, rect, *body, "</svg>"]) + "\n"
