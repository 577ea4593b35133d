"""Divisor-tree geometry: square layouts, overlap detection, SVG output.

A tree for n starts with an n-sided square whose arm lists the proper
divisors in descending order, each square attached kitty-corner (corner to
corner) to its predecessor along the arm direction.  Every square seeds its
own arm for its proper divisors, rotated 90 degrees counter-clockwise from
the arm it sits on.  Sides and attachment points are integers, so all
geometry below is exact.

Attachment convention per direction: the new square's corner opposite to
the travel direction lands on the predecessor's corner pointing along it
(for NE travel, new SW corner on old NE corner, and so on rotated).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .arith import proper_divisors
from .core import a
from .errors import BudgetError

DEFAULT_SQUARE_BUDGET = 1_000_000


class ArmDirection(Enum):
    NE = "NE"
    NW = "NW"
    SW = "SW"
    SE = "SE"

    def rotated_ccw(self) -> "ArmDirection":
        return _CCW[self]


_CCW = {
    ArmDirection.NE: ArmDirection.NW,
    ArmDirection.NW: ArmDirection.SW,
    ArmDirection.SW: ArmDirection.SE,
    ArmDirection.SE: ArmDirection.NE,
}


@dataclass(frozen=True)
class PlacedSquare:
    """A square in the y-up plane; (x, y) is its lower-left corner.

    arm_direction is the direction of the arm this square seeds, i.e. where
    its own proper-divisor squares extend; the root seeds the main arm NE.
    """

    side: int
    x: int
    y: int
    depth: int
    arm_direction: ArmDirection


@dataclass(frozen=True)
class DivisorTreeLayout:
    n: int
    squares: tuple[PlacedSquare, ...]
    bounding_box: tuple[int, int, int, int]  # (min_x, min_y, max_x, max_y)

    @property
    def square_count(self) -> int:
        return len(self.squares)

    @property
    def side_sum(self) -> int:
        return sum(s.side for s in self.squares)

    def main_arm(self) -> list[PlacedSquare]:
        """Root plus its direct arm: the squares at depth <= 1."""
        return [s for s in self.squares if s.depth <= 1]


def _attach(direction: ArmDirection, px: int, py: int, pside: int, side: int) -> tuple[int, int]:
    if direction is ArmDirection.NE:
        return px + pside, py + pside
    if direction is ArmDirection.NW:
        return px - side, py + pside
    if direction is ArmDirection.SW:
        return px - side, py - side
    return px + pside, py - side


def _place(
    side_len: int,
    x: int,
    y: int,
    depth: int,
    direction: ArmDirection,
    out: list[PlacedSquare],
) -> None:
    out.append(PlacedSquare(side_len, x, y, depth, direction))
    child_direction = direction.rotated_ccw()
    px, py, pside = x, y, side_len
    for m in reversed(proper_divisors(side_len)):
        cx, cy = _attach(direction, px, py, pside, m)
        _place(m, cx, cy, depth + 1, child_direction, out)
        px, py, pside = cx, cy, m


def layout(n: int, *, budget: int = DEFAULT_SQUARE_BUDGET) -> DivisorTreeLayout:
    """Deterministic divisor-tree layout for n, root at the origin."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    count = a(n)
    if count > budget:
        raise BudgetError(f"divisor tree for {n} needs {count} squares; budget is {budget}")
    squares: list[PlacedSquare] = []
    _place(n, 0, 0, 0, ArmDirection.NE, squares)
    min_x = min(s.x for s in squares)
    min_y = min(s.y for s in squares)
    max_x = max(s.x + s.side for s in squares)
    max_y = max(s.y + s.side for s in squares)
    return DivisorTreeLayout(n, tuple(squares), (min_x, min_y, max_x, max_y))


def self_overlap(tree: DivisorTreeLayout) -> list[tuple[int, int]]:
    """Index pairs (i < j) of squares whose open interiors intersect.

    Corner or edge contact does not count.  A sort-by-x sweep narrows the
    pair scan; each surviving pair is decided by exact integer comparison.
    """
    squares = tree.squares
    order = sorted(range(len(squares)), key=lambda i: squares[i].x)
    pairs: list[tuple[int, int]] = []
    for pos, i in enumerate(order):
        si = squares[i]
        x_limit = si.x + si.side
        for j in order[pos + 1 :]:
            sj = squares[j]
            if sj.x >= x_limit:
                break
            if si.y < sj.y + sj.side and sj.y < si.y + si.side:
                pairs.append((i, j) if i < j else (j, i))
    pairs.sort()
    return pairs


@dataclass(frozen=True)
class SvgStyle:
    stroke_width: float = 1.0
    margin: int = 2
    shade_by_depth: bool = True
    stroke: str = "#222222"


def _fill(depth: int, shade: bool) -> str:
    if not shade:
        return "#ffffff"
    level = 255 - 16 * min(depth, 7)
    return f"#{level:02x}{level:02x}{level:02x}"


def to_svg(tree: DivisorTreeLayout, style: SvgStyle | None = None) -> str:
    """Render a layout as an SVG 1.1 document, one rect per square.

    The internal plane is y-up; SVG is y-down, so y coordinates are negated
    around each square's top edge.
    """
    style = style or SvgStyle()
    min_x, min_y, max_x, max_y = tree.bounding_box
    m = style.margin
    width = (max_x - min_x) + 2 * m
    height = (max_y - min_y) + 2 * m
    view_box = f"{min_x - m} {-max_y - m} {width} {height}"
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{view_box}">',
    ]
    for s in tree.squares:
        lines.append(
            f'  <rect x="{s.x}" y="{-(s.y + s.side)}" width="{s.side}" height="{s.side}" '
            f'fill="{_fill(s.depth, style.shade_by_depth)}" stroke="{style.stroke}" '
            f'stroke-width="{style.stroke_width}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
