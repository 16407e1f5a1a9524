# Copyright 2025 The gevrey developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction
from typing import (
    List,
    NamedTuple,
    Tuple,
)

from gevrey.algebra.gaussian_rationals import format_rational
from gevrey.polygons.newton_polygons import NewtonPolygon
from gevrey.utilities.amendments import (
    amend_integer,
    amend_rational,
    find_least_common_multiplier,
)

SVG_WIDTH = 480
SVG_HEIGHT = 360
SVG_MARGIN = 40

SUPPORT_MARK = "o"
VERTEX_MARK = "*"
EMPTY_MARK = "."


def _bounds(newton_polygon: NewtonPolygon) -> Tuple[int, Fraction, Fraction]:
    heights = [point.j0 for point in newton_polygon.support] + [
        vertex[1] for vertex in newton_polygon.vertices
    ]

    return (
        max(point.k for point in newton_polygon.support),
        min(heights),
        max(heights),
    )


def render_svg(
    newton_polygon: NewtonPolygon,
    title: str = None,
) -> str:
    """Draws the Newton polygon as a standalone SVG document.

    The lower boundary is drawn edge by edge, one polyline each, between the two
    vertical rays that close it. Every support point gets a circle.
    """
    if title is None:
        title = "Newton polygon"
    maximum_order, lowest, highest = _bounds(newton_polygon)
    # Headroom above the highest point, so the rays are visible.
    top = highest + 1
    right = max(maximum_order, 1)

    def map_x(q1) -> float:
        return SVG_MARGIN + float(q1) / right * (SVG_WIDTH - 2 * SVG_MARGIN)

    def map_y(q2) -> float:
        return (
            SVG_HEIGHT
            - SVG_MARGIN
            - float(q2 - lowest) / float(top - lowest) * (SVG_HEIGHT - 2 * SVG_MARGIN)
        )

    bottom_y = map_y(lowest)
    top_y = map_y(top)
    first = newton_polygon.vertices[0]
    last = newton_polygon.vertices[-1]

    lines = [
        f"<svg xmlns='http://www.w3.org/2000/svg' width='{SVG_WIDTH}' "
        f"height='{SVG_HEIGHT}' viewBox='0 0 {SVG_WIDTH} {SVG_HEIGHT}'>"
    ]
    lines.append(
        f"<text x='{SVG_WIDTH / 2}' y='20' text-anchor='middle' font-size='14' "
        f"font-family='sans-serif'>{title}</text>"
    )
    lines.append(
        f"<line x1='{SVG_MARGIN}' y1='{bottom_y:.1f}' x2='{SVG_WIDTH - SVG_MARGIN}' "
        f"y2='{bottom_y:.1f}' stroke='#333'/>"
    )
    lines.append(
        f"<line x1='{SVG_MARGIN}' y1='{SVG_MARGIN}' x2='{SVG_MARGIN}' "
        f"y2='{SVG_HEIGHT - SVG_MARGIN}' stroke='#333'/>"
    )

    for vertex in (first, last):
        x = map_x(vertex[0])
        lines.append(
            f"<line x1='{x:.1f}' y1='{map_y(vertex[1]):.1f}' x2='{x:.1f}' "
            f"y2='{top_y:.1f}' stroke='#4e79a7' stroke-width='2'/>"
        )

    for edge in newton_polygon.edges:
        points = " ".join(
            f"{map_x(vertex[0]):.1f},{map_y(vertex[1]):.1f}"
            for vertex in (edge.start, edge.end)
        )
        lines.append(
            f"<polyline points='{points}' fill='none' stroke='#4e79a7' "
            f"stroke-width='2'/>"
        )

    for point in newton_polygon.support:
        lines.append(
            f"<circle cx='{map_x(point.k):.1f}' cy='{map_y(point.j0):.1f}' r='4' "
            f"fill='#f28e2b'><title>({point.k}, "
            f"{format_rational(point.j0, always_with_denominator=False)})</title>"
            f"</circle>"
        )

    lines.append(
        f"<text x='{SVG_WIDTH / 2}' y='{SVG_HEIGHT - 8}' text-anchor='middle' "
        f"font-size='10' font-family='sans-serif'>q1</text>"
    )
    lines.append(
        f"<text x='12' y='{SVG_HEIGHT / 2}' text-anchor='middle' font-size='10' "
        f"font-family='sans-serif'>q2</text>"
    )
    lines.append("</svg>")

    return "\n".join(lines)


class _AsciiLayout(NamedTuple):
    top: Fraction
    step: Fraction
    number_of_rows: int
    maximum_order: int
    label_width: int
    cell_width: int

    def label(
        self,
        row: int,
    ) -> str:
        return format_rational(
            self.top - row * self.step,
            always_with_denominator=False,
        )

    def column(
        self,
        order: int,
    ) -> int:
        return self.label_width + 3 + order * (self.cell_width + 1)


def _ascii_layout(newton_polygon: NewtonPolygon) -> _AsciiLayout:
    maximum_order, lowest, highest = _bounds(newton_polygon)
    step = Fraction(
        1,
        find_least_common_multiplier(
            [point.j0.denominator for point in newton_polygon.support]
            + [vertex[1].denominator for vertex in newton_polygon.vertices]
        ),
    )
    number_of_rows = int((highest - lowest) / step) + 1
    layout = _AsciiLayout(
        top=highest,
        step=step,
        number_of_rows=number_of_rows,
        maximum_order=maximum_order,
        label_width=0,
        cell_width=len(str(maximum_order)),
    )

    return layout._replace(
        label_width=max(len(layout.label(row)) for row in range(number_of_rows)),
    )


def ascii_cell(
    newton_polygon: NewtonPolygon,
    point,
) -> Tuple[int, int]:
    """Row and character column of a point (q1, q2) in `render_ascii` output.

    Raises
    ------
    ValueError
        When the point lies outside the drawing or off its grid.
    """
    try:
        q1, q2 = point
    except (TypeError, ValueError):
        raise TypeError(f"Point {repr(point)} isn't a (q1, q2) pair")
    q1 = amend_integer(
        integer=q1,
        name="Order",
        type_mismatch_action="error",
    )
    q2 = amend_rational(
        rational=q2,
        name="Height",
        warning_stack_level=3,
    )
    layout = _ascii_layout(newton_polygon)

    row = (layout.top - q2) / layout.step
    if row.denominator != 1 or not 0 <= row < layout.number_of_rows:
        raise ValueError(f"Height {q2} isn't a row of the drawing")
    if not 0 <= q1 <= layout.maximum_order:
        raise ValueError(f"Order {q1} isn't a column of the drawing")

    return int(row), layout.column(q1)


def render_ascii(newton_polygon: NewtonPolygon) -> str:
    """Draws the Newton polygon on a character grid.

    One row per grid step of q2 from the top down, labelled with its height, and
    one column per order, labelled at the bottom. Support points are marked with
    'o', vertices of the lower boundary that aren't support points with '*'.
    """
    layout = _ascii_layout(newton_polygon)
    support = {(point.k, point.j0) for point in newton_polygon.support}
    marks = {vertex: VERTEX_MARK for vertex in newton_polygon.vertices}
    marks.update({point: SUPPORT_MARK for point in support})

    rows: List[str] = list()
    for row in range(layout.number_of_rows):
        height = layout.top - row * layout.step
        cells = [
            marks.get((order, height), EMPTY_MARK).ljust(layout.cell_width)
            for order in range(layout.maximum_order + 1)
        ]
        rows.append(f"{layout.label(row):>{layout.label_width}} | {' '.join(cells)}")

    rows.append(
        " " * layout.label_width
        + " +-"
        + "-" * ((layout.cell_width + 1) * (layout.maximum_order + 1) - 1)
    )
    rows.append(
        " " * (layout.label_width + 3)
        + " ".join(
            str(order).ljust(layout.cell_width)
            for order in range(layout.maximum_order + 1)
        )
    )

    return "\n".join(row.rstrip() for row in rows)
