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
    FrozenSet,
    Iterable,
    NamedTuple,
    Tuple,
)

from gevrey.polygons.operators import SupportPoint
from gevrey.utilities.amendments import (
    amend_integer,
    amend_rational,
)

GEVREY_INTERPRETATION = (
    "series converges or has Gevrey order exactly one of these values"
)

Vertex = Tuple[int, Fraction]


class Edge(NamedTuple):
    start: Vertex
    end: Vertex

    @property
    def slope(self) -> Fraction:
        return (self.end[1] - self.start[1]) / (self.end[0] - self.start[0])


class NewtonPolygon(NamedTuple):
    """Lower boundary of the Newton polygon of an operator.

    The polygon is the convex hull of the quadrants {q1 ≤ k, q2 ≥ j_{k,0}} clipped
    to q1 ≥ 0. Its lower boundary starts at (0, min j_{k,0}), runs through
    `vertices` from left to right and continues vertically up from the last one.
    """

    support: Tuple[SupportPoint, ...]
    vertices: Tuple[Vertex, ...]

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(
            Edge(start, end) for start, end in zip(self.vertices, self.vertices[1:])
        )

    @property
    def slopes(self) -> Tuple[Fraction, ...]:
        """Slopes of the edges, strictly increasing."""
        return tuple(edge.slope for edge in self.edges)

    @property
    def positive_slopes(self) -> Tuple[Fraction, ...]:
        return tuple(slope for slope in self.slopes if slope > 0)


def _amend_points(points: Iterable) -> Tuple[SupportPoint, ...]:
    amended = dict()
    for point in points:
        try:
            k, j0 = point
        except (TypeError, ValueError):
            raise TypeError(f"Support point {repr(point)} isn't a (k, j0) pair")
        k = amend_integer(
            integer=k,
            name="Support order",
            type_mismatch_action="error",
            minimum_value=0,
            value_violation_action="error",
            warning_stack_level=4,
        )
        if k in amended:
            raise ValueError(f"Support has more than one point of order {k}")
        amended[k] = SupportPoint(
            k=k,
            j0=amend_rational(
                rational=j0,
                name="Support height",
                warning_stack_level=4,
            ),
        )

    if not amended:
        raise ValueError("Support is empty")

    return tuple(amended[k] for k in sorted(amended))


def _cross(
    origin: Vertex,
    a: Vertex,
    b: Vertex,
):
    return (a[0] - origin[0]) * (b[1] - origin[1]) - (b[0] - origin[0]) * (
        a[1] - origin[1]
    )


def polygon(points: Iterable) -> NewtonPolygon:
    """Builds the Newton polygon of a support.

    Parameters
    ----------
    points : Iterable
        Support points as SupportPoint instances or (k, j0) pairs, at most one per
        order k ≥ 0.

    Returns
    -------
    NewtonPolygon
        The polygon, with collinear vertices removed.

    Raises
    ------
    TypeError
        When a point isn't a pair of an int and a rational.

    ValueError
        When the support is empty or has two points of the same order.
    """
    support = _amend_points(points)
    lowest = min(point.j0 for point in support)
    candidates = sorted(
        {(0, lowest)} | {(point.k, point.j0) for point in support},
    )

    # Monotone chain, lower half only.
    vertices = list()
    for candidate in candidates:
        while len(vertices) > 1 and _cross(vertices[-2], vertices[-1], candidate) <= 0:
            vertices.pop()
        vertices.append(candidate)

    return NewtonPolygon(
        support=support,
        vertices=tuple(vertices),
    )


def gevrey_candidates(newton_polygon: NewtonPolygon) -> FrozenSet[Fraction]:
    """{0} together with 1/k for every positive slope k of the polygon."""
    return frozenset(
        {Fraction(0)} | {1 / slope for slope in newton_polygon.positive_slopes}
    )
