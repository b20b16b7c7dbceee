#!/usr/bin/python
# Copyright 2024 The tangential-polygons Authors
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from ..core import (
    DEFAULT_TOLERANCE,
    ConcyclicityFailure,
    EqualityViolated,
    Infeasible,
    NoTangent,
    NonpositiveTangent,
    NotQuad,
    PointNotOnCircle,
    PonceletClosureFailure,
    SideLengths,
    TangentLengths,
    approx_eq,
    approx_zero,
)
from ..geometry import ORIGIN, PlanePoint, PolygonEmbedding, construct_polygon
from ..radius import all_radii

logger = logging.getLogger(__name__)

# Four chained circle intersections lose more precision than root finding.
PONCELET_TOLERANCE = 1e-8


@dataclass(frozen=True)
class BicentricQuad:
    """A quadrilateral with both an incircle (centered at the origin) and a
    circumcircle."""

    sides: SideLengths
    tangents: TangentLengths
    inradius: float
    incenter: PlanePoint
    circumradius: float
    circumcenter: PlanePoint
    embedding: PolygonEmbedding

    @property
    def area(self):
        return self.inradius * self.tangents.semiperimeter

    @property
    def center_distance(self):
        return abs(self.circumcenter - self.incenter)


def _as_quad(sides):
    sides = sides if isinstance(sides, SideLengths) else SideLengths(sides)
    if sides.n != 4:
        raise NotQuad("need a quadrilateral, got %d sides" % sides.n)
    return sides


def bicentric_tangents(sides, tolerance=DEFAULT_TOLERANCE):
    """Tangent lengths making the tangential quadrilateral also cyclic.

    t_1 = a_1 a_4 / (a_1 + a_3) and cyclically; they satisfy
    t_1 t_3 = t_2 t_4.
    """
    sides = _as_quad(sides)
    a1, a2, a3, a4 = sides.values
    if not approx_eq(a1 + a3, a2 + a4, sides.perimeter, tolerance):
        raise EqualityViolated(
            "a1 + a3 = %.17g differs from a2 + a4 = %.17g" % (a1 + a3, a2 + a4)
        )
    d = a1 + a3
    t = (a1 * a4 / d, a2 * a1 / d, a3 * a2 / d, a4 * a3 / d)
    for j, tj in enumerate(t, start=1):
        if approx_zero(tj, sides.perimeter, tolerance):
            logger.debug("degenerate tangent t%d = %r for sides %s", j, tj, sides.values)
            raise NonpositiveTangent(
                "tangent length t%d = %.17g collapses a vertex onto the circle" % (j, tj)
            )
    return TangentLengths(t)


def brahmagupta_area(sides, tolerance=DEFAULT_TOLERANCE):
    """Area of the cyclic quadrilateral, sqrt((s-a_1)(s-a_2)(s-a_3)(s-a_4))."""
    sides = _as_quad(sides)
    s = sides.semiperimeter
    factors = [s - a for a in sides.values]
    for j, f in enumerate(factors, start=1):
        if f <= 0.0 or approx_zero(f, sides.perimeter, tolerance):
            raise Infeasible(
                "no cyclic quadrilateral: s - a%d = %.17g is not positive" % (j, f)
            )
    return math.sqrt(math.prod(factors))


def circumcircle(p1, p2, p3):
    """Center and radius of the circle through three points, from the
    intersection of two perpendicular bisectors."""
    b = p2 - p1
    c = p3 - p1
    d = 2.0 * b.cross(c)
    if d == 0.0:
        raise ConcyclicityFailure("points are collinear, no circumcircle")
    bb = b.dot(b)
    cc = c.dot(c)
    offset = PlanePoint((c.y * bb - b.y * cc) / d, (b.x * cc - c.x * bb) / d)
    return p1 + offset, abs(offset)


def build_bicentric(sides, tolerance=DEFAULT_TOLERANCE):
    sides = _as_quad(sides)
    tangents = bicentric_tangents(sides, tolerance)
    (solution,) = all_radii(tangents, tolerance)
    embedding = construct_polygon(tangents, solution.radius, solution.winding)

    p1, p2, p3, p4 = embedding.vertices
    center, radius = circumcircle(p1, p2, p3)
    miss = abs(p4 - center) - radius
    if not approx_zero(miss, radius, tolerance):
        raise ConcyclicityFailure(
            "fourth vertex misses the circumcircle by %.3g (R = %.17g)" % (miss, radius)
        )
    return BicentricQuad(
        sides=sides,
        tangents=tangents,
        inradius=solution.radius,
        incenter=ORIGIN,
        circumradius=radius,
        circumcenter=center,
        embedding=embedding,
    )


def _tangent_point(inner_r, incenter, point):
    """Point of tangency, on the inner circle, of the tangent from `point`
    that advances counterclockwise around the circle."""
    d = point - incenter
    dist = abs(d)
    cos_phi = inner_r / dist
    sin_phi = math.sqrt(max(0.0, 1.0 - cos_phi * cos_phi))
    unit = d * (inner_r / dist)
    for candidate in (PlanePoint(cos_phi, sin_phi), PlanePoint(cos_phi, -sin_phi)):
        touch = unit * candidate
        if d.cross(touch) > 0.0:
            return incenter + touch
    return incenter + unit


def poncelet_step(
    inner_r, incenter, outer_R, outer_center, point, tolerance=DEFAULT_TOLERANCE
):
    """Follow the counterclockwise tangent from `point` to the inner circle
    until it meets the outer circle again."""
    offset = point - outer_center
    if not approx_eq(abs(offset), outer_R, outer_R, tolerance):
        raise PointNotOnCircle(
            "point (%.17g, %.17g) is %.3g from the outer circle"
            % (point.x, point.y, abs(offset) - outer_R)
        )
    if abs(point - incenter) <= inner_r:
        raise NoTangent("point lies inside the inner circle, no tangent exists")

    touch = _tangent_point(inner_r, incenter, point)
    direction = touch - point
    direction = direction * (1.0 / abs(direction))
    # |point + lam u - C|^2 = R^2 with lam = 0 (almost) one root; take the other.
    b = direction.dot(offset)
    c = offset.dot(offset) - outer_R * outer_R
    lam = -b + math.sqrt(max(0.0, b * b - c))
    return point + direction * lam


def poncelet_family(quad, start_angle, tolerance=PONCELET_TOLERANCE):
    """Another quadrilateral on the same pair of circles, started from the
    outer-circle point at `start_angle` about the circumcenter."""
    start = quad.circumcenter + PlanePoint.polar(quad.circumradius, start_angle)
    # Points drift off the outer circle slightly as the chain proceeds.
    step_tolerance = max(tolerance, DEFAULT_TOLERANCE)

    vertices = [start]
    touches = []
    point = start
    for _ in range(4):
        touches.append(_tangent_point(quad.inradius, quad.incenter, point))
        point = poncelet_step(
            quad.inradius,
            quad.incenter,
            quad.circumradius,
            quad.circumcenter,
            point,
            step_tolerance,
        )
        vertices.append(point)

    gap = abs(vertices[-1] - start)
    if gap > tolerance * quad.circumradius:
        raise PonceletClosureFailure(
            "tangent chain misses its start by %.3g (R = %.17g)" % (gap, quad.circumradius)
        )
    vertices = vertices[:4]
    # Edge p_(j-1) p_j touches the circle at q_j.
    tangency = [touches[3]] + touches[:3]
    return PolygonEmbedding(
        vertices=tuple(vertices),
        tangency_points=tuple(tangency),
        radius=quad.inradius,
        winding=1,
        closure_defect=gap / quad.inradius,
    )
