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
from typing import Tuple

import numpy as np

from ..core import (
    NonpositiveRadius,
    SideLengths,
    TangentLengths,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PlanePoint:
    """A point of the plane, also used as the complex number x + iy."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("point coordinates must be finite: (%r, %r)" % (self.x, self.y))

    @classmethod
    def polar(cls, radius, angle):
        return cls(radius * math.cos(angle), radius * math.sin(angle))

    def __add__(self, other):
        return PlanePoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return PlanePoint(self.x - other.x, self.y - other.y)

    def __mul__(self, other):
        if isinstance(other, PlanePoint):
            return PlanePoint(
                self.x * other.x - self.y * other.y,
                self.x * other.y + self.y * other.x,
            )
        return PlanePoint(self.x * other, self.y * other)

    __rmul__ = __mul__

    def __abs__(self):
        return math.hypot(self.x, self.y)

    def conjugate(self):
        return PlanePoint(self.x, -self.y)

    def dot(self, other):
        return self.x * other.x + self.y * other.y

    def cross(self, other):
        return self.x * other.y - self.y * other.x

    def angle(self):
        return math.atan2(self.y, self.x)

    def as_tuple(self):
        return (self.x, self.y)


ORIGIN = PlanePoint(0.0, 0.0)


@dataclass(frozen=True)
class PolygonEmbedding:
    """Vertices p_j and tangency points q_j of a polygon about a circle of
    the given radius centered at the origin.

    q_j lies on the edge p_(j-1) p_j; winding is -1 when the radius was not
    a root.
    """

    vertices: Tuple[PlanePoint, ...]
    tangency_points: Tuple[PlanePoint, ...]
    radius: float
    winding: int
    closure_defect: float

    @property
    def n(self):
        return len(self.vertices)

    def closes(self, tolerance=1e-9):
        return self.closure_defect <= tolerance

    def as_dict(self):
        return {
            "radius": self.radius,
            "winding": self.winding,
            "closure_defect": self.closure_defect,
            "vertices": [p.as_tuple() for p in self.vertices],
            "tangency_points": [q.as_tuple() for q in self.tangency_points],
        }


def construct_polygon(t, r, winding=None):
    """Walk around the circle of radius r laying off the tangent lengths.

    p_j = q_j (r + i t_j) / r and q_(j+1) = p_j r / (r - i t_j); the second
    division is done as multiplication by r + i t_j over r^2 + t_j^2. Any
    r > 0 is accepted; the path closes only at the roots of the radius
    polynomial.
    """
    if not r > 0.0:
        raise NonpositiveRadius("radius must be positive, got %r" % r)
    if not isinstance(t, TangentLengths):
        # Raises NonpositiveTangent for a zero or negative t_j.
        t = TangentLengths(t)
    r = float(r)

    first = PlanePoint(r, 0.0)
    q = first
    vertices = []
    tangency_points = []
    for tj in t.values:
        forward = PlanePoint(r, tj)
        tangency_points.append(q)
        p = q * forward * (1.0 / r)
        vertices.append(p)
        q = p * forward * (r / (r * r + tj * tj))

    closure_defect = abs(q - first) / r
    logger.debug("embedding at r=%r closes to %g", r, closure_defect)
    return PolygonEmbedding(
        vertices=tuple(vertices),
        tangency_points=tuple(tangency_points),
        radius=r,
        winding=-1 if winding is None else int(winding),
        closure_defect=closure_defect,
    )


def embed_solution(t, solution):
    """Embedding for one InscribedSolution, recording its winding."""
    return construct_polygon(t, solution.radius, solution.winding)


def _coordinates(embedding):
    xs = np.array([p.x for p in embedding.vertices])
    ys = np.array([p.y for p in embedding.vertices])
    return xs, ys


def shoelace_area(embedding):
    """Signed area, counterclockwise positive; a path winding m times counts
    the area it encloses m times."""
    xs, ys = _coordinates(embedding)
    return 0.5 * float(np.sum(xs * np.roll(ys, -1) - np.roll(xs, -1) * ys))


def reconstructed_sides(embedding):
    xs, ys = _coordinates(embedding)
    lengths = np.hypot(np.roll(xs, -1) - xs, np.roll(ys, -1) - ys)
    return SideLengths(tuple(float(a) for a in lengths))


def winding_number(embedding, center=ORIGIN):
    """Number of turns the vertex path makes about `center`, from the sum of
    signed angles subtended by the edges."""
    total = 0.0
    vertices = embedding.vertices
    for j, p in enumerate(vertices):
        a = p - center
        b = vertices[(j + 1) % len(vertices)] - center
        total += math.atan2(a.cross(b), a.dot(b))
    return int(math.floor(0.5 + total / (2.0 * math.pi)))


def is_convex(embedding):
    """All turns between consecutive edges have the same sign and the edge
    directions turn through one full revolution (stars turn more)."""
    vertices = embedding.vertices
    n = len(vertices)
    signs = set()
    turning = 0.0
    for j in range(n):
        e1 = vertices[(j + 1) % n] - vertices[j]
        e2 = vertices[(j + 2) % n] - vertices[(j + 1) % n]
        signs.add(math.copysign(1.0, e1.cross(e2)))
        turning += math.atan2(e1.cross(e2), e1.dot(e2))
    return len(signs) == 1 and abs(round(turning / (2.0 * math.pi))) == 1
