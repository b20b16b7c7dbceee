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

from dataclasses import dataclass, field
from typing import List, Tuple

CONVEX_STROKE = "#1f4e9c"
STAR_STROKE = "#c0392b"
FAMILY_STROKE = "#2e8b57"
CIRCLE_STROKE = "#555555"


def _num(x):
    # Fixed precision keeps output byte-identical across runs.
    return "%.6f" % x


@dataclass
class Figure:
    """Shapes to draw, in mathematical (y-up) coordinates."""

    circles: List[Tuple[object, float, str]] = field(default_factory=list)
    polygons: List[Tuple[tuple, int, str]] = field(default_factory=list)
    points: List[object] = field(default_factory=list)

    def add_circle(self, center, radius, role):
        self.circles.append((center, radius, role))

    def add_polygon(self, vertices, winding, role="solution"):
        self.polygons.append((tuple(vertices), winding, role))

    def add_points(self, points):
        self.points.extend(points)

    def bounds(self):
        xs, ys = [], []
        for center, radius, _ in self.circles:
            xs += [center.x - radius, center.x + radius]
            ys += [center.y - radius, center.y + radius]
        for vertices, _, _ in self.polygons:
            xs += [p.x for p in vertices]
            ys += [p.y for p in vertices]
        xs += [p.x for p in self.points]
        ys += [p.y for p in self.points]
        return min(xs), min(ys), max(xs), max(ys)


def _polygon_style(winding, role):
    if role == "family":
        return 'stroke="%s" stroke-dasharray="6 3"' % FAMILY_STROKE
    if winding > 1:
        return 'stroke="%s" stroke-dasharray="4 2"' % STAR_STROKE
    return 'stroke="%s"' % CONVEX_STROKE


def to_svg(figure, margin=0.05, width=800):
    """Serialize a Figure; the viewBox fits everything with `margin` of the
    larger extent on each side, and y is flipped so up is up."""
    x0, y0, x1, y1 = figure.bounds()
    extent = max(x1 - x0, y1 - y0)
    pad = margin * extent
    view_w = (x1 - x0) + 2 * pad
    view_h = (y1 - y0) + 2 * pad
    height = width * view_h / view_w
    dot = 0.008 * extent
    font = 0.04 * extent

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="%s %s %s %s">'
        % (width, round(height), _num(x0 - pad), _num(-y1 - pad), _num(view_w), _num(view_h)),
    ]
    for center, radius, role in figure.circles:
        dash = ' stroke-dasharray="2 2"' if role == "circumcircle" else ""
        lines.append(
            '<circle class="%s" cx="%s" cy="%s" r="%s" fill="none" stroke="%s"%s '
            'stroke-width="1" vector-effect="non-scaling-stroke"/>'
            % (role, _num(center.x), _num(-center.y), _num(radius), CIRCLE_STROKE, dash)
        )
    for vertices, winding, role in figure.polygons:
        points = " ".join("%s,%s" % (_num(p.x), _num(-p.y)) for p in vertices)
        lines.append(
            '<polygon class="%s" points="%s" fill="none" %s stroke-width="1.5" '
            'vector-effect="non-scaling-stroke"/>'
            % (role, points, _polygon_style(winding, role))
        )
        if winding > 1:
            anchor = vertices[0]
            lines.append(
                '<text x="%s" y="%s" font-size="%s" fill="%s">m=%d</text>'
                % (_num(anchor.x), _num(-anchor.y), _num(font), STAR_STROKE, winding)
            )
    for p in figure.points:
        lines.append(
            '<circle class="tangency" cx="%s" cy="%s" r="%s" fill="%s"/>'
            % (_num(p.x), _num(-p.y), _num(dot), CIRCLE_STROKE)
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
