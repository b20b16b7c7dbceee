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
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..core import (
    DEFAULT_TOLERANCE,
    Infeasible,
    NonpositiveRadius,
    NotTriangle,
    ParityError,
    SideLengths,
    TangentLengths,
    approx_zero,
    elementary_symmetric,
)

logger = logging.getLogger(__name__)

# Bisection stops once the bracket is this narrow relative to its upper end.
BISECTION_WIDTH = 1e-13
SECANT_STEPS = 2
MAX_ITERATIONS = 400


@dataclass(frozen=True)
class RadiusPolynomial:
    """Polynomial in x = r^2 whose roots are the squared inradii.

    coefficients are highest degree first: sigma_1, -sigma_3, sigma_5, ...
    """

    coefficients: Tuple[float, ...]
    degree: int
    n: int

    def __call__(self, x):
        return float(np.polyval(self.coefficients, x))

    def derivative(self, x):
        return float(np.polyval(np.polyder(np.asarray(self.coefficients)), x))

    def normalized_residual(self, x):
        """|p(x)| / (sigma_1 max(1, x)^k)."""
        norm = self.coefficients[0] * np.power(max(1.0, x), self.degree)
        return float(abs(self(x)) / norm)


@dataclass(frozen=True)
class InscribedSolution:
    radius: float
    winding: int
    r_squared: float
    area: float
    residual: float
    angle_defect: float

    @property
    def convex(self):
        return self.winding == 1

    @property
    def kind(self):
        return "convex" if self.convex else "star"

    def as_dict(self):
        return {
            "winding": self.winding,
            "kind": self.kind,
            "radius": self.radius,
            "r_squared": self.r_squared,
            "area": self.area,
            "residual": self.residual,
            "angle_defect": self.angle_defect,
        }


def _as_tangents(t):
    return t if isinstance(t, TangentLengths) else TangentLengths(t)


def radius_polynomial(sf, n):
    """The polynomial in r^2 from the odd-index symmetric functions.

    Odd n = 2k+1 uses sigma_1 .. sigma_n; even n = 2k+2 drops the factor r
    and uses sigma_1 .. sigma_(n-1).
    """
    coefficients = tuple(
        (-1.0) ** i * sf[j] for i, j in enumerate(range(1, n + 1, 2))
    )
    return RadiusPolynomial(coefficients, (n - 1) // 2, n)


def angle_sum(t, r):
    """f(r) = sum_j arctan(t_j / r), strictly decreasing from n pi/2 to 0."""
    if not r > 0.0:
        raise NonpositiveRadius("radius must be positive, got %r" % r)
    return math.fsum(math.atan(tj / r) for tj in getattr(t, "values", t))


def area_from_radius(t, r):
    if not r > 0.0:
        raise NonpositiveRadius("radius must be positive, got %r" % r)
    return r * _as_tangents(t).semiperimeter


def _bracket(values, target, r0):
    def g(r):
        return angle_sum(values, r) - target

    lo = hi = r0
    g_lo = g_hi = g(r0)
    steps = 0
    while g_hi >= 0.0:
        hi *= 2.0
        g_hi = g(hi)
        steps += 1
    while g_lo <= 0.0:
        lo /= 2.0
        g_lo = g(lo)
        steps += 1
    logger.debug("bracket for f = %r: (%r, %r) after %d steps", target, lo, hi, steps)
    return lo, hi, g_lo, g_hi


def _isolate(values, m, r0):
    """Root of f(r) - m pi by bisection then secant polish.

    Returns the final bracket and the best estimate inside it.
    """
    target = m * math.pi
    lo, hi, g_lo, g_hi = _bracket(values, target, r0)

    iterations = 0
    while hi - lo > BISECTION_WIDTH * hi and iterations < MAX_ITERATIONS:
        mid = 0.5 * (lo + hi)
        g_mid = angle_sum(values, mid) - target
        if g_mid > 0.0:
            lo, g_lo = mid, g_mid
        elif g_mid < 0.0:
            hi, g_hi = mid, g_mid
        else:
            return mid, mid, mid
        iterations += 1

    best = lo if abs(g_lo) < abs(g_hi) else hi
    for _ in range(SECANT_STEPS):
        if g_hi == g_lo:
            break
        r = hi - g_hi * (hi - lo) / (g_hi - g_lo)
        if not lo <= r <= hi:
            break
        g_r = angle_sum(values, r) - target
        if abs(g_r) < min(abs(g_lo), abs(g_hi)):
            best = r
        if g_r > 0.0:
            lo, g_lo = r, g_r
        elif g_r < 0.0:
            hi, g_hi = r, g_r
        else:
            return r, r, r
    logger.debug("winding %d: %d bisection steps, radius %r", m, iterations, best)
    return best, lo, hi


def _polish(poly, x, x_lo, x_hi):
    """One Newton step on the polynomial, kept only if it stays inside the
    root's bracket and lowers |p|."""
    px = poly(x)
    dpx = poly.derivative(x)
    if dpx == 0.0 or not math.isfinite(px) or not math.isfinite(dpx):
        return x
    candidate = x - px / dpx
    if x_lo <= candidate <= x_hi and abs(poly(candidate)) < abs(px):
        return candidate
    return x


def all_radii(t, tolerance=DEFAULT_TOLERANCE, max_workers=None) -> List[InscribedSolution]:
    """All k = floor((n-1)/2) inradii, ordered by winding m = 1..k.

    Radii strictly decrease with m; m = 1 is the convex polygon, larger m
    wind m times around the circle.

    The residual is only a diagnostic. Past about 30 sides the polynomial is
    ill-conditioned and its residual can pass 1e-9 at accurate roots; the
    angle defect stays small.
    """
    t = _as_tangents(t)
    n = t.n
    if n < 3:
        raise ParityError("need at least 3 tangent lengths, got %d" % n)
    k = (n - 1) // 2
    s = t.semiperimeter
    unit = s / n

    # The polynomial is homogeneous, so the residual is taken on tangents of
    # unit mean; this keeps it scale-free and the coefficients finite.
    poly = radius_polynomial(elementary_symmetric(t.scaled(1.0 / unit)), n)

    def solve(m):
        r, lo, hi = _isolate(t.values, m, unit)
        x = _polish(poly, (r / unit) ** 2, (lo / unit) ** 2, (hi / unit) ** 2)
        r = unit * math.sqrt(x)
        return InscribedSolution(
            radius=r,
            winding=m,
            r_squared=r * r,
            area=area_from_radius(t, r),
            residual=poly.normalized_residual(x),
            angle_defect=abs(angle_sum(t, r) - m * math.pi),
        )

    windings = range(1, k + 1)
    if max_workers is not None and max_workers > 1 and k > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            solutions = list(pool.map(solve, windings))
    else:
        solutions = [solve(m) for m in windings]

    for solution in solutions:
        if solution.residual > tolerance:
            logger.debug(
                "winding %d: polynomial residual %g above tolerance",
                solution.winding,
                solution.residual,
            )
    return solutions


def heron_area(sides, tolerance=DEFAULT_TOLERANCE):
    """Area of a triangle from its sides, sqrt(s (s-a)(s-b)(s-c))."""
    sides = sides if isinstance(sides, SideLengths) else SideLengths(sides)
    if sides.n != 3:
        raise NotTriangle("Heron's formula needs 3 sides, got %d" % sides.n)
    s = sides.semiperimeter
    factors = [s - a for a in sides.values]
    for a, f in zip(sides.values, factors):
        if f <= 0.0 or approx_zero(f, sides.perimeter, tolerance):
            raise Infeasible(
                "triangle inequality fails for side %.17g (s - a = %.17g)" % (a, f)
            )
    return math.sqrt(s * factors[0] * factors[1] * factors[2])


def closed_form_radii(t) -> Optional[List[float]]:
    """Squared inradii in closed form for k <= 2, largest first.

    Returns None when the polynomial has degree above 2.
    """
    t = _as_tangents(t)
    n = t.n
    k = (n - 1) // 2
    if k < 1 or k > 2:
        return None
    poly = radius_polynomial(elementary_symmetric(t), n)
    if k == 1:
        sigma_1, minus_sigma_3 = poly.coefficients
        return [-minus_sigma_3 / sigma_1]

    a, b, c = poly.coefficients
    # b < 0: take the root without cancellation first, the other from x1 x2 = c/a.
    q = -0.5 * (b - math.sqrt(max(b * b - 4.0 * a * c, 0.0)))
    return [q / a, c / q]
