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

import itertools
import math

from tangential import DEFAULT_TOLERANCE


class Helpers:
    @staticmethod
    def brute_force_symmetric(t):
        """sigma_0..sigma_n as sums over all j-subsets."""
        n = len(t)
        return [
            math.fsum(math.prod(c) for c in itertools.combinations(t, j))
            for j in range(n + 1)
        ]

    @staticmethod
    def alternating_chain(sides, start, length):
        """a_start - a_(start+1) + ... over `length` terms, 0-based cyclic."""
        n = len(sides)
        return sum(
            (1 if i % 2 == 0 else -1) * sides[(start + i) % n] for i in range(length)
        )

    @staticmethod
    def brute_force_even_feasible(sides, tolerance=DEFAULT_TOLERANCE):
        """Zero alternating sum and every cyclic odd-length alternating chain
        positive."""
        n = len(sides)
        perimeter = sum(sides)
        if abs(Helpers.alternating_chain(sides, 0, n)) > tolerance * perimeter:
            return False
        for start in range(n):
            for length in range(1, n, 2):
                if Helpers.alternating_chain(sides, start, length) <= tolerance * perimeter:
                    return False
        return True

    @staticmethod
    def random_even_sides(rng, n):
        """Small-integer side list, with the alternating sum forced to zero
        about two thirds of the time; integers keep every chain exact."""
        sides = [float(a) for a in rng.integers(1, 10, size=n)]
        if rng.random() < 2.0 / 3.0:
            rest = Helpers.alternating_chain(sides, 0, n - 1)
            if rest > 0:
                sides[-1] = rest
        return sides

    @staticmethod
    def random_tangents(rng, n, low=0.1, high=10.0):
        return [float(t) for t in rng.uniform(low, high, size=n)]

    @staticmethod
    def sides_from_tangents(t):
        n = len(t)
        return [t[j] + t[(j + 1) % n] for j in range(n)]

    @staticmethod
    def random_triangle(rng, low=0.1, high=10.0):
        """Sides uniform in (low, high), redrawn until strictly a triangle."""
        while True:
            a, b, c = (float(x) for x in rng.uniform(low, high, size=3))
            s = (a + b + c) / 2.0
            if min(s - a, s - b, s - c) > 1e-3 * s:
                return [a, b, c]

    @staticmethod
    def random_bicentric_sides(rng, low=0.2, high=5.0):
        """Sides of a tangential quadrilateral, so a1 + a3 = a2 + a4."""
        return Helpers.sides_from_tangents(Helpers.random_tangents(rng, 4, low, high))

    @staticmethod
    def kite_sides(u, v):
        """Right triangle with legs u, v mirrored about its hypotenuse."""
        return [u, u, v, v]

    @staticmethod
    def regular_apothem(n, m=1, side=1.0):
        return 0.5 * side / math.tan(m * math.pi / n)

    @staticmethod
    def shuffled(rng, values):
        return [values[i] for i in rng.permutation(len(values))]
