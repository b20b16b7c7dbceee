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

import json
import math
import time

import pytest

from utils.common import run_cli
from utils.helpers import Helpers

from tangential import (
    all_radii,
    bicentric_tangents,
    build_bicentric,
    check_feasible,
    construct_polygon,
    embed_solution,
    feasibility_interval_even,
    heron_area,
    poncelet_family,
    reconstructed_sides,
    sample_t1,
    shoelace_area,
    tangents_even,
    tangents_odd,
)


@pytest.mark.acceptance
class TestHeronEquivalence:
    @pytest.mark.exclusive
    def test_triangles(self, rng, fuzz_count, timing_slack):
        """r s from the pipeline equals Heron's formula on random triangles."""
        triangles = [Helpers.random_triangle(rng) for _ in range(fuzz_count(500))]
        start = time.perf_counter()
        areas = [all_radii(tangents_odd(sides))[0].area for sides in triangles]
        elapsed = time.perf_counter() - start
        print("%d triangles in %.3fs" % (len(triangles), elapsed))

        for sides, area in zip(triangles, areas):
            expected = heron_area(sides)
            assert area == pytest.approx(expected, rel=1e-11), "sides %s: %r != %r" % (
                sides,
                area,
                expected,
            )
        assert elapsed < 1.0 * timing_slack


@pytest.mark.acceptance
class TestRegularPolygons:
    @pytest.mark.exclusive
    def test_apothems(self, timing_slack):
        """Unit sides give radii (1/2) cot(m pi / n) for every winding."""
        start = time.perf_counter()
        results = {n: all_radii([0.5] * n) for n in range(3, 100)}
        elapsed = time.perf_counter() - start
        print("n = 3..99 in %.3fs" % elapsed)

        for n, solutions in results.items():
            assert len(solutions) == (n - 1) // 2
            for solution in solutions:
                expected = Helpers.regular_apothem(n, solution.winding)
                assert solution.radius == pytest.approx(
                    expected, rel=1e-10
                ), "n=%d m=%d: %r != %r" % (n, solution.winding, solution.radius, expected)
        assert elapsed < 10.0 * timing_slack


@pytest.mark.acceptance
class TestRootsAndClosure:
    @staticmethod
    def off_root_probes(radii):
        probes = [1.5 * radii[0], 2.0 * radii[0]]
        if len(radii) > 1:
            probes.append(0.5 * (radii[0] + radii[1]))
        else:
            probes.append(0.5 * radii[0])
        return probes

    def test_random_tangents(self, rng, fuzz_count):
        """Root count and order, residuals, closure at and off the roots, and
        the shoelace area identity for every winding."""
        for _ in range(fuzz_count(500)):
            n = int(rng.integers(3, 26))
            t = Helpers.random_tangents(rng, n)
            s = sum(t)
            solutions = all_radii(t)

            assert len(solutions) == (n - 1) // 2
            radii = [x.radius for x in solutions]
            assert all(a > b for a, b in zip(radii, radii[1:])), radii
            for solution in solutions:
                assert solution.residual < 1e-9, "n=%d m=%d residual %g" % (
                    n,
                    solution.winding,
                    solution.residual,
                )
                assert solution.angle_defect < 1e-10

                embedding = embed_solution(t, solution)
                assert embedding.closure_defect < 1e-9
                assert shoelace_area(embedding) == pytest.approx(
                    solution.radius * s, rel=1e-9
                )

            for r in self.off_root_probes(radii):
                defect = construct_polygon(t, r).closure_defect
                assert defect > 1e-3, "n=%d r=%r closes to %g" % (n, r, defect)


@pytest.mark.acceptance
class TestEvenFeasibility:
    @pytest.mark.exclusive
    def test_sweep_matches_brute_force(self, rng, fuzz_count, timing_slack):
        """The one-pass sweep agrees with checking every odd alternating chain."""
        cases = [
            Helpers.random_even_sides(rng, 2 * int(rng.integers(2, 7)))
            for _ in range(fuzz_count(1000))
        ]
        start = time.perf_counter()
        verdicts = [check_feasible(sides).feasible for sides in cases]
        elapsed = time.perf_counter() - start
        print("%d side lists in %.3fs, %d feasible" % (len(cases), elapsed, sum(verdicts)))

        for sides, verdict in zip(cases, verdicts):
            assert verdict == Helpers.brute_force_even_feasible(sides), sides
        assert 0 < sum(verdicts) < len(verdicts)
        assert elapsed < 2.0 * timing_slack


@pytest.mark.acceptance
class TestBicentric:
    def test_random_quads(self, rng, fuzz_count):
        for _ in range(fuzz_count(200)):
            sides = Helpers.random_bicentric_sides(rng)
            quad = build_bicentric(sides)
            t = quad.tangents
            s = t.semiperimeter
            assert quad.area ** 2 == pytest.approx(math.prod(sides), rel=1e-10)
            assert abs(t[0] * t[2] - t[1] * t[3]) < 1e-12 * s * s
            p4 = quad.embedding.vertices[3]
            miss = abs(abs(p4 - quad.circumcenter) - quad.circumradius)
            assert miss <= 1e-9 * quad.circumradius

    def test_area_maximal(self, rng, fuzz_count):
        """Over the t1 family the area peaks at the bicentric choice."""
        for _ in range(fuzz_count(50)):
            a = Helpers.random_bicentric_sides(rng)
            interval = feasibility_interval_even(a)
            step = interval.width / 1000.0
            samples = sample_t1(interval, step=step, margin=1e-9 * sum(a))
            assert len(samples) == 999

            areas = [all_radii(tangents_even(a, t1))[0].area for t1 in samples]
            best = max(range(len(samples)), key=areas.__getitem__)
            t_star = bicentric_tangents(a)[0]
            assert abs(samples[best] - t_star) <= step * (1 + 1e-9), (
                "sides %s: peak at %r, bicentric t1 %r" % (a, samples[best], t_star)
            )
            assert areas[best] <= math.sqrt(math.prod(a)) + 1e-9

    def test_poncelet(self, rng, fuzz_count):
        """Chains started anywhere on the circumcircle close, and the new
        quadrilaterals share the incircle."""
        for _ in range(fuzz_count(50)):
            quad = build_bicentric(Helpers.random_bicentric_sides(rng))
            for i in range(16):
                family = poncelet_family(quad, 2.0 * math.pi * i / 16)
                sides = reconstructed_sides(family)
                assert check_feasible(sides).feasible, sides.values
                assert build_bicentric(sides).inradius == pytest.approx(
                    quad.inradius, rel=1e-8
                )


@pytest.mark.acceptance
@pytest.mark.cli
class TestCliContract:
    MATRIX = [
        (["check", "3,4,5"], 0),
        (["check", "1,3,1,3"], 2),
        (["check", "3,4"], 1),
        (["check", "3,,4,5,"], 1),
        (["solve", "1e308,1e308,1e308"], 1),
        (["solve", "3,4,5", "--format", "structured"], 0),
        (["solve", "1,1,1,1,1", "--format", "structured"], 0),
        (["solve", "1,2,3,2", "--format", "structured"], 0),
        (["solve", "1,2,3,2", "--t1", "1.0"], 2),
        (["sweep", "3,4,5"], 2),
    ]

    def test_reproducible(self):
        for args, code in self.MATRIX:
            first = run_cli(args, hide=True)
            second = run_cli(args, hide=True)
            assert first.exited == code, "%s exited %d" % (args, first.exited)
            assert (first.stdout, first.stderr, first.exited) == (
                second.stdout,
                second.stderr,
                second.exited,
            ), "%s is not reproducible" % args

    def test_worked_examples(self):
        data = json.loads(run_cli(["solve", "3,4,5", "--format", "structured"]).stdout)
        assert data["solutions"][0]["area"] == pytest.approx(6.0, rel=1e-12)

        data = json.loads(run_cli(["solve", "1,1,1,1,1", "--format", "structured"]).stdout)
        assert len(data["solutions"]) == 2

        data = json.loads(run_cli(["solve", "1,2,3,2", "--format", "structured"]).stdout)
        assert data["solutions"][0]["area"] == pytest.approx(math.sqrt(12.0), rel=1e-12)
