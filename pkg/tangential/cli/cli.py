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

import argparse
import csv
import json
import logging
import math
import os
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Union

from ..bicentric import bicentric_tangents, build_bicentric, poncelet_family
from ..core import (
    DEFAULT_TOLERANCE,
    InvalidSides,
    SideLengths,
    TangentialError,
)
from ..geometry import ORIGIN, embed_solution, shoelace_area
from ..radius import all_radii
from ..tangents import (
    check_feasible,
    feasibility_interval_even,
    sample_t1,
    tangents_even,
    tangents_odd,
)
from .render import Figure, to_svg

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_INFEASIBLE = 2
EXIT_IO = 3

TOLERANCE_ENV = "TANGENTIAL_TOLERANCE"


class MalformedInput(Exception):
    pass


class PreconditionFailed(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # Usage errors are malformed input (exit 1), not argparse's exit 2.
    def error(self, message):
        raise MalformedInput(message)


def fmt(x):
    return "%.17g" % x


@dataclass
class SolveRequest:
    sides: List[float]
    t1: Optional[float] = None
    roots: Union[str, int] = "all"
    render: Optional[str] = None
    tolerance: float = DEFAULT_TOLERANCE


@dataclass
class SolveResponse:
    request: SolveRequest
    feasibility: dict
    t1: Optional[float]
    tangents: List[float]
    solutions: List[dict]
    vertices: List[list]
    notes: List[str] = field(default_factory=list)

    def as_dict(self):
        # sides/t1/tolerance echo the request so the output can be fed back
        # through --input.
        return {
            "sides": self.request.sides,
            "t1": self.request.t1,
            "tolerance": self.request.tolerance,
            "roots": self.request.roots,
            "feasibility": self.feasibility,
            "resolved_t1": self.t1,
            "tangents": self.tangents,
            "solutions": self.solutions,
            "vertices": self.vertices,
            "notes": self.notes,
        }


def parse_sides(text):
    items = text.split(",")
    if any(not item.strip() for item in items):
        raise MalformedInput("empty field in side lengths %r" % text)
    try:
        return [float(item) for item in items]
    except ValueError:
        raise MalformedInput("could not parse side lengths from %r" % text)


def parse_roots(text):
    if text == "all":
        return "all"
    try:
        m = int(text)
    except ValueError:
        raise MalformedInput("--roots takes 'all' or a winding number, got %r" % text)
    if m < 1:
        raise MalformedInput("winding number must be at least 1, got %d" % m)
    return m


def _positive_tolerance(value, origin):
    try:
        tolerance = float(value)
    except (TypeError, ValueError):
        raise MalformedInput("%s: tolerance %r is not a number" % (origin, value))
    if not (math.isfinite(tolerance) and tolerance > 0.0):
        raise MalformedInput("%s: tolerance must be positive, got %r" % (origin, value))
    return tolerance


def _load_input(path):
    try:
        with open(path) as fd:
            data = json.load(fd)
    except (OSError, ValueError) as e:
        raise MalformedInput("cannot read input %s: %s" % (path, e))
    if not isinstance(data, dict) or "sides" not in data:
        raise MalformedInput("input %s must be an object with a 'sides' list" % path)
    if not isinstance(data["sides"], list):
        raise MalformedInput("input %s: 'sides' must be a list" % path)
    return data


def build_request(args):
    """Merge command line, input file and environment into a SolveRequest.

    Flags win over the file, the file over TANGENTIAL_TOLERANCE.
    """
    data = {}
    if args.input is not None:
        data = _load_input(args.input)
        if args.sides is not None:
            raise MalformedInput("give the sides either inline or with --input, not both")
        raw_sides = data["sides"]
    elif args.sides is not None:
        raw_sides = parse_sides(args.sides)
    else:
        raise MalformedInput("no side lengths given")

    try:
        sides = [float(a) for a in raw_sides]
    except (TypeError, ValueError):
        raise MalformedInput("side lengths must be numbers")

    if args.tolerance is not None:
        tolerance = _positive_tolerance(args.tolerance, "--tolerance")
    elif data.get("tolerance") is not None:
        tolerance = _positive_tolerance(data["tolerance"], args.input)
    elif os.environ.get(TOLERANCE_ENV):
        tolerance = _positive_tolerance(os.environ[TOLERANCE_ENV], TOLERANCE_ENV)
    else:
        tolerance = DEFAULT_TOLERANCE

    t1 = getattr(args, "t1", None)
    if t1 is None and data.get("t1") is not None:
        try:
            t1 = float(data["t1"])
        except (TypeError, ValueError):
            raise MalformedInput("t1 must be a number")

    # Raises InvalidSides for fewer than 3 or nonpositive entries.
    SideLengths(sides)
    return SolveRequest(
        sides=sides,
        t1=t1,
        roots=getattr(args, "roots", "all"),
        render=getattr(args, "out", None),
        tolerance=tolerance,
    )


def resolve_tangents(request):
    """Tangent lengths for a request, with notes on any defaulted t1.

    Odd n has a unique answer; n = 4 with no t1 takes the bicentric choice;
    other even n default to the interval midpoint.
    """
    sides = SideLengths(request.sides)
    tolerance = request.tolerance
    notes = []
    if sides.n % 2:
        if request.t1 is not None:
            raise MalformedInput("t1 applies to an even number of sides only")
        return tangents_odd(sides, tolerance), None, notes, False

    if request.t1 is not None:
        tangents = tangents_even(sides, request.t1, tolerance)
        return tangents, request.t1, notes, False

    if sides.n == 4:
        feasibility_interval_even(sides, tolerance)
        tangents = bicentric_tangents(sides, tolerance)
        notes.append("bicentric default t1 = %s" % fmt(tangents[0]))
        return tangents, tangents[0], notes, True

    interval = feasibility_interval_even(sides, tolerance)
    t1 = interval.midpoint
    notes.append("default t1 = interval midpoint %s" % fmt(t1))
    return tangents_even(sides, t1, tolerance), t1, notes, False


def _select(solutions, roots):
    if roots == "all":
        return solutions
    if roots > len(solutions):
        raise PreconditionFailed(
            "no solution with winding %d, there are %d" % (roots, len(solutions))
        )
    return [solutions[roots - 1]]


def solve(request):
    """Run the whole pipeline; returns (response, embeddings, bicentric)."""
    sides = SideLengths(request.sides)
    report = check_feasible(sides, request.tolerance)
    tangents, t1, notes, bicentric = resolve_tangents(request)
    solutions = _select(all_radii(tangents, request.tolerance), request.roots)

    entries = []
    embeddings = []
    for solution in solutions:
        embedding = embed_solution(tangents, solution)
        polygon_area = shoelace_area(embedding)
        entry = solution.as_dict()
        entry["shoelace_area"] = polygon_area
        entry["area_difference"] = solution.area - polygon_area
        entry["closure_defect"] = embedding.closure_defect
        entries.append(entry)
        embeddings.append(embedding)
        logger.info(
            "winding %d: r = %s, area %s (shoelace %s)",
            solution.winding,
            fmt(solution.radius),
            fmt(solution.area),
            fmt(polygon_area),
        )

    response = SolveResponse(
        request=request,
        feasibility=report.as_dict(),
        t1=t1,
        tangents=list(tangents.values),
        solutions=entries,
        vertices=[[list(p.as_tuple()) for p in e.vertices] for e in embeddings],
        notes=notes,
    )
    return response, embeddings, bicentric


def _verdict(report, n):
    word = "feasible" if report.feasible else "infeasible"
    line = "%s (%s n=%d)" % (word, report.parity, n)
    if report.feasible and report.interval is not None:
        line += ": t1 in (%s, %s)" % (fmt(report.interval.lo), fmt(report.interval.hi))
    return line


def _emit(args, text_lines, structured):
    if args.format == "structured":
        sys.stdout.write(json.dumps(structured, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("".join(line + "\n" for line in text_lines))


def cmd_check(args):
    request = build_request(args)
    sides = SideLengths(request.sides)
    report = check_feasible(sides, request.tolerance)
    lines = [_verdict(report, sides.n)]
    lines += ["  violation: %s" % v for v in report.violations]
    structured = dict(report.as_dict(), n=sides.n, sides=request.sides)
    _emit(args, lines, structured)
    return EXIT_OK if report.feasible else EXIT_INFEASIBLE


def cmd_solve(args):
    request = build_request(args)
    response, _, _ = solve(request)
    sides = SideLengths(request.sides)

    lines = ["feasible (%s n=%d)" % (sides.parity, sides.n)]
    lines += ["note: %s" % note for note in response.notes]
    lines.append("tangents: %s" % " ".join(fmt(t) for t in response.tangents))
    lines.append("semiperimeter: %s" % fmt(sum(response.tangents)))
    for entry, vertices in zip(response.solutions, response.vertices):
        lines.append(
            "m=%d %s radius=%s area=%s shoelace=%s difference=%s residual=%s"
            % (
                entry["winding"],
                entry["kind"],
                fmt(entry["radius"]),
                fmt(entry["area"]),
                fmt(entry["shoelace_area"]),
                fmt(entry["area_difference"]),
                fmt(entry["residual"]),
            )
        )
        for x, y in vertices:
            lines.append("  vertex %s %s" % (fmt(x), fmt(y)))
    _emit(args, lines, response.as_dict())
    return EXIT_OK


def cmd_render(args):
    request = build_request(args)
    response, embeddings, bicentric = solve(request)

    figure = Figure()
    # Larger windings have smaller incircles about the same center.
    for embedding in embeddings:
        figure.add_circle(ORIGIN, embedding.radius, "incircle")
        figure.add_polygon(embedding.vertices, embedding.winding)
        figure.add_points(embedding.tangency_points)

    if args.poncelet is not None and not bicentric:
        raise PreconditionFailed(
            "--poncelet needs a quadrilateral with equal alternating sums and no --t1"
        )
    if bicentric:
        quad = build_bicentric(request.sides, request.tolerance)
        figure.add_circle(quad.circumcenter, quad.circumradius, "circumcircle")
        if args.poncelet is not None:
            family = poncelet_family(quad, args.poncelet)
            figure.add_polygon(family.vertices, family.winding, "family")
            figure.add_points(family.tangency_points)
    logger.debug("rendering %d polygons", len(figure.polygons))

    svg = to_svg(figure)
    with open(request.render, "w") as fd:
        fd.write(svg)
    logger.info("wrote %s", request.render)
    return EXIT_OK


def cmd_sweep(args):
    request = build_request(args)
    sides = SideLengths(request.sides)
    if sides.n % 2:
        raise PreconditionFailed("sweep requires even n, got n=%d" % sides.n)
    if args.step is not None and not args.step > 0.0:
        raise MalformedInput("--step must be positive, got %r" % args.step)

    interval = feasibility_interval_even(sides, request.tolerance)
    samples = sample_t1(
        interval,
        start=args.start,
        stop=args.stop,
        step=args.step,
        margin=request.tolerance * sides.perimeter,
    )
    logger.info("sweeping %d values of t1 in (%s, %s)", len(samples), fmt(interval.lo), fmt(interval.hi))

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(
        ["t1"] + ["t_%d" % j for j in range(1, sides.n + 1)] + ["winding", "radius", "area"]
    )
    for t1 in samples:
        tangents = tangents_even(sides, t1, request.tolerance)
        for solution in _select(all_radii(tangents, request.tolerance), request.roots):
            writer.writerow(
                [fmt(t1)]
                + [fmt(t) for t in tangents.values]
                + [solution.winding, fmt(solution.radius), fmt(solution.area)]
            )
    return EXIT_OK


def build_parser(prog="tangential"):
    common = _ArgumentParser(add_help=False)
    common.add_argument(
        "sides", nargs="?", help="comma separated side lengths, e.g. 3,4,5"
    )
    common.add_argument("--input", help="JSON file with sides, t1 and tolerance")
    common.add_argument(
        "--tolerance",
        help="relative epsilon for approximate comparisons "
        "(default: $%s or %g)" % (TOLERANCE_ENV, DEFAULT_TOLERANCE),
    )
    common.add_argument(
        "--format", choices=("text", "structured"), default="text", help="report format"
    )
    common.add_argument(
        "-v",
        "--verbose",
        dest="verbose_count",
        action="count",
        default=0,
        help="increases log verbosity for each occurrence.",
    )

    parser = _ArgumentParser(
        prog=prog, description="Polygons circumscribed about a circle"
    )
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    check = commands.add_parser("check", parents=[common], help="decide feasibility")
    check.set_defaults(func=cmd_check)

    solve_cmd = commands.add_parser("solve", parents=[common], help="solve all radii")
    solve_cmd.add_argument("--t1", type=float, help="first tangent length (even n)")
    solve_cmd.add_argument("--roots", type=parse_roots, default="all", help="all or m")
    solve_cmd.set_defaults(func=cmd_solve)

    render = commands.add_parser("render", parents=[common], help="write an SVG")
    render.add_argument("--out", required=True, help="SVG output path")
    render.add_argument("--t1", type=float, help="first tangent length (even n)")
    render.add_argument("--roots", type=parse_roots, default="all", help="all or m")
    render.add_argument(
        "--poncelet",
        type=float,
        metavar="THETA",
        help="also draw the quadrilateral started at angle THETA (bicentric n=4)",
    )
    render.set_defaults(func=cmd_render)

    sweep = commands.add_parser("sweep", parents=[common], help="CSV over the t1 family")
    sweep.add_argument("--from", dest="start", type=float, help="first t1")
    sweep.add_argument("--to", dest="stop", type=float, help="last t1")
    sweep.add_argument("--step", type=float, help="t1 increment")
    sweep.add_argument("--roots", type=parse_roots, default="all", help="all or m")
    sweep.set_defaults(func=cmd_sweep)
    return parser


def _main(argv=sys.argv):
    logging.basicConfig(
        stream=sys.stderr, level=logging.WARNING, format="%(name)s: %(levelname)s: %(message)s"
    )
    parser = build_parser()
    try:
        args = parser.parse_args(argv[1:])
        logging.getLogger().setLevel(max(3 - args.verbose_count, 1) * 10)
        return args.func(args)
    except MalformedInput as e:
        logger.error("%s", e)
        return EXIT_MALFORMED
    except InvalidSides as e:
        logger.error("%s", e)
        return EXIT_MALFORMED
    except PreconditionFailed as e:
        logger.error("%s", e)
        return EXIT_INFEASIBLE
    except TangentialError as e:
        logger.error("%s", e)
        for violation in getattr(e, "violations", ()):
            logger.error("  violation: %s", violation)
        return EXIT_INFEASIBLE
    except OSError as e:
        logger.error("%s", e)
        return EXIT_IO


def main():
    try:
        sys.exit(_main(sys.argv))
    except Exception as e:
        logger.exception(e)
        sys.exit(-1)
    finally:
        logging.shutdown()
