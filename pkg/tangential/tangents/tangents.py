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
from dataclasses import dataclass, field
from typing import List, Optional

from ..core import (
    DEFAULT_TOLERANCE,
    AlternatingSumNonzero,
    EmptyInterval,
    Infeasible,
    NotEven,
    NotOdd,
    OutOfInterval,
    SideLengths,
    TangentLengths,
    approx_zero,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    """A failed feasibility condition.

    kind is "chain" for an alternating sum a_start - a_(start+1) + ... of
    `length` terms (cyclic indices, 1-based) that must be positive, or
    "equality" for the full alternating sum of an even side list, which must
    vanish.
    """

    kind: str
    start: int
    length: int
    value: float

    def describe(self):
        if self.kind == "equality":
            return (
                "alternating sum a1 - a2 + ... - a%d = %.17g, "
                "sides at odd and even positions must have equal sums"
                % (self.length, self.value)
            )
        return "alternating sum of %d sides starting at a%d = %.17g is not positive" % (
            self.length,
            self.start,
            self.value,
        )

    def __str__(self):
        return self.describe()

    def as_dict(self):
        return {
            "kind": self.kind,
            "start": self.start,
            "length": self.length,
            "value": self.value,
        }


@dataclass(frozen=True)
class FeasibilityInterval:
    """Open interval (lo, hi) of admissible t_1 for an even side list."""

    lo: float
    hi: float
    alternating_sum: float
    # Sweep positions at which lo and hi were attained (0 is the initial 0).
    lo_index: int = field(default=0, compare=False)
    hi_index: int = field(default=1, compare=False)

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2.0

    @property
    def is_empty(self):
        return self.lo >= self.hi

    def contains(self, t1, margin=0.0):
        return self.lo + margin < t1 < self.hi - margin

    def as_dict(self):
        return {
            "lo": self.lo,
            "hi": self.hi,
            "alternating_sum": self.alternating_sum,
        }


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    parity: str
    violations: List[Violation]
    interval: Optional[FeasibilityInterval] = None

    def as_dict(self):
        return {
            "feasible": self.feasible,
            "parity": self.parity,
            "violations": [v.as_dict() for v in self.violations],
            "interval": None if self.interval is None else self.interval.as_dict(),
        }


def _odd_alternating_sums(a):
    """All n cyclic alternating sums of length n, one per starting index.

    With P[i] the signed prefix sum a_0 - a_1 + ... (-1)^(i-1) a_(i-1), the
    sum starting at i is (-1)^i (P[n] - 2 P[i]) when n is odd.
    """
    n = len(a)
    prefix = [0.0] * (n + 1)
    for i, ai in enumerate(a):
        prefix[i + 1] = prefix[i] + (ai if i % 2 == 0 else -ai)
    total = prefix[n]
    return [
        (total - 2.0 * prefix[i]) if i % 2 == 0 else (2.0 * prefix[i] - total)
        for i in range(n)
    ]


def _odd_violations(sides, tolerance):
    sums = _odd_alternating_sums(sides.values)
    return sums, [
        Violation("chain", i + 1, sides.n, s)
        for i, s in enumerate(sums)
        if s <= 0.0 or approx_zero(s, sides.perimeter, tolerance)
    ]


def tangents_odd(sides, tolerance=DEFAULT_TOLERANCE):
    """Unique tangent lengths of an odd side list.

    t_i is half the alternating sum of length n starting at a_i.
    """
    sides = sides if isinstance(sides, SideLengths) else SideLengths(sides)
    if sides.n % 2 == 0:
        raise NotOdd("tangents_odd needs an odd number of sides, got %d" % sides.n)

    sums, violations = _odd_violations(sides, tolerance)
    if violations:
        logger.debug("odd side list %s infeasible: %s", sides.values, violations)
        raise Infeasible(
            "no circumscribed polygon: " + "; ".join(map(str, violations)),
            violations,
        )
    return TangentLengths(tuple(s / 2.0 for s in sums))


def _sweep(sides):
    """Left-to-right sweep of the running alternating sum.

    After odd steps hi is lowered to the running sum, after even steps lo is
    raised to it.
    """
    a = sides.values
    lo, hi, v = 0.0, a[0], 0.0
    lo_index, hi_index = 0, 1
    for i, ai in enumerate(a, start=1):
        if i % 2:
            v += ai
            if v < hi:
                hi, hi_index = v, i
        else:
            v -= ai
            if v > lo:
                lo, lo_index = v, i
    return FeasibilityInterval(lo, hi, v, lo_index, hi_index)


def _interval_violations(sides, interval, tolerance):
    n = sides.n
    scale = sides.perimeter
    violations = []
    if not approx_zero(interval.alternating_sum, scale, tolerance):
        violations.append(Violation("equality", 1, n, interval.alternating_sum))
    if interval.width <= tolerance * scale:
        # hi - lo is the alternating chain from just after the lower bound's
        # position through the upper bound's position, wrapping if needed.
        start = interval.lo_index % n + 1
        length = (interval.hi_index - interval.lo_index) % n
        violations.append(Violation("chain", start, length, interval.width))
    return violations


def feasibility_interval_even(sides, tolerance=DEFAULT_TOLERANCE):
    """Open interval of t_1 values giving all-positive tangent lengths."""
    sides = sides if isinstance(sides, SideLengths) else SideLengths(sides)
    if sides.n % 2:
        raise NotEven(
            "feasibility_interval_even needs an even number of sides, got %d"
            % sides.n
        )

    interval = _sweep(sides)
    scale = sides.perimeter
    violations = _interval_violations(sides, interval, tolerance)
    if not approx_zero(interval.alternating_sum, scale, tolerance):
        raise AlternatingSumNonzero(
            "the alternating sum is not zero as required (%.17g)"
            % interval.alternating_sum,
            violations,
            interval,
        )
    if interval.width <= tolerance * scale:
        raise EmptyInterval(
            "the choice interval for t1 is empty: (%.17g, %.17g)"
            % (interval.lo, interval.hi),
            violations,
            interval,
        )
    return interval


def tangents_even(sides, t1, tolerance=DEFAULT_TOLERANCE):
    """Tangent lengths of an even side list for a chosen t_1."""
    sides = sides if isinstance(sides, SideLengths) else SideLengths(sides)
    interval = feasibility_interval_even(sides, tolerance)
    if not interval.contains(t1, tolerance * sides.perimeter):
        raise OutOfInterval(
            "t1 = %.17g is outside the open interval (%.17g, %.17g)"
            % (t1, interval.lo, interval.hi),
            interval,
        )

    t = [float(t1)]
    for a in sides.values[:-1]:
        t.append(a - t[-1])
    return TangentLengths(tuple(t))


def sample_t1(interval, start=None, stop=None, step=None, margin=0.0):
    """Evenly spaced t_1 values start, start + step, ... up to stop, keeping
    only those more than `margin` inside the open interval.

    Defaults cover the interval in 20 steps.
    """
    start = interval.lo if start is None else float(start)
    stop = interval.hi if stop is None else float(stop)
    if step is None:
        step = interval.width / 20.0
    if not step > 0.0:
        raise ValueError("sweep step must be positive, got %r" % step)
    count = int(math.floor((stop - start) / step + 1e-9))
    samples = []
    for i in range(count + 1):
        t1 = start + i * step
        if interval.contains(t1, margin):
            samples.append(t1)
    return samples


def check_feasible(sides, tolerance=DEFAULT_TOLERANCE):
    """Report whether a tangential polygon with these sides exists.

    Never raises on infeasible input.
    """
    sides = sides if isinstance(sides, SideLengths) else SideLengths(sides)
    if sides.n % 2:
        _, violations = _odd_violations(sides, tolerance)
        return FeasibilityReport(not violations, "odd", violations)

    interval = _sweep(sides)
    violations = _interval_violations(sides, interval, tolerance)
    return FeasibilityReport(not violations, "even", violations, interval)
