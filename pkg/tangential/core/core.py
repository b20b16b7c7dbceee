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
from typing import Sequence, Tuple

logger = logging.getLogger(__name__)

# Relative epsilon for every approximate comparison, scaled by the perimeter
# (or another natural length) of the problem at hand.
DEFAULT_TOLERANCE = 1e-9


class TangentialError(Exception):
    """Base class of all errors raised by the library."""


class InvalidSides(TangentialError, ValueError):
    pass


class NonpositiveTangent(TangentialError, ValueError):
    pass


class NonpositiveRadius(TangentialError, ValueError):
    pass


class ParityError(TangentialError):
    """The operation is not defined for this number of sides."""


class NotOdd(ParityError):
    pass


class NotEven(ParityError):
    pass


class NotTriangle(ParityError):
    pass


class NotQuad(ParityError):
    pass


class Infeasible(TangentialError):
    """No tangential polygon exists with the given sides (in this order).

    `violations` lists the failed conditions as structured descriptors.
    """

    def __init__(self, message, violations=(), interval=None):
        super().__init__(message)
        self.violations = list(violations)
        self.interval = interval


class AlternatingSumNonzero(Infeasible):
    pass


class EmptyInterval(Infeasible):
    pass


class EqualityViolated(Infeasible):
    pass


class OutOfInterval(TangentialError):
    def __init__(self, message, interval=None):
        super().__init__(message)
        self.interval = interval


class PointNotOnCircle(TangentialError):
    pass


class NoTangent(TangentialError):
    pass


class ConcyclicityFailure(TangentialError):
    pass


class PonceletClosureFailure(TangentialError):
    pass


def approx_zero(x, scale, tolerance=DEFAULT_TOLERANCE):
    """True if |x| is negligible relative to `scale`."""
    return abs(x) <= tolerance * abs(scale)


def approx_eq(x, y, scale, tolerance=DEFAULT_TOLERANCE):
    return approx_zero(x - y, scale, tolerance)


def _as_values(values):
    return tuple(float(v) for v in getattr(values, "values", values))


@dataclass(frozen=True)
class SideLengths:
    """Ordered cyclic list of side lengths a_1..a_n."""

    values: Tuple[float, ...]

    def __post_init__(self):
        values = _as_values(self.values)
        if len(values) < 3:
            raise InvalidSides("need at least 3 sides, got %d" % len(values))
        for j, a in enumerate(values, start=1):
            if not math.isfinite(a) or a <= 0.0:
                raise InvalidSides("side a%d = %r is not a positive length" % (j, a))
        if not math.isfinite(sum(values)):
            raise InvalidSides("perimeter of %d sides overflows" % len(values))
        object.__setattr__(self, "values", values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, index):
        return self.values[index]

    @property
    def n(self):
        return len(self.values)

    @property
    def perimeter(self):
        return sum(self.values)

    @property
    def semiperimeter(self):
        return self.perimeter / 2.0

    @property
    def parity(self):
        return "odd" if self.n % 2 else "even"

    def scaled(self, factor):
        return SideLengths(tuple(factor * a for a in self.values))


@dataclass(frozen=True)
class TangentLengths:
    """Tangent lengths t_1..t_n; side a_j is t_j + t_(j+1)."""

    values: Tuple[float, ...]

    def __post_init__(self):
        values = _as_values(self.values)
        if not values:
            raise NonpositiveTangent("need at least one tangent length")
        for j, t in enumerate(values, start=1):
            if not math.isfinite(t) or t <= 0.0:
                raise NonpositiveTangent(
                    "tangent length t%d = %r is not positive" % (j, t)
                )
        object.__setattr__(self, "values", values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, index):
        return self.values[index]

    @property
    def n(self):
        return len(self.values)

    @property
    def semiperimeter(self):
        # Same left-to-right order as sigma_1 in elementary_symmetric().
        return sum(self.values)

    def sides(self):
        """The side lengths t_j + t_(j+1) this decomposition produces."""
        t = self.values
        return SideLengths(tuple(t[j] + t[(j + 1) % len(t)] for j in range(len(t))))

    def scaled(self, factor):
        return TangentLengths(tuple(factor * t for t in self.values))


@dataclass(frozen=True)
class SymmetricFunctions:
    """sigma_0..sigma_n of a list of tangent lengths, sigma_0 = 1."""

    sigma: Tuple[float, ...]

    def __getitem__(self, j):
        return self.sigma[j]

    def __len__(self):
        return len(self.sigma)

    @property
    def n(self):
        return len(self.sigma) - 1


def elementary_symmetric(t):
    """Coefficients of prod_j (x + t_j), highest power first.

    Built one linear factor at a time; for positive t every update adds
    positive terms, so no cancellation occurs.
    """
    values = _as_values(t)
    sigma = [1.0] + [0.0] * len(values)
    for i, tj in enumerate(values, start=1):
        for j in range(i, 0, -1):
            sigma[j] += tj * sigma[j - 1]
    return SymmetricFunctions(tuple(sigma))


def cyclic_rotate(values: Sequence, k: int) -> list:
    """Return `values` starting at index k, wrapping around."""
    n = len(values)
    if not 0 <= k < n:
        raise IndexError("rotation %d out of range for %d values" % (k, n))
    values = list(values)
    return values[k:] + values[:k]
