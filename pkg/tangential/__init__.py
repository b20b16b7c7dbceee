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

"""Tangential polygons: existence, construction and measurement of polygons
circumscribed about a circle, from an ordered list of side lengths."""

import logging

from .core import (
    DEFAULT_TOLERANCE,
    AlternatingSumNonzero,
    ConcyclicityFailure,
    EmptyInterval,
    EqualityViolated,
    Infeasible,
    InvalidSides,
    NonpositiveRadius,
    NonpositiveTangent,
    NoTangent,
    NotEven,
    NotOdd,
    NotQuad,
    NotTriangle,
    OutOfInterval,
    ParityError,
    PointNotOnCircle,
    PonceletClosureFailure,
    SideLengths,
    SymmetricFunctions,
    TangentialError,
    TangentLengths,
    approx_eq,
    approx_zero,
    cyclic_rotate,
    elementary_symmetric,
)
from .tangents import (
    FeasibilityInterval,
    FeasibilityReport,
    Violation,
    check_feasible,
    feasibility_interval_even,
    sample_t1,
    tangents_even,
    tangents_odd,
)
from .radius import (
    InscribedSolution,
    RadiusPolynomial,
    all_radii,
    angle_sum,
    area_from_radius,
    closed_form_radii,
    heron_area,
    radius_polynomial,
)
from .geometry import (
    ORIGIN,
    PlanePoint,
    PolygonEmbedding,
    construct_polygon,
    embed_solution,
    is_convex,
    reconstructed_sides,
    shoelace_area,
    winding_number,
)
from .bicentric import (
    BicentricQuad,
    bicentric_tangents,
    brahmagupta_area,
    build_bicentric,
    circumcircle,
    poncelet_family,
    poncelet_step,
)

__version__ = "1.0.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())
