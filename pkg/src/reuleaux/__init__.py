"""Planar curves of constant width represented by support functions.

Build shapes (:mod:`reuleaux.shapes`), evaluate and validate support
functions (:mod:`reuleaux.support`), measure perimeter and area
(:mod:`reuleaux.measures`), approximate by Reuleaux polygons
(:mod:`reuleaux.approximation`) and reduce any Reuleaux polygon to a Reuleaux
triangle without increasing its area (:mod:`reuleaux.reduction`).
"""

__version__ = "0.1.0"

from ._kernels import BACKEND
from .approximation import ApproximationPlan, ApproximationResult, approximate, assemble, build_plan, strictify
from .errors import ReuleauxError
from .geometry import unit_circle_intersection, unit_direction, unit_direction_derivative
from .measures import area, area_by_parts, measure, perimeter, width
from .reduction import (
    DescentTrace,
    SurgeryContext,
    build_surgery,
    check_distance_lemma,
    descend_to_triangle,
    find_minimal_edge,
    reduce_once,
)
from .shapes import (
    ReuleauxPolygon,
    disk,
    fourier_projection,
    max_admissible_delta,
    minkowski_combine,
    perturbed_circle,
    regular_reuleaux,
    reuleaux_from_vertices,
    reuleaux_triangle,
)
from .support import (
    BlendedWidthFunction,
    FourierWidthFunction,
    PiecewiseArcFunction,
    Shape,
    boundary_point,
    eval_h,
    eval_h_prime,
    radius_of_curvature,
    validate_convexity,
    validate_width,
)
