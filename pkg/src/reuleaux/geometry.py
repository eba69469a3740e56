"""Planar vector and angle primitives.

Points are plain ``float64`` arrays of shape ``(2,)``; angles are floats in
radians.
"""

from __future__ import annotations

import math

import numpy as np
import numpy.typing as npt

from .errors import DegenerateCircles, NoIntersection

Vec2 = npt.NDArray[np.float64]

TOL_SEP = 1e-9


def vec(x: float, y: float) -> Vec2:
    return np.array([x, y], dtype=float)


def unit_direction(theta: float) -> Vec2:
    """Return u(theta) = (cos theta, sin theta)."""
    return np.array([math.cos(theta), math.sin(theta)])


def unit_direction_derivative(theta: float) -> Vec2:
    """Return u'(theta) = (-sin theta, cos theta)."""
    return np.array([-math.sin(theta), math.cos(theta)])


def angle_of(v: Vec2) -> float:
    return math.atan2(v[1], v[0])


def distance(a: Vec2, b: Vec2) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def unit_circle_intersection(a: Vec2, b: Vec2) -> tuple[Vec2, Vec2]:
    """Intersect the unit circles centered at ``a`` and ``b``.

    Returns the two crossing points ordered (left of the directed segment
    a->b, right of it).

    Raises
    ------
    DegenerateCircles
        If ``|a - b| <= 1e-9``.
    NoIntersection
        If ``|a - b| >= 2 - 1e-9``.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    d = distance(a, b)
    if d <= TOL_SEP:
        raise DegenerateCircles(f"circle centers coincide (|a-b| = {d:.3g})")
    if d >= 2.0 - TOL_SEP:
        raise NoIntersection(f"unit circles do not meet (|a-b| = {d:.6g})")
    mid = 0.5 * (a + b)
    e = (b - a) / d
    left = np.array([-e[1], e[0]])
    off = math.sqrt(1.0 - (0.5 * d) ** 2)
    return mid + off * left, mid - off * left
