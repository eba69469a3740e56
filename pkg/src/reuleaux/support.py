"""Support functions of width-one constant width shapes.

Two concrete representations are provided:

* :class:`FourierWidthFunction` -- ``h(t) = 1/2 + sum_k a_k cos(k t) + b_k sin(k t)``
  over odd harmonics ``k``. The width equation ``h(t) + h(t + pi) = 1`` holds
  by construction.
* :class:`PiecewiseArcFunction` -- alternating vertex pieces ``h = p . u(t)``
  and arc pieces ``h = 1 + z . u(t)``; the exact support function of a
  Reuleaux polygon.

All evaluators accept a scalar angle or an array of angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

from . import _kernels
from .errors import BreakpointAmbiguity, ConstraintViolation, EvenHarmonic, InvalidHarmonic

TWO_PI = 2.0 * math.pi

WIDTH_GRID = 4096
CURVATURE_GRID = 8192
KALLAY_THETA_GRID = 512
KALLAY_HALF_WIDTH = 128  # 257 offsets spanning [-pi/2, pi/2]
VALID_TOL = 1e-9
BREAKPOINT_TOL = 1e-12


def _grid(theta):
    arr = np.asarray(theta, dtype=float)
    return np.atleast_1d(arr).ravel(), arr.ndim == 0, arr.shape


def _unshape(values, scalar, shape):
    if scalar:
        return float(values[0])
    return values.reshape(shape)


def uniform_grid(n: int) -> np.ndarray:
    return TWO_PI * np.arange(n) / n


class FourierWidthFunction:
    """Truncated odd-harmonic trigonometric support function with mean 1/2.

    Parameters
    ----------
    terms : iterable of (k, a_k, b_k)
        Odd positive harmonic indices, strictly increasing.
    """

    __slots__ = ("ks", "a", "b")

    def __init__(self, terms=()):
        # exactly-zero terms carry no information; dropping them keeps equality structural
        terms = [(int(k), float(a), float(b)) for k, a, b in terms if a != 0.0 or b != 0.0]
        ks = np.array([t[0] for t in terms], dtype=np.int64)
        for k in ks:
            if k < 1:
                raise InvalidHarmonic(f"harmonic index must be positive, got {k}")
            if k % 2 == 0:
                raise EvenHarmonic(
                    f"even harmonic k={k} breaks h(t) + h(t + pi) = 1"
                )
        if len(ks) > 1 and np.any(np.diff(ks) <= 0):
            raise InvalidHarmonic(f"harmonic indices must be strictly increasing: {ks.tolist()}")
        a = np.array([t[1] for t in terms], dtype=float)
        b = np.array([t[2] for t in terms], dtype=float)
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
            raise InvalidHarmonic("coefficients must be finite")
        for arr in (ks, a, b):
            arr.setflags(write=False)
        object.__setattr__(self, "ks", ks)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_arrays(cls, ks, a, b) -> FourierWidthFunction:
        return cls(zip(ks, a, b))

    def __setattr__(self, name, value):
        raise AttributeError("FourierWidthFunction is immutable")

    @property
    def terms(self) -> list[tuple[int, float, float]]:
        return [(int(k), float(a), float(b)) for k, a, b in zip(self.ks, self.a, self.b)]

    def __eq__(self, other):
        if not isinstance(other, FourierWidthFunction):
            return NotImplemented
        return (
            np.array_equal(self.ks, other.ks)
            and np.array_equal(self.a, other.a)
            and np.array_equal(self.b, other.b)
        )

    def __hash__(self):
        return hash((tuple(self.ks.tolist()), tuple(self.a.tolist()), tuple(self.b.tolist())))

    def __repr__(self):
        return f"FourierWidthFunction({self.terms!r})"

    def h(self, theta):
        t, scalar, shape = _grid(theta)
        return _unshape(0.5 + _kernels.trig_series(t, self.ks, self.a, self.b), scalar, shape)

    def dh(self, theta):
        t, scalar, shape = _grid(theta)
        k = self.ks.astype(float)
        return _unshape(_kernels.trig_series(t, self.ks, k * self.b, -k * self.a), scalar, shape)

    def curvature(self, theta):
        """h'' + h."""
        t, scalar, shape = _grid(theta)
        w = 1.0 - self.ks.astype(float) ** 2
        return _unshape(0.5 + _kernels.trig_series(t, self.ks, w * self.a, w * self.b), scalar, shape)

    def scaled(self, factor: float) -> FourierWidthFunction:
        """Scale every harmonic (the mean stays 1/2)."""
        return FourierWidthFunction.from_arrays(self.ks, factor * self.a, factor * self.b)


class Piece(NamedTuple):
    t_start: float
    t_end: float
    mode: str  # "vertex" or "arc"
    point: tuple[float, float]


class PiecewiseArcFunction:
    """Alternating vertex/arc support function of a Reuleaux polygon.

    Pieces are stored in canonical rotation: ``breaks[0] <= 0 < breaks[1]``
    and ``breaks[-1] == breaks[0] + 2 pi``. On a vertex piece with point
    ``p``, ``h(t) = p . u(t)``; on an arc piece with center ``z``,
    ``h(t) = 1 + z . u(t)``.

    Parameters
    ----------
    breaks : array of shape (m + 1,)
        Strictly increasing angles; the last one is replaced by
        ``breaks[0] + 2 pi``.
    is_arc : array of shape (m,)
    points : array of shape (m, 2)
        Vertex position or arc center for each piece.
    tol : float
        Tolerance for junction continuity and antipodal pairing.
    """

    __slots__ = ("breaks", "is_arc", "points")

    def __init__(self, breaks, is_arc, points, tol: float = VALID_TOL):
        breaks = np.array(breaks, dtype=float)
        is_arc = np.array(is_arc, dtype=bool)
        points = np.array(points, dtype=float).reshape(-1, 2)
        m = len(is_arc)
        if len(breaks) != m + 1 or len(points) != m:
            raise ConstraintViolation("breaks/modes/points have inconsistent lengths")
        if m < 6 or m % 2 or (m // 2) % 2 == 0:
            raise ConstraintViolation(f"piece count {m} is not twice an odd number >= 3")
        if abs(breaks[-1] - breaks[0] - TWO_PI) > 1e-9:
            raise ConstraintViolation(
                f"pieces span {breaks[-1] - breaks[0]:.12g} rad instead of 2 pi"
            )
        breaks[-1] = breaks[0] + TWO_PI
        if np.any(np.diff(breaks) <= 0.0):
            raise ConstraintViolation("breakpoints are not strictly increasing")
        if np.any(is_arc == np.roll(is_arc, 1)):
            raise ConstraintViolation("vertex and arc pieces do not alternate")

        breaks, is_arc, points = _canonical_rotation(breaks, is_arc, points)
        _check_junctions(breaks, is_arc, points, tol)
        _check_antipodal(breaks, is_arc, points, tol)
        for arr in (breaks, is_arc, points):
            arr.setflags(write=False)
        object.__setattr__(self, "breaks", breaks)
        object.__setattr__(self, "is_arc", is_arc)
        object.__setattr__(self, "points", points)

    def __setattr__(self, name, value):
        raise AttributeError("PiecewiseArcFunction is immutable")

    def __eq__(self, other):
        if not isinstance(other, PiecewiseArcFunction):
            return NotImplemented
        return (
            np.array_equal(self.breaks, other.breaks)
            and np.array_equal(self.is_arc, other.is_arc)
            and np.array_equal(self.points, other.points)
        )

    def __hash__(self):
        return hash((self.breaks.tobytes(), self.is_arc.tobytes(), self.points.tobytes()))

    def __repr__(self):
        return f"PiecewiseArcFunction({len(self.is_arc)} pieces)"

    @property
    def n_pieces(self) -> int:
        return len(self.is_arc)

    @property
    def pieces(self) -> list[Piece]:
        return [
            Piece(
                float(self.breaks[i]),
                float(self.breaks[i + 1]),
                "arc" if self.is_arc[i] else "vertex",
                (float(self.points[i, 0]), float(self.points[i, 1])),
            )
            for i in range(self.n_pieces)
        ]

    @property
    def vertices(self) -> np.ndarray:
        """Vertex points in order of increasing normal angle (counterclockwise)."""
        return self.points[~self.is_arc]

    def _eval(self, theta, deriv):
        t, scalar, shape = _grid(theta)
        vals = _kernels.piecewise_eval(
            t, self.breaks, self.is_arc, self.points[:, 0], self.points[:, 1], deriv
        )
        return _unshape(vals, scalar, shape)

    def h(self, theta):
        return self._eval(theta, 0)

    def dh(self, theta):
        return self._eval(theta, 1)

    def breakpoint_distance(self, theta):
        """Angular distance from each ``theta`` to the nearest breakpoint."""
        t, scalar, shape = _grid(theta)
        r = self.breaks[0] + np.mod(t - self.breaks[0], TWO_PI)
        idx = np.searchsorted(self.breaks, r)
        lo = self.breaks[np.clip(idx - 1, 0, len(self.breaks) - 1)]
        hi = self.breaks[np.clip(idx, 0, len(self.breaks) - 1)]
        d = np.minimum(np.abs(r - lo), np.abs(hi - r))
        return _unshape(d, scalar, shape)

    def curvature(self, theta):
        """h'' + h: 0 on vertex pieces, 1 on arc pieces.

        Raises
        ------
        BreakpointAmbiguity
            If any angle lies within 1e-12 of a junction.
        """
        d = np.atleast_1d(self.breakpoint_distance(theta))
        if np.any(d <= BREAKPOINT_TOL):
            raise BreakpointAmbiguity("curvature is undefined at a vertex/arc junction")
        return self._eval(theta, 2)

    def scaled(self, factor: float) -> BlendedWidthFunction:
        return BlendedWidthFunction(self, factor)

    def boundary_point(self, theta):
        t, scalar, shape = _grid(theta)
        idx = _kernels.piece_index(t, self.breaks)
        pts = self.points[idx].copy()
        arc = self.is_arc[idx]
        pts[arc, 0] += np.cos(t[arc])
        pts[arc, 1] += np.sin(t[arc])
        if scalar:
            return pts[0]
        return pts.reshape(shape + (2,))


def _canonical_rotation(breaks, is_arc, points):
    m = len(is_arc)
    b = breaks - TWO_PI * math.ceil(breaks[0] / TWO_PI)
    if b[0] > 0.0:
        b = b - TWO_PI
    elif b[0] <= -TWO_PI:
        b = b + TWO_PI
    # b[0] in (-2pi, 0]; piece i contains 0
    i = int(np.searchsorted(b, 0.0, side="right")) - 1
    order = np.r_[np.arange(i, m), np.arange(0, i)]
    starts = np.r_[b[i:m], b[0:i] + TWO_PI]
    new_breaks = np.r_[starts, starts[0] + TWO_PI]
    return new_breaks, is_arc[order].copy(), points[order].copy()


def _check_junctions(breaks, is_arc, points, tol):
    m = len(is_arc)
    for i in range(m):
        j = (i + 1) % m
        t = breaks[i + 1]
        u = np.array([math.cos(t), math.sin(t)])
        if is_arc[i]:
            vertex, center = points[j], points[i]
        else:
            vertex, center = points[i], points[j]
        gap = float(np.hypot(*(vertex - center - u)))
        if gap > tol:
            raise ConstraintViolation(
                f"junction {i}->{j} at t={t:.12g}: |p - (z + u(t))| = {gap:.3g} > {tol:g}"
            )


def _check_antipodal(breaks, is_arc, points, tol):
    m = len(is_arc)
    half = m // 2
    for i in range(m):
        j = (i + half) % m
        if is_arc[i] == is_arc[j]:
            raise ConstraintViolation(f"pieces {i} and {j} are antipodal but share a mode")
        if float(np.hypot(*(points[i] - points[j]))) > tol:
            raise ConstraintViolation(f"antipodal pieces {i}, {j} carry different points")
        dt = (breaks[j] - breaks[i] - math.pi) % TWO_PI
        dt = min(dt, TWO_PI - dt)
        if dt > tol:
            raise ConstraintViolation(f"antipodal pieces {i}, {j} are not offset by pi")


class BlendedWidthFunction:
    """``h = 1/2 + scale (h_base - 1/2)`` for a piecewise ``base`` and ``0 < scale <= 1``.

    Vertices of the base turn into arcs of radius ``(1 - scale) / 2`` and its
    arcs into arcs of radius ``(1 + scale) / 2``, so ``h'' + h`` stays strictly
    inside ``(0, 1)`` for ``scale < 1``.
    """

    __slots__ = ("base", "scale")

    def __init__(self, base: PiecewiseArcFunction, scale: float):
        scale = float(scale)
        if not isinstance(base, PiecewiseArcFunction):
            raise TypeError("the base of a blend must be piecewise")
        if not 0.0 < scale <= 1.0:
            raise ConstraintViolation(f"blend scale must lie in (0, 1], got {scale}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "scale", scale)

    def __setattr__(self, name, value):
        raise AttributeError("BlendedWidthFunction is immutable")

    def __eq__(self, other):
        if not isinstance(other, BlendedWidthFunction):
            return NotImplemented
        return self.scale == other.scale and self.base == other.base

    def __hash__(self):
        return hash((self.base, self.scale))

    def __repr__(self):
        return f"BlendedWidthFunction({self.base!r}, scale={self.scale!r})"

    def h(self, theta):
        return 0.5 + self.scale * (np.asarray(self.base.h(theta)) - 0.5)

    def dh(self, theta):
        return self.scale * np.asarray(self.base.dh(theta))

    def curvature(self, theta):
        return 0.5 + self.scale * (np.asarray(self.base.curvature(theta)) - 0.5)

    def scaled(self, factor: float) -> BlendedWidthFunction:
        return BlendedWidthFunction(self.base, self.scale * factor)


Representation = Union[FourierWidthFunction, PiecewiseArcFunction, BlendedWidthFunction]
REPRESENTATIONS = (FourierWidthFunction, PiecewiseArcFunction, BlendedWidthFunction)


@dataclass(frozen=True, eq=False)
class Shape:
    """A constant width shape, determined by its support function."""

    rep: Representation
    label: str = ""

    def __eq__(self, other):
        if not isinstance(other, Shape):
            return NotImplemented
        return type(self.rep) is type(other.rep) and self.rep == other.rep

    def __hash__(self):
        return hash(self.rep)


def rep_of(obj) -> Representation:
    """Return the support-function representation behind a shape-like object."""
    if isinstance(obj, REPRESENTATIONS):
        return obj
    if isinstance(obj, Shape):
        return obj.rep
    shape = getattr(obj, "shape", None)
    if isinstance(shape, Shape):
        return shape.rep
    raise TypeError(f"not a shape: {obj!r}")


def as_shape(obj) -> Shape:
    if isinstance(obj, Shape):
        return obj
    if isinstance(obj, REPRESENTATIONS):
        return Shape(obj)
    shape = getattr(obj, "shape", None)
    if isinstance(shape, Shape):
        return shape
    raise TypeError(f"not a shape: {obj!r}")


def eval_h(shape, theta):
    """Support value h(theta)."""
    return rep_of(shape).h(theta)


def eval_h_prime(shape, theta):
    """Analytic derivative h'(theta)."""
    return rep_of(shape).dh(theta)


def radius_of_curvature(shape, theta):
    """h''(theta) + h(theta).

    For piecewise shapes this is exactly 0 on vertex pieces and 1 on arc
    pieces, and :class:`BreakpointAmbiguity` is raised at a junction.
    """
    return rep_of(shape).curvature(theta)


def boundary_point(shape, theta):
    """gamma(theta) = h u + h' u', the boundary point with outward normal u(theta)."""
    rep = rep_of(shape)
    if isinstance(rep, PiecewiseArcFunction):
        return rep.boundary_point(theta)
    t, scalar, shape_ = _grid(theta)
    h = rep.h(t)
    dh = rep.dh(t)
    c, s = np.cos(t), np.sin(t)
    pts = np.column_stack([h * c - dh * s, h * s + dh * c])
    if scalar:
        return pts[0]
    return pts.reshape(shape_ + (2,))


def curvature_range(shape, grid: int = CURVATURE_GRID) -> tuple[float, float]:
    """(min, max) of h'' + h; exact for piecewise shapes and their blends."""
    rep = rep_of(shape)
    if isinstance(rep, PiecewiseArcFunction):
        return 0.0, 1.0
    if isinstance(rep, BlendedWidthFunction):
        return 0.5 * (1.0 - rep.scale), 0.5 * (1.0 + rep.scale)
    k = rep.curvature(uniform_grid(grid))
    return float(k.min()), float(k.max())


@dataclass(frozen=True)
class WidthReport:
    max_deviation: float
    grid: int
    passed: bool

    def __str__(self):
        status = "pass" if self.passed else "FAIL"
        return f"width: max |h(t) + h(t+pi) - 1| = {self.max_deviation:.3e} on {self.grid} points [{status}]"


@dataclass(frozen=True)
class ConvexityReport:
    min_curvature: float
    min_kallay_slack: float
    kallay_theta: float
    kallay_phi: float
    curvature_ok: bool
    kallay_ok: bool

    @property
    def passed(self) -> bool:
        return self.curvature_ok and self.kallay_ok

    def __str__(self):
        status = "pass" if self.passed else "FAIL"
        return (
            f"convexity: min(h''+h) = {self.min_curvature:.6g}, "
            f"min Kallay slack = {self.min_kallay_slack:.3e} "
            f"(t={self.kallay_theta:.4f}, phi={self.kallay_phi:.4f}) [{status}]"
        )


def validate_width(shape, grid: int = WIDTH_GRID) -> WidthReport:
    rep = rep_of(shape)
    t = uniform_grid(grid)
    dev = float(np.max(np.abs(rep.h(t) + rep.h(t + math.pi) - 1.0)))
    return WidthReport(dev, grid, dev <= VALID_TOL)


def validate_convexity(shape) -> ConvexityReport:
    """Check h'' + h >= 0 on a grid and the Kallay inequality
    ``h(t + phi) + h(t - phi) >= 2 h(t) cos(phi)`` on a 512 x 257 grid."""
    rep = rep_of(shape)
    kmin, _ = curvature_range(rep)
    h = rep.h(uniform_grid(KALLAY_THETA_GRID))
    slack, j, s = _kernels.kallay_min_slack(h, KALLAY_HALF_WIDTH)
    dt = TWO_PI / KALLAY_THETA_GRID
    return ConvexityReport(
        min_curvature=kmin,
        min_kallay_slack=float(slack),
        kallay_theta=j * dt,
        kallay_phi=s * dt,
        curvature_ok=kmin >= -VALID_TOL,
        kallay_ok=slack >= -VALID_TOL,
    )
