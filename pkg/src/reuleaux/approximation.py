"""Approximation of a constant width shape by Reuleaux polygons in the C^1 norm.

The construction has three steps:

1. strictify: ``h_d = (h + d) / (1 + 2 d)`` forces ``h'' + h >= d / (1 + 2d)``,
   so the boundary parametrization becomes injective;
2. plan: sample ``gamma`` at ``t_i = i pi / n`` and find, for each consecutive
   pair, the unit circle through both samples whose center ``z_i`` lies within
   distance 1 of the two antipodal samples;
3. assemble: on ``[0, pi]`` the support function follows vertex, arc, vertex
   pieces on each ``[t_{i-1}, t_i]``; ``[pi, 2 pi]`` is filled by
   ``h(t + pi) = 1 - h(t)``.

The error budget is split evenly: strictification and polygonization each
get ``eps / 2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AssemblyDegenerate, EpsOutOfRange, GeometryFailure, InvalidParameter
from .geometry import distance, unit_circle_intersection
from .shapes import ReuleauxPolygon, reuleaux_from_vertices
from .support import (
    TWO_PI,
    PiecewiseArcFunction,
    Shape,
    as_shape,
    boundary_point,
    rep_of,
    uniform_grid,
)

ERROR_GRID = 16384
MIN_PIECE = 1e-10
MERGE_TOL = 1e-9
ANGLE_SLACK = 1e-9


def strictify(shape, delta: float) -> Shape:
    """Return the shape with support function ``(h + delta) / (1 + 2 delta)``.

    Fourier inputs scale their coefficients; Reuleaux polygons become an exact
    :class:`~reuleaux.support.BlendedWidthFunction`. Either way
    ``h'' + h >= delta / (1 + 2 delta)`` afterwards.
    """
    if not delta > 0.0:
        raise InvalidParameter(f"delta must be positive, got {delta}")
    rep = rep_of(shape)
    label = as_shape(shape).label
    # (h + d)/(1 + 2d) = 1/2 + (h - 1/2)/(1 + 2d)
    return Shape(rep.scaled(1.0 / (1.0 + 2.0 * delta)), f"strict({label})")


@dataclass(frozen=True)
class ApproximationPlan:
    eps: float
    delta: float
    n: int
    thetas: np.ndarray
    gammas: np.ndarray
    centers: np.ndarray
    phis: np.ndarray
    psis: np.ndarray
    eps_budget: tuple[float, float]
    original: Shape
    strictified: Shape


@dataclass(frozen=True)
class ApproximationResult:
    polygon: ReuleauxPolygon
    plan: ApproximationPlan
    sup_h_error: float
    sup_h_prime_error: float


def choose_delta(shape, eps: float) -> float:
    """Strictification parameter meeting the ``eps / 2`` share of the budget.

    Uses ``|h - h_d| <= d/(1+2d) |2h - 1|`` and ``|h' - h_d'| <= 2d/(1+2d) |h'|``
    with suprema taken on a 16384-point grid.
    """
    rep = rep_of(shape)
    t = uniform_grid(ERROR_GRID)
    bound = max(float(np.max(np.abs(2.0 * rep.h(t) - 1.0))), 2.0 * float(np.max(np.abs(rep.dh(t)))))
    # ratio = d / (1 + 2d); capped so d stays <= 1/2 when the shape is (nearly) a centered disk
    ratio = 0.25 if bound == 0.0 else min(0.5 * eps / bound, 0.25)
    return ratio / (1.0 - 2.0 * ratio)


def _wrap_near(angle: float, ref: float) -> float:
    return ref + math.remainder(angle - ref, TWO_PI)


def build_plan(shape, eps: float) -> ApproximationPlan:
    """Choose ``delta`` and ``n`` and solve for arc centers ``z_i`` and junction angles.

    Raises
    ------
    EpsOutOfRange
        Unless ``0 < eps <= 1``.
    """
    if not 0.0 < eps <= 1.0:
        raise EpsOutOfRange(f"eps must satisfy 0 < eps <= 1, got {eps}")
    original = as_shape(shape)
    delta = choose_delta(original, eps)
    strict = strictify(original, delta)
    n = math.ceil(TWO_PI / eps)
    while math.pi / n > 0.5 * eps:
        n += 1

    thetas = math.pi * np.arange(n + 1) / n
    thetas[-1] = math.pi
    gammas = boundary_point(strict, thetas)
    antipodes = boundary_point(strict, thetas + math.pi)

    centers = np.empty((n, 2))
    phis = np.empty(n)
    psis = np.empty(n)
    for i in range(1, n + 1):
        g0, g1 = gammas[i - 1], gammas[i]
        cands = unit_circle_intersection(g1, g0)
        # the center must see both antipodal samples within unit distance
        reach = [max(distance(z, antipodes[i]), distance(z, antipodes[i - 1])) for z in cands]
        z = cands[int(np.argmin(reach))]
        if min(reach) > 1.0 + 1e-9:
            raise GeometryFailure(f"no admissible arc center on [t_{i - 1}, t_{i}]")
        lo, hi = thetas[i - 1], thetas[i]
        mid = 0.5 * (lo + hi)
        phi = _wrap_near(math.atan2(g0[1] - z[1], g0[0] - z[0]), mid)
        psi = _wrap_near(math.atan2(g1[1] - z[1], g1[0] - z[0]), mid)
        if not (lo - ANGLE_SLACK <= phi <= psi + ANGLE_SLACK and psi <= hi + ANGLE_SLACK):
            raise GeometryFailure(
                f"junction angles out of order on interval {i}: "
                f"{lo:.12g} <= {phi:.12g} <= {psi:.12g} <= {hi:.12g} fails"
            )
        phi = min(max(phi, lo), hi)
        psi = min(max(psi, phi), hi)
        centers[i - 1] = z
        phis[i - 1] = phi
        psis[i - 1] = psi

    for arr in (thetas, gammas, centers, phis, psis):
        arr.setflags(write=False)
    return ApproximationPlan(
        eps=eps,
        delta=delta,
        n=n,
        thetas=thetas,
        gammas=gammas,
        centers=centers,
        phis=phis,
        psis=psis,
        eps_budget=(0.5 * eps, 0.5 * eps),
        original=original,
        strictified=strict,
    )


def _half_pieces(plan: ApproximationPlan) -> list[tuple[float, float, bool, np.ndarray]]:
    pieces = []
    for i in range(1, plan.n + 1):
        lo, hi = plan.thetas[i - 1], plan.thetas[i]
        phi, psi = plan.phis[i - 1], plan.psis[i - 1]
        pieces.append((lo, phi, False, plan.gammas[i - 1]))
        pieces.append((phi, psi, True, plan.centers[i - 1]))
        pieces.append((psi, hi, False, plan.gammas[i]))
    return pieces


def _merge(pieces):
    """Drop near-empty pieces and fuse neighbors sharing mode and point (cyclically)."""
    kept = [p for p in pieces if p[1] - p[0] >= MIN_PIECE]
    out: list[list] = []
    for t0, t1, arc, pt in kept:
        if out and out[-1][2] == arc:
            if distance(out[-1][3], pt) > MERGE_TOL:
                raise AssemblyDegenerate("adjacent pieces share a mode but not a point")
            out[-1][1] = t1
        else:
            out.append([t0, t1, arc, pt])
    if len(out) > 1 and out[0][2] == out[-1][2]:
        if distance(out[0][3], out[-1][3]) > MERGE_TOL:
            raise AssemblyDegenerate("pieces at the seam share a mode but not a point")
        out[0][0] = out[-1][0] - TWO_PI
        out.pop()
    return out


def assemble(plan: ApproximationPlan) -> ApproximationResult:
    """Build the approximating Reuleaux polygon and measure its C^1 error.

    Errors are sup norms on a 16384-point grid against the original
    (unstrictified) shape.

    Raises
    ------
    AssemblyDegenerate
        If merging leaves fewer than 3 vertices.
    """
    half = _half_pieces(plan)
    full = half + [(t0 + math.pi, t1 + math.pi, not arc, pt) for t0, t1, arc, pt in half]
    pieces = _merge(full)
    n_vertices = sum(1 for p in pieces if not p[2])
    if n_vertices < 3 or len(pieces) != 2 * n_vertices:
        raise AssemblyDegenerate(f"assembly left {n_vertices} vertices")

    breaks = [p[0] for p in pieces] + [pieces[0][0] + TWO_PI]
    support = PiecewiseArcFunction(
        breaks, [p[2] for p in pieces], np.array([p[3] for p in pieces]), tol=MERGE_TOL
    )
    polygon = reuleaux_from_vertices(support.vertices, label=f"approx(eps={plan.eps:g})")

    t = uniform_grid(ERROR_GRID)
    orig = rep_of(plan.original)
    err_h = float(np.max(np.abs(orig.h(t) - polygon.support.h(t))))
    err_dh = float(np.max(np.abs(orig.dh(t) - polygon.support.dh(t))))
    return ApproximationResult(polygon, plan, err_h, err_dh)


def approximate(shape, eps: float) -> ApproximationResult:
    """Reuleaux polygon whose support function is within ``eps`` of ``shape`` in C^1."""
    return assemble(build_plan(shape, eps))
