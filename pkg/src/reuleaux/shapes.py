"""Constructors for constant width shapes and conversions between representations."""

from __future__ import annotations

import math

import numpy as np

from .errors import ConstraintViolation, InvalidHarmonic, InvalidParameter, InvalidSideCount, NotConvex
from .support import (
    CURVATURE_GRID,
    TWO_PI,
    VALID_TOL,
    BlendedWidthFunction,
    FourierWidthFunction,
    PiecewiseArcFunction,
    Shape,
    as_shape,
    rep_of,
    uniform_grid,
    validate_convexity,
)

VERTEX_TOL = 1e-6
MAX_SIDES = 10001
MINKOWSKI_KMAX = 64


class ReuleauxPolygon:
    """A Reuleaux polygon of width one.

    ``vertices`` is an ``(N, 2)`` array, N odd, in counterclockwise boundary
    order starting from the lexicographically smallest vertex. ``support`` is
    the induced :class:`PiecewiseArcFunction`. Build instances through
    :func:`reuleaux_from_vertices`, :func:`regular_reuleaux` or
    :func:`reuleaux_triangle`.
    """

    __slots__ = ("vertices", "support", "label")

    def __init__(self, vertices, support: PiecewiseArcFunction, label: str = ""):
        self.vertices = vertices
        self.support = support
        self.label = label or f"reuleaux-{len(vertices)}"

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def shape(self) -> Shape:
        return Shape(self.support, self.label)

    def opposite(self, i: int) -> tuple[int, int]:
        """Indices of the two vertices at unit distance from vertex ``i``."""
        n = self.n_vertices
        m = (n - 1) // 2
        return (i + m) % n, (i + m + 1) % n

    def __eq__(self, other):
        if not isinstance(other, ReuleauxPolygon):
            return NotImplemented
        return np.array_equal(self.vertices, other.vertices)

    def __hash__(self):
        return hash(self.vertices.tobytes())

    def __repr__(self):
        return f"ReuleauxPolygon(N={self.n_vertices})"


def canonical_vertex_order(points: np.ndarray) -> np.ndarray:
    """Counterclockwise about the centroid, starting from the lexicographically smallest vertex."""
    center = points.mean(axis=0)
    ang = np.arctan2(points[:, 1] - center[1], points[:, 0] - center[0])
    pts = points[np.argsort(ang, kind="stable")]
    start = min(range(len(pts)), key=lambda i: (pts[i, 0], pts[i, 1]))
    return np.roll(pts, -start, axis=0)


def _check_constraints(v: np.ndarray, tol: float) -> None:
    n = len(v)
    m = (n - 1) // 2
    opp = np.roll(v, -m, axis=0)
    opp_err = np.abs(np.hypot(*(v - opp).T) - 1.0)
    i = int(np.argmax(opp_err))
    worst = (
        float(opp_err[i]),
        f"opposition |v{i} - v{(i + m) % n}| = {np.hypot(*(v[i] - opp[i])):.12g} (expected 1)",
    )
    # diameter, chunked so large N stays within memory
    chunk = 512
    for s in range(0, n, chunk):
        d = np.hypot(
            v[s : s + chunk, None, 0] - v[None, :, 0],
            v[s : s + chunk, None, 1] - v[None, :, 1],
        )
        excess = d - 1.0
        k = np.unravel_index(int(np.argmax(excess)), excess.shape)
        if excess[k] > worst[0]:
            worst = (
                float(excess[k]),
                f"diameter |v{s + k[0]} - v{k[1]}| = {d[k]:.12g} exceeds 1",
            )
    if worst[0] > tol:
        raise ConstraintViolation(f"worst constraint violated by {worst[0]:.3g}: {worst[1]}")


def _support_from_vertices(v: np.ndarray, tol: float) -> PiecewiseArcFunction:
    n = len(v)
    m = (n - 1) // 2
    # boundary arc j runs v[j] -> v[j+1] and is centered at v[j-m]
    centers = np.roll(v, m, axis=0)
    nxt = np.roll(v, -1, axis=0)
    s = np.arctan2(v[:, 1] - centers[:, 1], v[:, 0] - centers[:, 0])
    e = np.arctan2(nxt[:, 1] - centers[:, 1], nxt[:, 0] - centers[:, 0])
    raw = np.empty(2 * n + 1)
    raw[0] = e[-1]
    raw[1::2] = s
    raw[2::2] = e
    steps = np.mod(np.diff(raw), TWO_PI)
    breaks = raw[0] + np.r_[0.0, np.cumsum(steps)]
    is_arc = np.tile([False, True], n)
    points = np.empty((2 * n, 2))
    points[0::2] = v
    points[1::2] = centers
    return PiecewiseArcFunction(breaks, is_arc, points, tol=max(tol, VALID_TOL))


def reuleaux_from_vertices(points, tol: float = VERTEX_TOL, label: str = "") -> ReuleauxPolygon:
    """Validate a vertex set and build the Reuleaux polygon through it.

    Vertices may be given in any order; they are re-ordered counterclockwise
    starting from the lexicographically smallest one.

    Raises
    ------
    InvalidSideCount
        If the vertex count is even or below 3.
    ConstraintViolation
        If an opposition distance differs from 1, or two vertices are farther
        than 1 apart, by more than ``tol``.
    """
    v = np.array(points, dtype=float).reshape(-1, 2)
    n = len(v)
    if n < 3 or n % 2 == 0:
        raise InvalidSideCount(f"a Reuleaux polygon needs an odd number >= 3 of vertices, got {n}")
    if not np.all(np.isfinite(v)):
        raise ConstraintViolation("vertex coordinates must be finite")
    v = canonical_vertex_order(v)
    _check_constraints(v, tol)
    support = _support_from_vertices(v, tol)
    v.setflags(write=False)
    return ReuleauxPolygon(v, support, label)


def regular_vertex_table(n: int) -> np.ndarray:
    """The 2N points x_1..x_2N of the regular Reuleaux N-gon's support table."""
    k = np.arange(1, 2 * n + 1)
    s = math.sin(math.pi / n)
    x = (np.sin(k * math.pi / n) - np.sin((k - 1) * math.pi / n)) / (2.0 * s)
    y = -(np.cos(k * math.pi / n) - np.cos((k - 1) * math.pi / n)) / (2.0 * s)
    return np.column_stack([x, y])


def regular_reuleaux(n: int) -> ReuleauxPolygon:
    """Regular Reuleaux polygon with vertices x_1, x_3, ..., x_{2N-1}.

    Its support function is ``x_k . u(t)`` for odd k and ``1 - x_k . u(t)``
    for even k on ``[(k-1) pi/N, k pi/N]``.
    """
    if int(n) != n or n < 3 or n % 2 == 0 or n > MAX_SIDES:
        raise InvalidSideCount(f"side count must be odd with 3 <= N <= {MAX_SIDES}, got {n}")
    n = int(n)
    x = regular_vertex_table(n)
    return reuleaux_from_vertices(x[0::2], tol=VALID_TOL, label=f"regular-reuleaux-{n}")


def reuleaux_triangle() -> ReuleauxPolygon:
    r3 = math.sqrt(3.0)
    verts = [(0.5, 0.5 / r3), (-0.5, 0.5 / r3), (0.0, -1.0 / r3)]
    return reuleaux_from_vertices(verts, tol=VALID_TOL, label="reuleaux-triangle")


def disk(center=(0.0, 0.0)) -> Shape:
    """Disk of radius 1/2: ``h(t) = 1/2 + center . u(t)``."""
    cx, cy = (float(c) for c in center)
    return Shape(FourierWidthFunction([(1, cx, cy)]), "disk")


def _terms(g) -> FourierWidthFunction:
    if isinstance(g, FourierWidthFunction):
        return g
    return FourierWidthFunction(g)


def perturbed_circle(g, delta: float) -> Shape:
    """``h = 1/2 + delta * g`` for an odd-harmonic perturbation ``g``.

    Raises
    ------
    NotConvex
        If ``min(h'' + h) < -1e-9`` (or the sampled Kallay check fails).
    """
    if not delta >= 0.0:
        raise InvalidParameter(f"delta must be >= 0, got {delta}")
    rep = _terms(g).scaled(float(delta))
    report = validate_convexity(rep)
    if not report.passed:
        raise NotConvex(report.min_curvature)
    return Shape(rep, f"perturbed-circle(delta={delta:g})")


def max_admissible_delta(g) -> float:
    """Largest delta with ``1/2 + delta (g'' + g) >= 0`` on an 8192-point grid.

    Returns ``inf`` when ``g'' + g >= 0`` everywhere on the grid.
    """
    g = _terms(g)
    if len(g.ks) == 0:
        raise InvalidHarmonic("perturbation has no terms")
    lo = float(np.min(g.curvature(uniform_grid(CURVATURE_GRID)) - 0.5))
    if lo >= 0.0:
        return math.inf
    return 0.5 / -lo


def _segment_integrals(t0, t1, m):
    """Integrals of cos(m t) and sin(m t) over [t0, t1]; arrays broadcast over m."""
    m = np.asarray(m, dtype=float)
    safe = np.where(m == 0.0, 1.0, m)
    ic = np.where(m == 0.0, t1 - t0, (np.sin(m * t1) - np.sin(m * t0)) / safe)
    is_ = np.where(m == 0.0, 0.0, -(np.cos(m * t1) - np.cos(m * t0)) / safe)
    return ic, is_


def fourier_coefficients(p: PiecewiseArcFunction, k_max: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All Fourier coefficients ``(k, a_k, b_k)`` for ``k = 0..k_max``.

    ``a_0`` is the plain mean of h (not halved). Each piece is integrated in
    closed form.
    """
    ks = np.arange(k_max + 1, dtype=float)
    a = np.zeros(k_max + 1)
    b = np.zeros(k_max + 1)
    for t0, t1, arc, (px, py) in zip(p.breaks[:-1], p.breaks[1:], p.is_arc, p.points):
        c0 = 1.0 if arc else 0.0
        ic_k, is_k = _segment_integrals(t0, t1, ks)
        ic_m, is_m = _segment_integrals(t0, t1, ks - 1.0)
        ic_p, is_p = _segment_integrals(t0, t1, ks + 1.0)
        # products of cos t / sin t with cos kt / sin kt
        cos_cos = 0.5 * (ic_m + ic_p)
        sin_cos = 0.5 * (is_p - is_m)
        cos_sin = 0.5 * (is_p + is_m)
        sin_sin = 0.5 * (ic_m - ic_p)
        a += c0 * ic_k + px * cos_cos + py * sin_cos
        b += c0 * is_k + px * cos_sin + py * sin_sin
    a /= math.pi
    b /= math.pi
    a[0] /= 2.0
    b[0] = 0.0
    return ks.astype(np.int64), a, b


def fourier_projection(p, k_max: int) -> FourierWidthFunction:
    """Truncated Fourier series of a piecewise support function.

    Odd harmonics up to ``k_max`` are kept. The mean must be 1/2 and every
    even harmonic must vanish (to 1e-9); both follow from antipodal pairing.
    """
    p = rep_of(p)
    if isinstance(p, BlendedWidthFunction):
        return fourier_projection(p.base, k_max).scaled(p.scale)
    if not isinstance(p, PiecewiseArcFunction):
        raise TypeError("fourier_projection expects a piecewise support function")
    if k_max < 1:
        raise InvalidParameter(f"k_max must be >= 1, got {k_max}")
    ks, a, b = fourier_coefficients(p, int(k_max))
    even = ks % 2 == 0
    resid = np.hypot(a[even], b[even])
    resid[0] = abs(a[0] - 0.5)
    if np.max(resid) >= 1e-9:
        raise ConstraintViolation(
            f"even-harmonic content {np.max(resid):.3g} in a constant width support function"
        )
    odd = ~even
    return FourierWidthFunction.from_arrays(ks[odd], a[odd], b[odd])


def _as_fourier(rep, k_max: int) -> FourierWidthFunction:
    if isinstance(rep, FourierWidthFunction):
        return rep
    return fourier_projection(rep, k_max)


def minkowski_combine(s1, s2, lam: float) -> Shape:
    """Shape with support function ``(1 - lam) h1 + lam h2``.

    Fourier inputs combine coefficient-wise and exactly. A piecewise input is
    first projected onto odd harmonics below 64.
    """
    if not 0.0 <= lam <= 1.0:
        raise InvalidParameter(f"lambda must lie in [0, 1], got {lam}")
    k_max = MINKOWSKI_KMAX - 1
    f1 = _as_fourier(rep_of(s1), k_max)
    f2 = _as_fourier(rep_of(s2), k_max)
    coeffs: dict[int, list[float]] = {}
    for w, f in ((1.0 - lam, f1), (lam, f2)):
        for k, a, b in f.terms:
            acc = coeffs.setdefault(k, [0.0, 0.0])
            acc[0] += w * a
            acc[1] += w * b
    terms = [(k, a, b) for k, (a, b) in sorted(coeffs.items())]
    l1 = as_shape(s1).label or "K1"
    l2 = as_shape(s2).label or "K2"
    return Shape(FourierWidthFunction(terms), f"({1 - lam:g})*{l1}+({lam:g})*{l2}")
