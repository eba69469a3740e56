"""Area-decreasing surgery taking an N-gon Reuleaux polygon to an (N-2)-gon.

With ``c, d`` the closest pair of neighboring vertices and ``q`` the vertex
opposite the arc ``cd``, the arcs ``bq`` (on the unit circle about ``d``) and
``qa`` (about ``c``) are replaced by a single arc ``ba`` about a new vertex
``p`` with ``|p - a| = |p - b| = 1``; the arc ``cd`` becomes ``cp`` and
``pd``. Vertices ``c, d, q`` disappear and ``p`` appears.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import GeometryFailure, InvalidParameter, NoIntersection, TooFewVertices
from .geometry import Vec2, distance, unit_circle_intersection
from .measures import area
from .shapes import ReuleauxPolygon, reuleaux_from_vertices

EDGE_TIE_TOL = 1e-12
LEMMA_TOL = 1e-9
AREA_TOL = 1e-12


@dataclass(frozen=True)
class SurgeryContext:
    """Points of one reduction step, plus their indices in the input polygon."""

    c: Vec2
    d: Vec2
    q: Vec2
    a: Vec2
    b: Vec2
    p: Vec2
    s: Vec2
    r: Vec2
    indices: dict[str, int] = field(default_factory=dict)


@dataclass
class DescentTrace:
    polygons: list[ReuleauxPolygon]
    areas: list[float]
    contexts: list[SurgeryContext]

    @property
    def steps(self) -> int:
        return len(self.contexts)


def find_minimal_edge(polygon: ReuleauxPolygon) -> tuple[int, int]:
    """Adjacent vertex pair at minimal distance; ties go to the smallest first index."""
    n = polygon.n_vertices
    if n < 5:
        raise TooFewVertices(f"a Reuleaux {n}-gon cannot be reduced")
    v = polygon.vertices
    lengths = np.hypot(*(np.roll(v, -1, axis=0) - v).T)
    i = int(np.flatnonzero(lengths <= lengths.min() + EDGE_TIE_TOL)[0])
    return i, (i + 1) % n


def build_surgery(polygon: ReuleauxPolygon, edge: tuple[int, int]) -> SurgeryContext:
    n = polygon.n_vertices
    ic, id_ = edge
    if id_ != (ic + 1) % n:
        raise InvalidParameter(f"edge {edge} does not join neighboring vertices")
    m = (n - 1) // 2
    iq = (ic + m + 1) % n
    ia = (iq - 1) % n
    ib = (iq + 1) % n
    v = polygon.vertices
    c, d, q, a, b = (v[i].copy() for i in (ic, id_, iq, ia, ib))
    try:
        cands = unit_circle_intersection(a, b)
    except NoIntersection as exc:
        raise GeometryFailure(f"|a - b| = {distance(a, b):.6g}: {exc}") from exc
    # "closer to arc cd": nearest to the angular midpoint of the arc about q
    w = 0.5 * (c + d) - q
    arc_mid = q + w / np.hypot(*w)
    p = min(cands, key=lambda z: distance(z, arc_mid))
    e = (q - p) / distance(p, q)
    return SurgeryContext(
        c=c, d=d, q=q, a=a, b=b, p=p,
        s=p + e,
        r=q - e,
        indices={"c": ic, "d": id_, "q": iq, "a": ia, "b": ib},
    )


def check_distance_lemma(ctx: SurgeryContext) -> bool:
    """|c - d| <= |a - b| (up to 1e-9)."""
    return distance(ctx.c, ctx.d) <= distance(ctx.a, ctx.b) + LEMMA_TOL


def reduce_once(polygon: ReuleauxPolygon) -> tuple[ReuleauxPolygon, SurgeryContext]:
    """Remove two vertices without increasing the area.

    Raises
    ------
    TooFewVertices
        For a Reuleaux triangle.
    GeometryFailure
        If the distance lemma or area monotonicity fails numerically.
    """
    ctx = build_surgery(polygon, find_minimal_edge(polygon))
    if not check_distance_lemma(ctx):
        raise GeometryFailure(
            f"|c - d| = {distance(ctx.c, ctx.d):.12g} exceeds |a - b| = {distance(ctx.a, ctx.b):.12g}"
        )
    drop = {ctx.indices["c"], ctx.indices["d"], ctx.indices["q"]}
    verts = []
    for i, v in enumerate(polygon.vertices):
        if i == ctx.indices["c"]:
            verts.append(ctx.p)
        elif i not in drop:
            verts.append(v)
    reduced = reuleaux_from_vertices(verts)
    before, after = area(polygon), area(reduced)
    if after > before + AREA_TOL:
        raise GeometryFailure(f"surgery increased the area: {before:.15g} -> {after:.15g}")
    return reduced, ctx


def descend_to_triangle(polygon: ReuleauxPolygon) -> DescentTrace:
    """Apply :func:`reduce_once` until three vertices remain."""
    trace = DescentTrace([polygon], [area(polygon)], [])
    while trace.polygons[-1].n_vertices > 3:
        nxt, ctx = reduce_once(trace.polygons[-1])
        trace.polygons.append(nxt)
        trace.areas.append(area(nxt))
        trace.contexts.append(ctx)
    return trace
