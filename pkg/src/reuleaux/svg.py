"""SVG line drawings of constant width curves."""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from .shapes import ReuleauxPolygon
from .support import PiecewiseArcFunction, boundary_point, rep_of, uniform_grid

SCALE = 400.0  # px per unit length
MARGIN = 0.10
LINE_HALF_LENGTH = 0.8


def _xy(p) -> tuple[float, float]:
    # SVG's y axis points down
    return SCALE * float(p[0]), -SCALE * float(p[1])


def _fmt(p) -> str:
    x, y = _xy(p)
    return f"{x:.4f} {y:.4f}"


def _polygon_path(vertices: np.ndarray) -> str:
    r = f"{SCALE:g}"
    n = len(vertices)
    cmds = [f"M {_fmt(vertices[0])}"]
    for j in range(n):
        # minor arc, counterclockwise in model coordinates = sweep-flag 0 after the y flip
        cmds.append(f"A {r} {r} 0 0 0 {_fmt(vertices[(j + 1) % n])}")
    cmds.append("Z")
    return " ".join(cmds)


def _sampled_path(points: np.ndarray) -> str:
    cmds = [f"M {_fmt(points[0])}"] + [f"L {_fmt(p)}" for p in points[1:]] + ["Z"]
    return " ".join(cmds)


def supporting_lines(shape, theta: float) -> tuple[np.ndarray, np.ndarray]:
    """Endpoints of the two supporting lines with normals u(theta) and -u(theta).

    Each line is drawn as a segment of length 1.6 centered on its foot point.
    """
    rep = rep_of(shape)
    u = np.array([math.cos(theta), math.sin(theta)])
    du = np.array([-u[1], u[0]])
    lines = []
    for foot in (rep.h(theta) * u, -rep.h(theta + math.pi) * u):
        lines.append(np.array([foot - LINE_HALF_LENGTH * du, foot + LINE_HALF_LENGTH * du]))
    return lines[0], lines[1]


def render_svg(
    shape,
    samples: int = 720,
    support_angles: Iterable[float] = (),
    vertex_markers: bool = True,
) -> str:
    """Render the boundary, optionally with pairs of parallel supporting lines.

    Reuleaux polygons are drawn with exact circular-arc path segments; smooth
    shapes as a closed polyline through ``samples`` boundary points.
    """
    if samples < 16:
        raise ValueError(f"samples must be >= 16, got {samples}")
    rep = rep_of(shape)
    angles = [float(t) for t in support_angles]
    extent_pts = [boundary_point(rep, uniform_grid(max(samples, 256)))]

    vertices = None
    if isinstance(shape, ReuleauxPolygon):
        vertices = shape.vertices
    elif isinstance(rep, PiecewiseArcFunction):
        vertices = rep.vertices
    if vertices is not None:
        path = _polygon_path(vertices)
    else:
        path = _sampled_path(boundary_point(rep, uniform_grid(samples)))

    line_elems = []
    for t in angles:
        for seg in supporting_lines(rep, t):
            extent_pts.append(seg)
            (x1, y1), (x2, y2) = _xy(seg[0]), _xy(seg[1])
            line_elems.append(
                f'  <line x1="{x1:.4f}" y1="{y1:.4f}" x2="{x2:.4f}" y2="{y2:.4f}" '
                f'stroke="#c0392b" stroke-width="1.5"/>'
            )

    extent = float(np.max(np.abs(np.vstack(extent_pts)))) * (1.0 + MARGIN)
    half = SCALE * extent
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{2 * half:.1f}" height="{2 * half:.1f}" '
        f'viewBox="{-half:.4f} {-half:.4f} {2 * half:.4f} {2 * half:.4f}">',
        f'  <path d="{path}" fill="none" stroke="#000000" stroke-width="2"/>',
    ]
    out.extend(line_elems)
    if vertex_markers and vertices is not None:
        for v in vertices:
            x, y = _xy(v)
            out.append(f'  <circle cx="{x:.4f}" cy="{y:.4f}" r="3" fill="#000000"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
