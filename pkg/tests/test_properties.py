"""Property-based checks of the shape invariants on generated inputs."""

import math

import numpy as np
from hypothesis import assume, given, settings, strategies as st

from corpus import TRIANGLE_AREA
from reuleaux import (
    FourierWidthFunction,
    area,
    area_by_parts,
    boundary_point,
    eval_h,
    minkowski_combine,
    perimeter,
    reduce_once,
    regular_reuleaux,
    reuleaux_from_vertices,
    validate_convexity,
    validate_width,
)
from reuleaux.support import Shape

unit = st.floats(-1.0, 1.0, allow_nan=False)


@st.composite
def fourier_shapes(draw):
    ks = draw(st.lists(st.sampled_from(range(1, 16, 2)), min_size=1, max_size=5, unique=True))
    # a k-th harmonic of size c moves h'' + h by (k^2 - 1) c, so scale by 1/k^2
    terms = [(k, draw(unit) * 0.12 / k**2, draw(unit) * 0.12 / k**2) for k in sorted(ks)]
    rep = FourierWidthFunction(terms)
    assume(validate_convexity(rep).passed)
    return Shape(rep)


@st.composite
def rigid_motions(draw):
    return draw(st.floats(0, 2 * math.pi)), draw(st.floats(-3, 3)), draw(st.floats(-3, 3))


@settings(max_examples=60, deadline=None)
@given(fourier_shapes())
def test_fourier_shape_invariants(s):
    assert validate_width(s).passed
    assert perimeter(s) == math.pi
    a = area(s)
    assert TRIANGLE_AREA - 1e-9 <= a <= math.pi / 4 + 1e-9
    assert abs(a - area_by_parts(s, 1024)) <= 1e-10
    t = np.linspace(0, 2 * math.pi, 257)
    gap = boundary_point(s, t + math.pi) - boundary_point(s, t) + np.stack([np.cos(t), np.sin(t)], -1)
    assert np.max(np.abs(gap)) <= 1e-9


@settings(max_examples=30, deadline=None)
@given(fourier_shapes(), fourier_shapes(), st.floats(0, 1))
def test_minkowski_stays_valid_and_affine(s1, s2, lam):
    c = minkowski_combine(s1, s2, lam)
    assert validate_convexity(c).passed
    t = np.linspace(0, 2 * math.pi, 64)
    np.testing.assert_allclose(eval_h(c, t), (1 - lam) * eval_h(s1, t) + lam * eval_h(s2, t), atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(range(3, 42, 2)), rigid_motions())
def test_polygons_are_rigid_motion_invariant(n, motion):
    angle, dx, dy = motion
    rot = np.array([[math.cos(angle), -math.sin(angle)], [math.sin(angle), math.cos(angle)]])
    p = regular_reuleaux(n)
    moved = reuleaux_from_vertices(p.vertices @ rot.T + (dx, dy))
    assert moved.n_vertices == n
    assert abs(area(moved) - area(p)) <= 1e-12
    assert abs(perimeter(moved) - math.pi) <= 1e-12


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(range(5, 32, 2)), rigid_motions())
def test_reduction_commutes_with_rigid_motion(n, motion):
    angle, dx, dy = motion
    rot = np.array([[math.cos(angle), -math.sin(angle)], [math.sin(angle), math.cos(angle)]])
    p = regular_reuleaux(n)
    moved = reuleaux_from_vertices(p.vertices @ rot.T + (dx, dy))
    r1, _ = reduce_once(p)
    r2, _ = reduce_once(moved)
    assert r2.n_vertices == n - 2
    # edge ties may be broken at a different index, but all choices are congruent
    assert abs(area(r1) - area(r2)) <= 1e-12
