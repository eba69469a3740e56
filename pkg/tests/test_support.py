import math

import numpy as np
import pytest

from corpus import wobble
from reuleaux import (
    FourierWidthFunction,
    PiecewiseArcFunction,
    Shape,
    boundary_point,
    disk,
    eval_h,
    eval_h_prime,
    radius_of_curvature,
    regular_reuleaux,
    reuleaux_triangle,
    validate_convexity,
    validate_width,
)
from reuleaux.errors import BreakpointAmbiguity, ConstraintViolation, EvenHarmonic, InvalidHarmonic
from reuleaux.support import rep_of

SQ3 = math.sqrt(3.0)


def triangle_table(t):
    """The six-branch support function of the Reuleaux triangle, written out by hand."""
    u = np.array([math.cos(t), math.sin(t)])
    t = t % (2 * math.pi)
    v1, v2, v3 = np.array([0.5, 0.5 / SQ3]), np.array([-0.5, 0.5 / SQ3]), np.array([0.0, -1 / SQ3])
    branch = int(t // (math.pi / 3)) % 6
    return [v1 @ u, 1 + v3 @ u, v2 @ u, 1 + v1 @ u, v3 @ u, 1 + v2 @ u][branch]


def _away_from_breaks(rep, theta, margin=1e-3):
    if isinstance(rep, PiecewiseArcFunction):
        return theta[rep.breakpoint_distance(theta) > margin]
    return theta


# -- documented examples ---------------------------------------------------

def test_eval_examples():
    assert eval_h(disk(), 1.234) == pytest.approx(0.5, abs=1e-15)
    tri = reuleaux_triangle()
    assert eval_h(tri, math.pi / 2) == pytest.approx(1 - 1 / SQ3, abs=1e-15)
    assert eval_h(tri, 0.0) == pytest.approx(0.5, abs=1e-15)
    assert eval_h_prime(disk(), 0.77) == 0.0
    assert eval_h_prime(FourierWidthFunction([(3, 0.01, 0.0)]), 0.0) == pytest.approx(0.0, abs=1e-17)
    assert eval_h_prime(tri, math.pi / 2) == pytest.approx(0.0, abs=1e-15)


def test_triangle_matches_branch_table():
    tri = reuleaux_triangle()
    for t in np.linspace(-7, 7, 2001):
        assert eval_h(tri, t) == pytest.approx(triangle_table(t), abs=1e-14)


def test_periodicity():
    for s in (wobble(), regular_reuleaux(9)):
        t = np.linspace(-3, 3, 101)
        np.testing.assert_allclose(eval_h(s, t), eval_h(s, t + 2 * math.pi), atol=1e-12)


def test_radius_of_curvature_examples():
    assert radius_of_curvature(disk(), 2.0) == 0.5
    assert radius_of_curvature(FourierWidthFunction([(3, 1 / 16, 0.0)]), 0.0) == pytest.approx(0.0, abs=1e-15)
    p = regular_reuleaux(5).support
    for (t0, t1, mode, _) in p.pieces:
        assert radius_of_curvature(p, 0.5 * (t0 + t1)) == (1.0 if mode == "arc" else 0.0)


def test_curvature_at_breakpoint_is_an_error():
    p = regular_reuleaux(5).support
    with pytest.raises(BreakpointAmbiguity):
        radius_of_curvature(p, p.breaks[3])
    with pytest.raises(BreakpointAmbiguity):
        radius_of_curvature(p, p.breaks[2] + 2 * math.pi)


def test_boundary_point_examples():
    for t in (0.0, 1.0, 4.0):
        np.testing.assert_allclose(boundary_point(disk(), t), 0.5 * np.array([math.cos(t), math.sin(t)]), atol=1e-15)
    np.testing.assert_allclose(boundary_point(reuleaux_triangle(), 0.0), (0.5, 0.5 / SQ3), atol=1e-15)


def test_fourier_construction_rules():
    with pytest.raises(EvenHarmonic):
        FourierWidthFunction([(2, 0.1, 0.0)])
    with pytest.raises(InvalidHarmonic):
        FourierWidthFunction([(5, 0.1, 0.0), (3, 0.1, 0.0)])
    with pytest.raises(InvalidHarmonic):
        FourierWidthFunction([(3, 0.1, 0.0), (3, 0.1, 0.0)])
    with pytest.raises(InvalidHarmonic):
        FourierWidthFunction([(-1, 0.1, 0.0)])
    assert FourierWidthFunction([(3, 0.0, 0.0)]) == FourierWidthFunction([])


def test_piecewise_structure_rules():
    good = regular_reuleaux(3).support
    with pytest.raises(ConstraintViolation):
        PiecewiseArcFunction(good.breaks, ~good.is_arc, good.points)
    shifted = good.points.copy()
    shifted[0] += 1e-6
    with pytest.raises(ConstraintViolation):
        PiecewiseArcFunction(good.breaks, good.is_arc, shifted)


def test_canonical_rotation_rules():
    p = regular_reuleaux(7).support
    assert p.breaks[0] <= 0.0 < p.breaks[1]
    assert p.breaks[-1] == p.breaks[0] + 2 * math.pi
    rolled = PiecewiseArcFunction(
        np.r_[p.breaks[3:-1], p.breaks[:4] + 2 * math.pi], np.roll(p.is_arc, -3), np.roll(p.points, -3, axis=0)
    )
    np.testing.assert_allclose(rolled.breaks, p.breaks, atol=1e-15)
    np.testing.assert_array_equal(rolled.is_arc, p.is_arc)
    # a break exactly at 0 starts the canonical cycle
    assert reuleaux_triangle().support.breaks[0] == 0.0


def test_validate_examples():
    assert validate_width(disk()).passed and validate_width(disk()).max_deviation == 0.0
    assert validate_width(regular_reuleaux(7)).passed
    bad = FourierWidthFunction([(3, 0.2, 0.0)])
    report = validate_convexity(bad)
    assert not report.passed
    assert report.min_curvature == pytest.approx(0.5 - 1.6, abs=1e-12)
    assert validate_convexity(wobble()).passed
    assert validate_convexity(disk()).passed


# -- invariants over the corpus ------------------------------------------------

def test_width_and_convexity_over_corpus(shape_corpus):
    for name, s in shape_corpus:
        assert validate_width(s).passed, name
        assert validate_convexity(s).passed, name


def test_antipodal_identity(shape_corpus):
    t = 2 * math.pi * np.arange(1024) / 1024
    u = np.stack([np.cos(t), np.sin(t)], axis=-1)
    for name, s in shape_corpus:
        gap = boundary_point(s, t + math.pi) - boundary_point(s, t) + u
        assert np.max(np.hypot(*gap.T)) <= 1e-9, name


def test_gamma_is_one_lipschitz(shape_corpus):
    rng = np.random.default_rng(3)
    t1 = rng.uniform(0, 2 * math.pi, 10_000)
    t2 = t1 + rng.uniform(-math.pi, math.pi, 10_000)
    for name, s in shape_corpus:
        d = np.hypot(*(boundary_point(s, t1) - boundary_point(s, t2)).T)
        assert np.all(d <= np.abs(t1 - t2) + 1e-9), name


def test_derivative_matches_finite_difference(shape_corpus):
    rng = np.random.default_rng(11)
    step = 1e-5
    for name, s in shape_corpus:
        t = _away_from_breaks(rep_of(s), rng.uniform(0, 2 * math.pi, 1024))
        fd = (eval_h(s, t + step) - eval_h(s, t - step)) / (2 * step)
        assert np.max(np.abs(fd - eval_h_prime(s, t))) <= 1e-6, name


def test_curvature_sandwich(shape_corpus):
    rng = np.random.default_rng(5)
    for name, s in shape_corpus:
        t = _away_from_breaks(rep_of(s), rng.uniform(0, 2 * math.pi, 2048), 1e-9)
        r = radius_of_curvature(s, t)
        assert np.all(r >= -1e-9) and np.all(r <= 1 + 1e-9), name


def test_support_maximality(shape_corpus):
    rng = np.random.default_rng(9)
    theta = rng.uniform(0, 2 * math.pi, 256)
    phi = rng.uniform(0, 2 * math.pi, 256)
    u = np.stack([np.cos(theta), np.sin(theta)])
    for name, s in shape_corpus:
        dots = boundary_point(s, phi) @ u
        assert np.all(dots <= eval_h(s, theta)[None, :] + 1e-9), name


def test_gamma_formula_on_fourier():
    s = wobble()
    t = np.linspace(0, 2 * math.pi, 77)
    u = np.stack([np.cos(t), np.sin(t)], -1)
    du = np.stack([-np.sin(t), np.cos(t)], -1)
    expected = eval_h(s, t)[:, None] * u + eval_h_prime(s, t)[:, None] * du
    np.testing.assert_allclose(boundary_point(s, t), expected, atol=1e-15)


def test_shapes_are_immutable():
    f = FourierWidthFunction([(3, 0.01, 0.0)])
    with pytest.raises(AttributeError):
        f.ks = None
    with pytest.raises(ValueError):
        f.a[0] = 1.0
    s = Shape(f, "x")
    with pytest.raises(Exception):
        s.label = "y"
