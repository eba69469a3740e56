"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import math

import numpy as np
import pytest

from corpus import (
    WOBBLE_TERMS,
    TRIANGLE_AREA,
    descent_violations,
    wobble,
    random_fourier_shape,
    regular_area,
)
from reuleaux import (
    FourierWidthFunction,
    Shape,
    approximate,
    area,
    area_by_parts,
    boundary_point,
    descend_to_triangle,
    disk,
    max_admissible_delta,
    minkowski_combine,
    perimeter,
    regular_reuleaux,
    reuleaux_from_vertices,
    reuleaux_triangle,
    validate_convexity,
    validate_width,
)

ODD_N = range(3, 22, 2)


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'}  criterion {number} ({title}): {detail}")
        assert ok, detail

    return emit


def test_criterion_1_barbier(report):
    shapes = [disk(), reuleaux_triangle(), wobble(), minkowski_combine(regular_reuleaux(7), disk(), 0.2)]
    shapes += [regular_reuleaux(n) for n in ODD_N]
    worst = max(abs(perimeter(s) - math.pi) for s in shapes)
    report(1, "Barbier", worst <= 1e-12, f"max |perimeter - pi| = {worst:.2e} over {len(shapes)} shapes (tol 1e-12)")


def test_criterion_2_regular_area(report):
    areas = [area(regular_reuleaux(n)) for n in ODD_N]
    gap = max(abs(a - regular_area(n)) for a, n in zip(areas, ODD_N))
    increasing = all(b > a for a, b in zip(areas, areas[1:]))
    tri = abs(areas[0] - TRIANGLE_AREA)
    ok = gap <= 1e-9 and increasing and tri <= 1e-12
    report(2, "regular-polygon area", ok,
           f"max gap to closed form = {gap:.2e} (tol 1e-9), strictly increasing = {increasing}, "
           f"|A(3) - (pi - sqrt3)/2| = {tri:.2e} (tol 1e-12)")


def test_criterion_3_sandwich(report):
    rng = np.random.default_rng(3)
    shapes = [random_fourier_shape(rng, max_harmonic=15) for _ in range(200)]
    lo, hi = TRIANGLE_AREA - 1e-9, math.pi / 4 + 1e-9
    outside = sum(not lo <= area(s) <= hi for s in shapes)
    # near-disks probe the equality clause from both sides
    probes = []
    for scale in (0.0, 1e-9, 1e-8, 1e-5, 1e-3):
        for _ in range(10):
            terms = [(1, *rng.uniform(-1, 1, 2))] + [(k, *(scale * rng.uniform(-1, 1, 2))) for k in range(3, 16, 2)]
            probes.append(Shape(FourierWidthFunction(terms)))
    equal_cases = 0
    bad_equal = 0
    for s in shapes + probes:
        if abs(area(s) - math.pi / 4) <= 1e-9:
            equal_cases += 1
            high = np.hypot(s.rep.a, s.rep.b)[s.rep.ks >= 3]
            bad_equal += bool(high.size and high.max() >= 1e-6)
    ok = outside == 0 and bad_equal == 0 and equal_cases > 0
    report(3, "Blaschke-Lebesgue sandwich", ok,
           f"{outside}/200 random shapes outside [(pi - sqrt3)/2, pi/4] +- 1e-9; "
           f"{equal_cases} shapes at area pi/4, {bad_equal} of them with a k >= 3 coefficient >= 1e-6")


def test_criterion_4_approximation(report):
    shape = wobble()
    lines, ok = [], True
    for eps in (0.2, 0.1, 0.05, 0.02):
        res = approximate(shape, eps)
        p = res.polygon
        valid = (
            reuleaux_from_vertices(p.vertices, tol=1e-9) == p
            and validate_width(p).passed
            and validate_convexity(p).passed
            and abs(perimeter(p) - math.pi) <= 1e-9
        )
        good = res.sup_h_error <= eps and res.sup_h_prime_error <= eps and valid
        ok &= good
        lines.append(f"eps={eps:g}: N={p.n_vertices} |h|={res.sup_h_error:.4f} |h'|={res.sup_h_prime_error:.4f} valid={valid}")
    report(4, "C1 approximation", ok, "; ".join(lines))


def test_criterion_5_reduction(report):
    trace = descend_to_triangle(regular_reuleaux(11))
    drops = [a - b for a, b in zip(trace.areas, trace.areas[1:])]
    regular_ok = (
        trace.steps == 4
        and all(d >= 1e-6 for d in drops)
        and abs(trace.areas[-1] - TRIANGLE_AREA) <= 1e-9
        and descent_violations(trace) == []
    )
    rng = np.random.default_rng(5)
    violations, contexts = [], 0
    for i in range(50):
        start = approximate(random_fourier_shape(rng), rng.uniform(0.15, 0.5)).polygon
        t = descend_to_triangle(start)
        contexts += t.steps
        violations += [f"descent {i}: {v}" for v in descent_violations(t)]
    ok = regular_ok and not violations
    report(5, "area-decreasing reduction", ok,
           f"11-gon: {trace.steps} steps, min drop {min(drops):.2e}, final gap {abs(trace.areas[-1] - TRIANGLE_AREA):.1e}; "
           f"campaign: 50 descents, {contexts} surgeries, {len(violations)} violations {violations[:3]}")


def test_criterion_6_formula_agreement(report, shape_corpus):
    worst_fourier, worst_poly = 0.0, 0.0
    for _, s in shape_corpus:
        gap = abs(area(s) - area_by_parts(s, 65536))
        if isinstance(getattr(s, "rep", None), FourierWidthFunction):
            worst_fourier = max(worst_fourier, gap)
        else:
            worst_poly = max(worst_poly, gap)
    ok = worst_fourier <= 1e-10 and worst_poly <= 1e-6
    report(6, "area formula agreement", ok,
           f"Fourier max gap {worst_fourier:.2e} (tol 1e-10), polygon max gap {worst_poly:.2e} (tol 1e-6), "
           f"{len(shape_corpus)} shapes")


def test_criterion_7_parametrization(report, shape_corpus):
    t = 2 * math.pi * np.arange(1024) / 1024
    u = np.stack([np.cos(t), np.sin(t)], axis=-1)
    rng = np.random.default_rng(7)
    worst_anti, worst_lip = 0.0, -np.inf
    for _, s in shape_corpus:
        gap = boundary_point(s, t + math.pi) - boundary_point(s, t) + u
        worst_anti = max(worst_anti, float(np.max(np.hypot(*gap.T))))
        t1 = rng.uniform(0, 2 * math.pi, 10_000)
        t2 = t1 + rng.uniform(-math.pi, math.pi, 10_000)
        excess = np.hypot(*(boundary_point(s, t1) - boundary_point(s, t2)).T) - np.abs(t1 - t2)
        worst_lip = max(worst_lip, float(excess.max()))
    ok = worst_anti <= 1e-9 and worst_lip <= 1e-9
    report(7, "parametrization", ok,
           f"max antipodal defect {worst_anti:.2e}, max Lipschitz excess {worst_lip:.2e} (tol 1e-9) "
           f"over {len(shape_corpus)} shapes")


def test_criterion_8_validation(report):
    g = [(3, 1.0, 0.0)]
    oracle = max_admissible_delta(g)
    check = lambda d: validate_convexity(FourierWidthFunction([(3, d, 0.0)])).passed
    rejects_02 = not check(0.2)
    accepts_below = check(1 / 16 - 1e-6)
    rejects_above = not check(1 / 16 + 1e-4)
    oracle_ok = abs(oracle - 1 / 16) <= 1e-12 and max_admissible_delta(WOBBLE_TERMS) >= 1 / 160
    ok = rejects_02 and accepts_below and rejects_above and oracle_ok
    report(8, "validation", ok,
           f"rejects 0.2 cos 3t: {rejects_02}; accepts 1/16 - 1e-6: {accepts_below}; "
           f"rejects 1/16 + 1e-4: {rejects_above}; oracle delta_max = {oracle:.15g}")
