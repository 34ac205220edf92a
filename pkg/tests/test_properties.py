"""Property tests for the analytic invariants, with seeded random
sampling."""

import math

import numpy as np
import pytest

from coshroots import (
    BaseParameter,
    ClassificationTag,
    classify,
    critical_constants,
    f_derivative,
    f_value,
    solve_all,
    x_star,
)

SEED = 42


def _regime_bases(rng, n, margin=1e-4, unit_gap=1e-3):
    """Uniform draws from the two-root regime, away from the edges and 1."""
    c = critical_constants()
    out = []
    while len(out) < n:
        a = rng.uniform(c.a_min + margin, c.a_max - margin)
        if abs(a - 1.0) > unit_gap:
            out.append(a)
    return out


def test_affine_minorant_holds_everywhere():
    # f(x) >= 2 - x for every base: a = 1 realizes the minimum of the
    # cosh term
    rng = np.random.default_rng(SEED)
    for _ in range(2000):
        a = rng.uniform(0.1, 10.0)
        x = rng.uniform(-10.0, 50.0)
        assert f_value(BaseParameter(a), x) >= 2.0 - x - 1e-12


def test_reciprocal_base_symmetry_of_f():
    # ln(1/a) and -ln(a) differ by up to 1 ulp, so compare at the scale of
    # the cosh term (= f + x); near roots of f a purely relative check
    # would divide by ~0
    rng = np.random.default_rng(SEED)
    for _ in range(500):
        a = rng.uniform(0.1, 10.0)
        x = rng.uniform(-10.0, 10.0)
        fa = f_value(BaseParameter(a), x)
        fb = f_value(BaseParameter(1.0 / a), x)
        scale = max(1.0, abs(fa) + abs(x))
        assert abs(fa - fb) <= 1e-14 * scale


def test_reciprocal_base_symmetry_of_classification():
    rng = np.random.default_rng(SEED)
    for _ in range(300):
        a = math.exp(rng.uniform(math.log(0.1), math.log(10.0)))
        ca = classify(BaseParameter(a))
        cb = classify(BaseParameter(1.0 / a))
        assert ca.tag is cb.tag
        if ca.root is not None:
            assert ca.root == cb.root


def test_convexity_second_difference():
    rng = np.random.default_rng(SEED)
    for _ in range(500):
        a = rng.uniform(0.1, 10.0)
        if abs(a - 1.0) < 1e-6:
            continue
        x = rng.uniform(-5.0, 30.0)
        h = rng.uniform(1e-3, 1.0)
        b = BaseParameter(a)
        second = f_value(b, x - h) - 2.0 * f_value(b, x) + f_value(b, x + h)
        assert second >= -1e-9


def test_minimizer_is_a_minimum():
    rng = np.random.default_rng(SEED)
    for _ in range(200):
        a = rng.uniform(0.2, 5.0)
        if abs(a - 1.0) < 1e-3:
            continue
        b = BaseParameter(a)
        xs = x_star(b)
        assert abs(f_derivative(b, xs)) <= 1e-9
        assert f_value(b, xs + 0.1) > f_value(b, xs)
        assert f_value(b, xs - 0.1) > f_value(b, xs)


def test_tangency_is_a_double_root():
    c = critical_constants()
    for a in (c.a_min, c.a_max):
        b = BaseParameter(a)
        assert abs(f_value(b, c.x_dagger)) <= 1e-10
        assert abs(f_derivative(b, c.x_dagger)) <= 1e-10


def test_minimizer_closer_to_x2_upper_ordering():
    # x2 - x* < x* - x1 throughout the regime: f rises faster to the
    # right of the minimizer than it falls to the left
    rng = np.random.default_rng(SEED)
    for a in _regime_bases(rng, 60):
        report = solve_all(BaseParameter(a))
        x1, x2 = (r.x for r in report.roots)
        xs = x_star(BaseParameter(a))
        assert x2 - xs < xs - x1


@pytest.mark.xfail(
    strict=True,
    reason="the claimed lower ordering (x* - x1)/2 < x2 - x* fails for "
    "bases with |ln a| < ~0.041 (counterexample a = 0.98: x* = 193.159, "
    "x1 = 2.0016, x2 = 278.678 gives x2 - x* = 85.5 < (x* - x1)/2 = 95.6)",
)
def test_minimizer_closer_to_x2_lower_ordering():
    rng = np.random.default_rng(SEED)
    for a in _regime_bases(rng, 60):
        report = solve_all(BaseParameter(a))
        x1, x2 = (r.x for r in report.roots)
        xs = x_star(BaseParameter(a))
        assert (xs - x1) / 2.0 < x2 - xs


def test_solve_reciprocal_symmetry_small():
    rng = np.random.default_rng(SEED)
    count = 0
    while count < 30:
        a = math.exp(rng.uniform(math.log(0.2), math.log(5.0)))
        if abs(a - 1.0) <= 1e-2:
            continue
        count += 1
        ra = solve_all(BaseParameter(a))
        rb = solve_all(BaseParameter(1.0 / a))
        assert ra.classification.tag is rb.classification.tag
        assert len(ra.roots) == len(rb.roots)
        for xa, xb in zip(ra.roots, rb.roots):
            assert abs(xa.x - xb.x) <= 1e-10
