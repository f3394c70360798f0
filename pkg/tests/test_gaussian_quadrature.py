"""Plane and radial quadrature rules.

Oracles: closed-form one- and two-point rules, exact Gaussian moments
k!/beta^(k+1), and numpy's Gauss-Laguerre constructor as an independent
node/weight source.
"""

import math

import numpy as np
import pytest

from polycauchy import (
    HermiteIndex,
    PolarGrid,
    angular_phase_sum,
    build_polar_grid,
    build_singular_grid,
    cauchy_singular_quadrature,
    gauss_laguerre_nodes,
    hermite_eval,
    inner_product_gaussian,
    integrate_radial_weighted,
    plane_quadrature,
    polar_separable_quadrature,
)
from polycauchy.gaussian_quadrature import _phase_table


def test_one_point_rule_exact():
    x, w = gauss_laguerre_nodes(1)
    assert x[0] == 1.0
    assert w[0] == 1.0


def test_two_point_rule_closed_form():
    # nodes 2 +- sqrt(2), weights (2 -+ sqrt(2))/4
    x, w = gauss_laguerre_nodes(2)
    s = math.sqrt(2.0)
    assert x[0] == pytest.approx(2.0 - s, rel=1e-15)
    assert x[1] == pytest.approx(2.0 + s, rel=1e-15)
    assert w[0] == pytest.approx((2.0 + s) / 4.0, rel=1e-15)
    assert w[1] == pytest.approx((2.0 - s) / 4.0, rel=1e-15)


def test_nodes_against_numpy_constructor():
    for n in (5, 16, 64):
        x, w = gauss_laguerre_nodes(n)
        xr, wr = np.polynomial.laguerre.laggauss(n)
        assert np.max(np.abs(x - xr) / xr) < 1e-13
        assert np.max(np.abs(w - wr) / np.abs(wr)) < 1e-11
        assert np.all(np.diff(x) > 0)
        assert np.all(w > 0)


def test_weights_sum_to_one():
    for n in (8, 32, 120):
        _, w = gauss_laguerre_nodes(n)
        assert math.fsum(w) == pytest.approx(1.0, rel=1e-14)


def test_moment_exactness():
    # integral of t^k e^(-beta t) = k!/beta^(k+1), exact up to k = 2n-1
    for n_radial, beta in ((24, 1.0), (24, 3.0), (64, 1.0)):
        grid = build_polar_grid(n_radial, 8, beta)
        for k in range(2 * n_radial):
            got = integrate_radial_weighted(lambda t, kk=k: t**kk, beta, grid)
            want = math.factorial(k) / beta ** (k + 1)
            assert abs(got - want) <= 1e-11 * (1.0 + want)


def test_build_polar_grid_examples():
    g = build_polar_grid(1, 4, 1.0)
    assert g.radial_t[0] == 1.0 and g.radial_w[0] == 1.0
    g = build_polar_grid(2, 4, 1.0)
    s = math.sqrt(2.0)
    assert g.radial_t[0] == pytest.approx(2.0 - s, rel=1e-15)
    g3 = build_polar_grid(2, 4, 3.0)
    assert g3.radial_t[0] == pytest.approx((2.0 - s) / 3.0, rel=1e-15)
    assert g3.radial_w[1] == pytest.approx((2.0 - s) / 12.0, rel=1e-15)


def test_build_polar_grid_validation():
    with pytest.raises(ValueError):
        build_polar_grid(0, 8, 1.0)
    with pytest.raises(ValueError):
        build_polar_grid(201, 8, 1.0)
    with pytest.raises(ValueError):
        build_polar_grid(4, 8, 0.0)
    with pytest.raises(ValueError):
        PolarGrid(beta=1.0, radial_t=np.array([1.0]), radial_w=np.array([1.0]), n_theta=3)


def test_grid_arrays_read_only():
    g = build_polar_grid(4, 8, 1.0)
    for arr in (g.radial_t, g.radial_w, g.points, g.phase):
        with pytest.raises(ValueError):
            arr[0] = 0


def test_phase_table_exact_symmetry():
    # half-turn antisymmetry is bit-exact, axis values are exact
    for n in (8, 12, 64, 128):
        table = _phase_table(n)
        assert np.all(table[n // 2 :] == -table[: n // 2])
        assert table[0] == 1.0 + 0j
        if n % 4 == 0:
            q = n // 4
            assert table[q] == 1j
            assert table[2 * q] == -1.0 + 0j
            assert table[3 * q] == -1j
    table = _phase_table(10)
    assert np.all(table[5:] == -table[:5])


def test_angular_phase_sum_exact_selection():
    g = build_polar_grid(4, 16, 1.0)
    assert angular_phase_sum(0, g) == complex(16)
    assert angular_phase_sum(16, g) == complex(16)
    for p in (1, 2, 3, 5, 7, 8, 9, 15, -3, 31):
        assert angular_phase_sum(p, g) == 0j


def test_polar_separable_matches_generic():
    # a separable integrand must agree with the generic reduction
    g = build_polar_grid(32, 32, 1.0)
    radial = np.exp(-0.5 * g.radial_t) * (1.0 + g.radial_t)
    for p in (0, 1, 4):
        sep = polar_separable_quadrature(radial, np.zeros_like(radial), p, g)
        values = radial[:, None] * g.phase[None, :] ** p
        gen = plane_quadrature(values, g)
        assert abs(sep - gen) <= 1e-13 * (1.0 + abs(gen))


def test_inner_product_examples():
    # <1,1> = pi, <z,z> = pi, <z, conj(z)> = 0
    one = lambda pts: np.ones_like(pts)
    ident = lambda pts: pts
    conj = lambda pts: pts.conjugate()
    assert inner_product_gaussian(one, one) == pytest.approx(math.pi, rel=1e-13)
    assert abs(inner_product_gaussian(ident, ident) - math.pi) <= 1e-13 * math.pi
    assert abs(inner_product_gaussian(ident, conj)) <= 1e-13


def test_inner_product_requires_unit_beta():
    g = build_polar_grid(8, 8, 2.0)
    with pytest.raises(ValueError):
        inner_product_gaussian(lambda p: p, lambda p: p, g)


def test_angular_orthogonality_of_monomials():
    g = build_polar_grid(64, 128, 1.0)
    for a in range(11):
        for b in range(a + 1, 11):
            v = inner_product_gaussian(
                lambda pts, e=a: pts**e, lambda pts, e=b: pts**e, g
            )
            norm = math.pi * math.sqrt(math.factorial(a) * math.factorial(b))
            assert abs(v) / norm < 1e-12


def test_integrate_radial_examples():
    assert integrate_radial_weighted(lambda t: np.ones_like(t), 1.0) == pytest.approx(
        1.0, rel=1e-13
    )
    assert integrate_radial_weighted(lambda t: t, 3.0) == pytest.approx(
        1.0 / 9.0, rel=1e-13
    )
    assert integrate_radial_weighted(lambda t: t**2, 2.0) == pytest.approx(
        0.25, rel=1e-13
    )


def test_integrate_radial_rescales_other_beta():
    # grid built at beta=1, integral requested at beta=2
    g = build_polar_grid(32, 8, 1.0)
    got = integrate_radial_weighted(lambda t: t**3, 2.0, g)
    assert got == pytest.approx(math.factorial(3) / 2.0**4, rel=1e-12)
    with pytest.raises(ValueError):
        integrate_radial_weighted(lambda t: t, 0.0, g)


def test_singular_quadrature_examples():
    # transform values with known closed forms
    got = cauchy_singular_quadrature(
        lambda pts: hermite_eval(HermiteIndex(1, 0), pts), 0j
    )
    assert abs(got - (-1.0)) < 1e-9

    got = cauchy_singular_quadrature(lambda pts: np.ones_like(pts), 1.0 + 0j)
    assert abs(got - (1.0 - math.exp(-1.0))) < 1e-9

    got = cauchy_singular_quadrature(
        lambda pts: hermite_eval(HermiteIndex(1, 1), pts), 1.0 + 0j
    )
    assert abs(got - (-math.exp(-1.0))) < 1e-9


def test_singular_grid_center_mismatch_raises():
    grid = build_singular_grid(1.0 + 0j)
    with pytest.raises(ValueError):
        cauchy_singular_quadrature(lambda pts: pts, 2.0 + 0j, grid)


def test_singular_refinement_stability():
    cases = (
        (lambda pts: hermite_eval(HermiteIndex(1, 0), pts), 0j),
        (lambda pts: np.ones_like(pts), 1.0 + 0j),
        (lambda pts: hermite_eval(HermiteIndex(1, 1), pts), 1.0 + 0j),
    )
    for f, z in cases:
        coarse = cauchy_singular_quadrature(f, z, build_singular_grid(z, 96, 256))
        fine = cauchy_singular_quadrature(f, z, build_singular_grid(z, 192, 512))
        assert abs(coarse - fine) <= 1e-7 * (1.0 + abs(fine))
