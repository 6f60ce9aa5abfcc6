import math

import numpy as np
import pytest

from boxbounds.feasible import (GENERATOR_ID, JensenCase, NonUnique,
                                beta_ppf, betainc, convexity_diagnostic,
                                density_mode, expectation_point,
                                jensen_classify, sample_beta_point,
                                sample_points, sample_statistics)
from boxbounds.handelman import f_handelman
from boxbounds.moments import ExponentPair, beta_raw_moment
from boxbounds.polynomial import Polynomial, builtin, evaluate


def test_expectation_point_values():
    assert expectation_point(ExponentPair.zeros(3)) == (0.5, 0.5, 0.5)
    assert expectation_point(ExponentPair((1,), (1,))) == pytest.approx((0.5,))
    assert expectation_point(ExponentPair((2,), (1,)), r=2) == pytest.approx(
        (5 / 8,))


def test_density_mode_values():
    assert density_mode(ExponentPair((1,), (1,))) == pytest.approx((0.5,))
    assert density_mode(ExponentPair((0,), (3,))) == (0.0,)
    assert density_mode(ExponentPair((3,), (0,))) == (1.0,)
    assert density_mode(ExponentPair((0, 1), (0, 1))) is NonUnique


def test_mode_boundary_consistency():
    rng = np.random.Generator(np.random.PCG64(51))
    for _ in range(30):
        eta = tuple(int(e) for e in rng.integers(0, 6, 2))
        beta = tuple(int(b) for b in rng.integers(0, 6, 2))
        point = density_mode(ExponentPair(eta, beta))
        if point is NonUnique:
            assert any(e == 0 and b == 0 for e, b in zip(eta, beta))
            continue
        for c, e, b in zip(point, eta, beta):
            assert 0.0 <= c <= 1.0
            if e == 0 and b > 0:
                assert c == 0.0
            if b == 0 and e > 0:
                assert c == 1.0


def test_jensen_classification_order():
    booth = builtin("booth").poly
    assert jensen_classify(booth, convex_asserted=True) is JensenCase.CONVEX_ASSERTED
    f = Polynomial(2, {(1, 1): 1.0, (1, 0): 2.0})
    assert jensen_classify(f) is JensenCase.NONNEGATIVE_COEFFICIENTS
    g = Polynomial(2, {(1, 1): 1.0, (1, 0): -2.0})
    assert jensen_classify(g) is JensenCase.SQUARE_FREE
    h = Polynomial(2, {(2, 0): 1.0, (0, 1): -1.0})
    assert jensen_classify(h) is JensenCase.NOT_APPLICABLE


def test_jensen_inequality_convex_builtins():
    for name in ("booth", "matyas"):
        tf = builtin(name)
        for k in (2, 5, 10, 20):
            b = f_handelman(tf.poly, k)
            point = expectation_point(b.argmin)
            assert evaluate(tf.poly, point) <= b.value + 1e-9


def test_jensen_inequality_square_free_and_nonnegative():
    rng = np.random.Generator(np.random.PCG64(52))
    for _ in range(10):
        square_free = Polynomial(2, {
            (int(a), int(b)): float(rng.normal())
            for a in (0, 1) for b in (0, 1)})
        nonneg = Polynomial(2, {
            tuple(int(e) for e in rng.integers(0, 4, 2)): float(rng.uniform(0, 2))
            for _ in range(4)})
        for f in (square_free, nonneg):
            if not f.terms:
                continue
            for k in (1, 3, 5):
                b = f_handelman(f, k)
                point = expectation_point(b.argmin)
                assert evaluate(f, point) <= b.value + 1e-9


def test_table6_spot_values():
    booth = builtin("booth")
    b = f_handelman(booth.poly, 20)
    assert evaluate(booth.poly, expectation_point(b.argmin)) == pytest.approx(
        2.0, abs=5e-4)
    motzkin = builtin("motzkin")
    b = f_handelman(motzkin.poly, 40)
    point = density_mode(b.argmin)
    assert evaluate(motzkin.poly, point) == pytest.approx(0.2955, abs=5e-4)
    matyas = builtin("matyas")
    b = f_handelman(matyas.poly, 40)
    assert evaluate(matyas.poly, density_mode(b.argmin)) == pytest.approx(
        0.0, abs=5e-4)


def test_convexity_diagnostic():
    assert convexity_diagnostic(builtin("booth").poly, seed=1, points=25)
    assert not convexity_diagnostic(builtin("motzkin").poly, seed=1, points=50)


# --- incomplete beta and inversion -------------------------------------------

def test_betainc_endpoints_and_uniform():
    assert betainc(2, 3, 0.0) == 0.0
    assert betainc(2, 3, 1.0) == 1.0
    x = np.linspace(0, 1, 11)
    np.testing.assert_allclose(betainc(1, 1, x), x, atol=1e-14)


def test_betainc_symmetry():
    x = np.linspace(0.01, 0.99, 23)
    np.testing.assert_allclose(betainc(3, 7, x), 1 - betainc(7, 3, 1 - x),
                               atol=1e-13)


@pytest.mark.parametrize("a,b", [(1, 1), (2, 3), (1, 52), (51, 1), (26, 26),
                                 (251, 251), (7, 44)])
def test_inversion_contract(a, b):
    rng = np.random.Generator(np.random.PCG64(53))
    u = rng.random(500)
    x = beta_ppf(a, b, u)
    assert np.all((x >= 0) & (x <= 1))
    assert np.abs(betainc(a, b, x) - u).max() < 1e-10


def test_uniform_coordinates_pass_through():
    # beta(1,1) inversion is the identity, so the point IS the raw uniforms
    rng1 = np.random.Generator(np.random.PCG64(99))
    rng2 = np.random.Generator(np.random.PCG64(99))
    point = sample_beta_point(ExponentPair.zeros(3), 1, rng1)
    assert point == tuple(rng2.random(3))


def test_sample_determinism_and_feasibility():
    p = ExponentPair((3, 1), (2, 4))
    a = sample_points(p, 2, 50, seed=7)
    b = sample_points(p, 2, 50, seed=7)
    np.testing.assert_array_equal(a, b)
    assert np.all((a >= 0) & (a <= 1))


def test_batch_matches_sequential_draws():
    p = ExponentPair((2, 0), (1, 3))
    batch = sample_points(p, 1, 5, seed=13)
    rng = np.random.Generator(np.random.PCG64(13))
    rows = [sample_beta_point(p, 1, rng) for _ in range(5)]
    np.testing.assert_array_equal(batch, np.array(rows))


def test_empirical_moments_match_closed_form():
    # coordinate with eta=2, beta=1 is beta(3,2): mean 3/5
    p = ExponentPair((2,), (1,))
    X = sample_points(p, 1, 100_000, seed=5)[:, 0]
    for m in (1, 2, 3):
        mu = beta_raw_moment(3, 2, m)
        sigma = math.sqrt(beta_raw_moment(3, 2, 2 * m) - mu ** 2)
        se = sigma / math.sqrt(len(X))
        assert abs(np.mean(X ** m) - mu) < 5 * se


def test_sample_statistics_constant_polynomial():
    f = Polynomial(2, {(0, 0): 4.5})
    stats = sample_statistics(f, ExponentPair.zeros(2), 1, 100, seed=3)
    assert stats.mean == pytest.approx(4.5)
    assert stats.variance == 0.0
    assert stats.minimum == pytest.approx(4.5)
    assert stats.generator == GENERATOR_ID


def test_sample_statistics_validation():
    f = Polynomial(1, {(1,): 1.0})
    with pytest.raises(ValueError):
        sample_statistics(f, ExponentPair((1,), (0,)), 1, 1, seed=0)
    with pytest.raises(ValueError):
        sample_statistics(f, ExponentPair((1, 0), (0, 1)), 1, 10, seed=0)


def test_sample_mean_tracks_bound():
    tf = builtin("motzkin")
    b = f_handelman(tf.poly, 50)
    assert b.value == pytest.approx(0.5914, abs=5e-4)
    stats = sample_statistics(tf.poly, b.argmin, 1, 100, seed=17)
    se = math.sqrt(stats.variance / stats.sample_size)
    assert abs(stats.mean - b.value) <= 4 * se
    assert stats.minimum <= stats.mean


def test_sample_statistics_reproducible():
    tf = builtin("three_hump_camel")
    b = f_handelman(tf.poly, 10)
    s1 = sample_statistics(tf.poly, b.argmin, 1, 64, seed=21)
    s2 = sample_statistics(tf.poly, b.argmin, 1, 64, seed=21)
    assert s1 == s2
