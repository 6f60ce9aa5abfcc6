import math
from fractions import Fraction

import numpy as np
import pytest

from boxbounds.handelman import (bound_series, candidate_value, count_exponents,
                                 enumerate_exponents, f_beta_refine,
                                 f_handelman, f_handelman_powered,
                                 near_optimal_pairs, shape_objective,
                                 uniform_value)
from boxbounds.moments import ExponentPair, moment_ratio_exact
from boxbounds.polynomial import Polynomial, builtin, relative_gap


def _random_poly(rng, n, max_terms=6, max_exp=4):
    terms = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        expo = tuple(int(e) for e in rng.integers(0, max_exp + 1, size=n))
        terms[expo] = float(rng.normal())
    return Polynomial(n, terms)


# --- enumeration -------------------------------------------------------------

def test_enumerate_n1_k1():
    got = list(enumerate_exponents(1, 1))
    # ascending lex on the concatenated vector: (0,1) before (1,0)
    assert got == [ExponentPair((0,), (1,)), ExponentPair((1,), (0,))]


def test_enumerate_counts():
    assert len(list(enumerate_exponents(2, 2))) == 10
    assert count_exponents(2, 2) == 10
    assert count_exponents(2, 50) == 23426
    assert count_exponents(2, 50) == math.comb(53, 3)


def test_enumerate_exactly_once_in_order():
    pairs = list(enumerate_exponents(2, 3))
    concat = [p.concatenated() for p in pairs]
    assert len(set(concat)) == len(concat) == count_exponents(2, 3)
    assert concat == sorted(concat)
    assert all(p.degree == 3 for p in pairs)


def test_enumerate_k0():
    assert list(enumerate_exponents(3, 0)) == [ExponentPair.zeros(3)]


# --- candidate values --------------------------------------------------------

def test_candidate_value_uniform_mean():
    f = Polynomial(2, {(1, 0): 1.0, (0, 1): 1.0})
    assert candidate_value(f, ExponentPair.zeros(2)) == pytest.approx(1.0)


def test_candidate_value_linear_closed_form():
    # for f = sum x_i the value is sum (eta_i+1)/(eta_i+beta_i+2)
    rng = np.random.Generator(np.random.PCG64(21))
    f = Polynomial(3, {(1, 0, 0): 1.0, (0, 1, 0): 1.0, (0, 0, 1): 1.0})
    for _ in range(30):
        eta = tuple(int(e) for e in rng.integers(0, 8, 3))
        beta = tuple(int(b) for b in rng.integers(0, 8, 3))
        expected = sum((e + 1) / (e + b + 2) for e, b in zip(eta, beta))
        assert candidate_value(f, ExponentPair(eta, beta)) == pytest.approx(
            expected, rel=1e-13)


def test_candidate_value_k0_equals_exact_integral():
    tf = builtin("styblinski_tang", 2)
    exact = sum(Fraction(c) * Fraction(1, (a[0] + 1) * (a[1] + 1))
                for a, c in tf.poly.terms.items())
    assert uniform_value(tf.poly) == pytest.approx(float(exact), rel=1e-12)


def test_candidate_value_dimension_mismatch():
    f = Polynomial(2, {(1, 0): 1.0})
    with pytest.raises(ValueError):
        candidate_value(f, ExponentPair((0,), (0,)))


def test_candidate_value_exact_oracle():
    rng = np.random.Generator(np.random.PCG64(22))
    for _ in range(30):
        n = int(rng.integers(1, 4))
        f = _random_poly(rng, n)
        k = int(rng.integers(0, 21))
        eta = tuple(int(e) for e in rng.integers(0, k + 1, n))
        room = k - sum(eta)
        beta = (0,) * n if room <= 0 else tuple(
            int(b) for b in rng.multinomial(room, [1 / n] * n))
        p = ExponentPair(eta, beta)
        exact = sum(Fraction(c) * moment_ratio_exact(p, a)
                    for a, c in f.terms.items())
        assert candidate_value(f, p) == pytest.approx(float(exact), rel=1e-10)


# --- the bounds --------------------------------------------------------------

def test_booth_k5():
    tf = builtin("booth")
    assert f_handelman(tf.poly, 5).value == pytest.approx(172.0, abs=5e-4)


def test_styblinski_k2_value_and_argmin():
    tf = builtin("styblinski_tang", 2)
    b = f_handelman(tf.poly, 2)
    assert b.value == pytest.approx(-17.3810, abs=5e-4)
    # the optimal density is 6 x2 (1 - x2)
    assert b.argmin == ExponentPair((0, 1), (0, 1))
    assert b.candidates_evaluated == count_exponents(2, 2)


def test_linear_example_k2():
    f = Polynomial(2, {(1, 0): 1.0, (0, 1): 1.0})
    b = f_handelman(f, 2)
    assert b.value == pytest.approx(2 / 3, rel=1e-13)
    assert b.argmin == ExponentPair((0, 0), (1, 1))
    # lower bound n/(k+2) for the linear objective
    for k in range(1, 12):
        assert f_handelman(f, k).value >= 2 / (k + 2) - 1e-12


def test_bound_result_recompute_invariant():
    tf = builtin("motzkin")
    for k in (3, 7, 12):
        b = f_handelman(tf.poly, k)
        again = candidate_value(tf.poly, b.argmin)
        assert b.value == pytest.approx(again, rel=1e-12)


def test_powered_r1_is_identical():
    tf = builtin("three_hump_camel")
    for k in (2, 6, 11):
        a = f_handelman(tf.poly, k)
        b = f_handelman_powered(tf.poly, k, 1)
        assert a.value == b.value
        assert a.argmin == b.argmin


def test_powered_reference_cells():
    st = builtin("styblinski_tang", 2)
    b = f_handelman_powered(st.poly, 10, 5)
    assert relative_gap(b.value, st) == pytest.approx(5.4195, abs=5e-4)
    r3 = builtin("rosenbrock", 3)
    b = f_handelman_powered(r3.poly, 10, 3)
    assert relative_gap(b.value, r3) == pytest.approx(1.4251, abs=5e-4)


def test_zero_polynomial_bounds():
    z = Polynomial.zero(2)
    series = bound_series(z, 4)
    assert [b.value for b in series] == [0.0] * 4
    assert f_handelman(z, 3).value == 0.0


def test_bound_series_monotone():
    tf = builtin("motzkin")
    series = bound_series(tf.poly, 12)
    values = [b.value for b in series]
    assert all(values[i + 1] <= values[i] + 1e-12 for i in range(len(values) - 1))
    assert [b.k for b in series] == list(range(1, 13))


def test_upper_bound_validity():
    for name, n in [("booth", 2), ("matyas", 2), ("styblinski_tang", 2)]:
        tf = builtin(name, n)
        for k in (1, 5, 10):
            assert f_handelman(tf.poly, k).value >= tf.f_min - 1e-9


def test_min_over_lower_degrees_never_beats_k():
    # degree embedding: adding 1 = x + (1-x) lets any lower-degree density be
    # rewritten at degree k, so the degree-k minimum covers all j <= k
    rng = np.random.Generator(np.random.PCG64(23))
    for _ in range(10):
        f = _random_poly(rng, 2)
        k = int(rng.integers(1, 5))
        at_k = f_handelman(f, k).value
        over_all = min(candidate_value(f, p)
                       for j in range(k + 1) for p in enumerate_exponents(2, j))
        assert at_k <= over_all + 1e-12


def test_brute_force_equivalence_value_and_argmin():
    rng = np.random.Generator(np.random.PCG64(24))
    for _ in range(50):
        f = _random_poly(rng, 2)
        k = int(rng.integers(0, 7))
        got = f_handelman(f, k)
        best_val, best_pair = math.inf, None
        for p in enumerate_exponents(2, k):
            v = candidate_value(f, p)
            if v < best_val:
                best_val, best_pair = v, p
        assert got.value == best_val
        assert got.argmin == best_pair


def test_worker_determinism():
    tf = builtin("rosenbrock", 3)
    results = [f_handelman_powered(tf.poly, 30, 1, workers=w)
               for w in (1, 2, 4, 8)]
    base = results[0]
    assert base.candidates_evaluated > 1 << 18  # spans several chunks
    for b in results[1:]:
        assert b.value == base.value            # bitwise
        assert b.argmin == base.argmin


def test_near_optimal_pairs_finds_symmetric_tie():
    tf = builtin("styblinski_tang", 2)
    ties = [p for p, _ in near_optimal_pairs(tf.poly, 2, rel_tol=1e-12)]
    assert ExponentPair((0, 1), (0, 1)) in ties
    assert ExponentPair((1, 0), (1, 0)) in ties


# --- continuous refinement ---------------------------------------------------

def test_refine_never_increases():
    tf = builtin("booth")
    b = f_handelman(tf.poly, 5)
    ref = f_beta_refine(tf.poly, 5, b.argmin)
    assert ref.value <= b.value + 1e-12
    assert sum(ref.eta) + sum(ref.beta) == pytest.approx(5.0, abs=1e-9)


def test_refine_univariate_against_grid_sweep():
    f = Polynomial(1, {(1,): 1.0})
    start = ExponentPair((0,), (2,))
    ref = f_beta_refine(f, 2, start)
    # sweep the simplex eta + beta = 2 densely as an independent oracle
    sweep = min(shape_objective(f, (t,), (2.0 - t,))
                for t in np.linspace(0.0, 2.0, 20001))
    assert ref.value <= 0.25 + 1e-12
    assert ref.value == pytest.approx(sweep, abs=1e-6)


def test_refine_zero_polynomial():
    z = Polynomial.zero(2)
    ref = f_beta_refine(z, 3, ExponentPair((1, 1), (1, 0)))
    assert ref.value == 0.0


def test_refine_start_degree_mismatch():
    f = Polynomial(1, {(1,): 1.0})
    with pytest.raises(ValueError):
        f_beta_refine(f, 3, ExponentPair((0,), (2,)))


def test_shape_objective_matches_candidate_value_on_integers():
    rng = np.random.Generator(np.random.PCG64(25))
    for _ in range(20):
        f = _random_poly(rng, 2)
        eta = tuple(int(e) for e in rng.integers(0, 5, 2))
        beta = tuple(int(b) for b in rng.integers(0, 5, 2))
        lhs = shape_objective(f, [float(e) for e in eta], [float(b) for b in beta])
        rhs = candidate_value(f, ExponentPair(eta, beta))
        assert lhs == pytest.approx(rhs, rel=1e-12)
