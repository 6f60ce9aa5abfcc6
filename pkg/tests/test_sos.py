import math

import numpy as np
import pytest

from boxbounds.handelman import uniform_value
from boxbounds.polynomial import Polynomial, builtin, relative_gap
from boxbounds.sos import (ConditioningError, build_moment_pencil, f_sos,
                           graded_basis, jacobi_eigenvalues,
                           smallest_generalized_eigenvalue)


def test_graded_basis_order():
    assert graded_basis(2, 2) == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    assert len(graded_basis(3, 4)) == math.comb(7, 4)


def test_monomial_pencil_constant_f():
    f = Polynomial(2, {(0, 0): 1.0})
    p = build_moment_pencil(f, 2, "monomial")
    np.testing.assert_allclose(p.A, p.B, rtol=1e-14)


def test_monomial_pencil_hilbert_segment():
    f = Polynomial(1, {(0,): 1.0})
    p = build_moment_pencil(f, 1, "monomial")
    np.testing.assert_allclose(p.B, [[1.0, 0.5], [0.5, 1 / 3]], rtol=1e-14)
    assert p.basis_index == ((0,), (1,))


def test_orthonormal_pencil_identity_gram():
    tf = builtin("motzkin")
    p = build_moment_pencil(tf.poly, 5)
    np.testing.assert_allclose(p.B, np.eye(p.order), atol=1e-10)
    assert p.order == math.comb(7, 5)
    # symmetry of A
    assert np.abs(p.A - p.A.T).max() <= 1e-14 * max(1.0, np.abs(p.A).max())


def test_smallest_eigenvalue_identity_cases():
    from boxbounds.sos import MomentPencil
    A = np.array([[3.0, 0.0], [0.0, -2.0]])
    p = MomentPencil(A, np.eye(2), 1, ((0,), (1,)))
    assert smallest_generalized_eigenvalue(p) == pytest.approx(-2.0, abs=1e-12)
    p2 = MomentPencil(np.eye(3), np.eye(3), 1, ((0,), (1,), (2,)))
    assert smallest_generalized_eigenvalue(p2) == pytest.approx(1.0, abs=1e-12)


def test_smallest_eigenvalue_scaled_pencil():
    from boxbounds.sos import MomentPencil
    rng = np.random.Generator(np.random.PCG64(31))
    for _ in range(10):
        n = int(rng.integers(2, 6))
        M = rng.normal(size=(n, n))
        B = M @ M.T + n * np.eye(n)
        c = float(rng.normal())
        p = MomentPencil(c * B, B, 1, tuple((i,) for i in range(n)))
        assert smallest_generalized_eigenvalue(p) == pytest.approx(c, rel=1e-9,
                                                                   abs=1e-9)


def test_jacobi_against_lapack():
    rng = np.random.Generator(np.random.PCG64(32))
    for n in (3, 10, 40):
        M = rng.normal(size=(n, n))
        S = (M + M.T) / 2
        mine = np.sort(jacobi_eigenvalues(S))
        ref = np.sort(np.linalg.eigvalsh(S))
        np.testing.assert_allclose(mine, ref, rtol=1e-9, atol=1e-9)


def test_styblinski_reference_values():
    tf = builtin("styblinski_tang", 2)
    assert f_sos(tf.poly, 1) == pytest.approx(-12.9249, abs=1e-3)
    assert f_sos(tf.poly, 3) == pytest.approx(-34.403, abs=1e-2)


def test_booth_reference_gap():
    tf = builtin("booth")
    assert relative_gap(f_sos(tf.poly, 1), tf) == pytest.approx(9.433, abs=5e-3)


def test_monotone_in_k():
    tf = builtin("styblinski_tang", 2)
    values = [f_sos(tf.poly, k) for k in range(0, 7)]
    assert all(values[i + 1] <= values[i] + 1e-8 for i in range(len(values) - 1))


def test_sandwich_above_minimum():
    for name in ("booth", "matyas", "motzkin"):
        tf = builtin(name)
        for k in (1, 3, 5):
            assert f_sos(tf.poly, k) >= tf.f_min - 1e-8


def test_basis_invariance_small_degrees():
    tf = builtin("matyas")
    for k in range(0, 5):
        a = f_sos(tf.poly, k, "orthonormal")
        b = f_sos(tf.poly, k, "monomial")
        assert a == pytest.approx(b, rel=1e-6, abs=1e-8)


def test_k0_equals_uniform_mean():
    tf = builtin("three_hump_camel")
    v = f_sos(tf.poly, 0)
    assert v == pytest.approx(uniform_value(tf.poly), rel=1e-10)


def test_monomial_basis_conditioning_error():
    # the monomial Gram matrix is Hilbert-like; at this order its Cholesky
    # factorization must hit a nonpositive pivot in double precision
    f = Polynomial(1, {(2,): 1.0})
    with pytest.raises(ConditioningError):
        build_moment_pencil(f, 25, "monomial")
        smallest_generalized_eigenvalue(build_moment_pencil(f, 25, "monomial"))


def test_unknown_basis_rejected():
    with pytest.raises(ValueError):
        build_moment_pencil(Polynomial.zero(1), 1, "chebyshev")
