import numpy as np
import pytest

from boxbounds.polynomial import (ParseError, Polynomial, add, builtin,
                                  evaluate, gap_to_bound, parse_polynomial,
                                  relative_gap, scale, to_text)


def test_parse_two_terms():
    p = parse_polynomial("n=2\n1.0 : 1 0\n1.0 : 0 1")
    assert p.n_vars == 2
    assert dict(p.terms) == {(1, 0): 1.0, (0, 1): 1.0}
    assert p.degree == 1


def test_parse_cancellation_gives_zero():
    p = parse_polynomial("n=1\n2.0 : 3\n-2.0 : 3")
    assert dict(p.terms) == {}
    assert p.degree == 0


def test_parse_negative_exponent_rejected():
    with pytest.raises(ParseError, match="line 2"):
        parse_polynomial("n=2\n1 : 0 -1")


def test_parse_dimension_mismatch_rejected():
    with pytest.raises(ParseError, match="line 2"):
        parse_polynomial("n=2\n1.0 : 1 0 0")


def test_parse_missing_header_rejected():
    with pytest.raises(ParseError):
        parse_polynomial("1.0 : 1 0")
    with pytest.raises(ParseError):
        parse_polynomial("   \n# only a comment\n")


def test_parse_comments_and_blank_lines():
    p = parse_polynomial("# leading comment\n\nn=2\n2.5 : 1 1  # a term\n")
    assert dict(p.terms) == {(1, 1): 2.5}


def test_roundtrip_serialization():
    p = parse_polynomial("n=3\n1.25 : 1 0 2\n-0.5 : 0 0 0\n3 : 2 2 2")
    again = parse_polynomial(to_text(p))
    assert dict(again.terms) == dict(p.terms)
    assert again.n_vars == p.n_vars


def test_zero_coefficient_dropped_on_construction():
    p = Polynomial(2, {(1, 0): 0.0, (0, 1): 2.0})
    assert dict(p.terms) == {(0, 1): 2.0}


def test_invalid_construction():
    with pytest.raises(ValueError):
        Polynomial(2, {(1,): 1.0})
    with pytest.raises(ValueError):
        Polynomial(2, {(-1, 0): 1.0})
    with pytest.raises(ValueError):
        Polynomial(0, {})


def test_evaluate_booth_reference_points():
    booth = builtin("booth")
    assert abs(evaluate(booth.poly, (0.55, 0.65))) < 1e-9
    assert evaluate(booth.poly, (0.0, 0.0)) == pytest.approx(2594.0, abs=1e-9)


def test_evaluate_motzkin_minimizer():
    motzkin = builtin("motzkin")
    assert abs(evaluate(motzkin.poly, (0.25, 0.75))) < 1e-9


def test_evaluate_dimension_mismatch():
    with pytest.raises(ValueError):
        evaluate(builtin("booth").poly, (0.5,))


def test_evaluate_linear_in_coefficients():
    rng = np.random.Generator(np.random.PCG64(11))
    for _ in range(20):
        n = int(rng.integers(1, 4))
        def rand_poly():
            terms = {}
            for _ in range(int(rng.integers(1, 6))):
                expo = tuple(int(e) for e in rng.integers(0, 4, size=n))
                terms[expo] = float(rng.normal())
            return Polynomial(n, terms)
        p, q = rand_poly(), rand_poly()
        a, b = float(rng.normal()), float(rng.normal())
        x = rng.random(n)
        combo = add(scale(p, a), scale(q, b))
        assert evaluate(combo, x) == pytest.approx(
            a * evaluate(p, x) + b * evaluate(q, x), rel=1e-9, abs=1e-9)


# --- builtin library ---------------------------------------------------------

def test_builtin_names_and_errors():
    with pytest.raises(ValueError):
        builtin("nope")
    with pytest.raises(ValueError):
        builtin("booth", 3)
    with pytest.raises(ValueError):
        builtin("rosenbrock", 1)


def test_styblinski_reference_constants():
    tf = builtin("styblinski_tang", 2)
    # the gap tables' normalization constant; the widely printed -39.16599n
    # rounds differently and the true minimum is -39.1661657n
    assert tf.f_min == pytest.approx(2 * -39.16499, abs=1e-12)
    assert tf.f_min == pytest.approx(-78.33198, abs=5e-3)
    assert tf.f_max == 250.0
    tf3 = builtin("styblinski_tang", 3)
    assert tf3.f_max == 375.0


def test_rosenbrock_reference_constants():
    tf = builtin("rosenbrock", 3)
    assert tf.f_max == pytest.approx(7811.86, abs=1e-2)
    assert tf.f_max == pytest.approx(2 * 3905.9262268416, abs=1e-9)
    assert builtin("rosenbrock", 2).f_max == pytest.approx(3905.9262268416, abs=1e-9)


def test_matyas_reference():
    tf = builtin("matyas")
    assert tf.f_min == 0.0
    assert tf.f_max == pytest.approx(100.0, abs=1e-9)
    assert evaluate(tf.poly, (0.5, 0.5)) == pytest.approx(0.0, abs=1e-9)


@pytest.mark.parametrize("name,n", [
    ("booth", 2), ("matyas", 2), ("motzkin", 2), ("three_hump_camel", 2),
    ("rosenbrock", 2), ("rosenbrock", 3), ("rosenbrock", 4),
    ("styblinski_tang", 2), ("styblinski_tang", 3),
])
def test_minimizer_consistency(name, n):
    tf = builtin(name, n)
    # styblinski-tang's reference constant is rounded; its true minimum
    # differs from f_min by ~1.2e-3 per coordinate
    tol = 5e-3 * n if name == "styblinski_tang" else 1e-9
    for point in tf.minimizers:
        assert evaluate(tf.poly, point) == pytest.approx(tf.f_min, abs=tol)


@pytest.mark.parametrize("name,n", [
    ("booth", 2), ("matyas", 2), ("motzkin", 2), ("three_hump_camel", 2),
    ("rosenbrock", 2), ("rosenbrock", 4), ("styblinski_tang", 2),
])
def test_maximizer_consistency(name, n):
    tf = builtin(name, n)
    assert evaluate(tf.poly, tf.maximizer) == pytest.approx(tf.f_max, abs=1e-6)


def test_rosenbrock3_maximizer_offset():
    # the n=3 polynomial carries a single anchor term, so its value at the
    # maximizer sits exactly one anchor (3.048^2) below the reference f_max
    tf = builtin("rosenbrock", 3)
    got = evaluate(tf.poly, tf.maximizer)
    assert got == pytest.approx(tf.f_max - 3.048 ** 2, abs=1e-6)


def test_minimizer_rationals_match():
    for name, n in [("booth", 2), ("matyas", 2), ("motzkin", 2),
                    ("three_hump_camel", 2), ("rosenbrock", 3)]:
        tf = builtin(name, n)
        assert tf.minimizer_rationals is not None
        for x, (p, q) in zip(tf.minimizers[0], tf.minimizer_rationals):
            assert abs(x - p / q) < 1e-12
    assert builtin("styblinski_tang", 2).minimizer_rationals is None


# --- relative gap ------------------------------------------------------------

def test_relative_gap_endpoints():
    tf = builtin("booth")
    assert relative_gap(tf.f_min, tf) == 0.0
    assert relative_gap(tf.f_max, tf) == pytest.approx(100.0)


def test_relative_gap_degenerate_range():
    tf = builtin("booth")
    broken = type(tf)(name="x", poly=tf.poly, f_min=1.0, f_max=1.0,
                      minimizers=tf.minimizers, maximizer=tf.maximizer, n_vars=2)
    with pytest.raises(ValueError):
        relative_gap(0.5, broken)


def test_relative_gap_inversion_booth():
    # the degree-1 bound 280.666... corresponds to the tabulated 10.8199%
    tf = builtin("booth")
    bound = gap_to_bound(10.8199, tf)
    assert bound == pytest.approx(280.668, abs=5e-3)
    assert relative_gap(bound, tf) == pytest.approx(10.8199, abs=1e-12)
