"""Shape parameters built from a minimizer, and convergence-rate diagnostics.

Given a minimizer x* in [0,1]^n and a precision integer r, each coordinate is
assigned beta shape parameters (eta*_i, beta*_i) so that the product-beta mean
stays within 1/r of x*_i.  Rational coordinates use their exact fraction;
irrational ones go through a continued-fraction (Dirichlet) approximation.
The induced density degree is k_r = sum_i (eta*_i + beta*_i - 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .moments import beta_raw_moment
from .polynomial import Polynomial


@dataclass(frozen=True)
class ShapeAssignment:
    """Per-coordinate beta shapes (eta*, beta*) for a minimizer at precision r."""

    eta_star: tuple[int, ...]
    beta_star: tuple[int, ...]
    r: int
    k_r: int
    cases: tuple[str, ...]       # per-coordinate tag in {i, ii, iii, iv, v, vi}

    @property
    def means(self) -> tuple[float, ...]:
        return tuple(e / (e + b) for e, b in zip(self.eta_star, self.beta_star))


def dirichlet_approx(x: float, epsilon: float) -> tuple[int, int]:
    """Integers (p, q) with |x - p/q| < epsilon/q and 1 <= q <= 1/epsilon.

    Computed from the continued-fraction convergents of x: the last convergent
    with denominator at most floor(1/epsilon) satisfies both inequalities.
    Requires x strictly inside (0, 1); callers handle rational endpoints.
    """
    if not 0.0 < x < 1.0:
        raise ValueError(f"x must lie in (0, 1), got {x}")
    if not 0.0 < epsilon <= 1.0:
        raise ValueError(f"epsilon must lie in (0, 1], got {epsilon}")
    q_cap = math.floor(1.0 / epsilon)
    frac = Fraction(x)           # exact binary rational of the float
    # convergents h_m / k_m of the continued fraction of frac
    h_prev, h = 0, 1             # h_{-2}, h_{-1}
    k_prev, k = 1, 0
    num, den = frac.numerator, frac.denominator
    best = (0, 1)
    while den:
        a = num // den
        num, den = den, num - a * den
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        if k > q_cap:
            break
        best = (h, k)
    p, q = best
    p = min(max(p, 0), q)
    return p, q


def _reduced(p: int, q: int) -> tuple[int, int]:
    g = math.gcd(p, q)
    return (p // g, q // g) if g > 1 else (p, q)


def shape_parameters(x_star: Sequence[float], r: int,
                     rationals: Sequence[tuple[int, int] | None] | None = None
                     ) -> ShapeAssignment:
    """Assign beta shapes to every coordinate of a minimizer.

    `rationals[i]`, when given, is the exact fraction (p_i, q_i) of
    coordinate i (validated, reduced defensively); coordinates without a
    supplied fraction are treated as irrational and approximated by
    dirichlet_approx with epsilon = 1/r.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    n = len(x_star)
    if rationals is None:
        rationals = [None] * n
    if len(rationals) != n:
        raise ValueError("rationals must have one entry per coordinate")
    eta: list[int] = []
    beta: list[int] = []
    cases: list[str] = []
    for i, x in enumerate(x_star):
        pq = rationals[i]
        if pq is not None:
            p, q = _reduced(int(pq[0]), int(pq[1]))
            if q < 1 or not 0 <= p <= q:
                raise ValueError(f"coordinate {i}: invalid rational {pq}")
            if abs(x - p / q) > 1e-9:
                raise ValueError(
                    f"coordinate {i}: {p}/{q} does not match value {x}")
            if p == 0:
                eta.append(1); beta.append(r); cases.append("i")
            elif p == q:
                eta.append(r); beta.append(1); cases.append("ii")
            else:
                eta.append(r * p); beta.append(r * (q - p)); cases.append("iii")
        else:
            if not 0.0 < x < 1.0:
                raise ValueError(
                    f"coordinate {i}: boundary value {x} needs an explicit rational")
            p, q = dirichlet_approx(x, 1.0 / r)
            if p == 0:
                eta.append(1); beta.append(r); cases.append("iv")
            elif p == q:
                eta.append(r); beta.append(1); cases.append("v")
            else:
                eta.append(r * p); beta.append(r * (q - p)); cases.append("vi")
    k_r = sum(e + b - 2 for e, b in zip(eta, beta))
    return ShapeAssignment(tuple(eta), tuple(beta), r, k_r, tuple(cases))


def expected_value_at_shapes(f: Polynomial, s: ShapeAssignment) -> float:
    """E f(X) for independent X_i ~ beta(eta*_i, beta*_i)."""
    if f.n_vars != len(s.eta_star):
        raise ValueError("dimension mismatch")
    value = 0.0
    for alpha, coeff in f.sorted_terms():
        factor = 1.0
        for e, b, a in zip(s.eta_star, s.beta_star, alpha):
            if a:
                factor *= beta_raw_moment(e, b, a)
        value += coeff * factor
    return value


def empirical_rate(ks: Sequence[int], gaps: Sequence[float]) -> float:
    """Least-squares slope of log(gap) against log(k)."""
    if len(ks) != len(gaps):
        raise ValueError("ks and gaps must have equal length")
    if len(ks) < 3:
        raise ValueError("need at least 3 points to fit a slope")
    if any(g <= 0 for g in gaps):
        raise ValueError("all gaps must be positive (k may be past exact convergence)")
    xs = [math.log(k) for k in ks]
    ys = [math.log(g) for g in gaps]
    xbar = sum(xs) / len(xs)
    ybar = sum(ys) / len(ys)
    sxx = sum((x - xbar) ** 2 for x in xs)
    sxy = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    return sxy / sxx


def coefficient_constant(f: Polynomial) -> float:
    """max_alpha |f_alpha| * prod(alpha_i!) / |alpha|!, the grid-rate constant."""
    best = 0.0
    for alpha, coeff in f.terms.items():
        num = 1.0
        for a in alpha:
            num *= math.factorial(a)
        best = max(best, abs(coeff) * num / math.factorial(sum(alpha)))
    return best


def grid_gap_bound(f: Polynomial, k: int) -> float:
    """Explicit O(1/k) bound on the grid-search gap, valid for k >= degree."""
    if k < 1:
        raise ValueError("k must be positive")
    d = f.degree
    return coefficient_constant(f) / k * math.comb(d + 1, 3) * f.n_vars ** d
