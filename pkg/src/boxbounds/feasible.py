"""Feasible points extracted from an optimal density: mode, mean, and sampling.

A density (x^eta (1-x)^beta)^r factorizes into independent beta(r*eta_i+1,
r*beta_i+1) coordinates, so the mean and mode have closed forms and sampling
reduces to inverting the univariate beta CDF coordinate by coordinate.  The
inversion (bisection plus Newton polish against the regularized incomplete
beta function) is a pure function of the uniform draw, which makes seeded
sampling reproducible regardless of batching.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
import numpy as np

from .moments import ExponentPair
from .polynomial import Polynomial, evaluate

GENERATOR_ID = "pcg64"      # numpy PCG64; recorded in SampleStats for pinning


class _NonUniqueType:
    """Sentinel: the density is flat in some coordinate, so no unique mode."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NonUnique"

    def __bool__(self):
        return False


NonUnique = _NonUniqueType()


class JensenCase(enum.Enum):
    CONVEX_ASSERTED = "convex_asserted"
    NONNEGATIVE_COEFFICIENTS = "nonnegative_coefficients"
    SQUARE_FREE = "square_free"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class SampleStats:
    """Statistics of f over a seeded product-beta sample."""

    mean: float
    variance: float
    minimum: float
    minimizer: tuple[float, ...]
    sample_size: int
    seed: int
    generator: str = GENERATOR_ID


# ---------------------------------------------------------------------------
# closed-form points
# ---------------------------------------------------------------------------

def expectation_point(p: ExponentPair, r: int = 1) -> tuple[float, ...]:
    """Mean of the powered density: coordinate i is (r*eta_i+1)/(r*eta_i+r*beta_i+2)."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    return tuple((r * e + 1) / (r * e + r * b + 2) for e, b in zip(p.eta, p.beta))


def density_mode(p: ExponentPair, r: int = 1):
    """Mode of the powered density, or NonUnique if flat in some coordinate.

    Coordinate i of the mode is r*eta_i / (r*eta_i + r*beta_i); when
    eta_i = beta_i = 0 that coordinate's density is constant and the mode is
    not unique.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    if any(e == 0 and b == 0 for e, b in zip(p.eta, p.beta)):
        return NonUnique
    return tuple((r * e) / (r * e + r * b) for e, b in zip(p.eta, p.beta))


def jensen_classify(f: Polynomial, convex_asserted: bool = False) -> JensenCase:
    """First applicable certificate that f(E(X)) <= E(f(X)) transfers.

    Checks, in order: caller-asserted convexity, all coefficients
    nonnegative, all exponents in {0,1}^n.  The coefficient and square-free
    checks are purely syntactic.
    """
    if convex_asserted:
        return JensenCase.CONVEX_ASSERTED
    if all(c >= 0 for c in f.terms.values()):
        return JensenCase.NONNEGATIVE_COEFFICIENTS
    if all(all(e in (0, 1) for e in alpha) for alpha in f.terms):
        return JensenCase.SQUARE_FREE
    return JensenCase.NOT_APPLICABLE


def convexity_diagnostic(f: Polynomial, seed: int = 0, points: int = 100,
                         step: float = 1e-4) -> bool:
    """Sample finite-difference Hessians; False if a negative eigenvalue shows up.

    Advisory only: classification never depends on this.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    n = f.n_vars
    for _ in range(points):
        x = rng.uniform(step, 1.0 - step, size=n)
        H = np.empty((n, n))
        fx = evaluate(f, x)
        for i in range(n):
            for j in range(i, n):
                ei = np.zeros(n)
                ej = np.zeros(n)
                ei[i] = step
                ej[j] = step
                if i == j:
                    d2 = (evaluate(f, x + ei) - 2 * fx + evaluate(f, x - ei)) / step ** 2
                else:
                    d2 = (evaluate(f, x + ei + ej) - evaluate(f, x + ei - ej)
                          - evaluate(f, x - ei + ej) + evaluate(f, x - ei - ej)) / (4 * step ** 2)
                H[i, j] = H[j, i] = d2
        if np.linalg.eigvalsh(H).min() < -1e-4 * max(1.0, np.abs(H).max()):
            return False
    return True


# ---------------------------------------------------------------------------
# regularized incomplete beta and its inverse (vectorized, self-contained)
# ---------------------------------------------------------------------------

def _betacf(a: float, b: float, x: np.ndarray, max_iter: int = 300) -> np.ndarray:
    """Continued fraction for the incomplete beta (modified Lentz).

    Lanes stop updating once converged, so values are independent of what
    else is in the batch.
    """
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = np.ones_like(x)
    d = 1.0 - qab * x / qap
    d = np.where(np.abs(d) < tiny, tiny, d)
    d = 1.0 / d
    h = d.copy()
    active = np.ones(x.shape, dtype=bool)
    for m in range(1, max_iter + 1):
        m2 = 2 * m
        for aa_num in (m * (b - m) * x / ((qam + m2) * (a + m2)),
                       -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))):
            d_new = 1.0 + aa_num * d
            d_new = np.where(np.abs(d_new) < tiny, tiny, d_new)
            c_new = 1.0 + aa_num / c
            c_new = np.where(np.abs(c_new) < tiny, tiny, c_new)
            d_new = 1.0 / d_new
            delta = d_new * c_new
            d = np.where(active, d_new, d)
            c = np.where(active, c_new, c)
            h = np.where(active, h * delta, h)
        active = active & (np.abs(delta - 1.0) >= 1e-15)
        if not active.any():
            break
    return h


def betainc(a: float, b: float, x) -> np.ndarray:
    """Regularized incomplete beta function I_x(a, b), vectorized over x."""
    if a <= 0 or b <= 0:
        raise ValueError("shape parameters must be positive")
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x).copy()
    if np.any((x < 0) | (x > 1)):
        raise ValueError("x must lie in [0, 1]")
    out = np.empty_like(x)
    ln_beta = math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)
    interior = (x > 0) & (x < 1)
    xi = x[interior]
    front = np.exp(a * np.log(xi) + b * np.log1p(-xi) - ln_beta)
    direct = xi < (a + 1.0) / (a + b + 2.0)
    res = np.empty_like(xi)
    if direct.any():
        xd = xi[direct]
        res[direct] = np.exp(a * np.log(xd) + b * np.log1p(-xd) - ln_beta) \
            * _betacf(a, b, xd) / a
    if (~direct).any():
        xc = xi[~direct]
        res[~direct] = 1.0 - np.exp(a * np.log(xc) + b * np.log1p(-xc) - ln_beta) \
            * _betacf(b, a, 1.0 - xc) / b
    out[interior] = np.clip(res, 0.0, 1.0)
    out[x <= 0] = 0.0
    out[x >= 1] = 1.0
    return out[0] if scalar else out


def beta_ppf(a: float, b: float, u, bisect_iters: int = 45,
             newton_iters: int = 6) -> np.ndarray:
    """Invert the beta(a, b) CDF at u: bisection bracket, Newton polish.

    Meets |CDF(x) - u| < 1e-10 on the interior; beta(1,1) returns u itself
    so uniform coordinates pass the generator's draws through unchanged.
    """
    u = np.asarray(u, dtype=float)
    scalar = u.ndim == 0
    u = np.atleast_1d(u)
    if np.any((u < 0) | (u > 1)):
        raise ValueError("u must lie in [0, 1]")
    if a == 1 and b == 1:
        x = u.copy()
        return x[0] if scalar else x
    lo = np.zeros_like(u)
    hi = np.ones_like(u)
    for _ in range(bisect_iters):
        mid = 0.5 * (lo + hi)
        too_low = betainc(a, b, mid) < u
        lo = np.where(too_low, mid, lo)
        hi = np.where(too_low, hi, mid)
    x = 0.5 * (lo + hi)
    ln_beta = math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)
    for _ in range(newton_iters):
        interior = (x > 0) & (x < 1)
        xi = np.clip(x, 1e-308, 1.0 - 1e-16)
        pdf = np.where(interior,
                       np.exp((a - 1.0) * np.log(xi) + (b - 1.0) * np.log1p(-xi) - ln_beta),
                       0.0)
        err = betainc(a, b, x) - u
        step = np.where(pdf > 0, err / np.where(pdf > 0, pdf, 1.0), 0.0)
        x = np.clip(x - step, lo, hi)
    return x[0] if scalar else x


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------

def sample_beta_point(p: ExponentPair, r: int, rng: np.random.Generator) -> tuple[float, ...]:
    """Draw one point with independent beta(r*eta_i+1, r*beta_i+1) coordinates.

    Consumes exactly n uniforms from rng, in coordinate order, and inverts
    each through the CDF; identical seeds give identical points.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    u = rng.random(p.n)
    return tuple(float(beta_ppf(r * e + 1, r * b + 1, ui))
                 for (e, b), ui in zip(zip(p.eta, p.beta), u))


def sample_points(p: ExponentPair, r: int, count: int, seed: int) -> np.ndarray:
    """Draw `count` points as an array; row j equals the j-th sequential draw."""
    rng = np.random.Generator(np.random.PCG64(seed))
    U = rng.random((count, p.n))
    X = np.empty_like(U)
    for i, (e, b) in enumerate(zip(p.eta, p.beta)):
        X[:, i] = beta_ppf(r * e + 1, r * b + 1, U[:, i])
    return X


def sample_statistics(f: Polynomial, p: ExponentPair, r: int,
                      sample_size: int, seed: int) -> SampleStats:
    """Mean/variance/minimum of f over a seeded product-beta sample.

    The sample mean is an unbiased estimator of the candidate value of
    (p, r); variance uses the N-1 divisor.
    """
    if sample_size < 2:
        raise ValueError("sample_size must be at least 2")
    if f.n_vars != p.n:
        raise ValueError("dimension mismatch")
    X = sample_points(p, r, sample_size, seed)
    vals = np.zeros(sample_size)
    for alpha, coeff in f.sorted_terms():
        factor = None
        for i in range(f.n_vars):
            if alpha[i] == 0:
                continue
            col = X[:, i] ** alpha[i]
            factor = col if factor is None else factor * col
        vals = vals + coeff if factor is None else vals + coeff * factor
    mean = float(np.sum(vals) / sample_size)
    variance = float(np.sum((vals - mean) ** 2) / (sample_size - 1))
    j = int(np.argmin(vals))
    return SampleStats(mean, variance, float(vals[j]),
                       tuple(float(c) for c in X[j]), sample_size, seed)
