"""Closed-form moments of x^eta (1-x)^beta densities on the unit box.

Everything the bound computations need reduces to the univariate integral
int_0^1 t^i (1-t)^j dt = i! j! / (i+j+1)! and to ratios of such integrals.
Ratios are always formed from small factors (never through factorials), so
degrees in the hundreds are safe in 64-bit floats; an exact Fraction oracle
backs the float paths in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class ExponentPair:
    """The pair (eta, beta) indexing a density x^eta (1-x)^beta on [0,1]^n."""

    eta: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self):
        eta = tuple(int(e) for e in self.eta)
        beta = tuple(int(b) for b in self.beta)
        if len(eta) != len(beta):
            raise ValueError(f"eta has length {len(eta)}, beta {len(beta)}")
        if any(e < 0 for e in eta) or any(b < 0 for b in beta):
            raise ValueError("exponents must be nonnegative")
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "beta", beta)

    @property
    def n(self) -> int:
        return len(self.eta)

    @property
    def degree(self) -> int:
        return sum(self.eta) + sum(self.beta)

    @classmethod
    def zeros(cls, n: int) -> "ExponentPair":
        return cls((0,) * n, (0,) * n)

    def concatenated(self) -> tuple[int, ...]:
        return self.eta + self.beta


def univariate_moment(i: int, j: int) -> float:
    """int_0^1 t^i (1-t)^j dt = i! j! / (i+j+1)!, evaluated in log space."""
    if i < 0 or j < 0:
        raise ValueError("exponents must be nonnegative")
    return math.exp(math.lgamma(i + 1) + math.lgamma(j + 1) - math.lgamma(i + j + 2))


def gamma_box(p: ExponentPair) -> float:
    """Integral of x^eta (1-x)^beta over the unit box (product of univariate)."""
    out = 1.0
    for e, b in zip(p.eta, p.beta):
        out *= univariate_moment(e, b)
    return out


def gamma_box_exact(p: ExponentPair) -> Fraction:
    """Exact rational value of gamma_box, for validating the float paths."""
    out = Fraction(1)
    for e, b in zip(p.eta, p.beta):
        out *= Fraction(math.factorial(e) * math.factorial(b),
                        math.factorial(e + b + 1))
    return out


def moment_ratio(p: ExponentPair, alpha: Sequence[int]) -> float:
    """gamma(eta+alpha, beta) / gamma(eta, beta) via small-factor products.

    Per coordinate this is prod_{t=1..a} (e+t)/(e+b+1+t); the value lies in
    (0, 1] and no factorial is ever formed.
    """
    if len(alpha) != p.n:
        raise ValueError(f"alpha has length {len(alpha)}, expected {p.n}")
    out = 1.0
    for e, b, a in zip(p.eta, p.beta, alpha):
        if a < 0:
            raise ValueError("alpha entries must be nonnegative")
        coord = 1.0
        for t in range(1, a + 1):
            coord *= (e + t) / (e + b + 1 + t)
        out *= coord
    return out


def moment_ratio_exact(p: ExponentPair, alpha: Sequence[int]) -> Fraction:
    """Exact rational moment_ratio (test oracle)."""
    out = Fraction(1)
    for e, b, a in zip(p.eta, p.beta, alpha):
        for t in range(1, a + 1):
            out *= Fraction(e + t, e + b + 1 + t)
    return out


def beta_raw_moment(a: float, b: float, k: int) -> float:
    """k-th raw moment of beta(a, b): a(a+1)...(a+k-1) / ((a+b)...(a+b+k-1)).

    Shape parameters may be any positive reals; k=0 returns 1.
    """
    if a <= 0 or b <= 0:
        raise ValueError(f"shape parameters must be positive, got a={a}, b={b}")
    if k < 0:
        raise ValueError("moment order must be nonnegative")
    out = 1.0
    for t in range(k):
        out *= (a + t) / (a + b + t)
    return out


def ratio_table(max_e: int, max_b: int, max_a: int) -> np.ndarray:
    """Dense table R[e, b, a] = moment_ratio of one coordinate.

    Built by the recurrence R[e,b,a] = R[e,b,a-1] * (e+a)/(e+b+1+a) so that
    table lookups reproduce moment_ratio's float values bit for bit.
    """
    R = np.ones((max_e + 1, max_b + 1, max_a + 1))
    e = np.arange(max_e + 1, dtype=np.float64)[:, None]
    b = np.arange(max_b + 1, dtype=np.float64)[None, :]
    for a in range(1, max_a + 1):
        R[:, :, a] = R[:, :, a - 1] * ((e + a) / (e + b + 1 + a))
    return R
