"""Brute-force minimization over the rational grid with denominator k.

The grid {x : k*x integer} has (k+1)^n points, enumerated in odometer order
(last coordinate fastest).  Evaluation is vectorized per block of leading
coordinates; the (value, point) reduction keeps the first minimum, which is
the lexicographically smallest minimizing point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .polynomial import Polynomial

DEFAULT_BUDGET = 10 ** 8


class BudgetError(RuntimeError):
    """Grid size exceeds the evaluation budget."""

    def __init__(self, points: int, budget: int):
        super().__init__(f"grid has {points} points, over the budget of {budget}")
        self.points = points
        self.budget = budget


@dataclass(frozen=True)
class GridResult:
    value: float
    argmin: tuple[float, ...]
    k: int
    points_evaluated: int


def grid_min(f: Polynomial, k: int, budget: int = DEFAULT_BUDGET) -> GridResult:
    """Exact minimum of f over the (k+1)^n grid points with denominator k."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    n = f.n_vars
    total = (k + 1) ** n
    if total > budget:
        raise BudgetError(total, budget)
    terms = f.sorted_terms()
    amax = max((max(a) for a, _ in terms), default=0)
    coords = np.arange(k + 1, dtype=np.float64) / k
    # powers[e, v] = (v/k)^e, shared by every coordinate
    powers = np.ones((amax + 1, k + 1))
    for e in range(1, amax + 1):
        powers[e] = powers[e - 1] * coords

    best_val = math.inf
    best_idx = -1
    lead_block = (k + 1) ** (n - 1)
    block = max(1, (1 << 20) // lead_block)
    for lead_lo in range(0, k + 1, block):
        lead_hi = min(lead_lo + block, k + 1)
        lo = lead_lo * lead_block
        hi = lead_hi * lead_block
        idx = np.arange(lo, hi, dtype=np.int64)
        digits = []
        rem = idx
        for i in range(n - 1, -1, -1):
            digits.append(rem % (k + 1))
            rem = rem // (k + 1)
        digits = digits[::-1]        # digits[i] = coordinate i index, last fastest
        val = np.zeros(hi - lo)
        for alpha, coeff in terms:
            factor = None
            for i in range(n):
                if alpha[i] == 0:
                    continue
                col = powers[alpha[i]][digits[i]]
                factor = col if factor is None else factor * col
            val = val + coeff if factor is None else val + coeff * factor
        j = int(np.argmin(val))
        if val[j] < best_val:
            best_val = float(val[j])
            best_idx = lo + j

    digits = []
    rem = best_idx
    for i in range(n):
        digits.append(rem % (k + 1))
        rem //= k + 1
    digits = digits[::-1]
    point = tuple(float(d) / k for d in digits)
    return GridResult(best_val, point, k, total)
