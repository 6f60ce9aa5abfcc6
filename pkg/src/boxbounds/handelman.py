"""Upper bounds from monomial densities x^eta (1-x)^beta on the unit box.

The degree-k bound is the minimum, over all exponent pairs with |eta+beta|=k,
of the expected value of f under the probability density proportional to
x^eta (1-x)^beta (a product of independent beta distributions).  The scan over
the C(2n+k-1, k) candidates is vectorized in chunks; chunk boundaries are
fixed by a constant block size, so the (value, argmin) reduction is bit-for-bit
identical for any worker count.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .moments import ExponentPair, ratio_table
from .polynomial import Polynomial

_CHUNK = 1 << 18          # candidates per scan block; fixed for determinism
_MAX_CANDIDATES = 1 << 62


@dataclass(frozen=True)
class BoundResult:
    """A computed bound with the density that attains it."""

    value: float
    argmin: ExponentPair
    k: int
    r: int = 1
    candidates_evaluated: int = 0


@dataclass(frozen=True)
class RefineResult:
    """Result of the continuous shape-parameter refinement."""

    value: float
    eta: tuple[float, ...]
    beta: tuple[float, ...]


def default_workers() -> int:
    """Worker count from BOXBOUNDS_WORKERS, defaulting to 1."""
    try:
        return max(1, int(os.environ.get("BOXBOUNDS_WORKERS", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# candidate enumeration: compositions of k into 2n parts, ascending
# lexicographic order of the concatenated (eta, beta) vector
# ---------------------------------------------------------------------------

def enumerate_exponents(n: int, k: int) -> Iterator[ExponentPair]:
    """Yield all pairs with |eta + beta| = k, ascending lex on (eta, beta)."""
    if n < 1:
        raise ValueError("n must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")

    def rec(prefix: list[int], remaining: int, parts_left: int):
        if parts_left == 1:
            full = prefix + [remaining]
            yield ExponentPair(tuple(full[:n]), tuple(full[n:]))
            return
        for v in range(remaining + 1):
            yield from rec(prefix + [v], remaining - v, parts_left - 1)

    yield from rec([], k, 2 * n)


def count_exponents(n: int, k: int) -> int:
    """|{(eta, beta) : |eta + beta| = k}| = C(2n+k-1, k)."""
    return math.comb(2 * n + k - 1, k)


def _compositions_block(k: int, parts: int, lo: int, hi: int) -> np.ndarray:
    """Rows lo..hi (by rank) of the ascending-lex composition list, unranked.

    Position j of rank rho is the smallest v whose cumulative block count
    exceeds rho, where the block for value v has C(rem-v+pl-1, pl-1) rows
    (pl = parts remaining after position j).
    """
    m = hi - lo
    out = np.empty((m, parts), dtype=np.int64)
    rem = np.full(m, k, dtype=np.int64)
    r = np.arange(lo, hi, dtype=np.int64)
    for j in range(parts - 1):
        pl = parts - j - 1
        vals = np.empty(m, dtype=np.int64)
        for t in np.unique(rem):
            mask = rem == t
            sizes = [math.comb(int(t) - v + pl - 1, pl - 1) for v in range(int(t) + 1)]
            cum = np.cumsum(np.array(sizes, dtype=np.int64))
            rr = r[mask]
            v = np.searchsorted(cum, rr, side="right")
            vals[mask] = v
            r[mask] = rr - np.where(v > 0, cum[np.maximum(v - 1, 0)], 0)
        out[:, j] = vals
        rem -= vals
    out[:, parts - 1] = rem
    return out


# ---------------------------------------------------------------------------
# candidate values
# ---------------------------------------------------------------------------

def candidate_value(f: Polynomial, p: ExponentPair, r: int = 1) -> float:
    """Expected value of f under the density (x^eta (1-x)^beta)^r, normalized.

    Equals sum_alpha f_alpha * prod_i ratio(r*eta_i, r*beta_i, alpha_i); for
    r=1 this is the value the degree-k scan minimizes.  The accumulation
    order (sorted terms, coordinates ascending) matches the vectorized scan
    bit for bit.
    """
    if f.n_vars != p.n:
        raise ValueError(f"polynomial has {f.n_vars} variables, pair has {p.n}")
    if r < 1:
        raise ValueError("r must be a positive integer")
    value = 0.0
    for alpha, coeff in f.sorted_terms():
        factor = None
        for e, b, a in zip(p.eta, p.beta, alpha):
            if a == 0:
                continue
            coord = 1.0
            re, rb = r * e, r * b
            for t in range(1, a + 1):
                coord *= (re + t) / (re + rb + 1 + t)
            factor = coord if factor is None else factor * coord
        value += coeff if factor is None else coeff * factor
    return value


def _chunk_scan(terms: list, n: int, k: int, r: int, R: np.ndarray,
                lo: int, hi: int) -> tuple[float, int, tuple[int, ...]]:
    """Scan ranks [lo, hi); return (min value, global argmin rank, argmin row)."""
    C = _compositions_block(k, 2 * n, lo, hi)
    G = [R[r * C[:, i], r * C[:, n + i], :] for i in range(n)]
    val = np.zeros(hi - lo)
    for alpha, coeff in terms:
        factor = None
        for i in range(n):
            if alpha[i] == 0:
                continue
            col = G[i][:, alpha[i]]
            factor = col if factor is None else factor * col
        if factor is None:
            val += coeff
        else:
            val += coeff * factor
    i = int(np.argmin(val)) if len(val) else 0
    return float(val[i]), lo + i, tuple(int(x) for x in C[i])


def _scan_min(f: Polynomial, k: int, r: int, workers: int,
              table: np.ndarray | None = None) -> BoundResult:
    n = f.n_vars
    total = count_exponents(n, k)
    if total > _MAX_CANDIDATES:
        raise ValueError(f"candidate count {total} exceeds representable range")
    terms = f.sorted_terms()
    amax = max((max(a) for a, _ in terms), default=0)
    R = table if table is not None else ratio_table(r * k, r * k, amax)
    ranges = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]
    if not terms:
        # zero polynomial: every candidate value is 0; first pair wins
        row = _compositions_block(k, 2 * n, 0, 1)[0]
        pair = ExponentPair(tuple(int(x) for x in row[:n]), tuple(int(x) for x in row[n:]))
        return BoundResult(0.0, pair, k, r, total)
    if workers > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(
                lambda rg: _chunk_scan(terms, n, k, r, R, rg[0], rg[1]), ranges))
    else:
        results = [_chunk_scan(terms, n, k, r, R, lo, hi) for lo, hi in ranges]
    best_val, best_rank, best_row = results[0]
    for val, rank, row in results[1:]:
        # strict comparison: equal values keep the earlier (lex-smaller) rank
        if val < best_val:
            best_val, best_rank, best_row = val, rank, row
    pair = ExponentPair(tuple(best_row[:n]), tuple(best_row[n:]))
    return BoundResult(best_val, pair, k, r, total)


def near_optimal_pairs(f: Polynomial, k: int, r: int = 1,
                       rel_tol: float = 1e-12) -> list[tuple[ExponentPair, float]]:
    """All pairs whose value is within rel_tol (relative) of the degree-k minimum.

    Used to inspect ties: distinct densities can attain the same bound value,
    in which case any of them is a legitimate argmin witness.
    """
    n = f.n_vars
    total = count_exponents(n, k)
    terms = f.sorted_terms()
    amax = max((max(a) for a, _ in terms), default=0)
    R = ratio_table(r * k, r * k, amax)
    best = _scan_min(f, k, r, 1, table=R).value
    cut = best + rel_tol * max(1.0, abs(best))
    out = []
    for lo in range(0, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        C = _compositions_block(k, 2 * n, lo, hi)
        G = [R[r * C[:, i], r * C[:, n + i], :] for i in range(n)]
        val = np.zeros(hi - lo)
        for alpha, coeff in terms:
            factor = None
            for i in range(n):
                if alpha[i] == 0:
                    continue
                col = G[i][:, alpha[i]]
                factor = col if factor is None else factor * col
            val = val + coeff if factor is None else val + coeff * factor
        for idx in np.nonzero(val <= cut)[0]:
            row = C[idx]
            out.append((ExponentPair(tuple(int(x) for x in row[:n]),
                                     tuple(int(x) for x in row[n:])),
                        float(val[idx])))
    return out


# ---------------------------------------------------------------------------
# the bounds
# ---------------------------------------------------------------------------

def f_handelman(f: Polynomial, k: int, *, workers: int | None = None) -> BoundResult:
    """Degree-k bound: minimum candidate value over all |eta+beta| = k."""
    return f_handelman_powered(f, k, 1, workers=workers)


def f_handelman_powered(f: Polynomial, k: int, r: int, *,
                        workers: int | None = None,
                        _table: np.ndarray | None = None) -> BoundResult:
    """Powered variant: density (x^eta (1-x)^beta)^r; r=1 is f_handelman."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if r < 1:
        raise ValueError("r must be a positive integer")
    w = default_workers() if workers is None else max(1, int(workers))
    return _scan_min(f, k, r, w, table=_table)


def bound_series(f: Polynomial, k_max: int, r: int = 1, *,
                 workers: int | None = None) -> list[BoundResult]:
    """Bounds for k = 1..k_max; non-increasing in k when r = 1."""
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    terms = f.sorted_terms()
    amax = max((max(a) for a, _ in terms), default=0)
    table = ratio_table(r * k_max if k_max else 0, r * k_max if k_max else 0, amax)
    return [f_handelman_powered(f, k, r, workers=workers, _table=table)
            for k in range(1, k_max + 1)]


def uniform_value(f: Polynomial, r: int = 1) -> float:
    """The k=0 bound: expected value of f under the uniform density."""
    return candidate_value(f, ExponentPair.zeros(f.n_vars), r)


# ---------------------------------------------------------------------------
# continuous shape refinement over the simplex sum(eta_i + beta_i) = k
# ---------------------------------------------------------------------------

def shape_objective(f: Polynomial, eta: Sequence[float], beta: Sequence[float]) -> float:
    """Expected value of f for real nonnegative shape exponents (eta, beta).

    Per coordinate the factor is (eta+1)...(eta+a) / ((eta+beta+2)...(eta+beta+a+1)),
    the beta(eta+1, beta+1) raw moment of order a.
    """
    if len(eta) != f.n_vars or len(beta) != f.n_vars:
        raise ValueError("shape vectors must have length n_vars")
    value = 0.0
    for alpha, coeff in f.sorted_terms():
        factor = 1.0
        for e, b, a in zip(eta, beta, alpha):
            for t in range(1, a + 1):
                factor *= (e + t) / (e + b + 1 + t)
        value += coeff * factor
    return value


_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_min(fun, lo: float, hi: float, iters: int = 80) -> tuple[float, float]:
    """Golden-section search for a minimum of fun on [lo, hi]."""
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = fun(c), fun(d)
    for _ in range(iters):
        if b - a < 1e-13 * (abs(a) + abs(b) + 1.0):
            break
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = fun(d)
    return (c, fc) if fc <= fd else (d, fd)


def f_beta_refine(f: Polynomial, k: int, start: ExponentPair,
                  max_sweeps: int = 1000, rel_stop: float = 1e-10) -> RefineResult:
    """Refine a degree-k bound over real shape exponents on the simplex.

    Starting from a discrete pair with |eta+beta| = k (typically the scan's
    argmin), performs coordinate-pair descent: mass is moved between two
    simplex coordinates at a time, each move chosen by golden-section line
    search.  The result never exceeds the starting value.
    """
    if f.n_vars != start.n:
        raise ValueError("dimension mismatch")
    if start.degree != k:
        raise ValueError(f"start pair has degree {start.degree}, expected {k}")
    m = 2 * f.n_vars
    z = [float(v) for v in start.concatenated()]

    def obj(zv: Sequence[float]) -> float:
        return shape_objective(f, zv[:f.n_vars], zv[f.n_vars:])

    current = obj(z)
    start_value = current
    for _ in range(max_sweeps):
        before = current
        for u in range(m):
            for v in range(u + 1, m):
                # move t along e_u - e_v keeps the simplex sum fixed
                lo, hi = -z[u], z[v]
                if hi - lo <= 0:
                    continue

                def line(t, u=u, v=v):
                    trial = list(z)
                    trial[u] += t
                    trial[v] -= t
                    trial[u] = max(trial[u], 0.0)
                    trial[v] = max(trial[v], 0.0)
                    return obj(trial)

                t_best, f_best = _golden_min(line, lo, hi)
                if f_best < current:
                    z[u] = max(z[u] + t_best, 0.0)
                    z[v] = max(z[v] - t_best, 0.0)
                    current = f_best
        improvement = before - current
        if improvement <= rel_stop * max(1.0, abs(before)):
            break
    value = min(current, start_value)
    return RefineResult(value, tuple(z[:f.n_vars]), tuple(z[f.n_vars:]))
