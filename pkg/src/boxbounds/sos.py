"""Sum-of-squares density bounds via a symmetric-definite eigenvalue problem.

The degree-k SOS bound is the smallest generalized eigenvalue of (A, B) where
A and B are the bilinear forms sigma -> int f p q and sigma -> int p q over a
basis of the polynomials of total degree <= k.  In the monomial basis B is a
Hilbert-like Gram matrix and becomes numerically indefinite quickly, so the
default basis is the tensor product of shifted-Legendre orthonormal
polynomials, which makes B the identity up to rounding.  The eigensolver is
self-contained: Cholesky reduction followed by cyclic Jacobi sweeps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
import numpy as np

from .polynomial import Polynomial

BASES = ("orthonormal", "monomial")


class ConditioningError(RuntimeError):
    """B is numerically indefinite; use the orthonormal basis or smaller k."""


@dataclass(frozen=True)
class MomentPencil:
    """The matrix pair (A, B) over a degree-bounded polynomial basis."""

    A: np.ndarray
    B: np.ndarray
    basis_degree: int
    basis_index: tuple[tuple[int, ...], ...]
    basis: str = "orthonormal"

    @property
    def order(self) -> int:
        return self.A.shape[0]


def graded_basis(n: int, k: int) -> list[tuple[int, ...]]:
    """All exponents with |alpha| <= k in graded-lexicographic order."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], left: int):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for e in range(left + 1):
            rec(prefix + [e], left - e)

    rec([], k)
    out.sort(key=lambda a: (sum(a), a))
    return out


def _legendre_orthonormal(kmax: int, t: np.ndarray) -> np.ndarray:
    """Rows 0..kmax of orthonormal shifted-Legendre values at points t in [0,1]."""
    P = np.empty((kmax + 1, len(t)))
    P[0] = 1.0
    if kmax >= 1:
        P[1] = 2.0 * t - 1.0
    for m in range(1, kmax):
        P[m + 1] = ((2 * m + 1) * (2.0 * t - 1.0) * P[m] - m * P[m - 1]) / (m + 1)
    return P * np.sqrt(2.0 * np.arange(kmax + 1) + 1.0)[:, None]


def build_moment_pencil(f: Polynomial, k: int, basis: str = "orthonormal") -> MomentPencil:
    """Assemble the pencil (A, B) of order C(n+k, k).

    monomial basis: A[a,b] = sum_d f_d prod 1/(a_i+b_i+d_i+1) and
    B[a,b] = prod 1/(a_i+b_i+1).  orthonormal basis: the same bilinear forms
    assembled by tensor Gauss-Legendre quadrature (exact for these degrees),
    with B the identity up to rounding.
    """
    if basis not in BASES:
        raise ValueError(f"basis must be one of {BASES}")
    n = f.n_vars
    index = graded_basis(n, k)
    N = len(index)
    terms = f.sorted_terms()

    if basis == "monomial":
        A = np.zeros((N, N))
        B = np.zeros((N, N))
        for i, a in enumerate(index):
            for j in range(i, N):
                b = index[j]
                s = [a[t] + b[t] for t in range(n)]
                bij = 1.0
                for e in s:
                    bij /= e + 1
                aij = 0.0
                for delta, coeff in terms:
                    v = coeff
                    for t in range(n):
                        v /= s[t] + delta[t] + 1
                    aij += v
                A[i, j] = A[j, i] = aij
                B[i, j] = B[j, i] = bij
        return MomentPencil(A, B, k, tuple(index), "monomial")

    # orthonormal: exact tensor quadrature
    d_per = max((max(a) for a, _ in terms), default=0)
    m = (2 * k + d_per) // 2 + 2
    x1, w1 = np.polynomial.legendre.leggauss(m)
    t1 = (x1 + 1.0) / 2.0
    w1 = w1 / 2.0
    pts = np.stack([g.ravel() for g in np.meshgrid(*([t1] * n), indexing="ij")])
    wts = np.prod(np.stack([g.ravel() for g in np.meshgrid(*([w1] * n), indexing="ij")]),
                  axis=0)
    fv = np.zeros(pts.shape[1])
    for alpha, coeff in terms:
        term = np.full(pts.shape[1], coeff)
        for i in range(n):
            if alpha[i]:
                term = term * pts[i] ** alpha[i]
        fv += term
    L = [_legendre_orthonormal(k, pts[i]) for i in range(n)]
    Phi = np.empty((N, pts.shape[1]))
    for j, alpha in enumerate(index):
        row = L[0][alpha[0]].copy()
        for i in range(1, n):
            row *= L[i][alpha[i]]
        Phi[j] = row
    A = (Phi * (wts * fv)) @ Phi.T
    B = (Phi * wts) @ Phi.T
    A = (A + A.T) / 2.0
    B = (B + B.T) / 2.0
    return MomentPencil(A, B, k, tuple(index), "orthonormal")


# ---------------------------------------------------------------------------
# self-contained symmetric-definite solver
# ---------------------------------------------------------------------------

def _cholesky(B: np.ndarray) -> np.ndarray:
    """Lower-triangular L with B = L L^T; ConditioningError on a bad pivot."""
    N = B.shape[0]
    L = np.zeros_like(B)
    for j in range(N):
        d = B[j, j] - L[j, :j] @ L[j, :j]
        if not (d > 0.0 and math.isfinite(d)):
            raise ConditioningError(
                f"pivot {j} is nonpositive ({d:.3e}): B is numerically indefinite; "
                "use the orthonormal basis or a smaller degree")
        L[j, j] = math.sqrt(d)
        if j + 1 < N:
            L[j + 1:, j] = (B[j + 1:, j] - L[j + 1:, :j] @ L[j, :j]) / L[j, j]
    return L


def _forward_solve(L: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Solve L X = rhs for X with L lower triangular."""
    N = L.shape[0]
    X = np.array(rhs, dtype=float, copy=True)
    for j in range(N):
        X[j] = (X[j] - L[j, :j] @ X[:j]) / L[j, j]
    return X


def jacobi_eigenvalues(S: np.ndarray, tol: float = 1e-12,
                       max_sweeps: int = 60) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    tol * ||S||_F.  Returns the diagonal, unsorted.
    """
    A = np.array(S, dtype=float, copy=True)
    N = A.shape[0]
    if N == 1:
        return A.diagonal().copy()
    norm = np.linalg.norm(S)
    if norm == 0.0:
        return np.zeros(N)

    def _off(M: np.ndarray) -> float:
        # direct off-diagonal Frobenius norm; the sum(M^2) - sum(diag^2) form
        # cancels catastrophically once the off part is small
        O = M.copy()
        np.fill_diagonal(O, 0.0)
        return float(np.sqrt(np.sum(O * O)))

    for _ in range(max_sweeps):
        off = _off(A)
        if off <= tol * norm:
            return A.diagonal().copy()
        thresh = off / N
        for p in range(N - 1):
            for q in range(p + 1, N):
                apq = A[p, q]
                if abs(apq) <= 1e-4 * thresh:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = A[p, :].copy()
                rq = A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                cp = A[:, p].copy()
                cq = A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
    if _off(A) > tol * norm:
        raise RuntimeError(f"Jacobi did not converge: off-norm {_off(A):.3e}")
    return A.diagonal().copy()


def smallest_generalized_eigenvalue(pencil: MomentPencil) -> float:
    """min lambda with A x = lambda B x, via Cholesky reduction and Jacobi."""
    L = _cholesky(pencil.B)
    Y = _forward_solve(L, pencil.A)            # L^-1 A
    S = _forward_solve(L, Y.T).T               # L^-1 A L^-T
    S = (S + S.T) / 2.0
    return float(jacobi_eigenvalues(S).min())


def f_sos(f: Polynomial, k: int, basis: str = "orthonormal") -> float:
    """Degree-k SOS density bound (density degree 2k)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return smallest_generalized_eigenvalue(build_moment_pencil(f, k, basis))
