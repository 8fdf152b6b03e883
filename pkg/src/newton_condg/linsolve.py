"""Linear step solves with an explicit residual contract.

solve_direct factorizes M (LU with partial pivoting); solve_inexact only
promises ||M s - b|| <= eta * ||b|| in the Euclidean norm, produced by GMRES
with the contract re-verified by recomputation. Norm and conditioning
estimates for diagnostics live here too.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import lu_factor, lu_solve
from scipy.sparse.linalg import gmres

PIVOT_RTOL = 1e-14


class LinearSolveFailure(Exception):
    """The linear step could not be produced (singular/non-finite model)."""


@dataclass
class LinSolveOutcome:
    """Step s, recomputed residual r = M s - b, and achieved ||r||/||b||."""

    s: np.ndarray
    r: np.ndarray
    eta_used: float


@dataclass(frozen=True)
class ConstantEta:
    """Forcing policy eta_k = value for every k."""

    value: float = 0.1

    def __post_init__(self):
        if not (0.0 <= self.value < 1.0):
            raise ValueError("constant eta must lie in [0, 1)")


@dataclass(frozen=True)
class AdaptiveEta:
    """Forcing policy eta_k = min(eta_max, c * ||F(x_k)||)."""

    c: float = 1.0
    eta_max: float = 0.1

    def __post_init__(self):
        if self.c < 0:
            raise ValueError("c must be >= 0")
        if not (0.0 <= self.eta_max < 1.0):
            raise ValueError("eta_max must lie in [0, 1)")


def solve_direct(M, b):
    """Solve M s = b by LU with partial pivoting.

    Raises LinearSolveFailure when M is non-finite or singular to working
    precision (some pivot below 1e-14 * maxabs(M)).
    """
    M = np.asarray(M, dtype=float)
    b = np.asarray(b, dtype=float)
    if not np.all(np.isfinite(M)):
        raise LinearSolveFailure("model matrix has non-finite entries")
    scale = np.abs(M).max()
    if scale == 0.0:
        raise LinearSolveFailure("model matrix is zero")
    lu, piv = lu_factor(M, check_finite=False)
    if np.abs(np.diag(lu)).min() < PIVOT_RTOL * scale:
        raise LinearSolveFailure("model matrix is singular to working precision")
    s = lu_solve((lu, piv), b, check_finite=False)
    return _outcome(M, b, s)


def solve_inexact(M, b, eta):
    """Return s with ||M s - b|| <= eta * ||b|| (Euclidean norms).

    eta = 0 behaves as solve_direct. Otherwise GMRES is run to relative
    residual eta; the contract is checked by recomputation and, should GMRES
    miss it, the direct solve is substituted (which satisfies any eta).
    """
    if not (0.0 <= eta < 1.0):
        raise ValueError("eta must lie in [0, 1)")
    if eta == 0.0:
        return solve_direct(M, b)
    M = np.asarray(M, dtype=float)
    b = np.asarray(b, dtype=float)
    bnorm = np.linalg.norm(b)
    if bnorm == 0.0:
        return LinSolveOutcome(s=np.zeros_like(b), r=np.zeros_like(b), eta_used=0.0)
    n = b.size
    s, _info = gmres(M, b, rtol=eta, atol=0.0, restart=min(n, 100), maxiter=50)
    if np.linalg.norm(M @ s - b) <= eta * bnorm:
        return _outcome(M, b, s)
    return solve_direct(M, b)


def forcing_eta(k, resnorm, policy, cond_estimate=None, vartheta=None):
    """Forcing term eta_k from a policy, optionally capped by vartheta/cond.

    The conditioning cap eta_k * cond <= vartheta is applied only when a
    condition estimate is supplied (diagnostic mode); it is never computed
    implicitly.
    """
    if resnorm < 0:
        raise ValueError("resnorm must be >= 0")
    if isinstance(policy, ConstantEta):
        eta = policy.value
    elif isinstance(policy, AdaptiveEta):
        eta = min(policy.eta_max, policy.c * resnorm)
    else:
        raise TypeError(f"unknown forcing policy {policy!r}")
    if cond_estimate is not None and vartheta is not None and cond_estimate > 0:
        eta = min(eta, vartheta / cond_estimate)
    return float(eta)


def spectral_norm(A, tol=1e-8, max_iter=2000):
    """Largest singular value by power iteration on A^T A."""
    A = np.asarray(A, dtype=float)
    n = A.shape[1]
    v = np.ones(n) + np.arange(n) / max(n, 2)  # deterministic, unlikely orthogonal
    v /= np.linalg.norm(v)
    sigma = 0.0
    for _ in range(max_iter):
        w = A.T @ (A @ v)
        nw = np.linalg.norm(w)
        if nw == 0.0:
            return 0.0
        v = w / nw
        new_sigma = np.linalg.norm(A @ v)
        if abs(new_sigma - sigma) <= tol * max(new_sigma, 1e-300):
            return new_sigma
        sigma = new_sigma
    return sigma


def condition_estimate(M, tol=1e-8):
    """cond_2(M) estimate: spectral norms of M and M^{-1} via power iteration."""
    M = np.asarray(M, dtype=float)
    scale = np.abs(M).max()
    if scale == 0.0:
        raise LinearSolveFailure("model matrix is zero")
    lu, piv = lu_factor(M, check_finite=False)
    if np.abs(np.diag(lu)).min() < PIVOT_RTOL * scale:
        raise LinearSolveFailure("model matrix is singular to working precision")
    n = M.shape[0]
    v = np.ones(n) + np.arange(n) / max(n, 2)
    v /= np.linalg.norm(v)
    sigma = 0.0
    for _ in range(2000):
        # power iteration on (M^{-1})^T M^{-1} through two triangular solves
        w = lu_solve((lu, piv), v, check_finite=False)
        w = lu_solve((lu, piv), w, trans=1, check_finite=False)
        nw = np.linalg.norm(w)
        if nw == 0.0:
            break
        v = w / nw
        new_sigma = np.linalg.norm(lu_solve((lu, piv), v, check_finite=False))
        if abs(new_sigma - sigma) <= tol * max(new_sigma, 1e-300):
            sigma = new_sigma
            break
        sigma = new_sigma
    return spectral_norm(M, tol=tol) * sigma


def _outcome(M, b, s):
    r = M @ s - b
    bnorm = np.linalg.norm(b)
    eta_used = float(np.linalg.norm(r) / bnorm) if bnorm > 0 else 0.0
    return LinSolveOutcome(s=s, r=r, eta_used=eta_used)
