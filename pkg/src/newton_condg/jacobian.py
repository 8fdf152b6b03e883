"""Jacobian approximation strategies for the outer iteration.

Three ways to build the model matrix M_k: the user-supplied analytic
Jacobian, forward finite differences, and a sparsity-preserving rowwise
secant update (Schubert/Broyden) refreshed by finite differences every
`refresh_period` iterations.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

EXACT = "exact"
FINITE_DIFFERENCE = "finite_difference"
SCHUBERT = "schubert"

_SQRT_EPS = np.sqrt(np.finfo(float).eps)


class JacobianError(Exception):
    """Raised when a usable model matrix cannot be produced."""


@dataclass
class JacobianState:
    """Model matrix M plus the bookkeeping its strategy needs."""

    M: np.ndarray
    k_last_refresh: int
    strategy: str
    pattern: Optional[np.ndarray] = None


def fd_jacobian(fun, x, f0=None):
    """Forward-difference Jacobian of fun at x.

    Column j uses the step h_j = sqrt(machine eps) * max(|x_j|, 1) with the
    sign of x_j (positive when x_j == 0), one extra residual evaluation per
    column. Raises JacobianError when a perturbed residual is non-finite.
    """
    x = np.asarray(x, dtype=float)
    n = x.size
    if f0 is None:
        f0 = np.asarray(fun(x), dtype=float)
    if not np.all(np.isfinite(f0)):
        raise JacobianError("residual is non-finite at the base point")
    jac = np.empty((n, n))
    for j in range(n):
        h = _SQRT_EPS * max(abs(x[j]), 1.0)
        if x[j] < 0:
            h = -h
        xp = x.copy()
        xp[j] += h
        col = (np.asarray(fun(xp), dtype=float) - f0) / h
        if not np.all(np.isfinite(col)):
            raise JacobianError(f"residual is non-finite at a point perturbed in x[{j}]")
        jac[:, j] = col
    return jac


def detect_pattern(jac, rel_threshold=1e-10):
    """Sparsity mask of a Jacobian: entries above rel_threshold * maxabs."""
    jac = np.asarray(jac)
    scale = np.abs(jac).max()
    if scale == 0.0:
        return np.zeros(jac.shape, dtype=bool)
    return np.abs(jac) > rel_threshold * scale


def schubert_update(M, s, yvec, pattern):
    """Rowwise secant update of M constrained to a sparsity pattern.

    For each row i let z_i be s masked to the pattern columns of that row;
    rows with ||z_i|| > 0 are corrected so that (M' s)_i == yvec_i, rows with
    ||z_i|| == 0 are left unchanged, and no entry outside the pattern is ever
    written. With a dense pattern this is the classical rank-one secant
    (Broyden) update.
    """
    M = np.asarray(M, dtype=float)
    s = np.asarray(s, dtype=float)
    yvec = np.asarray(yvec, dtype=float)
    pattern = np.asarray(pattern, dtype=bool)
    if M.shape != pattern.shape:
        raise ValueError("M and pattern shapes differ")
    if np.any(M[~pattern] != 0.0):
        raise JacobianError("M has entries outside the sparsity pattern")
    masked_sq = np.where(pattern, (s * s)[None, :], 0.0)
    denom = masked_sq.sum(axis=1)
    resid = yvec - M @ s
    safe = np.where(denom > 0.0, denom, 1.0)
    scale = np.where(denom > 0.0, resid / safe, 0.0)
    return M + np.where(pattern, scale[:, None] * s[None, :], 0.0)


def next_jacobian(state, k, problem, x, refresh_period=5, step=None):
    """Model matrix for outer iteration k.

    exact: analytic Jacobian every iteration (JacobianError if the problem
    has none). finite_difference: fd_jacobian every iteration. schubert:
    fd_jacobian masked to the pattern at k == 0 and whenever
    (k - 1) mod refresh_period == 0, otherwise the rowwise secant update of
    the previous matrix using step = (x_k - x_{k-1}, F(x_k) - F(x_{k-1})).
    The pattern comes from problem.pattern, or is detected from the first
    finite-difference Jacobian when the problem declares none.
    """
    strategy = state.strategy if state is not None else None
    if state is None:
        raise ValueError("state must carry the strategy; use a fresh JacobianState")
    x = np.asarray(x, dtype=float)

    if strategy == EXACT:
        if problem.jac is None:
            raise JacobianError("exact strategy needs an analytic Jacobian")
        M = np.asarray(problem.jac(x), dtype=float)
        _require_finite(M)
        return JacobianState(M=M, k_last_refresh=k, strategy=EXACT)

    if strategy == FINITE_DIFFERENCE:
        M = fd_jacobian(problem.fun, x)
        _require_finite(M)
        return JacobianState(M=M, k_last_refresh=k, strategy=FINITE_DIFFERENCE)

    if strategy == SCHUBERT:
        refresh = k == 0 or (k >= 1 and (k - 1) % refresh_period == 0)
        if refresh or state.M is None:
            jac = fd_jacobian(problem.fun, x)
            pattern = state.pattern
            if pattern is None:
                pattern = (
                    problem.pattern if problem.pattern is not None else detect_pattern(jac)
                )
            M = np.where(pattern, jac, 0.0)
            _require_finite(M)
            return JacobianState(M=M, k_last_refresh=k, strategy=SCHUBERT, pattern=pattern)
        if step is None:
            raise ValueError("schubert update needs the previous step data")
        s, f_diff = step
        M = schubert_update(state.M, s, f_diff, state.pattern)
        _require_finite(M)
        return JacobianState(
            M=M, k_last_refresh=state.k_last_refresh, strategy=SCHUBERT,
            pattern=state.pattern,
        )

    raise ValueError(f"unknown jacobian strategy {strategy!r}")


def initial_state(strategy):
    """Empty state carrying only the strategy tag."""
    return JacobianState(M=None, k_last_refresh=-1, strategy=strategy)


def _require_finite(M):
    if not np.all(np.isfinite(M)):
        raise JacobianError("model matrix has non-finite entries")
