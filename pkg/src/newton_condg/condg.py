"""Conditional-gradient (Frank-Wolfe) approximate projection onto the feasible set.

condg(fset, y, x, eps, cap) approximately minimizes 0.5*||z - y||^2 over the
set, starting from a feasible x, using only the linear-minimization oracle.
Termination is certified by the Wolfe gap: on a "gap" return the output z
satisfies <z - y, u - z> >= -eps for every u in the set, which bounds the
distance to the exact projection by sqrt(2*eps).
"""

from dataclasses import dataclass

import numpy as np

GAP = "gap"
ITERATION_CAP = "iteration_cap"


@dataclass
class CondGResult:
    """Outcome of one inner call.

    z is feasible; final_gap is the last Wolfe-gap value evaluated;
    terminated_by is "gap" (certificate holds) or "iteration_cap".
    """

    z: np.ndarray
    inner_iters: int
    final_gap: float
    terminated_by: str


def condg(fset, y, x, eps, cap, trace=None):
    """Approximate projection of y onto fset, started at the feasible point x.

    Parameters
    ----------
    fset : FeasibleSet
    y : array, point to project (need not be feasible).
    x : array, feasible starting point.
    eps : float >= 0, Wolfe-gap termination threshold.
    cap : int >= 1, iteration cap; when it binds the last iterate is returned
        with terminated_by="iteration_cap" and no gap certificate.
    trace : optional list; when given, every iterate z_t is appended.

    A feasible y is its own Euclidean projection and has Wolfe gap exactly 0,
    so it is returned directly with the certificate 0 >= -eps; the loop below
    only runs when y lies outside the set.
    """
    if eps < 0:
        raise ValueError("eps must be >= 0")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    y = np.asarray(y, dtype=float)
    x = np.asarray(x, dtype=float)
    # 1e-12 at unit scale; relative so that ulp-level drift of huge
    # coordinates (capped boxes) is not mistaken for infeasibility
    start_tol = 1e-12 * max(1.0, float(np.abs(x).max()) if x.size else 1.0)
    if not fset.contains(x, start_tol):
        raise ValueError("condg requires a feasible starting point")

    if fset.contains(y):
        z = y.copy()
        if trace is not None:
            trace.append(z.copy())
        return CondGResult(z=z, inner_iters=1, final_gap=0.0, terminated_by=GAP)

    z = x.copy()
    gap = 0.0
    for t in range(1, cap + 1):
        if trace is not None:
            trace.append(z.copy())
        d = z - y
        u = fset.lmo(d)
        gap = float(d @ (u - z))
        if gap >= -eps:
            return CondGResult(z=z, inner_iters=t, final_gap=gap, terminated_by=GAP)
        denom = float((u - z) @ (u - z))
        if denom == 0.0:
            # only reachable through rounding: gap < -eps <= 0 forces u != z
            return CondGResult(z=z, inner_iters=t, final_gap=gap, terminated_by=GAP)
        alpha = min(1.0, -gap / denom)
        z = z + alpha * (u - z)
    if trace is not None:
        trace.append(z.copy())
    return CondGResult(z=z, inner_iters=cap, final_gap=gap, terminated_by=ITERATION_CAP)


def wolfe_gap(fset, y, z):
    """min over u in the set of <z - y, u - z>; always <= 0 for feasible z."""
    z = np.asarray(z, dtype=float)
    d = z - np.asarray(y, dtype=float)
    u = fset.lmo(d)
    return float(d @ (u - z))
