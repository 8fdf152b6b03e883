"""Independent oracles used by the tests.

Kept deliberately separate from the library: the bisection radius oracle
works from the sup-definition of the contraction radius, not from the closed
forms it is checking.
"""

import numpy as np


def rho_bisection(f, fprime, nu, theory, iters=200):
    """Contraction radius from its sup definition, by bisection.

    rho = sup{delta in (0, nu) : c1*(f(t)/(t f'(t)) - 1) + q < 1 on (0, delta)}
    with c1 = omega1 (1+vartheta)(1+lambda) and
    q = omega1[(1+vartheta) lambda + vartheta] + omega2. The bracketed
    expression is increasing in t for both majorant families, so the sup is
    the unique crossing point (or nu when there is none).
    """
    om1, om2, vt, lam = theory.omega1, theory.omega2, theory.vartheta, theory.lam
    c1 = om1 * (1.0 + vt) * (1.0 + lam)
    q = om1 * ((1.0 + vt) * lam + vt) + om2

    def below_one(t):
        return c1 * (f(t) / (t * fprime(t)) - 1.0) + q < 1.0

    hi = nu * (1.0 - 1e-15)
    if below_one(hi):
        return hi
    lo = nu * 1e-300
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if below_one(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def random_theory_params(rng):
    """A valid random parameter draw (strictly inside every inequality)."""
    om1 = rng.uniform(0.2, 3.0)
    vt = rng.uniform(0.0, min(0.95, 0.9 / om1))
    om2 = rng.uniform(0.0, 0.9 * min(om1, 1.0 - om1 * vt))
    lam_max = (1.0 - om2 - om1 * vt) / (om1 * (1.0 + vt))
    lam = rng.uniform(0.0, 0.9 * lam_max)
    return om1, om2, vt, lam


def scalar_newton_iterates(x0, func, dfunc, steps):
    """Plain 1-d Newton recursion, written independently of the solver."""
    xs = [x0]
    for _ in range(steps):
        x = xs[-1]
        xs.append(x - func(x) / dfunc(x))
    return xs
