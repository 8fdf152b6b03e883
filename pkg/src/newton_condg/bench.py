"""Registry of box-constrained nonlinear-system test problems.

Four classic discretized problems at their customary dimensions and boxes,
plus two synthetic problems with known roots for property tests:

- pb1_h_equation: Chandrasekhar's H-equation with c = 0.99 and composite
  midpoint quadrature (Kelley's standard discretization), box [0, 5].
- pb2_discrete_boundary: discrete two-point boundary value problem
  (More-Garbow-Hillstrom problem 28), box [-100, 100], tridiagonal Jacobian.
- pb3_troesch: Troesch's problem with lambda = 10 (boundary values x(0) = 0,
  x(1) = 1), box [-1, 1], tridiagonal Jacobian.
- pb4_discrete_integral: discrete integral equation (More-Garbow-Hillstrom
  problem 29), box [-10, 10], dense Jacobian.
- synthetic_quadratic: F(x) = x*x - 1 componentwise on [0, 2]^n, root at the
  all-ones vector, diagonal Jacobian.
- synthetic_linear: F(x) = A (x - xbar) for a fixed well-conditioned
  tridiagonal A and interior xbar, box [-5, 5]^n.

All builders are pure and the produced Problems immutable. The starting-point
rule is x0(gamma) = l + 0.25 gamma (u - l) for finite boxes and
10**gamma * (1, ..., 1) (clipped to the capped box) when an upper bound is
infinite.
"""

from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

from .core import Problem
from .feasible_set import Box


@dataclass(frozen=True)
class BenchEntry:
    id: str
    default_n: int
    box: Tuple[float, float]
    builder: Callable[[int], Problem]
    description: str


def _tridiagonal_mask(n):
    mask = np.zeros((n, n), dtype=bool)
    idx = np.arange(n)
    mask[idx, idx] = True
    mask[idx[:-1], idx[:-1] + 1] = True
    mask[idx[1:], idx[1:] - 1] = True
    return mask


def _h_equation(n, c=0.99):
    # midpoint nodes mu_i = (i - 1/2)/n; kernel (c/2n) mu_i/(mu_i + mu_j)
    mu = (np.arange(1, n + 1) - 0.5) / n
    A = (c / (2.0 * n)) * (mu[:, None] / (mu[:, None] + mu[None, :]))

    def fun(h):
        return h - 1.0 / (1.0 - A @ h)

    def jac(h):
        w = 1.0 / (1.0 - A @ h) ** 2
        return np.eye(n) - w[:, None] * A

    return Problem(
        name="pb1_h_equation", n=n, fun=fun, jac=jac,
        feasible_set=Box(np.zeros(n), np.full(n, 5.0)),
    )


def _discrete_boundary(n):
    h = 1.0 / (n + 1)
    t = np.arange(1, n + 1) * h

    def fun(x):
        xm = np.concatenate(([0.0], x[:-1]))
        xp = np.concatenate((x[1:], [0.0]))
        return 2.0 * x - xm - xp + h * h * (x + t + 1.0) ** 3 / 2.0

    def jac(x):
        jj = np.zeros((n, n))
        idx = np.arange(n)
        jj[idx, idx] = 2.0 + 1.5 * h * h * (x + t + 1.0) ** 2
        jj[idx[:-1], idx[:-1] + 1] = -1.0
        jj[idx[1:], idx[1:] - 1] = -1.0
        return jj

    return Problem(
        name="pb2_discrete_boundary", n=n, fun=fun, jac=jac,
        pattern=_tridiagonal_mask(n),
        feasible_set=Box(np.full(n, -100.0), np.full(n, 100.0)),
    )


def _troesch(n, lam=10.0):
    h = 1.0 / (n + 1)

    def fun(x):
        xm = np.concatenate(([0.0], x[:-1]))
        xp = np.concatenate((x[1:], [1.0]))  # right boundary value 1
        return 2.0 * x - xm - xp + lam * h * h * np.sinh(lam * x)

    def jac(x):
        jj = np.zeros((n, n))
        idx = np.arange(n)
        jj[idx, idx] = 2.0 + lam * lam * h * h * np.cosh(lam * x)
        jj[idx[:-1], idx[:-1] + 1] = -1.0
        jj[idx[1:], idx[1:] - 1] = -1.0
        return jj

    return Problem(
        name="pb3_troesch", n=n, fun=fun, jac=jac,
        pattern=_tridiagonal_mask(n),
        feasible_set=Box(np.full(n, -1.0), np.full(n, 1.0)),
    )


def _discrete_integral(n):
    h = 1.0 / (n + 1)
    t = np.arange(1, n + 1) * h
    # weights w_ij = (1 - t_i) t_j for j <= i, t_i (1 - t_j) for j > i
    weights = np.where(
        t[None, :] <= t[:, None],
        (1.0 - t)[:, None] * t[None, :],
        t[:, None] * (1.0 - t)[None, :],
    )

    def fun(x):
        g = (x + t + 1.0) ** 3
        s1 = np.cumsum(t * g)
        rest = np.sum((1.0 - t) * g) - np.cumsum((1.0 - t) * g)
        return x + h * ((1.0 - t) * s1 + t * rest) / 2.0

    def jac(x):
        return np.eye(n) + 1.5 * h * weights * ((x + t + 1.0) ** 2)[None, :]

    return Problem(
        name="pb4_discrete_integral", n=n, fun=fun, jac=jac,
        pattern=np.ones((n, n), dtype=bool),
        feasible_set=Box(np.full(n, -10.0), np.full(n, 10.0)),
    )


def _synthetic_quadratic(n):
    def fun(x):
        return x * x - 1.0

    def jac(x):
        return np.diag(2.0 * x)

    return Problem(
        name="synthetic_quadratic", n=n, fun=fun, jac=jac,
        pattern=np.eye(n, dtype=bool),
        feasible_set=Box(np.zeros(n), np.full(n, 2.0)),
        known_root=np.ones(n),
    )


def _synthetic_linear(n):
    A = np.zeros((n, n))
    idx = np.arange(n)
    A[idx, idx] = 4.0
    A[idx[:-1], idx[:-1] + 1] = -1.0
    A[idx[1:], idx[1:] - 1] = -1.0
    xbar = 0.5 * np.cos(2.0 * np.pi * idx / n)

    def fun(x):
        return A @ (x - xbar)

    def jac(x):
        return A.copy()

    return Problem(
        name="synthetic_linear", n=n, fun=fun, jac=jac,
        pattern=_tridiagonal_mask(n),
        feasible_set=Box(np.full(n, -5.0), np.full(n, 5.0)),
        known_root=xbar,
    )


REGISTRY = {
    "pb1_h_equation": BenchEntry(
        "pb1_h_equation", 400, (0.0, 5.0), _h_equation,
        "Chandrasekhar H-equation, c = 0.99",
    ),
    "pb2_discrete_boundary": BenchEntry(
        "pb2_discrete_boundary", 500, (-100.0, 100.0), _discrete_boundary,
        "discrete boundary value problem",
    ),
    "pb3_troesch": BenchEntry(
        "pb3_troesch", 500, (-1.0, 1.0), _troesch,
        "Troesch problem, lambda = 10",
    ),
    "pb4_discrete_integral": BenchEntry(
        "pb4_discrete_integral", 1000, (-10.0, 10.0), _discrete_integral,
        "discrete integral equation",
    ),
    "synthetic_quadratic": BenchEntry(
        "synthetic_quadratic", 10, (0.0, 2.0), _synthetic_quadratic,
        "componentwise x^2 - 1, root at ones",
    ),
    "synthetic_linear": BenchEntry(
        "synthetic_linear", 50, (-5.0, 5.0), _synthetic_linear,
        "well-conditioned banded linear system",
    ),
}

PAPER_CORE = (
    "pb1_h_equation",
    "pb2_discrete_boundary",
    "pb3_troesch",
    "pb4_discrete_integral",
)

SYNTHETIC = ("synthetic_quadratic", "synthetic_linear")


def list_problems():
    return list(REGISTRY.values())


def make_problem(problem_id, n=None):
    """Instantiate a registry problem at dimension n (its default when None)."""
    try:
        entry = REGISTRY[problem_id]
    except KeyError:
        raise KeyError(f"unknown problem {problem_id!r}") from None
    n = entry.default_n if n is None else int(n)
    if n < 2:
        raise ValueError("n must be >= 2")
    return entry.builder(n)


def starting_point(problem, gamma):
    """x0(gamma): l + 0.25 gamma (u - l), or 10**gamma ones for infinite boxes."""
    if gamma not in (0, 1, 2, 3):
        raise ValueError("gamma must be one of 0, 1, 2, 3")
    fset = problem.feasible_set
    if not isinstance(fset, Box):
        raise TypeError("starting_point needs a box feasible set")
    if np.all(np.isfinite(fset.upper)):
        return fset.lower + 0.25 * gamma * (fset.upper - fset.lower)
    return fset.project(np.full(problem.n, 10.0 ** gamma))
