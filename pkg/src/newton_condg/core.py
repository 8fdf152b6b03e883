"""Shared domain types: problem definitions, solver configuration, run reports.

Everything here is immutable after construction and safe to share across
threads; `Problem.fun` is expected to be pure.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .feasible_set import FeasibleSet

CONVERGED = "converged"
MAX_ITERATIONS = "max_iterations"
NO_PROGRESS = "no_progress"
LINEAR_SOLVE_FAILURE = "linear_solve_failure"

JACOBIAN_STRATEGIES = ("exact", "finite_difference", "schubert")
LINSOLVE_MODES = ("direct", "inexact")


@dataclass(frozen=True)
class TheoryParams:
    """Constants (omega1, omega2, vartheta, lambda) of the local convergence theory.

    omega1 bounds ||M_k^{-1} F'(x_k)||, omega2 bounds ||M_k^{-1} F'(x_k) - I||,
    vartheta caps the preconditioned forcing term, and lam caps sqrt(2*theta_k).
    """

    omega1: float
    omega2: float = 0.0
    vartheta: float = 0.0
    lam: float = 0.0

    def validate(self):
        """Raise ValueError naming the first violated inequality."""
        if not (0.0 <= self.vartheta < 1.0):
            raise ValueError("violated: 0 <= vartheta < 1")
        if not (0.0 <= self.omega2 < self.omega1):
            raise ValueError("violated: 0 <= omega2 < omega1")
        if not (self.omega1 * self.vartheta + self.omega2 < 1.0):
            raise ValueError("violated: omega1*vartheta + omega2 < 1")
        if not (0.0 <= self.lam < self.lambda_max()):
            raise ValueError(
                "violated: 0 <= lambda < (1 - omega2 - omega1*vartheta)"
                "/(omega1*(1 + vartheta))"
            )

    def lambda_max(self):
        return (1.0 - self.omega2 - self.omega1 * self.vartheta) / (
            self.omega1 * (1.0 + self.vartheta)
        )


@dataclass(frozen=True)
class Problem:
    """A constrained nonlinear system F(x) = 0, x in a convex compact set.

    Attributes:
        name: identifier of the problem instance.
        n: dimension (F maps n-vectors to n-vectors).
        fun: residual callback x -> F(x), pure.
        feasible_set: the constraint set (provides the LMO).
        jac: optional analytic Jacobian callback x -> (n, n) array.
        pattern: optional boolean (n, n) Jacobian sparsity mask.
        known_root: optional root, used by diagnostics and tests only.
        domain_radius: radius kappa of the largest ball around the root known
            to lie inside the domain of F (+inf when unrestricted).
    """

    name: str
    n: int
    fun: Callable[[np.ndarray], np.ndarray]
    feasible_set: FeasibleSet
    jac: Optional[Callable[[np.ndarray], np.ndarray]] = None
    pattern: Optional[np.ndarray] = None
    known_root: Optional[np.ndarray] = None
    domain_radius: float = np.inf

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be a positive integer")
        if self.pattern is not None:
            patt = np.asarray(self.pattern, dtype=bool)
            if patt.shape != (self.n, self.n):
                raise ValueError("pattern must be a boolean (n, n) mask")
            object.__setattr__(self, "pattern", patt)
        if self.known_root is not None:
            root = np.asarray(self.known_root, dtype=float)
            if root.shape != (self.n,):
                raise ValueError("known_root must be an n-vector")
            object.__setattr__(self, "known_root", root)


@dataclass(frozen=True)
class SolverConfig:
    """Tunables of the outer iteration.

    Attributes:
        tol_inf: stop when ||F(x_k)||_inf <= tol_inf.
        max_outer: cap on outer iterations.
        theta: inner accuracy parameter theta_k; a constant or a schedule
            (sequence indexed by k, last entry repeated beyond its end).
        max_condg: cap on inner conditional-gradient iterations.
        jacobian_strategy: one of "exact", "finite_difference", "schubert".
        refresh_period: finite-difference refresh period m of the schubert
            strategy (refresh at k = 0 and whenever (k-1) mod m == 0).
        linsolve: "direct" or "inexact".
        eta_policy: forcing policy for inexact solves (see linsolve module).
        no_progress_window / no_progress_factor: declare stagnation when the
            best residual over the last `window` iterations is larger than
            `factor` times the best over all earlier ones.
    """

    tol_inf: float = 1e-6
    max_outer: int = 300
    theta: Union[float, Sequence[float]] = 1e-5
    max_condg: int = 300
    jacobian_strategy: str = "finite_difference"
    refresh_period: int = 5
    linsolve: str = "direct"
    eta_policy: object = None
    no_progress_window: int = 10
    no_progress_factor: float = 0.9

    def __post_init__(self):
        if not self.tol_inf > 0:
            raise ValueError("tol_inf must be positive")
        if self.max_outer < 1:
            raise ValueError("max_outer must be >= 1")
        if self.max_condg < 1:
            raise ValueError("max_condg must be >= 1")
        if self.refresh_period < 1:
            raise ValueError("refresh_period must be >= 1")
        if self.jacobian_strategy not in JACOBIAN_STRATEGIES:
            raise ValueError(f"unknown jacobian_strategy {self.jacobian_strategy!r}")
        if self.linsolve not in LINSOLVE_MODES:
            raise ValueError(f"unknown linsolve mode {self.linsolve!r}")
        if not np.isscalar(self.theta):
            sched = tuple(float(t) for t in self.theta)
            if not sched:
                raise ValueError("theta schedule must be non-empty")
            object.__setattr__(self, "theta", sched)
        if np.any(np.asarray(self.theta) < 0):
            raise ValueError("theta must be >= 0")
        if self.no_progress_window < 1:
            raise ValueError("no_progress_window must be >= 1")
        if not (0.0 < self.no_progress_factor < 1.0):
            raise ValueError("no_progress_factor must lie in (0, 1)")

    def theta_at(self, k):
        """theta_k for outer iteration k."""
        if np.isscalar(self.theta):
            return float(self.theta)
        return self.theta[min(k, len(self.theta) - 1)]

    def theta_sup(self):
        if np.isscalar(self.theta):
            return float(self.theta)
        return max(self.theta)


@dataclass
class RunReport:
    """History of one solve.

    Attributes:
        status: "converged", "max_iterations", "no_progress" or
            "linear_solve_failure".
        iterates: x_0, x_1, ... (one entry per outer iterate, x_0 included).
        residual_norms: ||F(x_k)||_inf, one entry per iterate.
        condg_iters: inner iterations spent per outer step.
        newton_steps: ||s_k||_2 per outer step.
        x0_projected: True when the supplied start was infeasible and was
            returned to the set before iterating.
    """

    status: str
    iterates: list = field(default_factory=list)
    residual_norms: list = field(default_factory=list)
    condg_iters: list = field(default_factory=list)
    newton_steps: list = field(default_factory=list)
    x0_projected: bool = False

    @property
    def x(self):
        return self.iterates[-1]

    @property
    def iterations(self):
        return len(self.iterates) - 1


def validate_config(config, theory):
    """Check a SolverConfig against TheoryParams.

    Accepts iff the TheoryParams inequalities hold and every theta_k satisfies
    theta_k <= lam**2 / 2 (with lam = 0 this forces theta = 0). Raises
    ValueError naming the first violated inequality.
    """
    theory.validate()
    if config.theta_sup() > theory.lam ** 2 / 2.0:
        raise ValueError("violated: theta <= lambda**2/2")
    return config


def check_problem(problem, rng=None, samples=8):
    """Assert the Problem invariants on sampled feasible points.

    Checks the residual shape, that Jacobian entries outside the declared
    pattern vanish (relative tolerance 1e-12), and that the known root has
    max-norm residual <= 1e-10.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    for _ in range(samples):
        x = problem.feasible_set.sample(rng)
        fx = np.asarray(problem.fun(x))
        if fx.shape != (problem.n,):
            raise AssertionError(f"{problem.name}: fun(x) has shape {fx.shape}")
        if problem.pattern is not None:
            if problem.jac is not None:
                jac = np.asarray(problem.jac(x))
            else:
                from .jacobian import fd_jacobian

                jac = fd_jacobian(problem.fun, x)
            scale = max(np.abs(jac).max(), 1e-300)
            off = np.abs(jac[~problem.pattern]).max() if (~problem.pattern).any() else 0.0
            if off > 1e-12 * scale:
                raise AssertionError(
                    f"{problem.name}: Jacobian entry outside pattern ({off:.3e})"
                )
    if problem.known_root is not None:
        res = np.abs(problem.fun(problem.known_root)).max()
        if res > 1e-10:
            raise AssertionError(f"{problem.name}: known_root residual {res:.3e}")
