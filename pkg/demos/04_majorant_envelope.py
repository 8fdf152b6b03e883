"""Observed errors of a run against the scalar comparison sequence.

On the componentwise quadratic with its known root, the scalar sequence
t_{k+1} = omega1(1+vartheta)(1+sqrt(2 theta_k))|n_f(t_k)|
          + (omega1[(1+vartheta)sqrt(2 theta_k)+vartheta]+omega2) t_k
started at t_0 = ||x_0 - x*|| dominates ||x_k - x*|| for the whole run.
"""

import math

import numpy as np

from newton_condg import (
    SolverConfig,
    TheoryParams,
    holder_majorant,
    majorant_sequence,
    make_problem,
    rate_check,
    solve,
)

problem = make_problem("synthetic_quadratic", 10)
x0 = problem.known_root + 0.03

theta = 1e-5
theory = TheoryParams(omega1=1.0, omega2=0.0, vartheta=0.0, lam=math.sqrt(2 * theta))
majorant = holder_majorant(1.0, 1.0)  # K = 1: scaled second derivative bound

report = solve(problem, x0, SolverConfig(jacobian_strategy="exact", theta=theta),
               theory=theory)
errors = [np.linalg.norm(it - problem.known_root) for it in report.iterates]
ts = majorant_sequence(majorant, theory, theta, errors[0], len(errors) - 1)

print(f"status: {report.status}\n")
print(f"{'k':>3}  {'e_k = ||x_k - x*||':>18}  {'t_k':>12}  {'e_k <= t_k':>10}")
for k, e in enumerate(errors):
    t_k = ts[k] if k < len(ts) else 0.0
    print(f"{k:3d}  {e:18.6e}  {t_k:12.6e}  {str(e <= t_k + 1e-12):>10}")

diag = rate_check(report, problem.known_root, majorant, theory, theta)
print(f"\nasymptotic ratio cap: {diag.ratio_cap:.4f}"
      f" (max over last ratios: {diag.max_ratio_last5:.2e})")
print(f"per-step recursion bound holds: {diag.per_step_bound_ok}")
print(f"envelope holds: {diag.envelope_ok}")
