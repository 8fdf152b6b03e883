"""Solve the Chandrasekhar H-equation (n = 400, box [0, 5]) and watch the run.

The outer iteration builds a finite-difference Jacobian, solves the Newton
system, and hands the step to the conditional-gradient procedure so every
iterate stays inside the box.
"""

import numpy as np

from newton_condg import SolverConfig, make_problem, solve, starting_point

problem = make_problem("pb1_h_equation", 400)
x0 = starting_point(problem, gamma=1)  # l + 0.25 (u - l) = 1.25 * ones

config = SolverConfig(
    tol_inf=1e-6,
    theta=1e-5,
    jacobian_strategy="finite_difference",
    linsolve="direct",
)
report = solve(problem, x0, config)

print(f"status: {report.status} after {report.iterations} outer iterations\n")
print(f"{'k':>3}  {'||F(x_k)||_inf':>14}  {'||s_k||':>10}  {'inner':>5}")
for k, res in enumerate(report.residual_norms):
    step = f"{report.newton_steps[k]:10.3e}" if k < len(report.newton_steps) else " " * 10
    inner = f"{report.condg_iters[k]:5d}" if k < len(report.condg_iters) else " " * 5
    print(f"{k:3d}  {res:14.3e}  {step}  {inner}")

x = report.x
print(f"\nfinal iterate range: [{x.min():.6f}, {x.max():.6f}] (interior of [0, 5])")
print(f"feasible: {problem.feasible_set.contains(x, 1e-12)}")
