"""Convergence-ball radii from the two closed-form majorant families.

For a Lipschitz-type bound (K, p) or an analytic-function bound (gamma), the
closed forms give nu (where the scalar model's slope stays negative), rho
(where the outer contraction holds), and sigma = min(kappa, rho), the radius
of the ball of safe starting points.
"""

from newton_condg import TheoryParams, holder_radius, smale_radius

exact_newton = TheoryParams(omega1=1.0, omega2=0.0, vartheta=0.0, lam=0.0)

print("Lipschitz derivative (p = 1), exact Newton: rho = 2/(3K)")
print(f"{'K':>6}  {'nu':>12}  {'rho':>12}  {'sigma':>12}")
for K in (0.5, 1.0, 2.0, 5.0):
    rb = holder_radius(K, 1.0, exact_newton)
    print(f"{K:6.2f}  {rb.nu:12.6f}  {rb.rho:12.6f}  {rb.sigma:12.6f}")

print("\nanalytic bound gamma = 1, exact Newton: rho = (5 - sqrt(17))/4")
rb = smale_radius(1.0, exact_newton)
print(f"nu = {rb.nu:.12g}, rho = {rb.rho:.12g}")

print("\nhow inexactness shrinks the ball (K = 1, p = 1):")
print(f"{'omega1':>7}  {'omega2':>7}  {'vartheta':>8}  {'lambda':>7}  {'rho':>10}")
for tp in (
    TheoryParams(1.0, 0.0, 0.0, 0.0),
    TheoryParams(1.0, 0.0, 0.0, 0.1),   # inner loop allowed slack
    TheoryParams(1.0, 0.1, 0.0, 0.1),   # model matrix off by 10%
    TheoryParams(1.2, 0.1, 0.2, 0.05),  # residual-controlled linear solves too
):
    rb = holder_radius(1.0, 1.0, tp)
    print(f"{tp.omega1:7.2f}  {tp.omega2:7.2f}  {tp.vartheta:8.2f}  {tp.lam:7.2f}"
          f"  {rb.rho:10.6f}")

print("\na declared domain radius caps sigma:")
rb = holder_radius(1.0, 1.0, exact_newton, kappa=0.1)
print(f"kappa = {rb.kappa}, rho = {rb.rho:.6f}, sigma = {rb.sigma:.6f}")
