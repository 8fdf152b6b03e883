"""Majorant-based convergence radii and rate diagnostics.

A majorant function is a scalar convex model f with f(0) = 0, f'(0) = -1
whose derivative dominates the variation of the scaled Jacobian around the
root. Two closed-form families are provided: the Holder family
f(t) = K t^{p+1}/(p+1) - t and the analytic (Smale) family
f(t) = t/(1 - gamma t) - 2t. From either one, closed forms give the radii

    nu    : where f' stays negative,
    rho   : where the contraction inequality of the outer iteration holds,
    sigma : min(kappa, rho), the convergence-ball radius,

and the scalar comparison sequence t_k that dominates ||x_k - x*||.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

HOLDER = "holder"
SMALE = "smale"

ENVELOPE_SLACK = 1e-12
RATIO_SLACK = 0.1  # finite runs cannot realize a limsup; documented headroom
ERROR_FLOOR = 1e-14


@dataclass(frozen=True)
class MajorantFunction:
    """Scalar majorant model; build with holder_majorant or smale_majorant."""

    kind: str
    K: Optional[float] = None
    p: Optional[float] = None
    gamma: Optional[float] = None

    def f(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind == HOLDER:
            return self.K * t ** (self.p + 1) / (self.p + 1) - t
        return t / (1.0 - self.gamma * t) - 2.0 * t

    def fprime(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind == HOLDER:
            return self.K * t ** self.p - 1.0
        return 1.0 / (1.0 - self.gamma * t) ** 2 - 2.0

    @property
    def R(self):
        """Right end of the domain of f."""
        return math.inf if self.kind == HOLDER else 1.0 / self.gamma

    @property
    def nu(self):
        """sup{t : f'(t) < 0}."""
        if self.kind == HOLDER:
            return (1.0 / self.K) ** (1.0 / self.p)
        return (math.sqrt(2.0) - 1.0) / (math.sqrt(2.0) * self.gamma)

    @property
    def exponent(self):
        """Rate exponent p of the family (the analytic family has p = 1)."""
        return self.p if self.kind == HOLDER else 1.0


def holder_majorant(K, p):
    if not K > 0:
        raise ValueError("K must be positive")
    if not (0.0 < p <= 1.0):
        raise ValueError("p must lie in (0, 1]")
    return MajorantFunction(kind=HOLDER, K=float(K), p=float(p))


def smale_majorant(gamma):
    if not gamma > 0:
        raise ValueError("gamma must be positive")
    return MajorantFunction(kind=SMALE, gamma=float(gamma))


def nf(majorant, t):
    """Newton iteration map t - f(t)/f'(t) of the majorant.

    Defined on (0, nu), where it is negative; raises ValueError outside.
    Accepts scalars or arrays.
    """
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0.0) or np.any(t >= majorant.nu):
        raise ValueError("nf is defined on (0, nu)")
    out = t - majorant.f(t) / majorant.fprime(t)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class RadiusBreakdown:
    """Radii nu > rho and sigma = min(kappa, rho)."""

    nu: float
    rho: float
    sigma: float
    kappa: float


def holder_radius(K, p, theory, kappa=math.inf):
    """Closed-form radii for the Holder family."""
    theory.validate()
    majorant = holder_majorant(K, p)
    q = _linear_coeff(theory)
    denom = K * (
        p
        - theory.omega1 * ((1.0 + theory.vartheta) * theory.lam + theory.vartheta - p)
        - theory.omega2 * (p + 1.0)
        + 1.0
    )
    rho = ((1.0 - q) * (p + 1.0) / denom) ** (1.0 / p)
    return RadiusBreakdown(nu=majorant.nu, rho=rho, sigma=min(kappa, rho), kappa=kappa)


def smale_radius(gamma, theory, kappa=math.inf):
    """Closed-form radii for the analytic (Smale) family."""
    theory.validate()
    majorant = smale_majorant(gamma)
    vt, lam = theory.vartheta, theory.lam
    a = theory.omega1 * (1.0 + vt) * (1.0 - 3.0 * lam) + 4.0 * (
        1.0 - theory.omega1 * vt - theory.omega2
    )
    b = 1.0 - _linear_coeff(theory)
    disc = a * a - 8.0 * b * b
    if disc < 0.0:
        raise ValueError("parameter combination outside the closed form (a^2 < 8 b^2)")
    rho = (a - math.sqrt(disc)) / (4.0 * gamma * b)
    return RadiusBreakdown(nu=majorant.nu, rho=rho, sigma=min(kappa, rho), kappa=kappa)


def majorant_sequence(majorant, theory, theta, t0, kmax):
    """Scalar comparison sequence t_0 = t0, strictly decreasing to 0.

    t_{k+1} = omega1 (1+vartheta)(1 + sqrt(2 theta_k)) |n_f(t_k)|
              + (omega1 [(1+vartheta) sqrt(2 theta_k) + vartheta] + omega2) t_k.

    theta may be a constant or a sequence (last entry repeated). Requires
    0 < t0 < rho and every theta_k <= lam^2/2. Stops early if a term
    underflows to exactly 0.
    """
    theory.validate()
    thetas = np.atleast_1d(np.asarray(theta, dtype=float))
    if np.any(thetas < 0.0) or np.any(thetas > theory.lam ** 2 / 2.0):
        raise ValueError("need 0 <= theta_k <= lambda**2/2")
    if majorant.kind == HOLDER:
        rho = holder_radius(majorant.K, majorant.p, theory).rho
    else:
        rho = smale_radius(majorant.gamma, theory).rho
    if not (0.0 < t0 < rho):
        raise ValueError("need 0 < t0 < sigma")

    om1, om2, vt = theory.omega1, theory.omega2, theory.vartheta
    ts = [float(t0)]
    for k in range(kmax):
        t = ts[-1]
        if t == 0.0:
            break
        sq = math.sqrt(2.0 * thetas[min(k, thetas.size - 1)])
        t_next = om1 * (1.0 + vt) * (1.0 + sq) * abs(nf(majorant, t)) + (
            om1 * ((1.0 + vt) * sq + vt) + om2
        ) * t
        ts.append(float(t_next))
    return np.array(ts)


@dataclass
class RateDiagnostic:
    """Observed errors of a run against the theoretical rate bounds.

    ratios are e_{k+1}/e_k over steps with both errors above the rounding
    floor; ratio_cap is the asymptotic bound
    omega1[(1+vartheta) sqrt(2 theta) + vartheta] + omega2, compared with
    RATIO_SLACK headroom over the last five steps. per_step_bound_ok verifies
    the explicit error recursion, envelope_ok the comparison-sequence
    domination e_k <= t_k.
    """

    errors: np.ndarray
    ratios: np.ndarray
    max_ratio_last5: Optional[float]
    ratio_cap: float
    ratio_within_cap: bool
    per_step_bound_ok: bool
    envelope_ok: bool


def rate_check(report, x_star, majorant, theory, theta_bar):
    """Check a converged run against the theoretical rate statements.

    Computes e_k = ||x_k - x*|| and evaluates (i) the asymptotic ratio bound
    over the last five steps (with documented slack), (ii) the per-step error
    recursion with exponent p + 1, and (iii) the comparison-sequence envelope
    started at t_0 = e_0. Errors below 1e-14 are excluded from ratios.
    Raises ValueError when the report did not converge or e_0 falls outside
    the majorant domain.
    """
    if report.status != "converged":
        raise ValueError("rate_check needs a converged report")
    theory.validate()
    x_star = np.asarray(x_star, dtype=float)
    errors = np.array([np.linalg.norm(it - x_star) for it in report.iterates])
    cap = _ratio_cap(theory, theta_bar)

    if np.all(errors <= ERROR_FLOOR):
        return RateDiagnostic(
            errors=errors, ratios=np.array([]), max_ratio_last5=None, ratio_cap=cap,
            ratio_within_cap=True, per_step_bound_ok=True, envelope_ok=True,
        )

    e0 = errors[0]
    if not (0.0 < e0 < majorant.nu):
        raise ValueError("starting error outside the majorant domain (0, nu)")

    valid = (errors[:-1] > ERROR_FLOOR) & (errors[1:] > ERROR_FLOOR)
    ratios = errors[1:][valid] / errors[:-1][valid]
    max_last5 = float(ratios[-5:].max()) if ratios.size else None
    ratio_ok = max_last5 is None or max_last5 <= cap + RATIO_SLACK

    # explicit recursion: e_{k+1} <= C (e_k/e_0)^{p+1} + q e_k
    p = majorant.exponent
    coef = (
        theory.omega1
        * (1.0 + theory.vartheta)
        * (1.0 + theory.lam)
        * float(majorant.f(e0) / majorant.fprime(e0) - e0)
    )
    q = _linear_coeff(theory)
    bound = coef * (errors[:-1] / e0) ** (p + 1.0) + q * errors[:-1]
    per_step_ok = bool(np.all(errors[1:] <= bound + ENVELOPE_SLACK))

    ts = majorant_sequence(majorant, theory, theta_bar, e0, len(errors) - 1)
    # a truncated sequence ended at exactly 0; missing tail entries are 0
    envelope_ok = True
    for k, e in enumerate(errors):
        t_k = ts[k] if k < ts.size else 0.0
        if e > t_k + ENVELOPE_SLACK:
            envelope_ok = False
            break

    return RateDiagnostic(
        errors=errors, ratios=ratios, max_ratio_last5=max_last5, ratio_cap=cap,
        ratio_within_cap=ratio_ok, per_step_bound_ok=per_step_ok,
        envelope_ok=envelope_ok,
    )


def _linear_coeff(theory):
    """omega1[(1+vartheta) lambda + vartheta] + omega2, the linear-term weight."""
    return (
        theory.omega1 * ((1.0 + theory.vartheta) * theory.lam + theory.vartheta)
        + theory.omega2
    )


def _ratio_cap(theory, theta_bar):
    sq = math.sqrt(2.0 * theta_bar)
    return (
        theory.omega1 * ((1.0 + theory.vartheta) * sq + theory.vartheta)
        + theory.omega2
    )
