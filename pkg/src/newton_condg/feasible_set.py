"""Convex compact feasible sets exposing a linear-minimization oracle.

Supported sets are boxes (with +inf upper bounds replaced by a finite cap to
keep the set compact), Euclidean balls, and scaled standard simplexes. All
operations are stateless and thread-safe.
"""

from abc import ABC, abstractmethod

import numpy as np


class FeasibleSet(ABC):
    """A convex compact subset of R^n."""

    n: int

    @abstractmethod
    def lmo(self, d):
        """Return a minimizer of <d, v> over the set.

        Raises ValueError for non-finite d.
        """

    @abstractmethod
    def contains(self, x, tol=0.0):
        """Membership in the set expanded by `tol` per constraint."""

    @abstractmethod
    def sample(self, rng):
        """Draw a uniformly-ish distributed feasible point (test utility)."""


class Box(FeasibleSet):
    """{x : lower <= x <= upper}, upper entries of +inf capped at effective_cap.

    The capped box is the effective feasible set: lmo, contains, project and
    sample all use min(upper, effective_cap).
    """

    def __init__(self, lower, upper, effective_cap=1e6):
        lower = np.atleast_1d(np.asarray(lower, dtype=float))
        upper = np.atleast_1d(np.asarray(upper, dtype=float))
        if lower.shape != upper.shape or lower.ndim != 1:
            raise ValueError("lower and upper must be 1-d arrays of equal length")
        if not np.all(np.isfinite(lower)):
            raise ValueError("lower bounds must be finite")
        capped = np.minimum(upper, effective_cap)
        if not np.all(lower < capped):
            raise ValueError("need lower < min(upper, effective_cap) per coordinate")
        self.lower = lower
        self.upper = upper
        self.effective_cap = float(effective_cap)
        self.capped_upper = capped
        self.n = lower.size

    def lmo(self, d):
        d = np.asarray(d, dtype=float)
        if not np.all(np.isfinite(d)):
            raise ValueError("lmo direction must be finite")
        # ties (d_i == 0) go to the lower bound for determinism
        return np.where(d < 0, self.capped_upper, self.lower)

    def contains(self, x, tol=0.0):
        x = np.asarray(x, dtype=float)
        return bool(
            np.all(x >= self.lower - tol) and np.all(x <= self.capped_upper + tol)
        )

    def project(self, y):
        """Exact Euclidean projection: coordinatewise clip to the capped box."""
        return np.clip(np.asarray(y, dtype=float), self.lower, self.capped_upper)

    def sample(self, rng):
        return self.lower + rng.uniform(0.0, 1.0, self.n) * (
            self.capped_upper - self.lower
        )

    def __repr__(self):
        return f"Box(n={self.n})"


class EuclideanBall(FeasibleSet):
    """{x : ||x - center|| <= radius}."""

    def __init__(self, center, radius):
        center = np.atleast_1d(np.asarray(center, dtype=float))
        if not radius > 0:
            raise ValueError("radius must be positive")
        self.center = center
        self.radius = float(radius)
        self.n = center.size

    def lmo(self, d):
        d = np.asarray(d, dtype=float)
        if not np.all(np.isfinite(d)):
            raise ValueError("lmo direction must be finite")
        nd = np.linalg.norm(d)
        if nd == 0.0:
            return self.center.copy()
        return self.center - self.radius * d / nd

    def contains(self, x, tol=0.0):
        return bool(np.linalg.norm(np.asarray(x, dtype=float) - self.center)
                    <= self.radius + tol)

    def sample(self, rng):
        v = rng.standard_normal(self.n)
        v /= np.linalg.norm(v)
        return self.center + self.radius * rng.uniform(0.0, 1.0) ** (1.0 / self.n) * v

    def __repr__(self):
        return f"EuclideanBall(n={self.n}, radius={self.radius})"


class Simplex(FeasibleSet):
    """{x : x >= 0, sum(x) = scale}."""

    def __init__(self, n, scale=1.0):
        if n < 1:
            raise ValueError("n must be >= 1")
        if not scale > 0:
            raise ValueError("scale must be positive")
        self.n = int(n)
        self.scale = float(scale)

    def lmo(self, d):
        d = np.asarray(d, dtype=float)
        if not np.all(np.isfinite(d)):
            raise ValueError("lmo direction must be finite")
        out = np.zeros(self.n)
        out[np.argmin(d)] = self.scale  # argmin takes the lowest index on ties
        return out

    def contains(self, x, tol=0.0):
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= -tol) and abs(x.sum() - self.scale) <= tol)

    def sample(self, rng):
        return self.scale * rng.dirichlet(np.ones(self.n))

    def __repr__(self):
        return f"Simplex(n={self.n}, scale={self.scale})"


def project_box(fset, y):
    """Exact Euclidean projection onto a box (coordinatewise clip).

    Raises TypeError for non-box sets; balls and simplexes only expose the
    linear-minimization oracle here.
    """
    if not isinstance(fset, Box):
        raise TypeError("project_box requires a Box feasible set")
    return fset.project(y)
