"""Poisson-shifted compounding of an arbitrary base distribution.

Given a base distribution with cdf F and survival Fbar, and a count
N = 1 + Poisson(lam) of i.i.d. shocks, the minimum Y of the N shocks has
survival

    Gbar(y) = Fbar(y) * exp(-lam * F(y)),

density g(y) = f(y) * (1 + lam*Fbar(y)) * exp(-lam*F(y)) and hazard
r_G(y) = r_F(y) * (1 + lam*Fbar(y)). The maximum Z of the same shocks has
cdf G_Z(z) = F(z) * exp(-lam * Fbar(z)). At lam = 0 both collapse to the
base. The factor w(y) = (1 + lam*Fbar) * exp(-lam*F) is a weight function:
for lam > 0 it is non-increasing and ranges over [exp(-lam), 1 + lam], which
is what skews mass toward the lower tail of the base.

``CompoundedMin`` and ``CompoundedMax`` implement the full distribution
contract (pdf/cdf/sf/hazard/ppf/rvs) on top of any base exposing the
``Distribution`` interface, so they can themselves serve as bases or be fed
to the fitting and goodness-of-fit layers.
"""

import numpy as np

from .distributions.base import Distribution
from .errors import (
    GenerativeUnsupportedError,
    NumericError,
    ParameterDomainError,
    SupportExhaustedError,
)
from .utils import check_lambda, make_rng


def _solve_shifted_survival(q, lam, tol=1e-14, max_iter=200):
    """Solve s * exp(-lam * (1 - s)) = q for s in (0, 1].

    Used to invert Gbar and G_Z: with s the base survival (resp. cdf), the
    map is strictly increasing in s whenever lam > -1, so the root is unique.
    Vectorized bisection-safeguarded Newton on h(s) = log s - lam*(1-s) - log q.
    """
    q = np.asarray(q, dtype=float)
    if np.any((q <= 0.0) | (q > 1.0)):
        raise ParameterDomainError("target probability must lie in (0, 1]")
    # Bracket from s = q * exp(lam * (1 - s)) with exp factor at its extremes.
    lo = np.clip(q * np.exp(min(0.0, lam)), 1e-320, 1.0)
    hi = np.clip(q * np.exp(max(0.0, lam)), 1e-320, 1.0)
    s = np.clip(q, lo, hi)
    logq = np.log(q)
    converged = np.zeros(s.shape, dtype=bool)
    for _ in range(max_iter):
        h = np.log(s) - lam * (1.0 - s) - logq
        hi = np.where(h > 0.0, s, hi)
        lo = np.where(h <= 0.0, s, lo)
        step = h / (1.0 / s + lam)
        s_new = s - step
        bad = (s_new <= lo) | (s_new >= hi) | ~np.isfinite(s_new)
        s_new = np.where(bad, 0.5 * (lo + hi), s_new)
        converged = np.abs(s_new - s) <= tol * np.maximum(s_new, tol)
        s = s_new
        if np.all(converged):
            break
    if not np.all(converged):
        raise NumericError(
            "survival inversion did not converge; "
            f"worst residual {np.max(np.abs(np.log(s) - lam * (1.0 - s) - logq)):.3e}"
        )
    return s


class CompoundedMin(Distribution):
    """Distribution of the minimum of 1 + Poisson(lam) i.i.d. base draws.

    Parameters
    ----------
    base : Distribution
        Base distribution of a single shock.
    lam : float
        Poisson shift rate. ``lam = 0`` reproduces the base exactly.
    regime : {"validity", "paper-compat"}
        Admissible range for ``lam``. Outside the validity regime
        (lam <= -1) the object is a quasi-density: evaluation works but
        monotonicity is not guaranteed and quantiles/sampling are refused.
    """

    def __init__(self, base, lam, regime="validity"):
        self.base = base
        self.lam = check_lambda(lam, regime)
        self.regime = regime

    @property
    def support(self):
        return self.base.support

    def __repr__(self):
        return f"CompoundedMin({self.base!r}, lam={self.lam:g})"

    def sf(self, y):
        return self.base.sf(y) * np.exp(-self.lam * self.base.cdf(y))

    def logsf(self, y):
        return self.base.logsf(y) - self.lam * self.base.cdf(y)

    def cdf(self, y):
        return -np.expm1(self.logsf(y))

    def weight(self, y):
        """Weight w(y) relating the compounded density to the base density."""
        return (1.0 + self.lam * self.base.sf(y)) * np.exp(-self.lam * self.base.cdf(y))

    def pdf(self, y):
        return self.base.pdf(y) * self.weight(y)

    def logpdf(self, y):
        sbar = self.base.sf(y)
        with np.errstate(invalid="ignore"):
            body = np.log1p(self.lam * sbar)
        return self.base.logpdf(y) + body - self.lam * self.base.cdf(y)

    def hazard(self, y):
        sbar = self.base.sf(y)
        if np.any(sbar <= 0.0):
            raise SupportExhaustedError("hazard undefined where base survival is zero")
        return self.base.hazard(y) * (1.0 + self.lam * sbar)

    def isf(self, q):
        if self.lam <= -1.0:
            raise ParameterDomainError(
                "quantiles undefined outside the validity regime (lambda <= -1)"
            )
        q = np.asarray(q, dtype=float)
        out = np.empty_like(q)
        top = q == 0.0
        out[top] = self.base.isf(0.0)
        inner = ~top
        if np.any(inner):
            s = _solve_shifted_survival(q[inner], self.lam)
            out[inner] = self.base.isf(s)
        return out if out.ndim else float(out)

    def ppf(self, u):
        u = np.asarray(u, dtype=float)
        if np.any((u < 0.0) | (u >= 1.0)):
            raise ParameterDomainError("probability must lie in [0, 1)")
        return self.isf(1.0 - u)

    def rvs(self, n, seed=None, method="auto"):
        """Draw ``n`` variates.

        ``method="generative"`` simulates the minimum of 1 + Poisson(lam)
        base draws and requires lam >= 0; ``"inverse"`` inverts the survival
        function and works anywhere in the validity regime. ``"auto"`` picks
        the generative route when available.
        """
        n = int(n)
        if n < 0:
            raise ParameterDomainError("sample size must be nonnegative")
        if method == "auto":
            method = "generative" if self.lam >= 0.0 else "inverse"
        rng = make_rng(seed if seed is not None else 0)
        if n == 0:
            return np.empty(0)
        if method == "generative":
            if self.lam < 0.0:
                raise GenerativeUnsupportedError(
                    "minimum-of-shocks sampling requires lambda >= 0; "
                    "use method='inverse'"
                )
            counts = 1 + rng.poisson(self.lam, size=n)
            total = int(counts.sum())
            draws = self.base.rvs(total, seed=rng)
            # Per-draw minima over contiguous blocks of lengths `counts`.
            starts = np.concatenate(([0], np.cumsum(counts)[:-1]))
            return np.minimum.reduceat(draws, starts)
        if method == "inverse":
            return self.isf(rng.uniform(size=n))
        raise ParameterDomainError(f"unknown sampling method {method!r}")


class CompoundedMax(Distribution):
    """Distribution of the maximum of 1 + Poisson(lam) i.i.d. base draws."""

    def __init__(self, base, lam, regime="validity"):
        self.base = base
        self.lam = check_lambda(lam, regime)
        self.regime = regime

    @property
    def support(self):
        return self.base.support

    def __repr__(self):
        return f"CompoundedMax({self.base!r}, lam={self.lam:g})"

    def cdf(self, z):
        return self.base.cdf(z) * np.exp(-self.lam * self.base.sf(z))

    def sf(self, z):
        return 1.0 - self.cdf(z)

    def weight(self, z):
        return (1.0 + self.lam * self.base.cdf(z)) * np.exp(-self.lam * self.base.sf(z))

    def pdf(self, z):
        return self.base.pdf(z) * self.weight(z)

    def logpdf(self, z):
        with np.errstate(invalid="ignore"):
            body = np.log1p(self.lam * self.base.cdf(z))
        return self.base.logpdf(z) + body - self.lam * self.base.sf(z)

    def hazard(self, z):
        sf = self.sf(z)
        if np.any(sf <= 0.0):
            raise SupportExhaustedError("hazard undefined where survival is zero")
        return self.pdf(z) / sf

    def ppf(self, u):
        if self.lam <= -1.0:
            raise ParameterDomainError(
                "quantiles undefined outside the validity regime (lambda <= -1)"
            )
        u = np.asarray(u, dtype=float)
        if np.any((u <= 0.0) | (u > 1.0)):
            raise ParameterDomainError("probability must lie in (0, 1]")
        x = _solve_shifted_survival(u, self.lam)
        return self.base.ppf(x)

    def isf(self, q):
        q = np.asarray(q, dtype=float)
        if np.any((q < 0.0) | (q >= 1.0)):
            raise ParameterDomainError("probability must lie in [0, 1)")
        return self.ppf(1.0 - q)

    def rvs(self, n, seed=None, method="auto"):
        n = int(n)
        if n < 0:
            raise ParameterDomainError("sample size must be nonnegative")
        if method == "auto":
            method = "generative" if self.lam >= 0.0 else "inverse"
        rng = make_rng(seed if seed is not None else 0)
        if n == 0:
            return np.empty(0)
        if method == "generative":
            if self.lam < 0.0:
                raise GenerativeUnsupportedError(
                    "maximum-of-shocks sampling requires lambda >= 0; "
                    "use method='inverse'"
                )
            counts = 1 + rng.poisson(self.lam, size=n)
            draws = self.base.rvs(int(counts.sum()), seed=rng)
            starts = np.concatenate(([0], np.cumsum(counts)[:-1]))
            return np.maximum.reduceat(draws, starts)
        if method == "inverse":
            return self.ppf(rng.uniform(size=n))
        raise ParameterDomainError(f"unknown sampling method {method!r}")


# Functional surface over the two classes; convenient for one-off evaluation.

def compounded_survival(base, lam, y, regime="validity"):
    """Survival of the minimum-compounded distribution at ``y``."""
    return CompoundedMin(base, lam, regime).sf(y)


def compounded_pdf(base, lam, y, regime="validity"):
    """Density of the minimum-compounded distribution at ``y``."""
    return CompoundedMin(base, lam, regime).pdf(y)


def compounded_hazard(base, lam, y, regime="validity"):
    """Hazard of the minimum-compounded distribution at ``y``."""
    return CompoundedMin(base, lam, regime).hazard(y)


def compounded_max_cdf(base, lam, z, regime="validity"):
    """CDF of the maximum-compounded distribution at ``z``."""
    return CompoundedMax(base, lam, regime).cdf(z)


def weight_function(base, lam, y, regime="validity"):
    """Weight w(y) = (1 + lam*Fbar(y)) * exp(-lam*F(y))."""
    return CompoundedMin(base, lam, regime).weight(y)


def sample_compounded_min(base, lam, n, seed, method="generative"):
    """Draw ``n`` minima of 1 + Poisson(lam) base shocks (lam >= 0)."""
    return CompoundedMin(base, lam).rvs(n, seed=seed, method=method)
