"""Classical families used as fitting baselines for degree distributions.

Discrete families (power law, Pareto, Poisson, power law with cutoff) live on
the integers; the rest are continuous on (0, inf). Each class is a pure
evaluator; estimation lives in :mod:`cburr.estimation`.

Normalizing constants for the zeta-type families come from the Hurwitz zeta
function; the exponentially cut-off power law is normalized by direct
summation with a certified tail bound below 1e-10.
"""

import numpy as np
from scipy.special import erfc, gammaln, ndtri, zeta

from ..errors import NonNormalizableError, ParameterDomainError
from ..utils import make_rng
from .base import DiscreteDistribution, Distribution, _require_positive


def _discrete_ppf(cdf, u, k_min):
    """Smallest integer k >= k_min with cdf(k) >= u, vectorized binary search."""
    u = np.asarray(u, dtype=float)
    hi = max(k_min, 1)
    for _ in range(200):
        if cdf(np.asarray([hi], dtype=float))[0] >= u.max():
            break
        hi *= 2
    lo = np.full(u.shape, k_min - 1, dtype=np.int64)
    hi = np.full(u.shape, hi, dtype=np.int64)
    while np.any(lo + 1 < hi):
        mid = (lo + hi) // 2
        below = cdf(mid.astype(float)) < u
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    return hi


class DiscretePowerLaw(DiscreteDistribution):
    """Zeta distribution: pmf proportional to k^(-alpha) on k = 1, 2, ...

    Requires alpha > 1, otherwise the normalizing sum diverges.
    """

    support_min = 1
    n_params = 2

    def __init__(self, alpha):
        self.alpha = float(alpha)
        if not np.isfinite(self.alpha) or self.alpha <= 1.0:
            raise NonNormalizableError(
                f"discrete power law requires alpha > 1, got {self.alpha}"
            )
        self._log_norm = np.log(zeta(self.alpha, 1.0))

    def __repr__(self):
        return f"DiscretePowerLaw(alpha={self.alpha:g})"

    def logpmf(self, k):
        k = self.check_support(k)
        return -self.alpha * np.log(k) - self._log_norm

    def sf(self, k):
        k = self.check_support(k)
        return zeta(self.alpha, k + 1.0) / zeta(self.alpha, 1.0)

    def cdf(self, k):
        return 1.0 - self.sf(k)

    def rvs(self, n, seed=None):
        rng = make_rng(seed if seed is not None else 0)
        return _discrete_ppf(self.cdf, rng.uniform(size=int(n)), self.support_min)


class DiscretePareto(DiscreteDistribution):
    """Pareto restricted to the integers k = x_m, x_m + 1, ...

    pmf proportional to k^(-(alpha+1)), normalized over the support.
    """

    n_params = 2

    def __init__(self, alpha, x_m=1):
        self.alpha = _require_positive("alpha", alpha)
        self.x_m = int(x_m)
        if self.x_m < 1:
            raise ParameterDomainError(f"x_m must be a positive integer, got {x_m}")
        self.support_min = self.x_m
        self._log_norm = np.log(zeta(self.alpha + 1.0, float(self.x_m)))

    def __repr__(self):
        return f"DiscretePareto(alpha={self.alpha:g}, x_m={self.x_m})"

    def logpmf(self, k):
        k = self.check_support(k)
        return -(self.alpha + 1.0) * np.log(k) - self._log_norm

    def sf(self, k):
        k = self.check_support(k)
        return zeta(self.alpha + 1.0, k + 1.0) / zeta(self.alpha + 1.0, float(self.x_m))

    def cdf(self, k):
        return 1.0 - self.sf(k)

    def rvs(self, n, seed=None):
        rng = make_rng(seed if seed is not None else 0)
        return _discrete_ppf(self.cdf, rng.uniform(size=int(n)), self.support_min)


class PoissonDist(DiscreteDistribution):
    """Poisson distribution on k = 0, 1, 2, ..."""

    support_min = 0
    n_params = 1

    def __init__(self, mu):
        self.mu = _require_positive("mu", mu)

    def __repr__(self):
        return f"PoissonDist(mu={self.mu:g})"

    def logpmf(self, k):
        k = self.check_support(k)
        return k * np.log(self.mu) - self.mu - gammaln(k + 1.0)

    def cdf(self, k):
        from scipy.stats import poisson

        k = self.check_support(k)
        return poisson.cdf(k, self.mu)

    def rvs(self, n, seed=None):
        rng = make_rng(seed if seed is not None else 0)
        return rng.poisson(self.mu, size=int(n)).astype(float)


class PowerLawCutoff(DiscreteDistribution):
    """Power law with exponential cutoff: pmf proportional to k^(-alpha)*exp(-rate*k).

    Normalized by direct summation; the summation stops once the certified
    geometric tail bound drops below 1e-10.
    """

    support_min = 1
    n_params = 3
    _tail_tol = 1e-10

    def __init__(self, alpha, rate):
        self.alpha = float(alpha)
        if not np.isfinite(self.alpha) or self.alpha < 0.0:
            raise ParameterDomainError(f"alpha must be >= 0, got {alpha}")
        self.rate = _require_positive("rate", rate)
        self._norm = self._normalizer(self.alpha, self.rate)
        self._log_norm = np.log(self._norm)
        self._cdf_table = None

    def __repr__(self):
        return f"PowerLawCutoff(alpha={self.alpha:g}, rate={self.rate:g})"

    @classmethod
    def _normalizer(cls, alpha, rate, chunk=1 << 14):
        total = 0.0
        start = 1
        decay = -np.expm1(-rate)  # 1 - exp(-rate)
        while True:
            k = np.arange(start, start + chunk, dtype=float)
            total += np.exp(-alpha * np.log(k) - rate * k).sum()
            last = start + chunk - 1
            # terms decrease, so the tail is dominated by a geometric series
            tail = np.exp(-alpha * np.log(last + 1.0) - rate * (last + 1.0)) / decay
            if tail < cls._tail_tol:
                return total
            start += chunk
            if start > 1 << 32:
                raise NonNormalizableError(
                    f"cutoff normalization did not meet the tail bound "
                    f"(alpha={alpha}, rate={rate})"
                )

    def logpmf(self, k):
        k = self.check_support(k)
        return -self.alpha * np.log(k) - self.rate * k - self._log_norm

    def _table(self):
        if self._cdf_table is None:
            k_max = 1
            while np.exp(-self.alpha * np.log(float(k_max)) - self.rate * k_max) > 1e-18 * self._norm:
                k_max *= 2
            k = np.arange(1, k_max + 1, dtype=float)
            pmf = np.exp(self.logpmf(k))
            self._cdf_table = np.cumsum(pmf)
        return self._cdf_table

    def cdf(self, k):
        k = self.check_support(k)
        table = self._table()
        idx = np.clip(k.astype(np.int64), 1, len(table)) - 1
        out = table[idx]
        return np.where(k > len(table), 1.0, out)

    def rvs(self, n, seed=None):
        rng = make_rng(seed if seed is not None else 0)
        table = self._table()
        u = rng.uniform(size=int(n))
        return (np.searchsorted(table, u * table[-1], side="left") + 1).astype(float)


class LogNormal(Distribution):
    """Log-normal distribution parameterized by the log-scale mean and sd."""

    support = (0.0, np.inf)
    n_params = 2

    def __init__(self, mu, sigma):
        self.mu = float(mu)
        self.sigma = _require_positive("sigma", sigma)

    def __repr__(self):
        return f"LogNormal(mu={self.mu:g}, sigma={self.sigma:g})"

    def logpdf(self, y):
        y = self.check_support(y)
        z = (np.log(y) - self.mu) / self.sigma
        return -np.log(y) - np.log(self.sigma) - 0.5 * np.log(2.0 * np.pi) - 0.5 * z * z

    def pdf(self, y):
        return np.exp(self.logpdf(y))

    def cdf(self, y):
        y = self.check_support(y)
        z = (np.log(y) - self.mu) / self.sigma
        return 0.5 * erfc(-z / np.sqrt(2.0))

    def sf(self, y):
        y = self.check_support(y)
        z = (np.log(y) - self.mu) / self.sigma
        return 0.5 * erfc(z / np.sqrt(2.0))

    def ppf(self, u):
        u = np.asarray(u, dtype=float)
        if np.any((u <= 0.0) | (u >= 1.0)):
            raise ParameterDomainError("probability must lie in (0, 1)")
        return np.exp(self.mu + self.sigma * ndtri(u))

    def rvs(self, n, seed=None):
        rng = make_rng(seed if seed is not None else 0)
        return np.exp(self.mu + self.sigma * rng.standard_normal(int(n)))


class Lomax(Distribution):
    """Lomax (shifted Pareto) distribution on (0, inf)."""

    support = (0.0, np.inf)
    n_params = 2

    def __init__(self, alpha, gamma):
        self.alpha = _require_positive("alpha", alpha)
        self.gamma = _require_positive("gamma", gamma)

    def __repr__(self):
        return f"Lomax(alpha={self.alpha:g}, gamma={self.gamma:g})"

    def logpdf(self, y):
        y = self.check_support(y)
        return (
            np.log(self.alpha)
            - np.log(self.gamma)
            - (self.alpha + 1.0) * np.log1p(y / self.gamma)
        )

    def pdf(self, y):
        return np.exp(self.logpdf(y))

    def logsf(self, y):
        y = self.check_support(y)
        return -self.alpha * np.log1p(y / self.gamma)

    def sf(self, y):
        return np.exp(self.logsf(y))

    def cdf(self, y):
        return -np.expm1(self.logsf(y))

    def isf(self, q):
        q = np.asarray(q, dtype=float)
        if np.any((q <= 0.0) | (q > 1.0)):
            raise ParameterDomainError("probability must lie in (0, 1]")
        return self.gamma * np.expm1(-np.log(q) / self.alpha)

    def ppf(self, u):
        u = np.asarray(u, dtype=float)
        if np.any((u < 0.0) | (u >= 1.0)):
            raise ParameterDomainError("probability must lie in [0, 1)")
        return self.gamma * np.expm1(-np.log1p(-u) / self.alpha)


class ExponentiatedBurr(Distribution):
    """Burr raised to a resilience power beta; beta = 1 recovers Burr.

    cdf(y) = [1 - (1 + (y/gamma)^alpha)^(-theta)]^beta. The published form has
    unit scale; ``gamma`` is an optional scale defaulting to 1.
    """

    support = (0.0, np.inf)
    n_params = 3

    def __init__(self, alpha, beta, theta, gamma=1.0):
        self.alpha = _require_positive("alpha", alpha)
        self.beta = _require_positive("beta", beta)
        self.theta = _require_positive("theta", theta)
        self.gamma = _require_positive("gamma", gamma)

    def __repr__(self):
        return (
            f"ExponentiatedBurr(alpha={self.alpha:g}, beta={self.beta:g}, "
            f"theta={self.theta:g}, gamma={self.gamma:g})"
        )

    def _log_t(self, y):
        y = self.check_support(y)
        return np.logaddexp(0.0, self.alpha * (np.log(y) - np.log(self.gamma)))

    def logcdf(self, y):
        log_t = self._log_t(y)
        return self.beta * np.log1p(-np.exp(-self.theta * log_t))

    def cdf(self, y):
        return np.exp(self.logcdf(y))

    def sf(self, y):
        return -np.expm1(self.logcdf(y))

    def logpdf(self, y):
        y = self.check_support(y)
        log_z = np.log(y) - np.log(self.gamma)
        log_t = np.logaddexp(0.0, self.alpha * log_z)
        inner = np.log1p(-np.exp(-self.theta * log_t))
        return (
            np.log(self.alpha * self.beta * self.theta)
            - np.log(self.gamma)
            + (self.alpha - 1.0) * log_z
            - (self.theta + 1.0) * log_t
            + (self.beta - 1.0) * inner
        )

    def pdf(self, y):
        return np.exp(self.logpdf(y))

    def ppf(self, u):
        u = np.asarray(u, dtype=float)
        if np.any((u <= 0.0) | (u >= 1.0)):
            raise ParameterDomainError("probability must lie in (0, 1)")
        inner = -np.log1p(-u ** (1.0 / self.beta)) / self.theta
        return self.gamma * np.expm1(inner) ** (1.0 / self.alpha)


class BurrMO(Distribution):
    """Burr with a proportional-odds tilt; tilt alpha = 1 recovers Burr.

    cdf(y) = (1 - T^-k) / (1 - (1-alpha) T^-k) with T = 1 + (y/gamma)^c.
    The published form has unit scale; ``gamma`` is optional.
    """

    support = (0.0, np.inf)
    n_params = 3

    def __init__(self, alpha, c, k, gamma=1.0):
        self.alpha = _require_positive("alpha", alpha)
        self.c = _require_positive("c", c)
        self.k = _require_positive("k", k)
        self.gamma = _require_positive("gamma", gamma)

    def __repr__(self):
        return (
            f"BurrMO(alpha={self.alpha:g}, c={self.c:g}, "
            f"k={self.k:g}, gamma={self.gamma:g})"
        )

    def _log_t(self, y):
        y = self.check_support(y)
        return np.logaddexp(0.0, self.c * (np.log(y) - np.log(self.gamma)))

    def sf(self, y):
        s = np.exp(-self.k * self._log_t(y))
        return self.alpha * s / (1.0 - (1.0 - self.alpha) * s)

    def cdf(self, y):
        s = np.exp(-self.k * self._log_t(y))
        return -np.expm1(np.log(s)) / (1.0 - (1.0 - self.alpha) * s)

    def logpdf(self, y):
        y = self.check_support(y)
        log_z = np.log(y) - np.log(self.gamma)
        log_t = np.logaddexp(0.0, self.c * log_z)
        s = np.exp(-self.k * log_t)
        return (
            np.log(self.alpha * self.c * self.k)
            - np.log(self.gamma)
            + (self.c - 1.0) * log_z
            - (self.k + 1.0) * log_t
            - 2.0 * np.log1p(-(1.0 - self.alpha) * s)
        )

    def pdf(self, y):
        return np.exp(self.logpdf(y))

    def ppf(self, u):
        u = np.asarray(u, dtype=float)
        if np.any((u < 0.0) | (u >= 1.0)):
            raise ParameterDomainError("probability must lie in [0, 1)")
        s = (1.0 - u) / (1.0 - u * (1.0 - self.alpha))
        return self.gamma * np.expm1(-np.log(s) / self.k) ** (1.0 / self.c)
