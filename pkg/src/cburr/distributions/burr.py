"""Burr XII distribution and its Poisson-shift compounded extension.

Burr XII, with scale ``gamma`` and shapes ``alpha`` and ``c``:

    F(y)    = 1 - [1 + (y/gamma)^c]^(-alpha)
    f(y)    = c*alpha*gamma^(-c) * y^(c-1) * [1 + (y/gamma)^c]^(-alpha-1)
    Fbar(y) = [1 + (y/gamma)^c]^(-alpha)
    r(y)    = c*alpha*gamma^(-c) * y^(c-1) / [1 + (y/gamma)^c]

The compounded extension (``CBurr``) is the law of the minimum of
1 + Poisson(lam) i.i.d. Burr draws:

    Gbar(y) = exp(-lam) * Fbar(y) * exp(lam * Fbar(y))
    g(y)    = f(y) * (1 + lam*Fbar(y)) * exp(-lam*F(y))

All evaluation happens in log space built from c*log(y/gamma), so values
stay finite for y up to at least 1e12 and for the extreme scale/shape
combinations that show up in fitted degree distributions.
"""

import numpy as np
from scipy.special import expit

from ..errors import ParameterDomainError, SupportExhaustedError
from ..utils import check_lambda, make_rng
from .base import Distribution, _require_positive


class Burr(Distribution):
    """Burr XII distribution.

    Parameters
    ----------
    gamma : float
        Scale, > 0.
    alpha : float
        Tail shape, > 0. The r-th moment exists iff r < alpha * c.
    c : float
        Body shape, > 0.
    """

    support = (0.0, np.inf)
    n_params = 3

    def __init__(self, gamma, alpha, c):
        self.gamma = _require_positive("gamma", gamma)
        self.alpha = _require_positive("alpha", alpha)
        self.c = _require_positive("c", c)

    def __repr__(self):
        return f"Burr(gamma={self.gamma:g}, alpha={self.alpha:g}, c={self.c:g})"

    def _clog(self, y):
        y = self.check_support(y)
        return self.c * (np.log(y) - np.log(self.gamma))

    def logsf(self, y):
        return -self.alpha * np.logaddexp(0.0, self._clog(y))

    def sf(self, y):
        return np.exp(self.logsf(y))

    def cdf(self, y):
        return -np.expm1(self.logsf(y))

    def logpdf(self, y):
        y = self.check_support(y)
        cl = self.c * (np.log(y) - np.log(self.gamma))
        log_t = np.logaddexp(0.0, cl)
        return (
            np.log(self.c)
            + np.log(self.alpha)
            - np.log(y)
            + cl
            - (self.alpha + 1.0) * log_t
        )

    def pdf(self, y):
        return np.exp(self.logpdf(y))

    def hazard(self, y):
        y = self.check_support(y)
        return self.c * self.alpha / y * expit(self._clog(y))

    def isf(self, q):
        q = np.asarray(q, dtype=float)
        if np.any((q <= 0.0) | (q > 1.0)):
            raise ParameterDomainError("probability must lie in (0, 1]")
        # Fbar(y) = q  <=>  (y/gamma)^c = q^(-1/alpha) - 1
        out = self.gamma * np.expm1(-np.log(q) / self.alpha) ** (1.0 / self.c)
        return out if out.ndim else float(out)

    def ppf(self, u):
        u = np.asarray(u, dtype=float)
        if np.any((u < 0.0) | (u >= 1.0)):
            raise ParameterDomainError("probability must lie in [0, 1)")
        out = self.gamma * np.expm1(-np.log1p(-u) / self.alpha) ** (1.0 / self.c)
        return out if out.ndim else float(out)

    def rvs(self, n, seed=None):
        rng = make_rng(seed if seed is not None else 0)
        return self.ppf(rng.uniform(size=int(n)))


class CBurr(Distribution):
    """Compounded Burr distribution.

    The fourth parameter ``lam`` is the Poisson shift rate: ``lam = 0``
    recovers Burr exactly, positive values temper the tail and inflate the
    early hazard, small negative values (down to -1) do the opposite.
    Below -1 (allowed only under ``regime="paper-compat"``) the object is a
    quasi-density: evaluation works, but quantiles and sampling are refused.

    Parameters
    ----------
    gamma, alpha, c : float
        Burr base parameters, all > 0.
    lam : float
        Shift rate; admissible range set by ``regime``.
    regime : {"validity", "paper-compat"}
    """

    support = (0.0, np.inf)
    n_params = 4

    def __init__(self, gamma, alpha, c, lam, regime="validity"):
        self.base = Burr(gamma, alpha, c)
        self.lam = check_lambda(lam, regime)
        self.regime = regime

    @property
    def gamma(self):
        return self.base.gamma

    @property
    def alpha(self):
        return self.base.alpha

    @property
    def c(self):
        return self.base.c

    def __repr__(self):
        return (
            f"CBurr(gamma={self.gamma:g}, alpha={self.alpha:g}, "
            f"c={self.c:g}, lam={self.lam:g})"
        )

    def params_dict(self):
        return {"gamma": self.gamma, "alpha": self.alpha, "c": self.c, "lam": self.lam}

    def logsf(self, y):
        log_sbar = self.base.logsf(y)
        # F = 1 - Fbar without cancellation near Fbar ~ 1
        f_cdf = -np.expm1(log_sbar)
        return log_sbar - self.lam * f_cdf

    def sf(self, y):
        return np.exp(self.logsf(y))

    def cdf(self, y):
        return -np.expm1(self.logsf(y))

    def logpdf(self, y):
        log_sbar = self.base.logsf(y)
        sbar = np.exp(log_sbar)
        f_cdf = -np.expm1(log_sbar)
        with np.errstate(invalid="ignore"):
            body = np.log1p(self.lam * sbar)
        return self.base.logpdf(y) + body - self.lam * f_cdf

    def pdf(self, y):
        log_sbar = self.base.logsf(y)
        sbar = np.exp(log_sbar)
        f_cdf = -np.expm1(log_sbar)
        return self.base.pdf(y) * (1.0 + self.lam * sbar) * np.exp(-self.lam * f_cdf)

    def hazard(self, y):
        sbar = self.base.sf(y)
        if np.any(sbar <= 0.0):
            raise SupportExhaustedError("hazard undefined where survival is zero")
        return self.base.hazard(y) * (1.0 + self.lam * sbar)

    def weight(self, y):
        sbar = self.base.sf(y)
        return (1.0 + self.lam * sbar) * np.exp(-self.lam * (1.0 - sbar))

    def isf(self, q):
        from ..compounding import _solve_shifted_survival

        if self.lam <= -1.0:
            raise ParameterDomainError(
                "quantiles undefined outside the validity regime (lambda <= -1)"
            )
        q = np.asarray(q, dtype=float)
        if np.any((q <= 0.0) | (q > 1.0)):
            raise ParameterDomainError("probability must lie in (0, 1]")
        s = _solve_shifted_survival(q, self.lam)
        return self.base.isf(s)

    def ppf(self, u):
        u = np.asarray(u, dtype=float)
        if np.any((u < 0.0) | (u >= 1.0)):
            raise ParameterDomainError("probability must lie in [0, 1)")
        return self.isf(1.0 - u)

    def rvs(self, n, seed=None, method="auto"):
        """Sample: minimum-of-shocks for lam >= 0, inverse cdf otherwise."""
        from ..compounding import CompoundedMin

        return CompoundedMin(self.base, self.lam, self.regime).rvs(
            n, seed=seed, method=method
        )
