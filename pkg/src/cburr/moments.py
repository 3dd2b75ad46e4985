"""Survival-weighted moments and moment series for the compounded Burr law.

For a Burr base the survival-weighted moment

    M(r, k) = integral of y^r * Fbar(y)^k * f(y) dy
            = alpha * gamma^r * G(alpha*(k+1) - r/c) * G(r/c + 1) / G(alpha*(k+1) + 1)

exists iff alpha*(k+1) > r/c (G is the Gamma function). Expanding the
compounded density in powers of the base survival gives the coefficient
array

    a[j, k] = (1/j!) * C(j, k) * (-1)^(j-k) * lam^j,     0 <= k <= j,

and the r-th compounded moment as the double series

    E[Y^r] = sum_j sum_k a[j, k] * (M(r, k) + lam * M(r, k+1)).

Summing over j first collapses the coefficients to shifted-Poisson weights,
sum_{j>=k} a[j, k] = exp(-lam) * lam^k / k!, so the series is evaluated here
as a single sum in k. The two orderings are identical (the double series is
absolutely convergent, with sum_k |a[j, k]| = (2*lam)^j / j!), but the
single-sum form has no sign cancellation for lam > 0 and therefore stays
accurate for the large shift rates seen in fitted networks.

The mean residual life uses the truncated analogue

    M(1, k; t) = (1/Fbar(t)) * integral_0^inf y * Fbar(y+t)^k * f(y+t) dy,

evaluated exactly through the regularized incomplete beta function, and

    mrl(t) = exp(lam * F(t)) * sum_k w_k * (M(1, k; t) + lam * M(1, k+1; t)).
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import betainc, betaincc, betaln, gammaln

from .errors import MomentNonexistenceError, SeriesTruncationError, TailExhaustedError
from .utils import check_lambda


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for the moment series.

    The sum stops once ``stall`` consecutive terms fall below
    ``abs_tol / 10`` in magnitude; ``max_terms`` caps the number of terms.
    """

    max_terms: int = 200
    abs_tol: float = 1e-9
    stall: int = 3


@dataclass(frozen=True)
class SeriesResult:
    """A truncated series value with its estimated remainder."""

    value: float
    remainder: float
    terms: int

    def __float__(self):
        return self.value


def series_coefficients(j, lam):
    """Coefficient row a[j, 0..j] of the survival-power expansion."""
    j = int(j)
    if j < 0:
        raise ValueError("j must be nonnegative")
    k = np.arange(j + 1)
    log_binom = gammaln(j + 1.0) - gammaln(k + 1.0) - gammaln(j - k + 1.0)
    signs = np.where((j - k) % 2 == 0, 1.0, -1.0)
    if lam == 0.0:
        row = np.zeros(j + 1)
        row[j] = 0.0
        if j == 0:
            row[0] = 1.0
        return row
    sign_lam = np.sign(lam) ** j
    return sign_lam * signs * np.exp(
        log_binom - gammaln(j + 1.0) + j * np.log(abs(lam))
    )


def shifted_poisson_weight(k, lam):
    """Collapsed column weight sum_{j>=k} a[j, k] = exp(-lam) * lam^k / k!."""
    k = np.asarray(k, dtype=float)
    if lam == 0.0:
        return np.where(k == 0, 1.0, 0.0)
    sign = np.where(np.mod(k, 2) == 0, 1.0, np.sign(lam) ** 1) ** 0  # placeholder
    sign = np.sign(lam) ** k if lam < 0 else np.ones_like(k)
    return sign * np.exp(-lam + k * np.log(abs(lam)) - gammaln(k + 1.0))


def pwm_burr(gamma, alpha, c, r, k=0):
    """Survival-weighted Burr moment M(r, k); closed form via log-Gamma.

    Raises
    ------
    MomentNonexistenceError
        If alpha*(k+1) <= r/c, where the Gamma factor has a pole.
    """
    r = float(r)
    k = float(k)
    if r < 0 or k < 0:
        raise MomentNonexistenceError("orders r and k must be nonnegative")
    a_eff = alpha * (k + 1.0)
    if a_eff <= r / c:
        raise MomentNonexistenceError(
            f"moment M({r:g}, {k:g}) does not exist: requires "
            f"alpha*(k+1) > r/c but {a_eff:g} <= {r / c:g}",
            inequality="alpha*(k+1) > r/c",
        )
    log_val = (
        np.log(alpha)
        + r * np.log(gamma)
        + gammaln(a_eff - r / c)
        + gammaln(r / c + 1.0)
        - gammaln(a_eff + 1.0)
    )
    return float(np.exp(log_val))


def _sum_weighted(term, lam, ctrl):
    """Sum term(k) * w_k with the truncation policy; returns SeriesResult."""
    total = 0.0
    below = 0
    last = 0.0
    for k in range(ctrl.max_terms):
        w = float(shifted_poisson_weight(k, lam))
        t = w * term(k)
        total += t
        last = abs(t)
        below = below + 1 if last < ctrl.abs_tol / 10.0 else 0
        if below >= ctrl.stall:
            return SeriesResult(total, 10.0 * last, k + 1)
    raise SeriesTruncationError(
        f"series did not converge within {ctrl.max_terms} terms "
        f"(last term {last:.3e})",
        partial_sum=total,
        last_term=last,
        terms=ctrl.max_terms,
    )


def cburr_moment(gamma, alpha, c, lam, r, ctrl=None):
    """r-th raw moment of the compounded Burr distribution.

    Exists iff the Burr r-th moment exists, i.e. alpha > r/c. Returns a
    :class:`SeriesResult`; use ``float(...)`` for the bare value.
    """
    ctrl = ctrl or SeriesControl()
    lam = check_lambda(lam, "paper-compat")
    if alpha <= r / c:
        raise MomentNonexistenceError(
            f"moment of order {r:g} does not exist: requires alpha > r/c "
            f"but {alpha:g} <= {r / c:g}",
            inequality="alpha > r/c",
        )

    def term(k):
        return pwm_burr(gamma, alpha, c, r, k) + lam * pwm_burr(gamma, alpha, c, r, k + 1)

    return _sum_weighted(term, lam, ctrl)


def _pwm_burr_truncated(gamma, alpha, c, k, t, log_tbar_t):
    """M(1, k; t): first-order survival-weighted moment of the residual life.

    ``log_tbar_t`` is log(1 + (t/gamma)^c). Evaluated as

        (1/Fbar(t)) * [alpha*gamma * B(1/c + 1, alpha*(k+1) - 1/c)
                        * Ibar(x_t) ] - t * Fbar(t)^k / (k+1)

    where Ibar is the complement of the regularized incomplete beta at
    x_t = v/(1+v), v = (t/gamma)^c.
    """
    a = 1.0 / c + 1.0
    b = alpha * (k + 1.0) - 1.0 / c
    if b <= 0.0:
        raise MomentNonexistenceError(
            "truncated moment requires alpha*(k+1) > 1/c",
            inequality="alpha*(k+1) > 1/c",
        )
    # x_t = v/(1+v) = 1 - exp(-log T_t)
    x_t = -np.expm1(-log_tbar_t)
    tail_reg = betaincc(a, b, x_t) if x_t > 0 else 1.0
    log_sf_t = -alpha * log_tbar_t  # log Fbar(t)
    if tail_reg <= 0.0:
        head = 0.0
    else:
        head = np.exp(
            np.log(alpha * gamma)
            + betaln(a, b)
            + np.log(tail_reg)
            - log_sf_t
        )
    correction = t * np.exp(k * log_sf_t) / (k + 1.0)
    return head - correction


def cburr_mrl(gamma, alpha, c, lam, t, ctrl=None):
    """Mean residual life E[Y - t | Y > t] of the compounded Burr law.

    Requires the first moment (alpha > 1/c), t > 0 and a survival value
    above underflow at t.
    """
    ctrl = ctrl or SeriesControl()
    lam = check_lambda(lam, "paper-compat")
    t = float(t)
    if t <= 0.0:
        raise ValueError("t must be positive; the mean residual life at 0 is the mean")
    if alpha <= 1.0 / c:
        raise MomentNonexistenceError(
            f"mean residual life requires alpha > 1/c but {alpha:g} <= {1.0 / c:g}",
            inequality="alpha > 1/c",
        )
    log_tbar_t = np.logaddexp(0.0, c * (np.log(t) - np.log(gamma)))
    cdf_t = -np.expm1(-alpha * log_tbar_t)
    log_gbar_t = -alpha * log_tbar_t - lam * cdf_t
    if log_gbar_t < np.log(1e-300):
        raise TailExhaustedError(f"survival underflowed at t={t:g}")

    def term(k):
        return _pwm_burr_truncated(
            gamma, alpha, c, k, t, log_tbar_t
        ) + lam * _pwm_burr_truncated(gamma, alpha, c, k + 1, t, log_tbar_t)

    inner = _sum_weighted(term, lam, ctrl)
    scale = np.exp(lam * cdf_t)
    return SeriesResult(scale * inner.value, scale * inner.remainder, inner.terms)


def cburr_mean(gamma, alpha, c, lam, ctrl=None):
    """Mean of the compounded Burr distribution."""
    return cburr_moment(gamma, alpha, c, lam, 1, ctrl)


def cburr_variance(gamma, alpha, c, lam, ctrl=None):
    """Variance of the compounded Burr distribution."""
    m1 = cburr_moment(gamma, alpha, c, lam, 1, ctrl).value
    m2 = cburr_moment(gamma, alpha, c, lam, 2, ctrl).value
    return m2 - m1 * m1
