"""Confidence intervals, achieved precisions and minimal sample sizes for
standard deviation, mean (and paired difference), Pearson correlation and
exponential mean lifetime.

Precision conventions:

* standard deviation -- delta = sqrt((N-1)/chi2[alpha/2, N-1]) - 1, the
  relative distance of the upper confidence limit from the sample value.
* mean -- delta = t[1-alpha/2, N-1] / sqrt(N), a fraction of the sample
  standard deviation.  Paired differences reuse the same machinery on the
  per-pair difference variable.
* correlation -- delta is the total width of the tanh-transformed interval.
* lifetime -- relative width k bounds 2E(1/chi2[alpha/2, 2E] -
  1/chi2[1-alpha/2, 2E]).

Sample-size searches bracket by doubling, binary-search down, and verify
minimality at the returned size.  All operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .distributions import chi2_quantile, normal_quantile, t_quantile

__all__ = [
    "Sidedness",
    "ConfidenceInterval",
    "DesignResult",
    "least_satisfying",
    "stddev_precision",
    "stddev_sample_size",
    "stddev_ci",
    "mean_precision",
    "mean_sample_size",
    "mean_ci",
    "correlation_ci",
    "correlation_width",
    "correlation_sample_size",
    "lifetime_ci",
    "lifetime_required_events",
    "lifetime_sample_size",
    "hazard_rate_ci",
]


class Sidedness(str, Enum):
    TWO_SIDED = "two_sided"
    UPPER_ONLY = "upper_only"
    LOWER_ONLY = "lower_only"


@dataclass(frozen=True)
class ConfidenceInterval:
    """Interval [lower, upper] holding the estimand with probability `level`."""

    lower: float
    upper: float
    level: float
    sidedness: Sidedness = Sidedness.TWO_SIDED

    def __post_init__(self) -> None:
        if not self.lower <= self.upper:
            raise ValueError(f"interval bounds out of order: [{self.lower}, {self.upper}]")
        if not 0.0 < self.level < 1.0:
            raise ValueError(f"confidence level must be in (0, 1), got {self.level}")

    def scaled(self, factor: float) -> "ConfidenceInterval":
        return ConfidenceInterval(self.lower * factor, self.upper * factor,
                                  self.level, self.sidedness)


@dataclass(frozen=True)
class DesignResult:
    """Minimal size (or event count) with the precision achieved there."""

    size: int
    achieved: float
    method: str
    valid: bool = True
    warnings: tuple[str, ...] = ()


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")


def least_satisfying(pred: Callable[[int], bool], lo: int, hi_cap: int = 10**9) -> int:
    """Smallest integer n >= lo with pred(n) true.

    Assumes pred is eventually true and monotone; brackets by doubling, then
    binary-searches.  Minimality (pred false at n-1) is re-checked so that a
    non-monotone pred cannot slip through silently.
    """
    hi = lo
    while not pred(hi):
        hi *= 2
        if hi > hi_cap:
            raise ArithmeticError(f"no satisfying size found below {hi_cap}")
    lo_s = lo if hi == lo else hi // 2
    while lo_s < hi:
        mid = (lo_s + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo_s = mid + 1
    n = hi
    while n > lo and pred(n - 1):
        n -= 1
    return n


# ---------------------------------------------------------------------------
# Standard deviation
# ---------------------------------------------------------------------------

def stddev_precision(n: int, alpha: float) -> float:
    """Relative precision of a standard-deviation estimate from n samples."""
    if n < 2:
        raise ValueError(f"standard-deviation designs need n >= 2, got {n}")
    _check_alpha(alpha)
    return math.sqrt((n - 1) / chi2_quantile(alpha / 2.0, float(n - 1))) - 1.0


def stddev_sample_size(delta: float, alpha: float) -> DesignResult:
    """Smallest N whose standard-deviation precision is at most delta."""
    if not delta > 0.0:
        raise ValueError(f"delta must be positive, got {delta}")
    _check_alpha(alpha)
    n = least_satisfying(lambda m: stddev_precision(m, alpha) <= delta, lo=2)
    return DesignResult(size=n, achieved=stddev_precision(n, alpha), method="chi2")


def stddev_ci(s: float, n: int, alpha: float) -> ConfidenceInterval:
    """Confidence interval for the true standard deviation given sample s."""
    if not s > 0.0:
        raise ValueError(f"sample standard deviation must be positive, got {s}")
    if n < 2:
        raise ValueError(f"standard-deviation CI needs n >= 2, got {n}")
    _check_alpha(alpha)
    df = float(n - 1)
    lower = s * math.sqrt((n - 1) / chi2_quantile(1.0 - alpha / 2.0, df))
    upper = s * math.sqrt((n - 1) / chi2_quantile(alpha / 2.0, df))
    return ConfidenceInterval(lower, upper, 1.0 - alpha)


# ---------------------------------------------------------------------------
# Mean and paired difference
# ---------------------------------------------------------------------------

def mean_precision(n: int, alpha: float) -> float:
    """Half-width of the mean CI as a fraction of the sample SD."""
    if n < 2:
        raise ValueError(f"mean designs need n >= 2, got {n}")
    _check_alpha(alpha)
    return t_quantile(1.0 - alpha / 2.0, float(n - 1)) / math.sqrt(n)


def mean_sample_size(delta: float, alpha: float) -> DesignResult:
    """Smallest N whose mean precision is at most delta."""
    if not delta > 0.0:
        raise ValueError(f"delta must be positive, got {delta}")
    _check_alpha(alpha)
    n = least_satisfying(lambda m: mean_precision(m, alpha) <= delta, lo=2)
    return DesignResult(size=n, achieved=mean_precision(n, alpha), method="student_t")


def mean_ci(mu_hat: float, s: float, n: int, alpha: float) -> ConfidenceInterval:
    """Symmetric CI for the true mean (or paired mean difference)."""
    if s < 0.0:
        raise ValueError(f"sample standard deviation must be >= 0, got {s}")
    half = s * mean_precision(n, alpha)
    return ConfidenceInterval(mu_hat - half, mu_hat + half, 1.0 - alpha)


# ---------------------------------------------------------------------------
# Pearson correlation (Fisher z)
# ---------------------------------------------------------------------------

def _check_corr(r: float, n: int) -> None:
    if not -1.0 < r < 1.0:
        raise ValueError(f"correlation must be in (-1, 1), got {r}")
    if n < 4:
        raise ValueError(f"correlation designs need n >= 4, got {n}")


def correlation_ci(r: float, n: int, alpha: float) -> ConfidenceInterval:
    """CI for the true correlation; symmetric in z-space, not in r-space."""
    _check_corr(r, n)
    _check_alpha(alpha)
    h = normal_quantile(1.0 - alpha / 2.0) / math.sqrt(n - 3)
    zr = math.atanh(r)
    return ConfidenceInterval(math.tanh(zr - h), math.tanh(zr + h), 1.0 - alpha)


def correlation_width(rho: float, n: int, alpha: float) -> float:
    """Total CI width expected when the observed correlation is rho."""
    ci = correlation_ci(rho, n, alpha)
    return ci.upper - ci.lower


def correlation_sample_size(rho: float, delta: float, alpha: float) -> DesignResult:
    """Smallest N whose correlation CI width is at most delta."""
    if not 0.0 < delta < 2.0:
        raise ValueError(f"width target must be in (0, 2), got {delta}")
    _check_corr(rho, 4)
    _check_alpha(alpha)
    n = least_satisfying(lambda m: correlation_width(rho, m, alpha) <= delta, lo=4)
    return DesignResult(size=n, achieved=correlation_width(rho, n, alpha), method="fisher_z")


# ---------------------------------------------------------------------------
# Exponential mean lifetime (Type II censoring)
# ---------------------------------------------------------------------------

def lifetime_ci(theta_hat: float, events: int, alpha: float) -> ConfidenceInterval:
    """CI for the true mean lifetime after observing `events` events."""
    if not theta_hat > 0.0:
        raise ValueError(f"observed mean lifetime must be positive, got {theta_hat}")
    if events < 1:
        raise ValueError(f"need at least one event, got {events}")
    _check_alpha(alpha)
    df = 2.0 * events
    lower = df * theta_hat / chi2_quantile(1.0 - alpha / 2.0, df)
    upper = df * theta_hat / chi2_quantile(alpha / 2.0, df)
    return ConfidenceInterval(lower, upper, 1.0 - alpha)


def _lifetime_relative_width(events: int, alpha: float) -> float:
    df = 2.0 * events
    return df * (1.0 / chi2_quantile(alpha / 2.0, df)
                 - 1.0 / chi2_quantile(1.0 - alpha / 2.0, df))


def lifetime_required_events(k: float, alpha: float) -> DesignResult:
    """Smallest event count E whose lifetime CI width is at most k*theta_hat.

    The boundary uses a non-strict inequality (width <= k); no closed form
    exists, so the count is found numerically.
    """
    if not k > 0.0:
        raise ValueError(f"relative precision k must be positive, got {k}")
    _check_alpha(alpha)
    e = least_satisfying(lambda m: _lifetime_relative_width(m, alpha) <= k, lo=1)
    return DesignResult(size=e, achieved=_lifetime_relative_width(e, alpha), method="chi2")


def lifetime_sample_size(events: int, censored_fraction: float) -> int:
    """Animals needed so the experiment can stop after `events` events."""
    if events < 1:
        raise ValueError(f"need at least one event, got {events}")
    if not 0.0 <= censored_fraction < 1.0:
        raise ValueError(f"censored fraction must be in [0, 1), got {censored_fraction}")
    return math.ceil(events / (1.0 - censored_fraction))


def hazard_rate_ci(lifetime: ConfidenceInterval) -> ConfidenceInterval:
    """Per-unit-time event probability interval: the reciprocal lifetime CI."""
    if not lifetime.lower > 0.0:
        raise ValueError("lifetime CI must have a positive lower bound")
    return ConfidenceInterval(1.0 / lifetime.upper, 1.0 / lifetime.lower,
                              lifetime.level, lifetime.sidedness)
