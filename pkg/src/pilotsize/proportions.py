"""Binomial proportion intervals and sample sizes.

Three families:

* central designs (expected proportion between roughly 10% and 90%) -- exact
  Clopper-Pearson intervals from F/beta percentiles, plus the Gaussian
  approximation with continuity correction;
* rare-event designs (p below 10% or above 90%) -- relative precision
  delta = k*p, exact or through the binomial->Poisson->Gaussian chain;
* one-sided designs -- zero-acceptance experiments, the chi-square "rule of
  three" approximation, and the exact one-sided bound.

Design criterion: a size satisfies a requested precision delta when the
half-width of the interval, after clipping to [0, 1], is at most delta.
Exact designs evaluate the Clopper-Pearson formula at the expected success
count r = p*N, which need not be an integer (the F percentiles accept
real-valued degrees of freedom); this makes the achieved width a smooth,
monotone function of N.

Validity flags are returned as data, never logged, so table rendering can
mark cells where an approximation chain does not hold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .distributions import _inc_beta_inv, chi2_quantile, normal_quantile
from .intervals import ConfidenceInterval, DesignResult, Sidedness, least_satisfying

__all__ = [
    "BinomialObservation",
    "OneSidedBound",
    "clopper_pearson_bounds",
    "clopper_pearson_ci",
    "wald_ci",
    "proportion_sample_size_normal",
    "proportion_sample_size_exact",
    "rare_proportion_sample_size_poisson",
    "rare_proportion_sample_size_exact",
    "zero_event_ci",
    "rule_of_three_upper_bound",
    "zero_acceptance_sample_size",
    "rule_of_three_sample_size",
    "one_sided_exact_sample_size",
]


@dataclass(frozen=True)
class BinomialObservation:
    """r successes out of n trials."""

    successes: int
    trials: int

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError(f"need at least one trial, got {self.trials}")
        if not 0 <= self.successes <= self.trials:
            raise ValueError(
                f"successes must be within [0, {self.trials}], got {self.successes}")


@dataclass(frozen=True)
class OneSidedBound:
    """A one-sided target: upper bound p_U on a low proportion, or lower
    bound p_L on a high one."""

    direction: Literal["upper", "lower"]
    bound: float
    alpha: float

    def __post_init__(self) -> None:
        if self.direction not in ("upper", "lower"):
            raise ValueError(f"direction must be 'upper' or 'lower', got {self.direction}")
        if not 0.0 < self.bound < 1.0:
            raise ValueError(f"bound must be in (0, 1), got {self.bound}")
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must be in (0, 1), got {self.alpha}")

    @property
    def miss_rate(self) -> float:
        """The rare-event rate being bounded: p_U itself, or 1 - p_L."""
        return self.bound if self.direction == "upper" else 1.0 - self.bound


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")


def _ceil(v: float) -> int:
    # guard against float fuzz pushing an exact integer up a step
    return math.ceil(v - 1e-9)


# ---------------------------------------------------------------------------
# Clopper-Pearson
# ---------------------------------------------------------------------------

def clopper_pearson_bounds(r: float, n: float, alpha: float,
                           sidedness: Sidedness = Sidedness.TWO_SIDED) -> tuple[float, float]:
    """Exact binomial confidence bounds at success count r out of n.

    r may be non-integral (an expected count p*N): the underlying beta/F
    percentiles are defined for real degrees of freedom and reduce to the
    classical Clopper-Pearson interval at integer r.  Endpoints are closed
    form: the lower bound is 0 at r = 0 and the upper bound is 1 at r = n.
    """
    if not n > 0:
        raise ValueError(f"need n > 0, got {n}")
    if not 0 <= r <= n:
        raise ValueError(f"success count must be within [0, {n}], got {r}")
    _check_alpha(alpha)
    tail = alpha / 2.0 if sidedness is Sidedness.TWO_SIDED else alpha
    if sidedness is Sidedness.LOWER_ONLY:
        lower = 0.0 if r <= 0 else _inc_beta_inv(tail, r, n - r + 1.0)
        return lower, 1.0
    upper = 1.0 if r >= n else _inc_beta_inv(1.0 - tail, r + 1.0, n - r)
    if sidedness is Sidedness.UPPER_ONLY:
        return 0.0, upper
    lower = 0.0 if r <= 0 else _inc_beta_inv(tail, r, n - r + 1.0)
    return lower, upper


def clopper_pearson_ci(obs: BinomialObservation, alpha: float,
                       sidedness: Sidedness = Sidedness.TWO_SIDED) -> ConfidenceInterval:
    """Exact binomial CI for an observed count."""
    lower, upper = clopper_pearson_bounds(obs.successes, obs.trials, alpha, sidedness)
    return ConfidenceInterval(lower, upper, 1.0 - alpha, sidedness)


def wald_ci(p_hat: float, n: int, alpha: float) -> tuple[ConfidenceInterval, bool]:
    """Gaussian-approximation CI, clipped to [0, 1], with its validity flag.

    The approximation is considered valid when N*p > 5 and N*(1-p) > 5.
    """
    if not 0.0 <= p_hat <= 1.0:
        raise ValueError(f"observed proportion must be in [0, 1], got {p_hat}")
    if n < 1:
        raise ValueError(f"need at least one trial, got {n}")
    _check_alpha(alpha)
    half = normal_quantile(1.0 - alpha / 2.0) * math.sqrt(p_hat * (1.0 - p_hat) / n)
    ci = ConfidenceInterval(max(0.0, p_hat - half), min(1.0, p_hat + half), 1.0 - alpha)
    valid = n * p_hat > 5.0 and n * (1.0 - p_hat) > 5.0
    return ci, valid


# ---------------------------------------------------------------------------
# Two-sided designs
# ---------------------------------------------------------------------------

def _clipped_half_width(lower_raw: float, upper_raw: float) -> float:
    return (min(1.0, upper_raw) - max(0.0, lower_raw)) / 2.0


def _gaussian_cc_half_width(p: float, n: int, z: float) -> float:
    h = z * math.sqrt(p * (1.0 - p) / n) + 0.5 / n
    return _clipped_half_width(p - h, p + h)


def proportion_sample_size_normal(p: float, delta: float, alpha: float,
                                  continuity_correction: bool = True) -> DesignResult:
    """Gaussian-approximation sample size for absolute precision delta.

    Without continuity correction this is the closed form
    ceil(z^2 p (1-p) / delta^2).  With it, the smallest N is searched such
    that the corrected interval p -/+ (z sqrt(p(1-p)/N) + 1/(2N)), clipped to
    [0, 1], has half-width at most delta.  The validity flag reports whether
    Np > 5 and N(1-p) > 5 hold at the returned N.
    """
    _check_target(p, delta)
    _check_alpha(alpha)
    z = normal_quantile(1.0 - alpha / 2.0)
    warnings = _target_warnings(p, delta)
    if continuity_correction:
        n = least_satisfying(lambda m: _gaussian_cc_half_width(p, m, z) <= delta, lo=1)
        achieved = _gaussian_cc_half_width(p, n, z)
        method = "gaussian_cc"
    else:
        n = max(1, _ceil(z * z * p * (1.0 - p) / (delta * delta)))
        achieved = z * math.sqrt(p * (1.0 - p) / n)
        method = "gaussian"
    valid = n * p > 5.0 and n * (1.0 - p) > 5.0
    return DesignResult(size=n, achieved=achieved, method=method, valid=valid,
                        warnings=warnings)


def _exact_half_width(p: float, n: int, alpha: float) -> float:
    lower, upper = clopper_pearson_bounds(p * n, n, alpha)
    return (upper - lower) / 2.0


def _check_target(p: float, delta: float) -> None:
    if not 0.0 < p < 1.0:
        raise ValueError(f"expected proportion must be in (0, 1), got {p}")
    if not delta > 0.0:
        raise ValueError(f"delta must be positive, got {delta}")


def _target_warnings(p: float, delta: float) -> tuple[str, ...]:
    if delta >= min(p, 1.0 - p):
        return ("requested precision is not smaller than the expected proportion; "
                "the interval is clipped at the domain boundary",)
    return ()


def proportion_sample_size_exact(p: float, delta: float, alpha: float) -> DesignResult:
    """Exact-binomial sample size for absolute precision delta.

    Smallest N whose Clopper-Pearson interval at the expected count r = p*N
    has half-width at most delta.  The search double-checks satisfaction at
    N+1 before accepting, guarding against any local non-monotonicity.
    """
    _check_target(p, delta)
    _check_alpha(alpha)

    def sat(m: int) -> bool:
        return _exact_half_width(p, m, alpha) <= delta

    n = least_satisfying(sat, lo=2)
    while not sat(n + 1):  # pragma: no cover - smooth criterion in practice
        n += 1
        while not sat(n):
            n += 1
    return DesignResult(size=n, achieved=_exact_half_width(p, n, alpha),
                        method="clopper_pearson", warnings=_target_warnings(p, delta))


# ---------------------------------------------------------------------------
# Rare proportions (p < 10% or p > 90%), relative precision delta = k*p
# ---------------------------------------------------------------------------

def _rare_rate(p: float) -> float:
    if not 0.0 < p < 1.0:
        raise ValueError(f"expected proportion must be in (0, 1), got {p}")
    return min(p, 1.0 - p)


def rare_proportion_sample_size_poisson(p: float, k: float, alpha: float) -> DesignResult:
    """Sample size from the binomial -> Poisson -> Gaussian chain.

    Closed form N = ceil((z / (k sqrt(p)))^2) applied to the rare side
    min(p, 1-p).  The validity flag reports whether the chain's conditions
    N >= 20, p <= 5% and Np >= 30 all hold at the returned N.
    """
    if not 0.0 < k <= 1.0:
        raise ValueError(f"relative precision k must be in (0, 1], got {k}")
    _check_alpha(alpha)
    rate = _rare_rate(p)
    z = normal_quantile(1.0 - alpha / 2.0)
    n = _ceil((z / (k * math.sqrt(rate))) ** 2)
    valid = n >= 20 and rate <= 0.05 and n * rate >= 30.0
    return DesignResult(size=n, achieved=z * math.sqrt(rate / n) / rate,
                        method="poisson_gaussian", valid=valid)


def rare_proportion_sample_size_exact(p: float, k: float, alpha: float) -> DesignResult:
    """Exact-binomial sample size for relative precision delta = k*p,
    designed on the rare side min(p, 1-p)."""
    if not 0.0 < k <= 1.0:
        raise ValueError(f"relative precision k must be in (0, 1], got {k}")
    rate = _rare_rate(p)
    result = proportion_sample_size_exact(rate, k * rate, alpha)
    return DesignResult(size=result.size, achieved=result.achieved,
                        method=result.method, valid=result.valid)


# ---------------------------------------------------------------------------
# One-sided designs
# ---------------------------------------------------------------------------

def zero_event_ci(n: int, alpha: float) -> ConfidenceInterval:
    """Upper-only CI after observing zero events in n trials: [0, 1 - alpha^(1/n)].

    This closed form equals the one-sided Clopper-Pearson upper bound at
    r = 0.  (The chi-square approximation in `rule_of_three_upper_bound`
    gives a slightly different, larger bound.)
    """
    if n < 1:
        raise ValueError(f"need at least one trial, got {n}")
    _check_alpha(alpha)
    return ConfidenceInterval(0.0, 1.0 - alpha ** (1.0 / n), 1.0 - alpha,
                              Sidedness.UPPER_ONLY)


def rule_of_three_upper_bound(n: int, alpha: float) -> float:
    """Chi-square approximation to the zero-event upper bound:
    chi2[1-alpha; 2] / (2N).  At alpha = 0.05 this is the rule of three,
    2.9957 / N."""
    if n < 1:
        raise ValueError(f"need at least one trial, got {n}")
    _check_alpha(alpha)
    return chi2_quantile(1.0 - alpha, 2.0) / (2.0 * n)


def zero_acceptance_sample_size(bound: OneSidedBound) -> int:
    """Trials needed so that zero observed events certify the bound:
    N >= log(alpha) / log(1 - p_U), with the log(p_L) dual for high
    proportions."""
    return _ceil(math.log(bound.alpha) / math.log1p(-bound.miss_rate))


def rule_of_three_sample_size(bound: OneSidedBound) -> int:
    """Chi-square approximation to the zero-acceptance size:
    N >= chi2[1-alpha; 2] / (2 p_U)."""
    return _ceil(chi2_quantile(1.0 - bound.alpha, 2.0) / (2.0 * bound.miss_rate))


def one_sided_exact_sample_size(bound: OneSidedBound) -> int:
    """Smallest N whose zero-event one-sided Clopper-Pearson bound meets the
    target (upper bound <= p_U, or lower bound >= p_L)."""
    alpha = bound.alpha

    if bound.direction == "upper":
        def sat(m: int) -> bool:
            _, upper = clopper_pearson_bounds(0, m, alpha, Sidedness.UPPER_ONLY)
            return upper <= bound.bound
    else:
        def sat(m: int) -> bool:
            lower, _ = clopper_pearson_bounds(m, m, alpha, Sidedness.LOWER_ONLY)
            return lower >= bound.bound

    return least_satisfying(sat, lo=1)
