"""Precision-driven experiment design: sample sizes, achieved precisions and
confidence intervals for pilot studies of a standard deviation, mean, paired
difference, proportion, correlation or exponential mean lifetime."""

from .distributions import (
    chi2_cdf,
    chi2_quantile,
    f_cdf,
    f_quantile,
    ln_gamma,
    normal_cdf,
    normal_quantile,
    reg_inc_beta,
    reg_inc_gamma_P,
    t_cdf,
    t_quantile,
)
from .intervals import (
    ConfidenceInterval,
    DesignResult,
    Sidedness,
    correlation_ci,
    correlation_sample_size,
    correlation_width,
    hazard_rate_ci,
    lifetime_ci,
    lifetime_required_events,
    lifetime_sample_size,
    mean_ci,
    mean_precision,
    mean_sample_size,
    stddev_ci,
    stddev_precision,
    stddev_sample_size,
)
from .proportions import (
    BinomialObservation,
    OneSidedBound,
    clopper_pearson_bounds,
    clopper_pearson_ci,
    one_sided_exact_sample_size,
    proportion_sample_size_exact,
    proportion_sample_size_normal,
    rare_proportion_sample_size_exact,
    rare_proportion_sample_size_poisson,
    rule_of_three_sample_size,
    rule_of_three_upper_bound,
    wald_ci,
    zero_acceptance_sample_size,
    zero_event_ci,
)
from .tables import TableSpec, diff_against_golden, generate, render

__version__ = "0.1.0"

__all__ = [
    "ln_gamma", "reg_inc_gamma_P", "reg_inc_beta",
    "normal_cdf", "normal_quantile", "chi2_cdf", "chi2_quantile",
    "t_cdf", "t_quantile", "f_cdf", "f_quantile",
    "ConfidenceInterval", "DesignResult", "Sidedness",
    "stddev_precision", "stddev_sample_size", "stddev_ci",
    "mean_precision", "mean_sample_size", "mean_ci",
    "correlation_ci", "correlation_width", "correlation_sample_size",
    "lifetime_ci", "lifetime_required_events", "lifetime_sample_size",
    "hazard_rate_ci",
    "BinomialObservation", "OneSidedBound",
    "clopper_pearson_bounds", "clopper_pearson_ci", "wald_ci",
    "proportion_sample_size_normal", "proportion_sample_size_exact",
    "rare_proportion_sample_size_poisson", "rare_proportion_sample_size_exact",
    "zero_event_ci", "rule_of_three_upper_bound",
    "zero_acceptance_sample_size", "rule_of_three_sample_size",
    "one_sided_exact_sample_size",
    "TableSpec", "generate", "render", "diff_against_golden",
]
