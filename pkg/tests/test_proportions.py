"""Proportion tests: exact interval pins, formula cross-checks, one-sided
designs, coverage conservatism, and design-search properties."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pilotsize import proportions as pr
from pilotsize.distributions import f_quantile
from pilotsize.intervals import Sidedness

ALPHAS = (0.10, 0.05, 0.01)


def f_formula_bounds(r: float, n: float, alpha: float) -> tuple[float, float]:
    """The two-sided exact bounds written with F percentiles, as an
    independent assembly of the same interval."""
    q = 1.0 - alpha / 2.0
    if r <= 0:
        lower = 0.0
    else:
        f = f_quantile(q, 2.0 * (n - r + 1.0), 2.0 * r)
        lower = r / (r + (n - r + 1.0) * f)
    if r >= n:
        upper = 1.0
    else:
        f = f_quantile(q, 2.0 * (r + 1.0), 2.0 * (n - r))
        upper = (r + 1.0) * f / ((n - r) + (r + 1.0) * f)
    return lower, upper


class TestClopperPearson:
    def test_worked_examples(self):
        ci = pr.clopper_pearson_ci(pr.BinomialObservation(3, 20), 0.05)
        assert round(ci.lower * 100, 1) == 3.2
        assert round(ci.upper * 100, 1) == 37.9
        ci = pr.clopper_pearson_ci(pr.BinomialObservation(1, 5), 0.05)
        assert round(ci.lower * 100, 1) == 0.5
        assert round(ci.upper * 100, 1) == 71.6

    def test_one_sided_zero_events(self):
        # the exact upper bound with no events is 1 - alpha^(1/n)
        ci = pr.clopper_pearson_ci(pr.BinomialObservation(0, 10), 0.05,
                                   Sidedness.UPPER_ONLY)
        assert ci.lower == 0.0
        assert ci.upper == pytest.approx(1.0 - 0.05 ** 0.1, abs=1e-12)
        assert ci.upper == pytest.approx(0.2589, abs=5e-5)

    def test_rule_of_three_bound_reproduces_published_value(self):
        # the chi-square approximation gives the larger 29.96% bound often
        # quoted for ten disease-control sentinels
        assert pr.rule_of_three_upper_bound(10, 0.05) == pytest.approx(0.2996, abs=5e-5)

    def test_matches_f_percentile_formula(self):
        for r, n in [(0, 7), (1, 5), (3, 20), (7, 7), (2.5, 25), (0.5, 5), (13.5, 30)]:
            for alpha in ALPHAS:
                mine = pr.clopper_pearson_bounds(r, n, alpha)
                ref = f_formula_bounds(r, n, alpha)
                assert mine[0] == pytest.approx(ref[0], abs=1e-9)
                assert mine[1] == pytest.approx(ref[1], abs=1e-9)

    def test_endpoint_closure(self):
        lo, hi = pr.clopper_pearson_bounds(0, 12, 0.05)
        assert lo == 0.0 and hi < 1.0
        lo, hi = pr.clopper_pearson_bounds(12, 12, 0.05)
        assert lo > 0.0 and hi == 1.0

    def test_one_sided_upper_decreasing_in_n(self):
        uppers = [pr.clopper_pearson_bounds(0, n, 0.05, Sidedness.UPPER_ONLY)[1]
                  for n in range(1, 40)]
        assert all(a > b for a, b in zip(uppers, uppers[1:]))

    def test_complement_symmetry(self):
        for r, n in [(0, 9), (2, 11), (5, 13), (13, 17)]:
            lo, hi = pr.clopper_pearson_bounds(r, n, 0.05)
            lo_c, hi_c = pr.clopper_pearson_bounds(n - r, n, 0.05)
            assert lo == pytest.approx(1.0 - hi_c, abs=1e-9)
            assert hi == pytest.approx(1.0 - lo_c, abs=1e-9)

    def test_observation_validation(self):
        with pytest.raises(ValueError):
            pr.BinomialObservation(-1, 5)
        with pytest.raises(ValueError):
            pr.BinomialObservation(6, 5)


class TestWald:
    def test_half_width(self):
        ci, valid = pr.wald_ci(0.5, 100, 0.05)
        assert valid
        # 1.959964 * sqrt(0.25/100)
        assert ci.upper - 0.5 == pytest.approx(0.0979982, abs=1e-6)
        assert 0.5 - ci.lower == pytest.approx(0.0979982, abs=1e-6)

    def test_symmetric_at_half(self):
        ci, _ = pr.wald_ci(0.5, 40, 0.10)
        assert ci.lower == pytest.approx(1.0 - ci.upper, abs=1e-12)

    def test_validity_rule(self):
        _, valid = pr.wald_ci(0.1, 20, 0.05)
        assert not valid  # N*p = 2

    def test_width_close_to_exact_when_valid(self):
        for p_hat, n in [(0.5, 100), (0.3, 60), (0.2, 80), (0.7, 50)]:
            wald, valid = pr.wald_ci(p_hat, n, 0.05)
            assert valid
            lo, hi = pr.clopper_pearson_bounds(p_hat * n, n, 0.05)
            assert abs((wald.upper - wald.lower) - (hi - lo)) / (hi - lo) < 0.20


class TestCentralDesigns:
    @pytest.mark.parametrize("p,delta,alpha,expected", [
        (0.5, 0.05, 0.05, 404), (0.15, 0.05, 0.05, 216), (0.1, 0.01, 0.10, 2535),
    ])
    def test_normal_cc_pins(self, p, delta, alpha, expected):
        assert pr.proportion_sample_size_normal(p, delta, alpha).size == expected

    def test_closed_form_without_correction(self):
        result = pr.proportion_sample_size_normal(0.5, 0.05, 0.05,
                                                  continuity_correction=False)
        assert result.size == 385  # ceil(1.959964^2 * 0.25 / 0.0025)
        assert result.method == "gaussian"

    def test_clipping_when_delta_exceeds_p(self):
        # the corrected interval is clipped at zero, so the design relaxes
        result = pr.proportion_sample_size_normal(0.10, 0.15, 0.05)
        assert result.size == 14
        assert not result.valid
        assert result.warnings

    @pytest.mark.parametrize("p,delta,alpha,expected", [
        (0.15, 0.05, 0.05, 215), (0.5, 0.05, 0.05, 402), (0.5, 0.25, 0.01, 27),
    ])
    def test_exact_pins(self, p, delta, alpha, expected):
        result = pr.proportion_sample_size_exact(p, delta, alpha)
        assert abs(result.size - expected) <= 1
        assert result.size == expected  # the implemented convention lands exactly
        assert result.achieved <= delta

    def test_exact_half_width_monotone(self):
        widths = [pr._exact_half_width(0.15, n, 0.05) for n in range(5, 400, 7)]
        assert all(a > b for a, b in zip(widths, widths[1:]))

    @settings(max_examples=40, deadline=None)
    @given(p=st.floats(0.05, 0.95), delta=st.floats(0.01, 0.3),
           alpha=st.sampled_from(ALPHAS))
    def test_exact_design_minimality(self, p, delta, alpha):
        n = pr.proportion_sample_size_exact(p, delta, alpha).size
        assert pr._exact_half_width(p, n, alpha) <= delta
        assert n == 2 or pr._exact_half_width(p, n - 1, alpha) > delta


class TestRareDesigns:
    @pytest.mark.parametrize("p,k,alpha,expected,valid", [
        (0.01, 0.5, 0.05, 1537, False),
        (0.05, 0.10, 0.05, 7683, True),
        (0.025, 0.25, 0.01, 4247, True),
    ])
    def test_poisson_pins(self, p, k, alpha, expected, valid):
        result = pr.rare_proportion_sample_size_poisson(p, k, alpha)
        assert result.size == expected
        assert result.valid is valid

    @pytest.mark.parametrize("p,k,alpha,expected", [
        (0.01, 0.5, 0.05, 1741), (0.05, 0.10, 0.05, 7501), (0.01, 1.0, 0.10, 377),
    ])
    def test_exact_pins(self, p, k, alpha, expected):
        result = pr.rare_proportion_sample_size_exact(p, k, alpha)
        assert abs(result.size - expected) <= 1
        assert result.size == expected

    def test_high_proportion_designs_on_complement(self):
        low = pr.rare_proportion_sample_size_exact(0.05, 0.25, 0.05)
        high = pr.rare_proportion_sample_size_exact(0.95, 0.25, 0.05)
        assert low.size == high.size
        assert pr.rare_proportion_sample_size_poisson(0.99, 0.5, 0.05).size == \
            pr.rare_proportion_sample_size_poisson(0.01, 0.5, 0.05).size


class TestOneSided:
    def test_zero_event_ci(self):
        ci = pr.zero_event_ci(10, 0.05)
        assert ci.lower == 0.0
        assert ci.upper == pytest.approx(0.2589, abs=5e-5)
        assert ci.sidedness is Sidedness.UPPER_ONLY
        assert pr.zero_event_ci(1, 0.05).upper == pytest.approx(0.95, abs=1e-12)
        assert pr.zero_event_ci(299, 0.05).upper <= 0.01

    @pytest.mark.parametrize("direction,bound,alpha,expected", [
        ("upper", 0.01, 0.05, 299), ("upper", 0.05, 0.05, 59),
        ("lower", 0.99, 0.05, 299),
    ])
    def test_zero_acceptance_pins(self, direction, bound, alpha, expected):
        assert pr.zero_acceptance_sample_size(
            pr.OneSidedBound(direction, bound, alpha)) == expected

    @pytest.mark.parametrize("bound,alpha,expected", [
        (0.01, 0.05, 300), (0.05, 0.05, 60),
        # ceil(chi2[0.99; 2] / 0.05) = ceil(184.21)
        (0.025, 0.01, 185),
    ])
    def test_rule_of_three_pins(self, bound, alpha, expected):
        assert pr.rule_of_three_sample_size(
            pr.OneSidedBound("upper", bound, alpha)) == expected

    @pytest.mark.parametrize("bound,alpha,expected", [
        (0.01, 0.05, 299), (0.05, 0.01, 90), (0.5, 0.05, 5),
    ])
    def test_exact_pins(self, bound, alpha, expected):
        assert pr.one_sided_exact_sample_size(
            pr.OneSidedBound("upper", bound, alpha)) == expected

    def test_exact_matches_zero_acceptance(self):
        # the exact zero-event bound and the zero-acceptance criterion are the
        # same closed form, so their sizes agree everywhere
        for bound in (0.001, 0.005, 0.02, 0.07, 0.1):
            for alpha in ALPHAS:
                b = pr.OneSidedBound("upper", bound, alpha)
                assert pr.one_sided_exact_sample_size(b) == \
                    pr.zero_acceptance_sample_size(b)

    def test_high_proportion_dual(self):
        b = pr.OneSidedBound("lower", 0.99, 0.05)
        assert pr.one_sided_exact_sample_size(b) == 299
        assert pr.rule_of_three_sample_size(b) == 300

    def test_zero_acceptance_below_rule_of_three(self):
        for bound in (0.001, 0.002, 0.005, 0.01, 0.02, 0.05, 0.1):
            b = pr.OneSidedBound("upper", bound, 0.05)
            assert pr.zero_acceptance_sample_size(b) <= pr.rule_of_three_sample_size(b)


class TestCoverage:
    def test_exact_coverage_conservative_small_grid(self):
        # full enumeration over a reduced grid (the acceptance suite runs the
        # complete one): Clopper-Pearson is conservative by construction
        for n in range(1, 13):
            for p10 in range(1, 20, 2):
                p = p10 / 20.0
                for alpha in ALPHAS:
                    coverage = 0.0
                    for r in range(n + 1):
                        lo, hi = pr.clopper_pearson_bounds(r, n, alpha)
                        if lo <= p <= hi:
                            coverage += math.comb(n, r) * p ** r * (1.0 - p) ** (n - r)
                    assert coverage >= 1.0 - alpha - 1e-12
