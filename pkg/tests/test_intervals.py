"""Interval-design tests: published pins, scale properties, minimality and
monotone-precision invariants."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pilotsize import intervals as iv
from pilotsize.distributions import chi2_quantile

ALPHAS = (0.10, 0.05, 0.01)


class TestStdDev:
    @pytest.mark.parametrize("n,alpha,expected", [
        (10, 0.05, 0.8256), (5, 0.05, 1.8736), (30, 0.01, 0.4867),
        (5, 0.10, 1.3724), (20, 0.05, 0.4606), (30, 0.10, 0.2797),
    ])
    def test_precision_pins(self, n, alpha, expected):
        assert iv.stddev_precision(n, alpha) == pytest.approx(expected, abs=5e-5)

    @pytest.mark.parametrize("delta,alpha,expected", [
        (0.10, 0.05, 234), (0.01, 0.01, 33798), (1.00, 0.10, 7),
        (0.05, 0.05, 849), (0.20, 0.01, 118), (0.50, 0.10, 14),
    ])
    def test_sample_size_pins(self, delta, alpha, expected):
        result = iv.stddev_sample_size(delta, alpha)
        assert result.size == expected
        assert result.achieved <= delta

    def test_ci_worked_example(self):
        ci = iv.stddev_ci(1.0, 5, 0.05)
        assert ci.lower == pytest.approx(0.5991, abs=5e-5)
        assert ci.upper == pytest.approx(2.8736, abs=5e-5)
        assert ci.lower < 1.0 < ci.upper

    def test_ci_scale_equivariance(self):
        base = iv.stddev_ci(1.0, 5, 0.05)
        scaled = iv.stddev_ci(2.0, 5, 0.05)
        assert scaled.lower == pytest.approx(2.0 * base.lower, rel=1e-12)
        assert scaled.upper == pytest.approx(2.0 * base.upper, rel=1e-12)

    def test_ci_upper_matches_precision(self):
        ci = iv.stddev_ci(1.0, 10, 0.05)
        assert ci.upper == pytest.approx(1.0 + iv.stddev_precision(10, 0.05), rel=1e-12)
        assert ci.lower == pytest.approx(0.687836, abs=5e-6)
        assert ci.upper == pytest.approx(1.8256, abs=5e-5)

    def test_domain(self):
        with pytest.raises(ValueError):
            iv.stddev_precision(1, 0.05)
        with pytest.raises(ValueError):
            iv.stddev_ci(0.0, 5, 0.05)


class TestMean:
    @pytest.mark.parametrize("n,alpha,expected", [
        (5, 0.05, 1.2417), (10, 0.10, 0.5797), (30, 0.01, 0.5032),
        (10, 0.05, 0.7154), (25, 0.10, 0.3422),
    ])
    def test_precision_pins(self, n, alpha, expected):
        assert iv.mean_precision(n, alpha) == pytest.approx(expected, abs=5e-5)

    @pytest.mark.parametrize("delta,alpha,expected", [
        (0.20, 0.05, 99), (0.01, 0.01, 66353), (0.50, 0.10, 13),
        (0.05, 0.05, 1540), (1.00, 0.01, 11),
    ])
    def test_sample_size_pins(self, delta, alpha, expected):
        assert iv.mean_sample_size(delta, alpha).size == expected

    def test_ci_symmetric(self):
        ci = iv.mean_ci(0.0, 1.0, 5, 0.05)
        assert ci.lower == pytest.approx(-1.2417, abs=5e-5)
        assert ci.upper == pytest.approx(1.2417, abs=5e-5)

    def test_ci_zero_variance(self):
        ci = iv.mean_ci(10.0, 0.0, 7, 0.05)
        assert ci.lower == ci.upper == 10.0

    def test_ci_table_cell(self):
        ci = iv.mean_ci(5.0, 2.0, 10, 0.05)
        assert ci.lower == pytest.approx(5.0 - 2.0 * 0.7154, abs=1e-4)
        assert ci.upper == pytest.approx(5.0 + 2.0 * 0.7154, abs=1e-4)


class TestCorrelation:
    def test_worked_example(self):
        ci = iv.correlation_ci(0.3, 20, 0.05)
        assert round(ci.lower, 2) == -0.16
        assert round(ci.upper, 2) == 0.66
        assert ci.lower < 0.3 < ci.upper

    def test_zero_is_symmetric(self):
        ci = iv.correlation_ci(0.0, 12, 0.05)
        assert ci.lower == pytest.approx(-ci.upper, abs=1e-12)

    def test_strong_correlation_small_sample(self):
        ci = iv.correlation_ci(0.9, 5, 0.01)
        assert round(ci.lower, 2) == -0.34
        assert round(ci.upper, 2) == 1.00
        assert ci.upper < 1.0

    def test_width_boundary(self):
        assert iv.correlation_width(0.3, 320, 0.05) <= 0.2
        assert iv.correlation_width(0.3, 319, 0.05) > 0.2
        assert iv.correlation_width(0.9, 45, 0.10) <= 0.1

    def test_width_even_in_rho(self):
        for rho in (0.1, 0.45, 0.8):
            assert iv.correlation_width(rho, 17, 0.05) == pytest.approx(
                iv.correlation_width(-rho, 17, 0.05), rel=1e-12)

    @pytest.mark.parametrize("rho,delta,alpha,expected", [
        (0.3, 0.2, 0.05, 320), (0.1, 0.1, 0.01, 2600), (0.8, 0.5, 0.10, 10),
        (0.5, 0.3, 0.05, 99), (0.9, 0.1, 0.10, 45),
    ])
    def test_sample_size_pins(self, rho, delta, alpha, expected):
        assert iv.correlation_sample_size(rho, delta, alpha).size == expected

    def test_fisher_z_symmetry(self):
        for r in (-0.7, 0.0, 0.3, 0.92):
            ci = iv.correlation_ci(r, 28, 0.05)
            assert math.atanh(ci.lower) + math.atanh(ci.upper) == pytest.approx(
                2.0 * math.atanh(r), abs=1e-9)

    def test_domain(self):
        with pytest.raises(ValueError):
            iv.correlation_ci(0.3, 3, 0.05)
        with pytest.raises(ValueError):
            iv.correlation_ci(1.0, 10, 0.05)


class TestLifetime:
    def test_ci_pins(self):
        ci = iv.lifetime_ci(1.0, 20, 0.05)
        assert round(ci.lower, 2) == 0.67
        assert round(ci.upper, 2) == 1.64
        ci = iv.lifetime_ci(1.0, 5, 0.01)
        assert round(ci.lower, 2) == 0.40
        assert round(ci.upper, 2) == 4.64

    def test_ci_scales_linearly(self):
        base = iv.lifetime_ci(1.0, 20, 0.05)
        scaled = iv.lifetime_ci(2.0, 20, 0.05)
        assert scaled.lower == pytest.approx(2.0 * base.lower, rel=1e-12)
        assert scaled.upper == pytest.approx(2.0 * base.upper, rel=1e-12)

    @pytest.mark.parametrize("k,alpha,expected", [
        (0.2, 0.05, 388), (0.1, 0.01, 2660), (0.5, 0.10, 47),
        (0.3, 0.05, 175), (0.4, 0.10, 71),
    ])
    def test_required_events_pins(self, k, alpha, expected):
        assert iv.lifetime_required_events(k, alpha).size == expected

    def test_boundary_event_count(self):
        # the k = 0.2, alpha = 0.05 design sits extremely close to the
        # constraint boundary; both sides must resolve correctly
        assert iv._lifetime_relative_width(388, 0.05) <= 0.2
        assert iv._lifetime_relative_width(387, 0.05) > 0.2

    def test_sample_size(self):
        assert iv.lifetime_sample_size(388, 0.10) == 432
        assert iv.lifetime_sample_size(97, 0.0) == 97
        assert iv.lifetime_sample_size(100, 0.5) == 200

    def test_hazard_rate(self):
        # point rate: a five-day mean lifetime means a 20% daily hazard
        assert 1.0 / 5.0 == 0.2
        degenerate = iv.ConfidenceInterval(1.0, 1.0, 0.95)
        assert iv.hazard_rate_ci(degenerate) == degenerate
        printed = iv.ConfidenceInterval(0.67, 1.64, 0.95)
        hz = iv.hazard_rate_ci(printed)
        assert hz.lower == pytest.approx(0.6098, abs=5e-5)
        assert hz.upper == pytest.approx(1.4925, abs=5e-5)

    def test_domain(self):
        with pytest.raises(ValueError):
            iv.lifetime_ci(1.0, 0, 0.05)
        with pytest.raises(ValueError):
            iv.lifetime_sample_size(10, 1.0)


class TestInvariants:
    def test_ci_nesting_all_five_estimands(self):
        from pilotsize.proportions import BinomialObservation, clopper_pearson_ci
        for make in (
            lambda a: iv.stddev_ci(1.0, 8, a),
            lambda a: iv.mean_ci(0.3, 1.2, 8, a),
            lambda a: clopper_pearson_ci(BinomialObservation(3, 20), a),
            lambda a: iv.correlation_ci(0.4, 15, a),
            lambda a: iv.lifetime_ci(2.0, 12, a),
        ):
            c90, c95, c99 = make(0.10), make(0.05), make(0.01)
            assert c99.lower <= c95.lower <= c90.lower
            assert c90.upper <= c95.upper <= c99.upper

    def test_monotone_precision_log_grid(self):
        sizes = sorted({int(round(2 * (50000 / 2) ** (i / 60))) for i in range(61)})
        for lo, fn in (
            (2, lambda n: iv.stddev_precision(n, 0.05)),
            (2, lambda n: iv.mean_precision(n, 0.05)),
            (4, lambda n: iv.correlation_width(0.3, n, 0.05)),
            (1, lambda n: iv._lifetime_relative_width(n, 0.05)),
        ):
            values = [fn(n) for n in sizes if n >= lo]
            assert all(a > b for a, b in zip(values, values[1:]))

    def test_least_satisfying_minimality(self):
        assert iv.least_satisfying(lambda n: n * n >= 50, lo=2) == 8
        assert iv.least_satisfying(lambda n: True, lo=2) == 2
        with pytest.raises(ArithmeticError):
            iv.least_satisfying(lambda n: False, lo=1, hi_cap=64)

    @settings(max_examples=60, deadline=None)
    @given(delta=st.floats(0.005, 2.0), alpha=st.sampled_from(ALPHAS))
    def test_stddev_design_minimality(self, delta, alpha):
        n = iv.stddev_sample_size(delta, alpha).size
        assert iv.stddev_precision(n, alpha) <= delta
        assert n == 2 or iv.stddev_precision(n - 1, alpha) > delta

    @settings(max_examples=60, deadline=None)
    @given(delta=st.floats(0.005, 2.0), alpha=st.sampled_from(ALPHAS))
    def test_mean_design_minimality(self, delta, alpha):
        n = iv.mean_sample_size(delta, alpha).size
        assert iv.mean_precision(n, alpha) <= delta
        assert n == 2 or iv.mean_precision(n - 1, alpha) > delta

    @settings(max_examples=60, deadline=None)
    @given(rho=st.floats(-0.95, 0.95), delta=st.floats(0.02, 1.9),
           alpha=st.sampled_from(ALPHAS))
    def test_correlation_design_minimality(self, rho, delta, alpha):
        n = iv.correlation_sample_size(rho, delta, alpha).size
        assert iv.correlation_width(rho, n, alpha) <= delta
        assert n == 4 or iv.correlation_width(rho, n - 1, alpha) > delta

    @settings(max_examples=60, deadline=None)
    @given(k=st.floats(0.02, 3.0), alpha=st.sampled_from(ALPHAS))
    def test_lifetime_design_minimality(self, k, alpha):
        e = iv.lifetime_required_events(k, alpha).size
        assert iv._lifetime_relative_width(e, alpha) <= k
        assert e == 1 or iv._lifetime_relative_width(e - 1, alpha) > k

    def test_lifetime_ci_from_quantiles(self):
        # the interval is exactly [2E/chi2_hi, 2E/chi2_lo] scaled by theta
        ci = iv.lifetime_ci(3.0, 7, 0.05)
        assert ci.lower == pytest.approx(
            14.0 * 3.0 / chi2_quantile(0.975, 14.0), rel=1e-12)
        assert ci.upper == pytest.approx(
            14.0 * 3.0 / chi2_quantile(0.025, 14.0), rel=1e-12)
