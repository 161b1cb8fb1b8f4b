"""Certified metric values: spot checks, covariances, enclosure behavior."""

import math

import numpy as np
import pytest

import fuzzymetrics as fm
from fuzzymetrics import DimensionMismatch, DomainError
from fuzzymetrics.metrics import default_h


TOL = 1e-9


class TestMetricD:
    def test_identity_enclosure(self):
        u = fm.triangular(0, 1, 2)
        res = fm.metric_D(u, u, h=0.02)
        assert res.value <= 1e-12
        assert res.contains(0.0)
        assert res.half_width <= 2 * 0.02 * math.sqrt(2)

    def test_crisp_points(self):
        res = fm.metric_D(fm.crisp_point(-1.5), fm.crisp_point(2.5), h=0.01)
        assert abs(res.value - 4.0) <= res.half_width + TOL

    def test_crisp_intervals(self):
        res = fm.metric_D(fm.crisp_interval(0, 1), fm.crisp_interval(0, 3), h=0.01)
        assert abs(res.value - 2.0) <= res.half_width + TOL

    def test_dim2_offset_squares(self):
        a = fm.crisp_polygon([[0, 0], [1, 0], [1, 1], [0, 1]])
        b = fm.crisp_polygon([[2, 0], [3, 0], [3, 1], [2, 1]])
        res = fm.metric_D(a, b, h=0.05)
        assert abs(res.value - 2.0) <= res.half_width + TOL

    def test_h_validation(self):
        with pytest.raises(DomainError):
            fm.metric_D(fm.crisp_point(0), fm.crisp_point(1), h=-0.1)

    def test_dim_mismatch(self):
        with pytest.raises(DimensionMismatch):
            fm.metric_D(fm.crisp_point(0), fm.crisp_point((0, 0)))

    def test_default_h_scales_with_diameter(self):
        small = default_h(fm.crisp_point(0), fm.crisp_point(1))
        big = default_h(fm.crisp_point(0), fm.crisp_point(100))
        assert big > small > 0


class TestMetricGamma:
    def test_identity(self):
        u = fm.trapezoidal(0, 1, 2, 3)
        res = fm.metric_Gamma(u, u, h=0.02)
        assert res.contains(0.0)

    def test_clamp_far_points(self):
        res = fm.metric_Gamma(fm.crisp_point(0), fm.crisp_point(5), h=0.01)
        assert abs(res.value - 1.0) <= res.half_width + TOL

    def test_clamp_near_points(self):
        res = fm.metric_Gamma(fm.crisp_point(0), fm.crisp_point(0.4), h=0.01)
        assert abs(res.value - 0.4) <= res.half_width + TOL

    def test_gamma_below_D(self):
        u = fm.random_fuzzy(1, dim=1, n_levels=4, scale=2)
        v = fm.random_fuzzy(2, dim=1, n_levels=4, scale=2)
        G = fm.metric_Gamma(u, v, h=0.02)
        D = fm.metric_D(u, v, h=0.02)
        assert G.lower <= D.upper + TOL


class TestMetricDinf:
    def test_identity_exact(self):
        u = fm.triangular(0, 1, 2)
        res = fm.metric_dinf(u, u)
        assert res.value == 0.0 and res.half_width == 0.0

    def test_crisp_points_exact(self):
        res = fm.metric_dinf(fm.crisp_point(-1.0), fm.crisp_point(2.5))
        assert res.value == 3.5 and res.half_width == 0.0

    def test_threshold_pair_slice_mismatch(self):
        # cuts [0,1] below the threshold and {0} above; thresholds 0.5 vs 0.4
        u = fm.threshold_number(0.5)
        v = fm.threshold_number(0.4)
        res = fm.metric_dinf(u, v)
        assert res.value == pytest.approx(1.0, abs=1e-12)

    def test_exceeds_D(self):
        u = fm.random_fuzzy(7, dim=2, n_levels=3, scale=1)
        v = fm.random_fuzzy(8, dim=2, n_levels=3, scale=1)
        D = fm.metric_D(u, v, h=0.05)
        dinf = fm.metric_dinf(u, v)
        assert D.lower <= dinf.upper + TOL


class TestMetricDq:
    def test_identity_exact(self):
        u = fm.trapezoidal(0, 1, 1, 2)
        res = fm.metric_dq(u, u, q=2)
        assert res.value == 0.0 and res.half_width == 0.0

    def test_crisp_points_constant_integrand(self):
        res = fm.metric_dq(fm.crisp_point(1), fm.crisp_point(4), q=3)
        assert abs(res.value - 3.0) <= res.half_width + 1e-9

    def test_closed_form_sqrt_one_twelfth(self):
        # integrand is 0.5*alpha, so d_2 = sqrt(integral of 0.25 a^2) = sqrt(1/12)
        res = fm.metric_dq(fm.crisp_interval(0, 1), fm.triangular(0, 0.5, 1), q=2, n=64)
        assert abs(res.value - math.sqrt(1 / 12)) <= res.half_width + TOL
        assert res.half_width < 1e-3

    def test_q_validation(self):
        with pytest.raises(DomainError):
            fm.metric_dq(fm.crisp_point(0), fm.crisp_point(1), q=0.5)

    def test_bracket_tightens_with_n(self):
        u, v = fm.crisp_interval(0, 1), fm.triangular(0, 0.5, 1)
        wide = fm.metric_dq(u, v, q=2, n=4)
        tight = fm.metric_dq(u, v, q=2, n=64)
        assert tight.half_width < wide.half_width
        assert wide.contains(math.sqrt(1 / 12), slack=TOL)


class TestTranslationCovariance:
    def test_dim1_shifts(self):
        rng = np.random.default_rng(77)
        for _ in range(12):
            u = fm.random_fuzzy(rng, dim=1, n_levels=3, scale=1.5)
            v = fm.random_fuzzy(rng, dim=1, n_levels=3, scale=1.5)
            t = float(rng.uniform(-5, 5))
            base = fm.metric_D(u, v, h=0.02)
            moved = fm.metric_D(fm.translate(u, t), fm.translate(v, t), h=0.02)
            assert abs(base.value - moved.value) <= base.half_width + moved.half_width + TOL


class TestEnclosureConvergence:
    def test_halving_h_halves_half_width(self):
        pairs = [
            (fm.random_fuzzy(31, dim=1, n_levels=4, scale=1.0),
             fm.random_fuzzy(32, dim=1, n_levels=4, scale=1.0)),
            (fm.random_fuzzy(33, dim=2, n_levels=3, scale=0.3),
             fm.random_fuzzy(34, dim=2, n_levels=3, scale=0.3)),
        ]
        for u, v in pairs:
            for metric in (fm.metric_D, fm.metric_Gamma):
                hw_coarse = metric(u, v, h=0.08).half_width
                hw_fine = metric(u, v, h=0.04).half_width
                assert hw_fine <= 0.56 * hw_coarse


class TestChainSmoke:
    def test_chain_holds_with_certified_slack(self):
        rng = np.random.default_rng(99)
        for i in range(25):
            dim = 1 if i % 4 else 2
            scale = float(10 ** rng.uniform(-1, 1))
            u = fm.random_fuzzy(rng, dim=dim, n_levels=4, scale=scale)
            v = fm.random_fuzzy(rng, dim=dim, n_levels=4, scale=scale)
            G = fm.metric_Gamma(u, v, h=0.05, max_points=6000)
            D = fm.metric_D(u, v, h=0.05, max_points=6000)
            dinf = fm.metric_dinf(u, v)
            assert G.value <= D.value + G.half_width + D.half_width + TOL
            assert D.value <= dinf.value + D.half_width + dinf.half_width + TOL
