"""Campaign machinery: slack accounting, determinism, witnesses, checkers."""

import math

import pytest

import fuzzymetrics as fm
from fuzzymetrics import DomainError
from fuzzymetrics.certified import CertifiedValue, c_hypot, c_scale
from fuzzymetrics.propsuite import (
    _Recorder,
    check_chain,
    check_convergence,
    check_endograph,
    check_metric_axioms,
    check_scalar,
    check_sum,
    check_support_bounded,
    convex_combo_reports,
    support_bounded_reports,
)

TOL = 1e-9


class TestSlackAccounting:
    def test_disjoint_enclosures_flag_a_violation(self):
        rec = _Recorder()
        rec.compare(CertifiedValue(1.0, 0.1), CertifiedValue(0.5, 0.2),
                    trial=3, inequality="planted", inputs={"note": "x"})
        assert len(rec.violations) == 1
        v = rec.violations[0]
        assert v["trial"] == 3 and v["inequality"] == "planted"
        assert v["lhs"] == {"value": 1.0, "half_width": 0.1}
        assert v["rhs"] == {"value": 0.5, "half_width": 0.2}
        assert v["inputs"] == {"note": "x"}

    def test_touching_enclosures_are_not_violations(self):
        rec = _Recorder()
        rec.compare(CertifiedValue(1.0, 0.25), CertifiedValue(0.5, 0.25),
                    trial=0, inequality="touch", inputs={})
        assert rec.violations == []
        assert rec.max_slack == pytest.approx(-1.0)

    def test_planted_false_bound_is_caught_end_to_end(self):
        u, v = fm.crisp_point(0), fm.crisp_point(4)
        lhs = fm.metric_D(u, v, h=0.01)
        rec = _Recorder()
        rec.compare(lhs, c_scale(0.25, lhs), trial=0, inequality="D <= D/4 (false)",
                    inputs=lambda: {"u": fm.fuzzy_to_dict(u), "v": fm.fuzzy_to_dict(v)})
        assert len(rec.violations) == 1
        assert "u" in rec.violations[0]["inputs"]


class TestDeterminism:
    def test_identical_reports_for_identical_seeds(self):
        a = check_scalar(40, seed=7, h=0.05)
        b = check_scalar(40, seed=7, h=0.05)
        assert a.content_dict() == b.content_dict()
        c = check_scalar(40, seed=8, h=0.05)
        assert c.content_dict() != a.content_dict()


class TestTightnessWitnesses:
    def test_scalar_bound_witness_is_tight(self):
        # D(1*u, 0*u) with u = crisp [-2, 2]: both sides equal 2
        u = fm.crisp_interval(-2, 2)
        lhs = fm.metric_D(fm.scalar_mul(1, u), fm.scalar_mul(0, u), h=0.01)
        rhs = abs(1 - 0) * fm.support_radius(u, 0.0)
        assert rhs == 2.0
        assert abs(lhs.value - rhs) <= 2 * lhs.half_width + TOL

    def test_sum_bound_witness_is_tight(self):
        # crisp points: D({0}+{0}, {1}+{2}) = 3 = D({0},{1}) + D({0},{2})
        us = [fm.crisp_point(0), fm.crisp_point(0)]
        vs = [fm.crisp_point(1), fm.crisp_point(2)]
        lhs = fm.metric_D(fm.add(us), fm.add(vs), h=0.01)
        parts = [fm.metric_D(a, b, h=0.01) for a, b in zip(us, vs)]
        rhs = sum(p.value for p in parts)
        hw = lhs.half_width + sum(p.half_width for p in parts)
        assert abs(lhs.value - rhs) <= 2 * hw + TOL


class TestTrivialCases:
    def test_convex_combo_midpoint_case(self):
        # u={0}, v={2}, w={1}, lam=0.5: lhs = 0, rhs = sqrt(2)
        u, v, w = fm.crisp_point(0), fm.crisp_point(2), fm.crisp_point(1)
        c = fm.convex_combo(0.5, u, v)
        lhs = fm.metric_D(c, w, h=0.01)
        rhs = c_hypot(fm.metric_D(u, w, h=0.01), fm.metric_D(v, w, h=0.01))
        assert lhs.contains(0.0)
        assert rhs.contains(math.sqrt(2), slack=TOL)

    def test_scalar_equal_coefficients(self):
        u = fm.random_fuzzy(3, dim=1, n_levels=3, scale=2)
        lhs = fm.metric_D(fm.scalar_mul(1.3, u), fm.scalar_mul(1.3, u), h=0.02)
        assert lhs.contains(0.0)

    def test_chain_on_far_crisp_points(self):
        u, v = fm.crisp_point(0), fm.crisp_point(5)
        G = fm.metric_Gamma(u, v, h=0.01)
        D = fm.metric_D(u, v, h=0.01)
        dinf = fm.metric_dinf(u, v)
        assert abs(G.value - 1.0) <= G.half_width + TOL
        assert abs(D.value - 5.0) <= D.half_width + TOL
        assert dinf.value == 5.0

    def test_endograph_equal_scalars_contains_zero(self):
        u = fm.random_fuzzy(11, dim=1, n_levels=3, scale=1)
        lhs = fm.metric_Gamma(fm.scalar_mul(0.8, u), fm.scalar_mul(0.8, u), h=0.02)
        for eps in (0.0, 0.25, 0.5):
            assert lhs.lower <= eps + TOL


class TestCampaignsSmoke:
    """Short seeded campaigns; the 1000-trial runs live in the acceptance suite."""

    def test_convex_combo_both_reports(self):
        r21, rcor = convex_combo_reports(60, seed=5, h=0.05)
        assert r21.theorem_id == "thm2.1" and rcor.theorem_id == "cor2.1"
        assert r21.violations == [] and rcor.violations == []
        assert r21.trials == 60

    def test_scalar(self):
        assert check_scalar(60, seed=5, h=0.05).violations == []

    def test_sum(self):
        rep = check_sum(45, seed=5, h=0.05)
        assert rep.violations == []

    def test_chain(self):
        rep = check_chain(60, seed=5, h=0.05)
        assert rep.violations == []
        assert "dq_mean" in rep.extras

    def test_axioms(self):
        assert check_metric_axioms(40, seed=5, h=0.05).violations == []

    def test_endograph(self):
        rep = check_endograph(30, seed=5, h=0.05)
        assert rep.violations == []
        assert rep.params["eps_set"] == [0.0, 0.25, 0.5]

    def test_endograph_eps_validation(self):
        with pytest.raises(DomainError):
            check_endograph(5, seed=1, eps_set=(0.0, 1.5))

    def test_report_schema_keys(self):
        rep = check_scalar(5, seed=1, h=0.05)
        doc = rep.to_dict()
        for key in ("theorem_id", "seed", "trials", "dim", "h", "max_slack",
                    "violations", "runtime_ms"):
            assert key in doc
        assert "thm2.3" in rep.summary_line()


class TestConvergence:
    def test_dinf_convergent_family(self):
        rep = check_convergence("dinf_convergent", m_max=16)
        assert rep.violations == []
        assert rep.extras["dinf"] == pytest.approx(1 / 16)

    def test_separation_family(self):
        rep = check_convergence("D_not_dinf", m_max=16)
        assert rep.violations == []
        assert rep.extras["dinf"] == pytest.approx(1.0, abs=1e-12)
        assert rep.extras["D"] <= 1 / 16 + 1e-6

    def test_scaling_family(self):
        assert check_convergence("scaling", m_max=16).violations == []


class TestSupportBounded:
    def test_translation_radius(self):
        rep = check_support_bounded(fm.translation_path(fm.triangular(0, 1, 2)), (0, 1), n=32)
        assert rep.violations == []
        assert rep.extras["uniform_support_radius"] == pytest.approx(3.0)

    def test_scaling_radius_over_0_2(self):
        rep = check_support_bounded(fm.scaling_path(fm.crisp_interval(0, 1)), (0, 2), n=32)
        assert rep.violations == []
        assert rep.extras["uniform_support_radius"] == pytest.approx(2.0)

    def test_mixture_radius_bounded_by_component_radii(self):
        u, v = fm.triangular(0, 1, 2), fm.trapezoidal(2, 3, 4, 6)
        rep = check_support_bounded(fm.mixture_path(u, v), (0, 1), n=32)
        assert rep.violations == []
        bound = fm.support_radius(u, 0.0) + fm.support_radius(v, 0.0)
        assert rep.extras["uniform_support_radius"] <= bound + TOL

    def test_all_three_default_paths(self):
        for rep in support_bounded_reports(n=32):
            assert rep.violations == []
            assert math.isfinite(rep.extras["uniform_support_radius"])
