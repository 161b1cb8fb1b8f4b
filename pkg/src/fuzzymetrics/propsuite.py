"""Seeded property campaigns for the sendograph/endograph inequalities.

Every checker runs seeded trials, evaluates both sides of its inequality
with certified enclosures and reports slack:

* a trial counts as a certified violation only when the enclosures are
  disjoint in the violating direction (lhs lower bound exceeds rhs upper
  bound by more than the 1e-9 absolute guard) -- all slack is accounted,
  no magic epsilons;
* ``max_slack`` is the most pessimistic margin seen, min over trials of
  (rhs lower bound - lhs upper bound);
* violations never abort a campaign; they are data, carrying the serialized
  inputs needed to reproduce the trial.

Trial distribution: dimensions 1 and 2 split 70/30 in mixed mode, scale
drawn log-uniformly from [0.1, 100] to probe scaling behavior.  Campaigns
are deterministic given (seed, trials, h); reports are reproducible except
for the runtime field.
"""

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .certified import CertifiedValue, c_add, c_hypot, c_max, c_scale, exact
from .core import add, convex_combo, fuzzy_to_dict, scalar_mul, support_radius
from .errors import DomainError
from .generators import (
    PRNG_NAME,
    FuzzyPath,
    make_sequence,
    mixture_path,
    random_fuzzy,
    sample_path,
    scaling_path,
    sequence_limit,
    translation_path,
    triangular,
    trapezoidal,
)
from .metrics import metric_dinf, metric_dq, pair_send_metrics, send_geometry

__all__ = [
    "ABS_TOL",
    "CAMPAIGN_MAX_POINTS",
    "CampaignReport",
    "check_convex_combo",
    "convex_combo_reports",
    "check_scalar",
    "check_sum",
    "check_chain",
    "check_metric_axioms",
    "check_endograph",
    "check_convergence",
    "check_support_bounded",
    "support_bounded_reports",
    "convergence_reports",
    "run_all",
]

# Absolute guard added to every certified comparison; all other slack comes
# from the enclosures themselves.
ABS_TOL = 1e-9

# Point budget per sendograph inside campaigns; enclosures stay honest (the
# pitch actually used is what the covering radius reports), large inputs
# just get wider enclosures instead of unbounded runtimes.
CAMPAIGN_MAX_POINTS = 6000

_DQ_NODES = 16  # nodes per merged segment for d_q inside campaigns


@dataclass
class CampaignReport:
    """Outcome of one seeded campaign."""

    theorem_id: str
    trials: int
    seed: int
    dim: object
    h: float
    max_slack: float
    violations: list
    runtime_ms: float
    prng: str = PRNG_NAME
    params: dict = field(default_factory=dict)
    extras: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not self.violations

    def to_dict(self):
        return {
            "theorem_id": self.theorem_id,
            "seed": self.seed,
            "trials": self.trials,
            "dim": self.dim,
            "h": self.h,
            "max_slack": self.max_slack,
            "violations": self.violations,
            "runtime_ms": self.runtime_ms,
            "prng": self.prng,
            "params": self.params,
            "extras": self.extras,
        }

    def content_dict(self):
        """Report content with the timing removed, for determinism checks."""
        d = self.to_dict()
        d.pop("runtime_ms")
        return d

    def summary_line(self):
        return (
            f"{self.theorem_id}: trials={self.trials} seed={self.seed} dim={self.dim} "
            f"h={self.h:g} violations={len(self.violations)} max_slack={self.max_slack:.3g}"
        )


class _Recorder:
    """Accumulates certified comparisons lhs <= rhs and their slack."""

    def __init__(self):
        self.comparisons = 0
        self.min_margin = math.inf
        self.violations = []

    def compare(self, lhs, rhs, *, trial, inequality, inputs):
        self.comparisons += 1
        self.min_margin = min(self.min_margin, rhs.lower - lhs.upper)
        if rhs.upper - lhs.lower < -ABS_TOL:
            self.violations.append(_violation(trial, inequality, inputs, lhs, rhs))

    def assert_equal(self, a, b, *, trial, inequality, inputs, tol=1e-12):
        if abs(a.value - b.value) > tol or abs(a.half_width - b.half_width) > tol:
            self.violations.append(_violation(trial, inequality, inputs, a, b))

    @property
    def max_slack(self):
        return 0.0 if self.comparisons == 0 else self.min_margin


def _violation(trial, inequality, inputs, lhs, rhs):
    return {
        "trial": trial,
        "inequality": inequality,
        "inputs": inputs() if callable(inputs) else inputs,
        "lhs": {"value": lhs.value, "half_width": lhs.half_width},
        "rhs": {"value": rhs.value, "half_width": rhs.half_width},
    }


def _serialize_inputs(**named):
    out = {}
    for key, val in named.items():
        if hasattr(val, "alphas"):
            out[key] = fuzzy_to_dict(val)
        else:
            out[key] = val
    return out


def _norm_dim(dim):
    if dim in ("mixed", None):
        return "mixed"
    dim = int(dim)
    if dim not in (1, 2):
        raise DomainError("dim must be 1, 2 or 'mixed'")
    return dim


def _trial_dim(rng, dim_mode):
    if dim_mode == "mixed":
        return 1 if rng.random() < 0.7 else 2
    return dim_mode


def _trial_scale(rng):
    return float(10.0 ** rng.uniform(-1.0, 2.0))


def _draw(rng, dim, scale):
    return random_fuzzy(rng, dim=dim, n_levels=int(rng.integers(2, 6)), scale=scale)


def _geom(u, h, max_points=CAMPAIGN_MAX_POINTS):
    return send_geometry(u, h, max_points)


def _report(theorem_id, rec, *, trials, seed, dim, h, t0, params=None, extras=None):
    return CampaignReport(
        theorem_id=theorem_id,
        trials=trials,
        seed=seed,
        dim=dim,
        h=h,
        max_slack=rec.max_slack,
        violations=rec.violations,
        runtime_ms=1000.0 * (time.perf_counter() - t0),
        params=params or {},
        extras=extras or {},
    )


# -- convex mixtures: D(lam*u + (1-lam)*v, w) ---------------------------------


def convex_combo_reports(trials=1000, seed=0, dim="mixed", h=0.02):
    """One pass over seeded trials, two reports: the root-sum-square bound
    (thm2.1) and the sqrt(2)*max corollary bound (cor2.1)."""
    dim = _norm_dim(dim)
    rng = np.random.default_rng(seed)
    rec21, rec_cor = _Recorder(), _Recorder()
    t0 = time.perf_counter()
    for i in range(int(trials)):
        d = _trial_dim(rng, dim)
        scale = _trial_scale(rng)
        u, v, w = (_draw(rng, d, scale) for _ in range(3))
        lam = float(rng.random())
        c = convex_combo(lam, u, v)
        gw = _geom(w, h)
        lhs = pair_send_metrics(_geom(c, h), gw)[0]
        d_uw = pair_send_metrics(_geom(u, h), gw)[0]
        d_vw = pair_send_metrics(_geom(v, h), gw)[0]
        inputs = lambda: _serialize_inputs(u=u, v=v, w=w, lam=lam)  # noqa: E731
        rec21.compare(lhs, c_hypot(d_uw, d_vw), trial=i, inequality="D(mix,w) <= hypot(D(u,w), D(v,w))", inputs=inputs)
        rec_cor.compare(lhs, c_scale(math.sqrt(2.0), c_max(d_uw, d_vw)), trial=i, inequality="D(mix,w) <= sqrt(2)*max(D(u,w), D(v,w))", inputs=inputs)
    kw = dict(trials=int(trials), seed=seed, dim=dim, h=h, t0=t0, params={"shared_pass": True})
    return _report("thm2.1", rec21, **kw), _report("cor2.1", rec_cor, **kw)


def check_convex_combo(trials=1000, seed=0, dim="mixed", h=0.02, which="thm2.1"):
    r21, rcor = convex_combo_reports(trials, seed, dim, h)
    return r21 if which == "thm2.1" else rcor


# -- scalar multiplication: D(a*u, b*u) <= |a-b| * max-norm of the support ----


def check_scalar(trials=1000, seed=0, dim="mixed", h=0.02):
    dim = _norm_dim(dim)
    rng = np.random.default_rng(seed)
    rec = _Recorder()
    t0 = time.perf_counter()
    for i in range(int(trials)):
        d = _trial_dim(rng, dim)
        u = _draw(rng, d, _trial_scale(rng))
        a, b = (float(x) for x in rng.uniform(-3.0, 3.0, size=2))
        lhs = pair_send_metrics(_geom(scalar_mul(a, u), h), _geom(scalar_mul(b, u), h))[0]
        rhs = exact(abs(a - b) * support_radius(u, 0.0))
        rec.compare(lhs, rhs, trial=i, inequality="D(a*u, b*u) <= |a-b|*radius(u)",
                    inputs=lambda: _serialize_inputs(u=u, a=a, b=b))
    return _report("thm2.3", rec, trials=int(trials), seed=seed, dim=dim, h=h, t0=t0)


# -- sums: D(sum u_j, sum v_j) <= sum D(u_j, v_j) ------------------------------


def check_sum(trials=1000, seed=0, dim="mixed", n_terms=None, h=0.02):
    dim = _norm_dim(dim)
    rng = np.random.default_rng(seed)
    rec = _Recorder()
    cycle = (2, 3, 5)
    t0 = time.perf_counter()
    for i in range(int(trials)):
        k = int(n_terms) if n_terms else cycle[i % len(cycle)]
        d = _trial_dim(rng, dim)
        scale = _trial_scale(rng)
        us = [_draw(rng, d, scale) for _ in range(k)]
        vs = [_draw(rng, d, scale) for _ in range(k)]
        lhs = pair_send_metrics(_geom(add(us), h), _geom(add(vs), h))[0]
        parts = [pair_send_metrics(_geom(a, h), _geom(b, h))[0] for a, b in zip(us, vs)]
        rec.compare(lhs, c_add(*parts), trial=i, inequality="D(sum u_j, sum v_j) <= sum D(u_j, v_j)",
                    inputs=lambda: _serialize_inputs(**{f"u{j}": x for j, x in enumerate(us)},
                                                     **{f"v{j}": x for j, x in enumerate(vs)}))
    return _report("thm2.4", rec, trials=int(trials), seed=seed, dim=dim, h=h, t0=t0,
                   params={"n_terms": n_terms or "cycle(2,3,5)"})


# -- the pointwise chain Gamma <= D <= d_inf -----------------------------------


def check_chain(trials=1000, seed=0, dim="mixed", h=0.02, q=2.0):
    dim = _norm_dim(dim)
    rng = np.random.default_rng(seed)
    rec = _Recorder()
    dq_values = []
    t0 = time.perf_counter()
    for i in range(int(trials)):
        d = _trial_dim(rng, dim)
        scale = _trial_scale(rng)
        u, v = _draw(rng, d, scale), _draw(rng, d, scale)
        D, G = pair_send_metrics(_geom(u, h), _geom(v, h))
        dinf = metric_dinf(u, v)
        dq = metric_dq(u, v, q=q, n=_DQ_NODES)
        dq_values.append(dq.value)
        inputs = lambda: _serialize_inputs(u=u, v=v)  # noqa: E731
        rec.compare(G, D, trial=i, inequality="Gamma <= D", inputs=inputs)
        rec.compare(D, dinf, trial=i, inequality="D <= dinf", inputs=inputs)
        rec.compare(dq, dinf, trial=i, inequality="dq <= dinf", inputs=inputs)
    extras = {
        "q": q,
        "dq_mean": float(np.mean(dq_values)),
        "dq_max": float(np.max(dq_values)),
    }
    return _report("chain", rec, trials=int(trials), seed=seed, dim=dim, h=h, t0=t0,
                   params={"q": q}, extras=extras)


# -- metric axioms under all four metrics --------------------------------------


def check_metric_axioms(trials=1000, seed=0, dim="mixed", h=0.02, q=2.0):
    dim = _norm_dim(dim)
    rng = np.random.default_rng(seed)
    rec = _Recorder()
    t0 = time.perf_counter()
    for i in range(int(trials)):
        d = _trial_dim(rng, dim)
        scale = _trial_scale(rng)
        u, v, w = (_draw(rng, d, scale) for _ in range(3))
        gu, gv, gw = _geom(u, h), _geom(v, h), _geom(w, h)
        inputs = lambda: _serialize_inputs(u=u, v=v, w=w)  # noqa: E731

        D_uv, G_uv = pair_send_metrics(gu, gv)
        D_vw, G_vw = pair_send_metrics(gv, gw)
        D_uw, G_uw = pair_send_metrics(gu, gw)
        dinf = {p: metric_dinf(*p) for p in ((u, v), (v, w), (u, w))}
        dq = {p: metric_dq(*p, q=q, n=8) for p in ((u, v), (v, w), (u, w))}

        # identity: d(u, u) enclosure must contain 0
        D_uu, G_uu = pair_send_metrics(gu, gu)
        for name, val in (
            ("D", D_uu), ("Gamma", G_uu),
            ("dinf", metric_dinf(u, u)), ("dq", metric_dq(u, u, q=q, n=4)),
        ):
            rec.compare(val, exact(0.0), trial=i, inequality=f"identity:{name}", inputs=inputs)

        # triangle inequality within summed enclosures
        for name, (ab, bc, ac) in (
            ("D", (D_uv, D_vw, D_uw)),
            ("Gamma", (G_uv, G_vw, G_uw)),
            ("dinf", (dinf[(u, v)], dinf[(v, w)], dinf[(u, w)])),
            ("dq", (dq[(u, v)], dq[(v, w)], dq[(u, w)])),
        ):
            rec.compare(ac, c_add(ab, bc), trial=i, inequality=f"triangle:{name}", inputs=inputs)

        # symmetry: swapped arguments must give identical values (deterministic
        # evaluation); the sendograph metrics are spot-checked every 10 trials
        rec.assert_equal(metric_dinf(v, u), dinf[(u, v)], trial=i,
                         inequality="symmetry:dinf", inputs=inputs)
        if i % 10 == 0:
            D_vu, G_vu = pair_send_metrics(gv, gu)
            rec.assert_equal(D_vu, D_uv, trial=i, inequality="symmetry:D", inputs=inputs)
            rec.assert_equal(G_vu, G_uv, trial=i, inequality="symmetry:Gamma", inputs=inputs)
            rec.assert_equal(metric_dq(v, u, q=q, n=8), dq[(u, v)], trial=i,
                             inequality="symmetry:dq", inputs=inputs)
    return _report("axioms", rec, trials=int(trials), seed=seed, dim=dim, h=h, t0=t0,
                   params={"q": q})


# -- endograph inequalities (stated without proof; violations are findings) ----


def check_endograph(trials=1000, seed=0, dim="mixed", h=0.02, eps_set=(0.0, 0.25, 0.5)):
    """Checks the three endograph analogues: the root-sum-square mixture
    bound, the eps-relaxed scaling bound Gamma(b*u, g*u) <= |b-g| *
    max-norm([u]_eps) + eps, and subadditivity under sums.  These are
    conjectures under test: a certified violation is a reportable finding
    with full reproduction data, not an implementation failure.
    """
    dim = _norm_dim(dim)
    for eps in eps_set:
        if not 0.0 <= eps <= 1.0:
            raise DomainError("eps values must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    rec = _Recorder()
    cycle = (2, 3, 5)
    t0 = time.perf_counter()
    for i in range(int(trials)):
        d = _trial_dim(rng, dim)
        scale = _trial_scale(rng)

        u, v, w = (_draw(rng, d, scale) for _ in range(3))
        lam = float(rng.random())
        gw = _geom(w, h)
        lhs = pair_send_metrics(_geom(convex_combo(lam, u, v), h), gw)[1]
        g_uw = pair_send_metrics(_geom(u, h), gw)[1]
        g_vw = pair_send_metrics(_geom(v, h), gw)[1]
        rec.compare(lhs, c_hypot(g_uw, g_vw), trial=i,
                    inequality="Gamma(mix,w) <= hypot(Gamma(u,w), Gamma(v,w))",
                    inputs=lambda: _serialize_inputs(u=u, v=v, w=w, lam=lam))

        u2 = _draw(rng, d, scale)
        be, ga = (float(x) for x in rng.uniform(-3.0, 3.0, size=2))
        lhs2 = pair_send_metrics(_geom(scalar_mul(be, u2), h), _geom(scalar_mul(ga, u2), h))[1]
        for eps in eps_set:
            rhs = exact(abs(be - ga) * support_radius(u2, eps) + eps)
            rec.compare(lhs2, rhs, trial=i,
                        inequality=f"Gamma(b*u, g*u) <= |b-g|*radius(u,eps)+eps [eps={eps}]",
                        inputs=lambda: _serialize_inputs(u=u2, beta=be, gamma=ga, eps=eps))

        k = cycle[i % len(cycle)]
        us = [_draw(rng, d, scale) for _ in range(k)]
        vs = [_draw(rng, d, scale) for _ in range(k)]
        lhs3 = pair_send_metrics(_geom(add(us), h), _geom(add(vs), h))[1]
        parts = [pair_send_metrics(_geom(a, h), _geom(b, h))[1] for a, b in zip(us, vs)]
        rec.compare(lhs3, c_add(*parts), trial=i,
                    inequality="Gamma(sum u_j, sum v_j) <= sum Gamma(u_j, v_j)",
                    inputs=lambda: _serialize_inputs(**{f"u{j}": x for j, x in enumerate(us)},
                                                     **{f"v{j}": x for j, x in enumerate(vs)}))
    return _report("endograph", rec, trials=int(trials), seed=seed, dim=dim, h=h, t0=t0,
                   params={"eps_set": list(eps_set)})


# -- convergence chain on designed sequences -----------------------------------


def check_convergence(kind, u=None, v=None, m_max=64, h=0.01, q=2.0):
    """Monotone vanishing along the metric chain on a designed sequence.

    dinf_convergent / scaling: every metric to the limit must stay within
    its enclosure of the exact sup-metric rate (1/m, resp. radius/m).
    D_not_dinf: D (and Gamma) vanish like 1/m and d_q like (1/m)^(1/q)
    while d_inf stays pinned at 1 -- the separation witness showing the
    chain of implications is one-way.
    """
    if u is None:
        u = triangular(0.0, 1.0, 2.0)
    seq = make_sequence(kind, u=u, m_max=m_max)
    limit = v if v is not None else sequence_limit(kind, u=u)
    rec = _Recorder()
    t0 = time.perf_counter()
    g_limit = _geom(limit, h)
    radius = support_radius(u, 0.0)
    finals = {}
    for m, um in enumerate(seq, start=1):
        D, G = pair_send_metrics(_geom(um, h), g_limit)
        dinf = metric_dinf(um, limit)
        dq = metric_dq(um, limit, q=q, n=_DQ_NODES)
        inputs = lambda: _serialize_inputs(u_m=um, limit=limit, m=m)  # noqa: E731
        if kind in ("dinf_convergent", "scaling"):
            rate = exact((1.0 if kind == "dinf_convergent" else radius) / m)
            for name, val in (("dinf", dinf), ("D", D), ("dq", dq), ("Gamma", G)):
                rec.compare(val, rate, trial=m, inequality=f"{name} <= rate(m)", inputs=inputs)
        else:  # D_not_dinf
            rec.compare(D, exact(1.0 / m), trial=m, inequality="D <= 1/m", inputs=inputs)
            rec.compare(G, exact(1.0 / m), trial=m, inequality="Gamma <= 1/m", inputs=inputs)
            rec.compare(dq, exact((1.0 / m) ** (1.0 / q)), trial=m,
                        inequality="dq <= (1/m)^(1/q)", inputs=inputs)
            rec.compare(exact(1.0 - ABS_TOL), dinf, trial=m,
                        inequality="dinf stays >= 1 (separation)", inputs=inputs)
        finals = {"m": m, "D": D.value, "Gamma": G.value, "dinf": dinf.value, "dq": dq.value}
    return _report(f"convergence:{kind}", rec, trials=m_max, seed=0, dim=limit.dim, h=h,
                   t0=t0, params={"kind": kind, "q": q, "m_max": m_max}, extras=finals)


def convergence_reports(m_max=64, h=0.01, q=2.0):
    return [check_convergence(k, m_max=m_max, h=h, q=q)
            for k in ("dinf_convergent", "D_not_dinf", "scaling")]


# -- uniform support bounds along D-continuous paths ---------------------------


def check_support_bounded(path, interval=(0.0, 1.0), n=128, h=None):
    """Samples a path, reports a finite uniform support radius, and verifies
    sampled D-continuity: the largest D-increment between adjacent samples
    must (at least nearly) halve when the sample count doubles."""
    if not isinstance(path, FuzzyPath):
        raise DomainError("check_support_bounded expects a FuzzyPath")
    rec = _Recorder()
    t0 = time.perf_counter()
    span = float(interval[1]) - float(interval[0])
    if h is None:
        h = span / (int(n) * 10)

    def max_increment(count):
        samples = sample_path(path, interval, count)
        geoms = [_geom(num, h) for _, num in samples]
        best = None
        for a, b in zip(geoms[:-1], geoms[1:]):
            inc = pair_send_metrics(a, b)[0]
            best = inc if best is None else c_max(best, inc)
        radius = max(support_radius(num, 0.0) for _, num in samples)
        return best, radius

    inc_n, r1 = max_increment(int(n))
    inc_2n, r2 = max_increment(2 * int(n))
    radius = max(r1, r2)
    if not math.isfinite(radius):
        rec.violations.append(_violation(0, "finite uniform support radius",
                                         {"kind": path.kind}, exact(0.0), exact(0.0)))
    rec.compare(inc_2n, CertifiedValue(0.55 * inc_n.value, 0.55 * inc_n.half_width),
                trial=0, inequality="max D-increment halves as n doubles",
                inputs={"kind": path.kind, "n": int(n)})
    extras = {
        "kind": path.kind,
        "uniform_support_radius": radius,
        "max_increment_n": inc_n.value,
        "max_increment_2n": inc_2n.value,
        "increment_ratio": inc_2n.value / inc_n.value if inc_n.value > 0 else 0.0,
    }
    return _report(f"thm2.2:{path.kind}", rec, trials=int(n), seed=0, dim=path.u.dim, h=h,
                   t0=t0, params={"interval": list(interval), "n": int(n)}, extras=extras)


def _default_paths():
    u = triangular(0.0, 1.0, 2.0)
    v = trapezoidal(2.0, 3.0, 4.0, 6.0)
    return [translation_path(u), scaling_path(u), mixture_path(u, v)]


def support_bounded_reports(interval=(0.0, 1.0), n=128, h=None):
    return [check_support_bounded(p, interval, n, h) for p in _default_paths()]


# -- fast path vs brute-force oracle -------------------------------------------


def check_oracle_agreement(metric="D", trials=200, seed=0, h=0.02, budget=None,
                           dim2_fraction=0.15):
    """Fast-path and oracle enclosures must overlap on seeded desk-scale pairs.

    Pairs are drawn small enough for exhaustive rasterization (the oracle is
    quadratic in the raster size); dimension 2 appears with the given
    fraction.  For d_q the reference carries the rigorous midpoint-rule
    error budget from the integrand's exact Lipschitz constant.
    """
    from .metrics import metric_D, metric_Gamma, metric_dq as fast_dq
    from .oracle import DEFAULT_POINT_BUDGET, oracle_D, oracle_Gamma, oracle_dq_certified

    if metric not in ("D", "gamma", "dq"):
        raise DomainError("oracle agreement covers metrics D, gamma and dq")
    budget = DEFAULT_POINT_BUDGET if budget is None else budget
    rng = np.random.default_rng(seed)
    rec = _Recorder()
    t0 = time.perf_counter()
    for i in range(int(trials)):
        d = 2 if rng.random() < dim2_fraction else 1
        scale = float(rng.uniform(0.3, 2.0)) if d == 1 else float(rng.uniform(0.1, 0.3))
        u = _draw(rng, d, scale)
        v = _draw(rng, d, scale)
        inputs = lambda: _serialize_inputs(u=u, v=v)  # noqa: E731
        if metric == "D":
            fast = metric_D(u, v, h)
            ref = oracle_D(u, v, h, budget=budget)
        elif metric == "gamma":
            fast = metric_Gamma(u, v, h)
            ref = oracle_Gamma(u, v, h, budget=budget)
        else:
            fast = fast_dq(u, v, q=2.0, n=64)
            ref = oracle_dq_certified(u, v, q=2.0, n=4002)
        rec.compare(fast, ref, trial=i, inequality=f"{metric}: fast <= oracle upper", inputs=inputs)
        rec.compare(ref, fast, trial=i, inequality=f"{metric}: oracle <= fast upper", inputs=inputs)
    return _report(f"oracle:{metric}", rec, trials=int(trials), seed=seed, dim="mixed", h=h,
                   t0=t0, params={"budget": budget, "dim2_fraction": dim2_fraction})


# -- everything ----------------------------------------------------------------


def run_all(seed=42, trials=1000, h=0.02, q=2.0, eps_set=(0.0, 0.25, 0.5)):
    """Every campaign with its defaults; returns the list of reports."""
    reports = list(convex_combo_reports(trials, seed, "mixed", h))
    reports.append(check_scalar(trials, seed, "mixed", h))
    reports.append(check_sum(trials, seed, "mixed", None, h))
    reports.append(check_chain(trials, seed, "mixed", h, q))
    reports.append(check_metric_axioms(trials, seed, "mixed", h, q))
    reports.append(check_endograph(trials, seed, "mixed", h, eps_set))
    reports.extend(convergence_reports(q=q))
    reports.extend(support_bounded_reports())
    return reports
