"""Deterministic families and seeded random fuzzy numbers for the campaigns.

Random cuts are built by monotone shrinking of a support cut toward an
interior core, so nestedness holds by construction rather than by rejection.
Generation is pure given (seed, parameters): identical seeds produce
bitwise-identical level data.  The PRNG is numpy's PCG64 (via
numpy.random.default_rng) and is named in every campaign report header.
"""

import numpy as np

from . import _polyops as po
from .core import Cut, FuzzyNumber, convex_combo, scalar_mul, translate
from .errors import DomainError, SpecError

__all__ = [
    "PRNG_NAME",
    "triangular",
    "trapezoidal",
    "crisp_interval",
    "crisp_point",
    "crisp_polygon",
    "random_fuzzy",
    "generate",
    "threshold_number",
    "make_sequence",
    "FuzzyPath",
    "translation_path",
    "scaling_path",
    "mixture_path",
    "sample_path",
]

PRNG_NAME = "numpy-PCG64"

# Alpha step used to encode a jump in the cut map: the level representation
# interpolates continuously, so a discontinuity becomes a ramp this narrow.
JUMP_RAMP = 1e-9


def triangular(a, b, c):
    """Triangular fuzzy number with support [a, c] and peak b."""
    if not a <= b <= c:
        raise SpecError(f"triangular needs a <= b <= c, got {(a, b, c)}")
    return FuzzyNumber(1, [(0.0, Cut.interval(a, c)), (1.0, Cut.interval(b, b))])


def trapezoidal(a, b, c, d):
    """Trapezoidal fuzzy number with support [a, d] and plateau [b, c]."""
    if not a <= b <= c <= d:
        raise SpecError(f"trapezoidal needs a <= b <= c <= d, got {(a, b, c, d)}")
    return FuzzyNumber(1, [(0.0, Cut.interval(a, d)), (1.0, Cut.interval(b, c))])


def crisp_interval(a, b):
    if a > b:
        raise SpecError(f"crisp_interval needs a <= b, got {(a, b)}")
    cut = Cut.interval(a, b)
    return FuzzyNumber(1, [(0.0, cut), (1.0, cut)])


def crisp_point(where):
    """Crisp singleton: scalar gives a dim-1 number, a pair gives dim 2."""
    cut = Cut.point(where)
    return FuzzyNumber(cut.dim, [(0.0, cut), (1.0, cut)])


def crisp_polygon(vertices):
    cut = Cut.polygon(vertices)
    return FuzzyNumber(2, [(0.0, cut), (1.0, cut)])


def _as_rng(seed_or_rng):
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return np.random.default_rng(seed_or_rng)


def _inner_alphas(rng, n_levels):
    extra = max(0, int(n_levels) - 2)
    inner = np.sort(rng.uniform(0.05, 0.95, size=extra))
    inner = np.unique(inner)
    return np.concatenate([[0.0], inner, [1.0]])


def random_fuzzy(seed, dim=1, n_levels=4, scale=1.0):
    """Seeded random fuzzy number with nested cuts built by monotone shrinking.

    dim 1: a support interval of extent ~scale shrinks toward a random core
    interval.  dim 2: a convex hull of a seeded point cloud shrinks toward a
    random interior point.  Shrink factors ascend with alpha, so nestedness
    is guaranteed by construction.
    """
    if dim not in (1, 2):
        raise SpecError(f"dim must be 1 or 2, got {dim!r}")
    if n_levels < 2:
        raise SpecError("n_levels must be >= 2")
    if scale <= 0:
        raise SpecError("scale must be > 0")
    rng = _as_rng(seed)
    alphas = _inner_alphas(rng, n_levels)
    shrink = np.concatenate([[0.0], np.sort(rng.uniform(0.0, 1.0, size=len(alphas) - 2)), [1.0]])
    if dim == 1:
        center = rng.uniform(-scale, scale)
        width = scale * rng.uniform(0.3, 1.0)
        lo0, hi0 = center - width / 2, center + width / 2
        p = np.sort(rng.uniform(0.0, 1.0, size=2))
        lo1 = lo0 + p[0] * width
        hi1 = lo0 + p[1] * width
        levels = []
        for a, s in zip(alphas, shrink):
            levels.append((a, Cut.interval(lo0 + s * (lo1 - lo0), hi0 + s * (hi1 - hi0))))
        return FuzzyNumber(1, levels)

    center = rng.uniform(-scale, scale, size=2)
    while True:
        cloud = center + scale * 0.5 * rng.normal(size=(8, 2))
        hull = po.convex_hull(cloud)
        if len(hull) >= 3:
            break
    lam = rng.uniform(0.0, 0.6)
    core = (1 - lam) * hull.mean(axis=0) + lam * hull[int(rng.integers(len(hull)))]
    top = rng.uniform(0.4, 1.0)
    levels = []
    for a, s in zip(alphas, shrink):
        t = s * top
        verts = core + (1.0 - t) * (hull - core)
        levels.append((a, Cut.polygon(po.convex_hull(verts))))
    return FuzzyNumber(2, levels)


def threshold_number(tau):
    """Dim-1 number whose cuts are [0, 1] for alpha <= tau and {0} above.

    The jump in the cut map is encoded as a ramp of width JUMP_RAMP, which
    changes sendograph distances by at most that amount and leaves the
    supremum metric at merged breakpoints untouched.
    """
    if not 0.0 <= tau < 1.0:
        raise SpecError(f"threshold must lie in [0, 1), got {tau}")
    wide = Cut.interval(0.0, 1.0)
    spike = Cut.interval(0.0, 0.0)
    levels = [(0.0, wide)]
    if tau > 0.0:
        levels.append((tau, wide))
    levels.append((tau + JUMP_RAMP, spike))
    levels.append((1.0, spike))
    return FuzzyNumber(1, levels)


_SEQUENCE_KINDS = ("dinf_convergent", "D_not_dinf", "scaling")


def make_sequence(kind, u=None, v=None, m_max=16):
    """Sequence u_1..u_{m_max} with a designed convergence behavior.

    dinf_convergent: u shifted by (1/m) along the first axis -- converges in
    every metric.  D_not_dinf: threshold numbers with jump at 1/2 - 1/m
    against the limit threshold 1/2 -- converges in D but stays at
    sup-distance 1.  scaling: (1 + 1/m) * u.
    """
    if kind not in _SEQUENCE_KINDS:
        raise SpecError(f"unknown sequence kind {kind!r}; expected one of {_SEQUENCE_KINDS}")
    if m_max < 1:
        raise SpecError("m_max must be >= 1")
    if kind == "dinf_convergent":
        if u is None:
            raise SpecError("dinf_convergent needs a base number u")
        shift = (lambda s: s) if u.dim == 1 else (lambda s: (s, 0.0))
        return [translate(u, shift(1.0 / m)) for m in range(1, m_max + 1)]
    if kind == "scaling":
        if u is None:
            raise SpecError("scaling needs a base number u")
        return [scalar_mul(1.0 + 1.0 / m, u) for m in range(1, m_max + 1)]
    return [threshold_number(max(0.0, 0.5 - 1.0 / m)) for m in range(1, m_max + 1)]


def sequence_limit(kind, u=None, v=None):
    """The designed limit of make_sequence(kind, ...)."""
    if kind in ("dinf_convergent", "scaling"):
        if u is None:
            raise SpecError(f"{kind} needs a base number u")
        return u
    if kind == "D_not_dinf":
        return threshold_number(0.5)
    raise SpecError(f"unknown sequence kind {kind!r}")


class FuzzyPath:
    """A parameterized family t -> FuzzyNumber from one of the built-in,
    D-continuous constructions (translation, scaling, mixture)."""

    def __init__(self, kind, u, v=None, direction=None):
        if kind not in ("translation", "scaling", "mixture"):
            raise SpecError(f"unknown path kind {kind!r}")
        if kind == "mixture" and v is None:
            raise SpecError("mixture path needs two numbers")
        if kind == "translation":
            if direction is None:
                direction = 1.0 if u.dim == 1 else (1.0, 0.0)
            if u.dim == 2 and np.isscalar(direction):
                raise SpecError("dim-2 translation needs a 2-vector direction")
        self.kind = kind
        self.u = u
        self.v = v
        self.direction = direction

    def at(self, t):
        t = float(t)
        if self.kind == "translation":
            shift = t * self.direction if self.u.dim == 1 else tuple(t * np.asarray(self.direction))
            return translate(self.u, shift)
        if self.kind == "scaling":
            return scalar_mul(t, self.u)
        return convex_combo(t, self.u, self.v)


def translation_path(u, direction=None):
    return FuzzyPath("translation", u, direction=direction)


def scaling_path(u):
    return FuzzyPath("scaling", u)


def mixture_path(u, v):
    return FuzzyPath("mixture", u, v)


def sample_path(path, interval, n):
    """n uniform parameter samples (t, path.at(t)) over a compact interval."""
    if n < 2:
        raise SpecError("sample_path needs n >= 2")
    t0, t1 = float(interval[0]), float(interval[1])
    if not t0 < t1:
        raise SpecError("interval must satisfy t0 < t1")
    if path.kind == "mixture" and (t0 < 0.0 or t1 > 1.0):
        raise SpecError("mixture paths are defined on [0, 1]")
    ts = np.linspace(t0, t1, int(n))
    return [(float(t), path.at(t)) for t in ts]


# -- CLI spec strings ----------------------------------------------------------
#
# "triangular:0,1,2"  "trapezoidal:0,1,2,4"  "crisp_interval:0,1"
# "crisp_point:5"     "random:seed=42,dim=1,levels=5,scale=10"


def generate(spec):
    """Build a fuzzy number from a generator spec string (see module docs)."""
    if not isinstance(spec, str) or not spec:
        raise SpecError("spec must be a nonempty string")
    kind, _, arg_str = spec.partition(":")
    kind = kind.strip()
    args = [a.strip() for a in arg_str.split(",")] if arg_str.strip() else []

    def floats(n):
        if len(args) != n:
            raise SpecError(f"{kind} expects {n} parameters, got {len(args)}")
        try:
            return [float(a) for a in args]
        except ValueError as exc:
            raise SpecError(f"non-numeric parameter in {spec!r}") from exc

    if kind == "triangular":
        return triangular(*floats(3))
    if kind == "trapezoidal":
        return trapezoidal(*floats(4))
    if kind == "crisp_interval":
        return crisp_interval(*floats(2))
    if kind == "crisp_point":
        return crisp_point(floats(1)[0])
    if kind == "random":
        params = {"seed": None, "dim": 1, "levels": 4, "scale": 1.0}
        for a in args:
            key, _, val = a.partition("=")
            key = key.strip()
            if key not in params or not val:
                raise SpecError(f"bad random parameter {a!r}")
            try:
                params[key] = float(val) if key == "scale" else int(val)
            except ValueError as exc:
                raise SpecError(f"non-numeric value in {a!r}") from exc
        if params["seed"] is None:
            raise SpecError("random spec needs an explicit seed")
        return random_fuzzy(
            params["seed"], dim=params["dim"], n_levels=params["levels"], scale=params["scale"]
        )
    raise SpecError(f"unknown generator kind {kind!r}")
