"""Fuzzy numbers as validated alpha-level families, with level-set algebra.

A fuzzy number is stored as an ascending family of alpha-levels
(alpha_0 = 0 < ... < alpha_m = 1) whose cuts are nonempty compact convex
sets: closed intervals in dimension 1, CCW convex polygons in dimension 2.
Between stored levels the cut at alpha is the Minkowski convex blend
(1-t)*A_i + t*A_{i+1}, which preserves nestedness and convexity and makes
the level map piecewise linear in alpha.

Addition, scalar multiplication and convex combinations act cutwise:
[u + v]_a = [u]_a + [v]_a (Minkowski sum) and [r*u]_a = r*[u]_a.  Because
the blend commutes with both operations, results represented on the merged
alpha-grid are exact at every alpha, not just at stored levels.

All values are immutable after construction and every operation is a pure
function, so values are safe to share between concurrent tasks.
"""

import json
import math

import numpy as np

from . import _polyops as po
from .errors import (
    DimensionMismatch,
    DomainError,
    MissingBoundaryLevel,
    NestednessViolation,
    NonConvexCut,
    NonFiniteCoordinate,
)

# Absolute per-coordinate tolerance for algebraic cut equality; all algebra
# is endpoint/vertex arithmetic on floats, so only rounding noise remains.
ALGEBRA_TOL = 1e-12

# Slack allowed when checking nestedness of constructed level families
# (scaled by coordinate magnitude in the validator).
_NEST_TOL = 1e-9


class Cut:
    """A nonempty compact convex cut: interval (dim 1) or CCW polygon (dim 2)."""

    __slots__ = ("dim", "lo", "hi", "vertices")

    def __init__(self, *_args, **_kwargs):
        raise TypeError("use Cut.interval, Cut.polygon or Cut.point")

    @classmethod
    def _raw(cls, dim, lo=None, hi=None, vertices=None):
        self = object.__new__(cls)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "vertices", vertices)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Cut is immutable")

    @classmethod
    def interval(cls, lo, hi):
        lo, hi = float(lo), float(hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise NonFiniteCoordinate(f"interval endpoints must be finite, got [{lo}, {hi}]")
        if lo > hi:
            raise DomainError(f"interval needs lo <= hi, got [{lo}, {hi}]")
        return cls._raw(1, lo=lo, hi=hi)

    @classmethod
    def polygon(cls, vertices):
        """Validate a CCW convex vertex list; interior collinear points are dropped."""
        verts = np.asarray(vertices, dtype=float)
        if verts.ndim != 2 or verts.shape[1] != 2 or len(verts) == 0:
            raise DomainError("polygon vertices must be a nonempty (k, 2) array")
        if not np.all(np.isfinite(verts)):
            raise NonFiniteCoordinate("polygon has NaN or infinite coordinates")
        # tolerate an explicitly closed ring and consecutive exact repeats
        keep = [0]
        for i in range(1, len(verts)):
            if not np.array_equal(verts[i], verts[keep[-1]]):
                keep.append(i)
        verts = verts[keep]
        if len(verts) > 1 and np.array_equal(verts[0], verts[-1]):
            verts = verts[:-1]

        hull = po.convex_hull(verts)
        eps = 1e-9 * max(1.0, po.coord_scale(verts))
        if len(hull) <= 2:
            return cls._raw(2, vertices=_readonly(hull))

        # every input vertex must sit on the hull boundary (collinear ones
        # get canonicalized away), and the traversal must follow hull order
        a, b = hull, np.roll(hull, -1, axis=0)
        edge_d = po.dist_points_to_segments(verts, a, b).min(axis=1)
        if np.any(edge_d > eps):
            raise NonConvexCut("vertex list is not in convex position")
        order = []
        for v in verts:
            match = np.where(np.all(np.abs(hull - v) <= eps, axis=1))[0]
            if len(match):
                order.append(int(match[0]))
        if sorted(order) != sorted(set(order)):
            raise NonConvexCut("duplicate vertices in polygon")
        if set(order) != set(range(len(hull))):
            raise NonConvexCut("vertex list is not in convex position")
        shift = order.index(0)
        if order[shift:] + order[:shift] != list(range(len(hull))):
            raise NonConvexCut("vertices are not in CCW convex-hull order")
        return cls._raw(2, vertices=_readonly(hull))

    @classmethod
    def point(cls, where):
        """Degenerate cut {where}: scalar gives dim 1, pair gives dim 2."""
        if np.isscalar(where):
            return cls.interval(where, where)
        w = np.asarray(where, dtype=float).reshape(-1)
        if len(w) == 1:
            return cls.interval(w[0], w[0])
        if len(w) == 2:
            return cls.polygon(w.reshape(1, 2))
        raise DomainError("point cuts exist only in dimensions 1 and 2")

    # -- helpers used across the package ------------------------------------

    def contains(self, other, atol=0.0):
        """Whether other is a subset of self, with absolute slack atol."""
        _check_dims(self, other)
        if self.dim == 1:
            return other.lo >= self.lo - atol and other.hi <= self.hi + atol
        if len(self.vertices) >= 3:
            return bool(np.all(po.points_in_polygon(other.vertices, self.vertices, atol=atol)))
        a, b = _segments(self.vertices)
        d = po.dist_points_to_segments(other.vertices, a, b).min(axis=1)
        return bool(np.all(d <= atol))

    def equals(self, other, tol=ALGEBRA_TOL):
        if self.dim != other.dim:
            return False
        if self.dim == 1:
            return abs(self.lo - other.lo) <= tol and abs(self.hi - other.hi) <= tol
        if len(self.vertices) != len(other.vertices):
            return False
        return bool(np.all(np.abs(self.vertices - other.vertices) <= tol))

    def translated(self, shift):
        if self.dim == 1:
            return Cut._raw(1, lo=self.lo + shift, hi=self.hi + shift)
        shift = np.asarray(shift, dtype=float).reshape(2)
        return Cut._raw(2, vertices=_readonly(po.canonical_loop(self.vertices + shift)))

    def scaled(self, r):
        if self.dim == 1:
            a, b = self.lo * r, self.hi * r
            return Cut._raw(1, lo=min(a, b), hi=max(a, b))
        return Cut._raw(2, vertices=_readonly(po.scale_polygon(r, self.vertices)))

    def minkowski(self, other):
        _check_dims(self, other)
        if self.dim == 1:
            return Cut._raw(1, lo=self.lo + other.lo, hi=self.hi + other.hi)
        return Cut._raw(2, vertices=_readonly(po.minkowski_sum(self.vertices, other.vertices)))

    def max_norm(self):
        """Largest Euclidean norm over the cut (attained at an endpoint/vertex)."""
        if self.dim == 1:
            return max(abs(self.lo), abs(self.hi))
        return po.max_norm(self.vertices)

    def bounds(self):
        """Axis-aligned bounding box as (lo_vec, hi_vec) arrays."""
        if self.dim == 1:
            return np.array([self.lo]), np.array([self.hi])
        return self.vertices.min(axis=0), self.vertices.max(axis=0)

    def __repr__(self):
        if self.dim == 1:
            return f"Cut.interval({self.lo:.6g}, {self.hi:.6g})"
        return f"Cut.polygon(<{len(self.vertices)} vertices>)"


def _readonly(arr):
    arr = np.ascontiguousarray(arr, dtype=float)
    arr.setflags(write=False)
    return arr


def _segments(verts):
    if len(verts) == 1:
        return verts, verts
    if len(verts) == 2:
        return verts[:1], verts[1:2]
    return verts, np.roll(verts, -1, axis=0)


def _check_dims(a, b):
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimension mismatch: {a.dim} vs {b.dim}")


def _as_cut(dim, obj):
    if isinstance(obj, Cut):
        if obj.dim != dim:
            raise DimensionMismatch(f"cut of dim {obj.dim} in a dim-{dim} fuzzy number")
        return obj
    if dim == 1:
        lo, hi = obj
        return Cut.interval(lo, hi)
    return Cut.polygon(obj)


class FuzzyNumber:
    """A p-dimensional fuzzy number stored as a validated level family (p in {1, 2})."""

    __slots__ = ("dim", "alphas", "cuts")

    def __init__(self, dim, levels):
        if dim not in (1, 2):
            raise DomainError(f"dim must be 1 or 2, got {dim!r}")
        levels = list(levels)
        if not levels:
            raise DomainError("levels must be nonempty")
        alphas = []
        cuts = []
        for alpha, raw in levels:
            alpha = float(alpha)
            if not math.isfinite(alpha) or not 0.0 <= alpha <= 1.0:
                raise DomainError(f"alpha={alpha} outside [0, 1]")
            alphas.append(alpha)
            cuts.append(_as_cut(dim, raw))
        alphas = np.asarray(alphas, dtype=float)
        if np.any(np.diff(alphas) <= 0):
            raise DomainError("alphas must be strictly ascending and unique")
        if alphas[0] != 0.0 or alphas[-1] != 1.0:
            raise MissingBoundaryLevel("levels must include alpha=0 and alpha=1")
        scale = max(1.0, max(c.max_norm() for c in cuts))
        atol = _NEST_TOL * scale
        for i in range(len(cuts) - 1):
            if not cuts[i].contains(cuts[i + 1], atol=atol):
                raise NestednessViolation(
                    f"cut at alpha={alphas[i + 1]:g} is not contained in cut at alpha={alphas[i]:g}"
                )
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "alphas", _readonly(alphas))
        object.__setattr__(self, "cuts", tuple(cuts))

    def __setattr__(self, name, value):
        raise AttributeError("FuzzyNumber is immutable")

    @property
    def levels(self):
        return tuple(zip((float(a) for a in self.alphas), self.cuts))

    @property
    def support(self):
        return self.cuts[0]

    @property
    def core(self):
        return self.cuts[-1]

    def __repr__(self):
        return f"FuzzyNumber(dim={self.dim}, {len(self.cuts)} levels)"


def make_fuzzy_number(dim, levels):
    """Validate and build a FuzzyNumber from (alpha, cut) pairs.

    Raises MissingBoundaryLevel, NestednessViolation, NonConvexCut,
    NonFiniteCoordinate or DomainError depending on the defect.
    """
    return FuzzyNumber(dim, levels)


def cut_at(u, alpha):
    """The alpha-cut of u; between stored levels, the Minkowski convex blend."""
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha={alpha} outside [0, 1]")
    alphas = u.alphas
    i = int(np.searchsorted(alphas, alpha))
    if i < len(alphas) and alphas[i] == alpha:
        return u.cuts[i]
    a0, a1 = alphas[i - 1], alphas[i]
    t = (alpha - a0) / (a1 - a0)
    lo_cut, hi_cut = u.cuts[i - 1], u.cuts[i]
    if u.dim == 1:
        return Cut._raw(
            1,
            lo=(1 - t) * lo_cut.lo + t * hi_cut.lo,
            hi=(1 - t) * lo_cut.hi + t * hi_cut.hi,
        )
    return lo_cut.scaled(1 - t).minkowski(hi_cut.scaled(t))


def support_radius(u, eps=0.0):
    """max{ ||y|| : y in [u]_eps }; eps=0 gives the support radius."""
    return cut_at(u, eps).max_norm()


def add(us):
    """Cutwise Minkowski sum of one or more fuzzy numbers on the merged grid."""
    us = list(us)
    if not us:
        raise DomainError("add needs at least one operand")
    dim = us[0].dim
    for u in us[1:]:
        if u.dim != dim:
            raise DimensionMismatch("all operands of add must share one dimension")
    alphas = np.unique(np.concatenate([u.alphas for u in us]))
    levels = []
    for a in alphas:
        total = cut_at(us[0], a)
        for u in us[1:]:
            total = total.minkowski(cut_at(u, a))
        levels.append((a, total))
    return FuzzyNumber(dim, levels)


def scalar_mul(r, u):
    """Cutwise scaling r*[u]_a; r = 0 collapses to the crisp point at the origin."""
    r = float(r)
    if not math.isfinite(r):
        raise DomainError("scalar must be finite")
    if r == 0.0:
        zero = Cut.interval(0.0, 0.0) if u.dim == 1 else Cut.point((0.0, 0.0))
        return FuzzyNumber(u.dim, [(0.0, zero), (1.0, zero)])
    return FuzzyNumber(u.dim, [(a, c.scaled(r)) for a, c in zip(u.alphas, u.cuts)])


def convex_combo(lam, u, v):
    """The convex mixture lam*u + (1-lam)*v, lam in [0, 1]."""
    lam = float(lam)
    if not 0.0 <= lam <= 1.0:
        raise DomainError(f"mixture weight {lam} outside [0, 1]")
    if u.dim != v.dim:
        raise DimensionMismatch("convex_combo operands must share one dimension")
    return add([scalar_mul(lam, u), scalar_mul(1.0 - lam, v)])


def translate(u, shift):
    """Rigid translation of every cut by a scalar (dim 1) or 2-vector (dim 2)."""
    return FuzzyNumber(u.dim, [(a, c.translated(shift)) for a, c in zip(u.alphas, u.cuts)])


def fuzzy_equal(u, v, tol=ALGEBRA_TOL):
    """Levelwise equality within an absolute per-coordinate tolerance."""
    if u.dim != v.dim or len(u.alphas) != len(v.alphas):
        return False
    if np.any(np.abs(u.alphas - v.alphas) > tol):
        return False
    return all(a.equals(b, tol=tol) for a, b in zip(u.cuts, v.cuts))


# -- JSON interchange --------------------------------------------------------
#
# {"dim": 1|2, "levels": [{"alpha": a, "cut": {"lo":.., "hi":..} |
#                                         {"vertices": [[x, y], ...]}}, ...]}
# with levels ascending in alpha, alphas unique, and levels at 0 and 1.


def cut_to_obj(cut):
    if cut.dim == 1:
        return {"lo": cut.lo, "hi": cut.hi}
    return {"vertices": [[float(x), float(y)] for x, y in cut.vertices]}


def fuzzy_to_dict(u):
    return {
        "dim": u.dim,
        "levels": [
            {"alpha": float(a), "cut": cut_to_obj(c)} for a, c in zip(u.alphas, u.cuts)
        ],
    }


def fuzzy_from_dict(doc):
    """Parse the JSON object form, with the same error taxonomy as make_fuzzy_number."""
    if not isinstance(doc, dict) or "dim" not in doc or "levels" not in doc:
        raise ValueError("invalid fuzzy-number JSON: need keys 'dim' and 'levels'")
    dim = doc["dim"]
    if dim not in (1, 2):
        raise DomainError(f"invalid fuzzy-number JSON: dim must be 1 or 2, got {dim!r}")
    levels = []
    for entry in doc["levels"]:
        if not isinstance(entry, dict) or "alpha" not in entry or "cut" not in entry:
            raise ValueError("invalid fuzzy-number JSON: each level needs 'alpha' and 'cut'")
        cut_obj = entry["cut"]
        if dim == 1:
            if "lo" not in cut_obj or "hi" not in cut_obj:
                raise ValueError("invalid fuzzy-number JSON: dim-1 cut needs 'lo' and 'hi'")
            cut = Cut.interval(cut_obj["lo"], cut_obj["hi"])
        else:
            if "vertices" not in cut_obj:
                raise ValueError("invalid fuzzy-number JSON: dim-2 cut needs 'vertices'")
            cut = Cut.polygon(cut_obj["vertices"])
        levels.append((entry["alpha"], cut))
    return make_fuzzy_number(dim, levels)


def dumps_fuzzy(u, **kwargs):
    return json.dumps(fuzzy_to_dict(u), **kwargs)


def loads_fuzzy(text):
    return fuzzy_from_dict(json.loads(text))


def save_fuzzy(u, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(fuzzy_to_dict(u), fh, indent=2)
        fh.write("\n")


def load_fuzzy(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fuzzy_from_dict(json.load(fh))
