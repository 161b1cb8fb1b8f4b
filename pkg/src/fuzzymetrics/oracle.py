"""Independent brute-force reference implementations of the metrics.

These deliberately share no geometry machinery with the fast paths: sets are
materialized by membership-test rasterization (a point (x, a) is kept iff
x lies in the cut at a) and Hausdorff distances come from an exhaustive
pairwise scan over the rasters.  They exist to cross-validate the fast
metrics and to supply frozen reference values for tests; being ~100x slower
than the fast path is acceptable and enforced only by the point budget.

Raster grids are anchored per slice (slice endpoints / polygon boundaries
are always included) so that degenerate slices -- crisp points, thin
polygons -- are never missed; a bare joint regular grid would silently skip
them and break the covering guarantee behind the error bound 2*h*sqrt(p+1).
"""

import math

import numpy as np
from scipy.spatial.distance import cdist

from .certified import CertifiedValue
from .core import cut_at
from .errors import DimensionMismatch, DomainError, ResourceLimit

__all__ = ["DEFAULT_POINT_BUDGET", "oracle_D", "oracle_Gamma", "oracle_dq", "oracle_dq_certified"]

DEFAULT_POINT_BUDGET = 5_000_000


def _alpha_grid(h):
    return np.linspace(0.0, 1.0, math.ceil(1.0 / h) + 1)


def _grid_1d(lo, hi, h):
    n = 1 if hi <= lo else math.ceil((hi - lo) / h) + 1
    return np.linspace(lo, hi, n)


def _raster_slice_2d(cut, h):
    """Membership raster of one polygon slice: boundary anchors plus grid."""
    verts = cut.vertices
    from . import _polyops as po

    parts = [po.polygon_edge_points(verts, h)]
    if len(verts) >= 3:
        lo, hi = verts.min(axis=0), verts.max(axis=0)
        xs = np.arange(lo[0], hi[0] + h, h)
        ys = np.arange(lo[1], hi[1] + h, h)
        grid = np.stack(np.meshgrid(xs, ys, indexing="ij"), axis=-1).reshape(-1, 2)
        keep = po.points_in_polygon(grid, verts)
        if keep.any():
            parts.append(grid[keep])
    return np.concatenate(parts)


def _estimate_raster(u, h):
    """Upper estimate of raster size, from the support slice (slices only shrink)."""
    n_slices = len(_alpha_grid(h)) + len(u.alphas)
    sup = u.support
    if u.dim == 1:
        return n_slices * ((sup.hi - sup.lo) / h + 2.0)
    from . import _polyops as po

    verts = sup.vertices
    area = po.polygon_area(verts)
    perim = po.polygon_perimeter(verts)
    return n_slices * (area / h**2 + perim / h + len(verts) + 4)


def _raster_send(u, h):
    alphas = np.unique(np.concatenate([_alpha_grid(h), u.alphas]))
    pieces = []
    for a in alphas:
        c = cut_at(u, a)
        if u.dim == 1:
            xs = _grid_1d(c.lo, c.hi, h)
            pieces.append(np.column_stack([xs, np.full(len(xs), a)]))
        else:
            xy = _raster_slice_2d(c, h)
            pieces.append(np.column_stack([xy, np.full(len(xy), a)]))
    return np.concatenate(pieces)


def _directed_scan(P, Q):
    """sup over P of the min distance to Q, by exhaustive pairwise scan."""
    best = 0.0
    step = max(1, int(4_000_000 // max(1, len(Q))))
    for i in range(0, len(P), step):
        d = cdist(P[i : i + step], Q)
        best = max(best, float(d.min(axis=1).max()))
    return best


def _check_pair(u, v, h):
    if u.dim != v.dim:
        raise DimensionMismatch("oracle operands must share one dimension")
    if h <= 0.0:
        raise DomainError("raster pitch h must be > 0")


def oracle_D(u, v, h, budget=DEFAULT_POINT_BUDGET):
    """Brute-force sendograph metric: raster both sendographs, scan exhaustively.

    The enclosure half-width 2*h*sqrt(p+1) is conservative: each raster
    covers its sendograph within about 1.2*h (snap down one alpha slab, then
    across within the anchored slice grid), and the scan value differs from
    the true Hausdorff distance by at most the two covering radii.
    """
    _check_pair(u, v, h)
    if _estimate_raster(u, h) + _estimate_raster(v, h) > budget:
        raise ResourceLimit(f"oracle raster would exceed the budget of {budget:g} points")
    P = _raster_send(u, h)
    Q = _raster_send(v, h)
    value = max(_directed_scan(P, Q), _directed_scan(Q, P))
    return CertifiedValue(value, 2.0 * h * math.sqrt(u.dim + 1))


def oracle_Gamma(u, v, h, window_pad=1.0, budget=DEFAULT_POINT_BUDGET):
    """Brute-force endograph metric on a finite window, without the clamp trick.

    Both endographs are rasterized inside W = (joint support box inflated by
    window_pad) x [0, 1], including the full alpha=0 plane slice of W.  Any
    pad >= 1 leaves the value unchanged: every relevant distance is <= 1
    because the whole alpha=0 plane belongs to both endographs.
    """
    _check_pair(u, v, h)
    if window_pad < 1.0:
        raise DomainError("window_pad must be >= 1 to leave the metric unchanged")
    lo_u, hi_u = u.support.bounds()
    lo_v, hi_v = v.support.bounds()
    lo = np.minimum(lo_u, lo_v) - window_pad
    hi = np.maximum(hi_u, hi_v) + window_pad
    if u.dim == 1:
        plane = _grid_1d(lo[0], hi[0], h).reshape(-1, 1)
    else:
        xs = _grid_1d(lo[0], hi[0], h)
        ys = _grid_1d(lo[1], hi[1], h)
        plane = np.stack(np.meshgrid(xs, ys, indexing="ij"), axis=-1).reshape(-1, 2)
    est = _estimate_raster(u, h) + _estimate_raster(v, h) + 2 * len(plane)
    if est > budget:
        raise ResourceLimit(f"oracle raster would exceed the budget of {budget:g} points")
    base = np.column_stack([plane, np.zeros(len(plane))])
    P = np.concatenate([_raster_send(u, h), base])
    Q = np.concatenate([_raster_send(v, h), base])
    value = max(_directed_scan(P, Q), _directed_scan(Q, P))
    return CertifiedValue(value, 2.0 * h * math.sqrt(u.dim + 1))


def oracle_dq(u, v, q=2.0, n=100_000):
    """Midpoint-rule reference for the L_q metric with exact per-slice Hausdorff.

    Returns a bare float; convergence is checked by doubling n.  Independence
    from metric_dq lies in the quadrature: uniform midpoints that ignore the
    stored grid versus grid-refined bracketing sums.
    """
    return oracle_dq_certified(u, v, q=q, n=n).value


def _blend_speed(u):
    """Exact Lipschitz constant of the cut map alpha -> [u]_alpha.

    Support functions are linear in alpha on each stored segment, so
    H([u]_a, [u]_b) = |a-b| * H(c_i, c_{i+1}) / (a_{i+1} - a_i) there.
    """
    from .geometry import hausdorff_cuts

    speed = 0.0
    for a0, a1, c0, c1 in zip(u.alphas[:-1], u.alphas[1:], u.cuts[:-1], u.cuts[1:]):
        speed = max(speed, hausdorff_cuts(c0, c1) / (a1 - a0))
    return speed


def oracle_dq_certified(u, v, q=2.0, n=100_000):
    """oracle_dq with a rigorous error budget for the midpoint rule.

    The integrand f(a) = H([u]_a, [v]_a) is Lipschitz with constant at most
    the summed blend speeds of u and v, so g = f^q is Lipschitz with
    constant q * f_max^(q-1) * L_f and the composite midpoint error is at
    most L_g / (4n).  A difference-based (Richardson) budget is not sound
    here: nearly coincident stored levels can alias identically at n and 2n.
    """
    if u.dim != v.dim:
        raise DimensionMismatch("oracle operands must share one dimension")
    if q < 1.0:
        raise DomainError("q must be >= 1")
    from .geometry import hausdorff_cuts

    n = int(n)
    mids = (np.arange(n) + 0.5) / n
    vals = np.array([hausdorff_cuts(cut_at(u, a), cut_at(v, a)) for a in mids])
    integral = float(np.mean(vals**q))
    lip_f = _blend_speed(u) + _blend_speed(v)
    f_max = float(vals.max()) + lip_f / (2.0 * n)
    lip_g = q * f_max ** (q - 1.0) * lip_f if f_max > 0 else 0.0
    err = lip_g / (4.0 * n)
    lo = max(integral - err, 0.0) ** (1.0 / q)
    hi = (integral + err) ** (1.0 / q)
    return CertifiedValue(0.5 * (lo + hi), 0.5 * (hi - lo) + 1e-12)
