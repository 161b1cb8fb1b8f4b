"""Planar convex-geometry primitives on raw coordinate arrays.

Polygons are (k, 2) float arrays in CCW order without repeated vertices;
k == 1 and k == 2 encode the degenerate cases (points and segments).
Nothing in this module knows about fuzzy numbers; higher layers own
validation and dimension dispatch.
"""

import numpy as np

__all__ = [
    "coord_scale",
    "convex_hull",
    "canonical_loop",
    "polygon_orientation",
    "polygon_area",
    "polygon_perimeter",
    "scale_polygon",
    "minkowski_sum",
    "dist_points_to_segments",
    "points_in_polygon",
    "dist_points_to_polygon",
    "polygon_edge_points",
    "max_norm",
]


def coord_scale(arr):
    """Magnitude of the data, used to scale absolute tolerances."""
    a = np.asarray(arr, dtype=float)
    if a.size == 0:
        return 1.0
    return float(np.max(np.abs(a)))


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points):
    """CCW convex hull by Andrew's monotone chain, collinear points dropped.

    The chain starts at the lexicographically smallest vertex, so equal
    point sets always produce identical arrays.  Degenerate inputs yield
    1-point or 2-point hulls instead of raising.
    """
    pts = np.unique(np.asarray(points, dtype=float), axis=0)
    if len(pts) <= 2:
        return pts
    eps = 1e-12 * max(1.0, coord_scale(pts) ** 2)

    def build(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= eps:
                chain.pop()
            chain.append(p)
        return chain

    lower = build(pts)
    upper = build(pts[::-1])
    hull = lower[:-1] + upper[:-1]
    return np.array(hull)


def canonical_loop(verts):
    """Rotate a vertex loop so the lexicographically smallest vertex leads."""
    verts = np.asarray(verts, dtype=float)
    if len(verts) <= 1:
        return verts
    idx = int(np.lexsort((verts[:, 1], verts[:, 0]))[0])
    return np.roll(verts, -idx, axis=0)


def polygon_orientation(verts):
    """Twice the signed area; positive means CCW."""
    x, y = verts[:, 0], verts[:, 1]
    return float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def polygon_area(verts):
    if len(verts) < 3:
        return 0.0
    return abs(polygon_orientation(verts)) / 2.0


def polygon_perimeter(verts):
    if len(verts) == 1:
        return 0.0
    closed = np.vstack([verts, verts[:1]]) if len(verts) > 2 else verts
    d = np.diff(closed, axis=0)
    return float(np.hypot(d[:, 0], d[:, 1]).sum())


def scale_polygon(r, verts):
    """Scale a CCW polygon about the origin, restoring canonical order.

    Negative r is a point reflection (a half-turn), which preserves
    orientation, so the vertex order stays CCW either way.
    """
    if r == 0.0:
        return np.zeros((1, 2))
    out = np.asarray(verts, dtype=float) * r
    return canonical_loop(out)


def minkowski_sum(pa, pb):
    """Minkowski sum of two convex polygons (degenerate shapes allowed).

    Pairwise vertex sums followed by a hull; at the vertex counts used
    here (tens) this is both simpler and more robust than edge merging.
    """
    sums = (pa[:, None, :] + pb[None, :, :]).reshape(-1, 2)
    return convex_hull(sums)


def dist_points_to_segments(P, A, B):
    """Distances from points (N, d) to segments given by A, B (E, d) -> (N, E)."""
    P = np.atleast_2d(np.asarray(P, dtype=float))
    A = np.atleast_2d(np.asarray(A, dtype=float))
    B = np.atleast_2d(np.asarray(B, dtype=float))
    AB = B - A
    L2 = np.einsum("ed,ed->e", AB, AB)
    L2safe = np.where(L2 > 0.0, L2, 1.0)
    out = np.empty((len(P), len(A)))
    step = max(1, int(4_000_000 // max(1, len(A))))
    for i in range(0, len(P), step):
        blk = P[i : i + step]
        AP = blk[:, None, :] - A[None, :, :]
        t = np.clip(np.einsum("ned,ed->ne", AP, AB) / L2safe, 0.0, 1.0)
        diff = AP - t[:, :, None] * AB[None, :, :]
        out[i : i + step] = np.sqrt(np.einsum("ned,ned->ne", diff, diff))
    return out


def points_in_polygon(P, verts, atol=0.0):
    """Mask of points inside (or within atol of) a CCW convex polygon, k >= 3."""
    P = np.atleast_2d(np.asarray(P, dtype=float))
    a = verts
    b = np.roll(verts, -1, axis=0)
    e = b - a
    elen = np.hypot(e[:, 0], e[:, 1])
    px = P[:, None, 0] - a[None, :, 0]
    py = P[:, None, 1] - a[None, :, 1]
    signed = (e[None, :, 0] * py - e[None, :, 1] * px) / np.where(elen > 0, elen, 1.0)
    return np.all(signed >= -atol, axis=1)


def dist_points_to_polygon(P, verts):
    """Euclidean distance from points to a solid convex polygon (0 inside)."""
    P = np.atleast_2d(np.asarray(P, dtype=float))
    k = len(verts)
    if k == 1:
        return np.hypot(P[:, 0] - verts[0, 0], P[:, 1] - verts[0, 1])
    a = verts
    b = np.roll(verts, -1, axis=0)
    if k == 2:
        a, b = a[:1], b[:1]
    d = dist_points_to_segments(P, a, b).min(axis=1)
    if k >= 3:
        d[points_in_polygon(P, verts)] = 0.0
    return d


def polygon_edge_points(verts, spacing):
    """Boundary samples at gaps <= spacing, every vertex included."""
    k = len(verts)
    if k == 1:
        return verts.copy()
    if k == 2:
        a, b = verts[0], verts[1]
        n = max(1, int(np.ceil(np.hypot(*(b - a)) / spacing)))
        ts = np.linspace(0.0, 1.0, n + 1)
        return a + ts[:, None] * (b - a)
    pieces = []
    b = np.roll(verts, -1, axis=0)
    for p, q in zip(verts, b):
        n = max(1, int(np.ceil(np.hypot(*(q - p)) / spacing)))
        ts = np.arange(n) / n
        pieces.append(p + ts[:, None] * (q - p))
    return np.concatenate(pieces)


def max_norm(verts):
    """Largest Euclidean norm over a vertex array."""
    verts = np.atleast_2d(np.asarray(verts, dtype=float))
    return float(np.max(np.hypot(verts[:, 0], verts[:, 1])))
