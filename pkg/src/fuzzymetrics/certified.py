"""Certified scalar values: a float plus a guaranteed enclosure half-width.

Every approximate metric in this package returns a CertifiedValue whose
interval [value - half_width, value + half_width] is guaranteed to contain
the true quantity.  The helpers below propagate enclosures through the
monotone operations the inequality campaigns need (max, sum, scaling,
root-sum-square), always rounding the interval outward.
"""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class CertifiedValue:
    value: float
    half_width: float

    def __post_init__(self):
        object.__setattr__(self, "value", float(self.value))
        object.__setattr__(self, "half_width", float(self.half_width))
        if not math.isfinite(self.value) or not math.isfinite(self.half_width):
            raise ValueError("certified value must be finite")
        if self.half_width < 0.0:
            raise ValueError("half_width must be >= 0")

    @property
    def lower(self):
        return self.value - self.half_width

    @property
    def upper(self):
        return self.value + self.half_width

    def contains(self, x, slack=0.0):
        return self.lower - slack <= x <= self.upper + slack

    def overlaps(self, other, slack=0.0):
        return self.lower <= other.upper + slack and other.lower <= self.upper + slack

    def __str__(self):
        return f"{self.value:.9g} ± {self.half_width:.3g}"


def exact(x):
    return CertifiedValue(float(x), 0.0)


def from_bounds(lo, hi):
    """Enclosure from a guaranteed lower/upper bracket."""
    lo, hi = float(lo), float(hi)
    if hi < lo:
        lo, hi = hi, lo
    return CertifiedValue(0.5 * (lo + hi), 0.5 * (hi - lo))


def c_add(*vals):
    return CertifiedValue(sum(v.value for v in vals), sum(v.half_width for v in vals))


def c_scale(k, a):
    """Scale by a nonnegative constant."""
    if k < 0:
        raise ValueError("c_scale expects k >= 0")
    return CertifiedValue(k * a.value, k * a.half_width)


def c_max(a, b):
    lo = max(a.lower, b.lower)
    hi = max(a.upper, b.upper)
    return from_bounds(lo, hi)


def c_hypot(a, b):
    """Enclosure of sqrt(a^2 + b^2) for nonnegative quantities."""
    lo = math.hypot(max(a.lower, 0.0), max(b.lower, 0.0))
    hi = math.hypot(max(a.upper, 0.0), max(b.upper, 0.0))
    return from_bounds(lo, hi)
