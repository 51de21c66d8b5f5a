"""Outward-rounded interval arithmetic for sign certificates.

A small, self-contained layer used wherever the library promises a
*certified* inequality (sphere separations, bisector-restriction signs,
quartic lower bounds).  Every operation rounds outward with
``math.nextafter`` / ``numpy.nextafter`` so that the computed enclosure
always contains the exact real value, assuming only correctly rounded
IEEE-754 double arithmetic and faithfully rounded libm cos/sin/sqrt
(widened by two ulps to absorb the libm error).

Two APIs are provided:

* a scalar :class:`Interval` class for one-off certificates, and
* vectorized helpers (``v_add``, ``v_mul``, ``v_cos``, ...) acting on
  ``(lo, hi)`` pairs of equal-shape ``numpy`` arrays, used by the
  branch-and-prune searches where millions of boxes are screened.
"""

from __future__ import annotations

import math

import numpy as np

_INF = math.inf

# Over-estimates of pi and pi/2 bracketing the true values.
PI_LO = 3.141592653589793
PI_HI = 3.1415926535897936
HALF_PI_LO = 1.5707963267948966
HALF_PI_HI = 1.5707963267948970


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


class Interval:
    """Closed interval [lo, hi] with outward-rounded arithmetic."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float):
        lo, hi = float(lo), float(hi)
        if not (lo <= hi):
            raise ValueError(f"invalid interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    # -- constructors ------------------------------------------------------
    @classmethod
    def point(cls, x: float) -> "Interval":
        """Degenerate interval for an exactly representable double."""
        return cls(float(x), float(x))

    @classmethod
    def around(cls, x: float, ulps: int = 2) -> "Interval":
        """Interval of +-`ulps` units in the last place around x.

        Use for constants such as sqrt(7)/2 that were computed in double
        precision and carry at most a couple of ulps of error.
        """
        lo = hi = float(x)
        for _ in range(ulps):
            lo, hi = _down(lo), _up(hi)
        return cls(lo, hi)

    @classmethod
    def hull(cls, *xs: float) -> "Interval":
        return cls(min(xs), max(xs))

    # -- basic queries -----------------------------------------------------
    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def is_positive(self) -> bool:
        return self.lo > 0.0

    def is_negative(self) -> bool:
        return self.hi < 0.0

    # -- arithmetic --------------------------------------------------------
    @staticmethod
    def _coerce(x) -> "Interval":
        return x if isinstance(x, Interval) else Interval.point(x)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __add__(self, other) -> "Interval":
        o = Interval._coerce(other)
        return Interval(_down(self.lo + o.lo), _up(self.hi + o.hi))

    __radd__ = __add__

    def __sub__(self, other) -> "Interval":
        return self + (-Interval._coerce(other))

    def __rsub__(self, other) -> "Interval":
        return (-self) + Interval._coerce(other)

    def __mul__(self, other) -> "Interval":
        o = Interval._coerce(other)
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(_down(min(ps)), _up(max(ps)))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Interval":
        o = Interval._coerce(other)
        if o.lo <= 0.0 <= o.hi:
            raise ZeroDivisionError(f"division by interval containing 0: {o}")
        ps = (self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi)
        return Interval(_down(min(ps)), _up(max(ps)))

    def __rtruediv__(self, other) -> "Interval":
        return Interval._coerce(other) / self

    def square(self) -> "Interval":
        a, b = abs(self.lo), abs(self.hi)
        hi = max(a, b)
        lo = 0.0 if self.lo <= 0.0 <= self.hi else min(a, b)
        return Interval(_down(lo * lo), _up(hi * hi))

    def abs(self) -> "Interval":
        a, b = abs(self.lo), abs(self.hi)
        lo = 0.0 if self.lo <= 0.0 <= self.hi else min(a, b)
        return Interval(lo, max(a, b))

    def sqrt(self) -> "Interval":
        if self.hi < 0.0:
            raise ValueError(f"sqrt of negative interval {self}")
        lo = max(self.lo, 0.0)
        return Interval(
            max(0.0, _down(_down(math.sqrt(lo)))),
            _up(_up(math.sqrt(self.hi))),
        )

    def pow4(self) -> "Interval":
        return self.square().square()

    def cos(self) -> "Interval":
        lo, hi = v_cos(np.array([self.lo]), np.array([self.hi]))
        return Interval(float(lo[0]), float(hi[0]))

    def sin(self) -> "Interval":
        lo, hi = v_sin(np.array([self.lo]), np.array([self.hi]))
        return Interval(float(lo[0]), float(hi[0]))


# ---------------------------------------------------------------------------
# Vectorized interval helpers on (lo, hi) ndarray pairs.
# ---------------------------------------------------------------------------

def _vdown(x: np.ndarray) -> np.ndarray:
    return np.nextafter(x, -_INF)


def _vup(x: np.ndarray) -> np.ndarray:
    return np.nextafter(x, _INF)


def v_add(alo, ahi, blo, bhi):
    return _vdown(alo + blo), _vup(ahi + bhi)


def v_sub(alo, ahi, blo, bhi):
    return _vdown(alo - bhi), _vup(ahi - blo)


def v_neg(alo, ahi):
    return -ahi, -alo


def v_mul(alo, ahi, blo, bhi):
    p1, p2, p3, p4 = alo * blo, alo * bhi, ahi * blo, ahi * bhi
    lo = np.minimum(np.minimum(p1, p2), np.minimum(p3, p4))
    hi = np.maximum(np.maximum(p1, p2), np.maximum(p3, p4))
    return _vdown(lo), _vup(hi)


def v_scale(alo, ahi, c: float):
    """Multiply by an exact scalar constant."""
    if c >= 0:
        return _vdown(alo * c), _vup(ahi * c)
    return _vdown(ahi * c), _vup(alo * c)


def v_scale_iv(alo, ahi, c: Interval):
    """Multiply by a scalar Interval constant (e.g. one ulp around sqrt7)."""
    return v_mul(alo, ahi, np.full_like(alo, c.lo), np.full_like(ahi, c.hi))


def v_shift(alo, ahi, c: float):
    return _vdown(alo + c), _vup(ahi + c)


def v_square(alo, ahi):
    a, b = np.abs(alo), np.abs(ahi)
    hi = np.maximum(a, b)
    lo = np.where((alo <= 0.0) & (ahi >= 0.0), 0.0, np.minimum(a, b))
    return _vdown(lo * lo), _vup(hi * hi)


def v_abs(alo, ahi):
    a, b = np.abs(alo), np.abs(ahi)
    lo = np.where((alo <= 0.0) & (ahi >= 0.0), 0.0, np.minimum(a, b))
    return lo, np.maximum(a, b)


def v_sqrt(alo, ahi):
    """Enclosure of sqrt, clipping slightly negative lower bounds to zero.

    Boxes whose lower bound dips below zero only through outward rounding
    still get a valid enclosure of sqrt(max(x, 0)); callers are expected
    to prune boxes that are entirely negative beforehand.
    """
    lo = np.sqrt(np.clip(alo, 0.0, None))
    hi = np.sqrt(np.clip(ahi, 0.0, None))
    return _widen2(lo, -_INF), _widen2(hi, _INF)


def _widen2(x: np.ndarray, direction: float) -> np.ndarray:
    return np.nextafter(np.nextafter(x, direction), direction)


def v_cos(alo, ahi):
    """Enclosure of cos over [alo, ahi] (element-wise).

    The extremum tests are widened by a small slack, which can only grow
    the enclosure; endpoint values are widened by two ulps to cover the
    libm rounding error.
    """
    alo = np.asarray(alo, dtype=float)
    ahi = np.asarray(ahi, dtype=float)
    two_pi = 2.0 * math.pi
    slack = 1e-9 + 1e-15 * np.maximum(np.abs(alo), np.abs(ahi))
    wide = (ahi - alo) >= two_pi
    # cos attains +1 at 2*pi*n
    n_lo = np.ceil((alo - slack) / two_pi)
    n_hi = np.floor((ahi + slack) / two_pi)
    has_max = wide | (n_lo <= n_hi)
    # cos attains -1 at pi + 2*pi*n
    m_lo = np.ceil((alo - math.pi - slack) / two_pi)
    m_hi = np.floor((ahi - math.pi + slack) / two_pi)
    has_min = wide | (m_lo <= m_hi)
    ca = np.cos(alo)
    cb = np.cos(ahi)
    lo = _widen2(np.minimum(ca, cb), -_INF)
    hi = _widen2(np.maximum(ca, cb), _INF)
    lo = np.where(has_min, -1.0, lo)
    hi = np.where(has_max, 1.0, hi)
    return np.clip(lo, -1.0, 1.0), np.clip(hi, -1.0, 1.0)


def v_sin(alo, ahi):
    """Enclosure of sin via sin(x) = cos(x - pi/2) on a widened argument."""
    alo = np.asarray(alo, dtype=float)
    ahi = np.asarray(ahi, dtype=float)
    return v_cos(_vdown(alo - HALF_PI_HI), _vup(ahi - HALF_PI_LO))


def split_intervals(segs: np.ndarray) -> np.ndarray:
    """Bisect each 1-D segment.  `segs` has shape (n, 2); returns (2n, 2)."""
    lo, hi = segs.T
    mid = 0.5 * (lo + hi)
    first = segs.copy()
    second = segs.copy()
    first[:, 1] = mid
    second[:, 0] = mid
    return np.concatenate([first, second], axis=0)


def split_boxes(boxes: np.ndarray) -> np.ndarray:
    """Bisect each 2-D box along its wider side.

    `boxes` has shape (n, 4) with columns (xlo, xhi, ylo, yhi); returns
    shape (2n, 4).
    """
    xlo, xhi, ylo, yhi = boxes.T
    wx = xhi - xlo
    wy = yhi - ylo
    xmid = 0.5 * (xlo + xhi)
    ymid = 0.5 * (ylo + yhi)
    first = boxes.copy()
    second = boxes.copy()
    cut_x = wx >= wy
    first[cut_x, 1] = xmid[cut_x]
    second[cut_x, 0] = xmid[cut_x]
    first[~cut_x, 3] = ymid[~cut_x]
    second[~cut_x, 2] = ymid[~cut_x]
    return np.concatenate([first, second], axis=0)
