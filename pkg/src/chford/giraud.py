"""Giraud-disk charts on ridge tori and certified sign bounds on them.

The intersection of two isometric spheres I(g), I(h) is scanned by the
torus

    V(z1, z2) = (q x r) + z1 (r x p) + z2 (p x q),   |z1| = |z2| = 1,

where p, q, r are lifts of the point at infinity, g^{-1}(infinity) and
h^{-1}(infinity), and x is the Hermitian cross product.  Points of the
ridge correspond to parameters where <V, V> < 0 (the Giraud disk).
Whether a third sphere covers the ridge is decided by the sign of a
bisector margin |<V, u>|^2 - |<V, v>|^2, which for fixed one angle is a
sinusoid in the other — so slice extrema and zero crossings have closed
forms, and two-variable sign claims are certified by interval
branch-and-prune over the torus.

All margins depend on the chosen lifts only up to a positive scale; the
lifts are pinned as the exact matrix images of (1, 0, 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hermitian import HVector, cross, herm_inner, lift_infinity
from .intervals import (
    Interval,
    split_boxes,
    v_add,
    v_cos,
    v_mul,
    v_scale,
    v_scale_iv,
    v_shift,
    v_sin,
    v_sub,
)
from .isometry import Isometry
from .reps import GroupRep, evaluate_word
from .ford import SphereLabel, family_word

SQRT7 = Interval.around(math.sqrt(7.0))


def _norm_angle(t: float) -> float:
    return (t + math.pi) % (2.0 * math.pi) - math.pi


@dataclass(frozen=True)
class TorusPoint:
    """Angles (theta1, theta2), each normalized to [-pi, pi)."""

    theta1: float
    theta2: float

    def __post_init__(self):
        object.__setattr__(self, "theta1", _norm_angle(float(self.theta1)))
        object.__setattr__(self, "theta2", _norm_angle(float(self.theta2)))


@dataclass(frozen=True)
class GiraudChart:
    """Precomputed cross products for the torus of a sphere pair."""

    label: str
    p: HVector
    q: HVector
    r: HVector
    qr: HVector
    rp: HVector
    pq: HVector

    @classmethod
    def from_lifts(cls, label: str, p, q, r) -> "GiraudChart":
        p, q, r = HVector(p), HVector(q), HVector(r)
        return cls(label, p, q, r, cross(q, r), cross(r, p), cross(p, q))


def chart_for_pair(rep: GroupRep, l1: SphereLabel, l2: SphereLabel) -> GiraudChart:
    """Chart of I(g) and I(h) for the labelled spheres (p is the infinity lift)."""
    qinf = lift_infinity()
    g = evaluate_word(rep, family_word(l1))
    h = evaluate_word(rep, family_word(l2))
    q = g.inverse().apply(qinf)
    r = h.inverse().apply(qinf)
    return GiraudChart.from_lifts(f"{l1}:{l2}", qinf, q, r)


def cut_lift(rep: GroupRep, label: SphereLabel) -> HVector:
    """Lift of g^{-1}(infinity) for the labelled cutting sphere I(g)."""
    g = evaluate_word(rep, family_word(label))
    return g.inverse().apply(lift_infinity())


def V(chart: GiraudChart, z1: complex, z2: complex) -> HVector:
    return HVector(chart.qr + z1 * chart.rp + z2 * chart.pq)


def v_at(chart: GiraudChart, tp: TorusPoint) -> HVector:
    return V(chart, np.exp(1j * tp.theta1), np.exp(1j * tp.theta2))


def norm_on_torus(chart: GiraudChart, t1: float, t2: float) -> float:
    """Re <V, V> at the torus point (negative on the Giraud disk)."""
    v = V(chart, np.exp(1j * t1), np.exp(1j * t2))
    return herm_inner(v, v).real


def bisector_margin(chart: GiraudChart, u, v, t1: float, t2: float) -> float:
    """|<V, u>|^2 - |<V, v>|^2; positive on the u-side of the bisector."""
    w = V(chart, np.exp(1j * t1), np.exp(1j * t2))
    return abs(herm_inner(w, u)) ** 2 - abs(herm_inner(w, v)) ** 2


def sinusoid_coefficients(f) -> tuple[float, float, float]:
    """(c0, a, b) with f(t) = c0 + a cos t + b sin t, from three evaluations."""
    f0, fh, fp = f(0.0), f(math.pi / 2.0), f(math.pi)
    c0 = 0.5 * (f0 + fp)
    return c0, f0 - c0, fh - c0


def solve_margin_curve(
    chart: GiraudChart, u, v, t1: float, tol: float = 1e-8
) -> list[TorusPoint]:
    """Zeros in t2 of the margin along the slice t1 = const.

    The margin restricted to the slice is a sinusoid, so the roots are
    closed-form; each returned point is re-verified to |margin| <= tol.
    """
    c0, a, b = sinusoid_coefficients(lambda t2: bisector_margin(chart, u, v, t1, t2))
    r = math.hypot(a, b)
    out: list[TorusPoint] = []
    if r < 1e-15:
        return out
    x = -c0 / r
    if abs(x) > 1.0:
        return out
    phi = math.atan2(b, a)
    for t2 in (phi + math.acos(max(-1.0, min(1.0, x))), phi - math.acos(max(-1.0, min(1.0, x)))):
        tp = TorusPoint(t1, t2)
        if abs(bisector_margin(chart, u, v, tp.theta1, tp.theta2)) <= tol:
            if not any(abs(_norm_angle(tp.theta2 - o.theta2)) < 1e-12 for o in out):
                out.append(tp)
    return out


def solve_norm_curve(chart: GiraudChart, t1: float, tol: float = 1e-8) -> list[TorusPoint]:
    """Zeros in t2 of <V, V> along the slice t1 = const (disk boundary points)."""
    c0, a, b = sinusoid_coefficients(lambda t2: norm_on_torus(chart, t1, t2))
    r = math.hypot(a, b)
    out: list[TorusPoint] = []
    if r < 1e-15:
        return out
    x = -c0 / r
    if abs(x) > 1.0:
        return out
    phi = math.atan2(b, a)
    for t2 in (phi + math.acos(max(-1.0, min(1.0, x))), phi - math.acos(max(-1.0, min(1.0, x)))):
        tp = TorusPoint(t1, t2)
        if abs(norm_on_torus(chart, tp.theta1, tp.theta2)) <= tol:
            if not any(abs(_norm_angle(tp.theta2 - o.theta2)) < 1e-12 for o in out):
                out.append(tp)
    return out


def slice_constrained_max(chart: GiraudChart, fn, t1: float) -> tuple[float, float | None]:
    """Max of the sinusoid fn(t1, .) over {t2 : <V,V>(t1, t2) <= 0}.

    Returns (-inf, None) when the slice misses the Giraud disk.  Both
    the constraint and the target are sinusoids in t2, so the maximum is
    either the unconstrained sinusoid peak (if feasible) or attained at
    an arc endpoint of the constraint.
    """
    c0, a, b = sinusoid_coefficients(lambda t2: norm_on_torus(chart, t1, t2))
    r = math.hypot(a, b)
    if c0 - r > 0.0:
        return -math.inf, None
    d0, p_, q_ = sinusoid_coefficients(lambda t2: fn(t1, t2))
    rf = math.hypot(p_, q_)
    t2s = math.atan2(q_, p_)
    if c0 + a * math.cos(t2s) + b * math.sin(t2s) <= 0.0:
        return d0 + rf, t2s
    phi = math.atan2(b, a)
    x = max(-1.0, min(1.0, -c0 / r))
    best, bt = -math.inf, None
    for t2 in (phi + math.acos(x), phi - math.acos(x)):
        val = d0 + p_ * math.cos(t2) + q_ * math.sin(t2)
        if val > best:
            best, bt = val, t2
    return best, bt


def observed_max_on_disk(
    chart: GiraudChart, fn, n_slices: int = 20001, refine_iters: int = 120
) -> tuple[float, TorusPoint]:
    """Numerically observed max of fn over the Giraud disk (slice + golden search)."""
    ts = np.linspace(-math.pi, math.pi, n_slices)
    vals = np.array([slice_constrained_max(chart, fn, t)[0] for t in ts])
    i = int(np.argmax(vals))
    lo = ts[max(i - 2, 0)]
    hi = ts[min(i + 2, n_slices - 1)]
    gr = (math.sqrt(5.0) - 1.0) / 2.0
    a_, b_ = lo, hi
    for _ in range(refine_iters):
        c1 = b_ - gr * (b_ - a_)
        c2 = a_ + gr * (b_ - a_)
        if slice_constrained_max(chart, fn, c1)[0] >= slice_constrained_max(chart, fn, c2)[0]:
            b_ = c2
        else:
            a_ = c1
    t1m = 0.5 * (a_ + b_)
    fm, t2m = slice_constrained_max(chart, fn, t1m)
    return fm, TorusPoint(t1m, t2m if t2m is not None else 0.0)


def disk_connectivity(chart: GiraudChart, n: int = 512) -> int:
    """Number of connected components of {<V,V> < 0} on an n x n torus grid."""
    ts = np.linspace(-math.pi, math.pi, n, endpoint=False)
    t1g, t2g = np.meshgrid(ts, ts, indexing="ij")
    z1 = np.exp(1j * t1g)
    z2 = np.exp(1j * t2g)
    # <V,V> expanded over the chart's cross products
    base = chart.qr
    vv = np.zeros_like(t1g)
    parts = (base[None, None, :] + z1[..., None] * np.asarray(chart.rp)[None, None, :]
             + z2[..., None] * np.asarray(chart.pq)[None, None, :])
    from .hermitian import FORM_MATRIX

    hv = parts @ FORM_MATRIX.T
    vv = np.real(np.einsum("ijk,ijk->ij", np.conj(parts), hv))
    mask = vv < 0.0
    # flood fill with torus wraparound
    labels = np.full(mask.shape, -1, dtype=int)
    comp = 0
    for i0 in range(n):
        for j0 in range(n):
            if mask[i0, j0] and labels[i0, j0] < 0:
                stack = [(i0, j0)]
                labels[i0, j0] = comp
                while stack:
                    i, j = stack.pop()
                    for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                        ii, jj = (i + di) % n, (j + dj) % n
                        if mask[ii, jj] and labels[ii, jj] < 0:
                            labels[ii, jj] = comp
                            stack.append((ii, jj))
                comp += 1
    return comp


# --------------------------------------------------------------------------
# Closed forms for the two certified 34p ridge computations
# --------------------------------------------------------------------------

def covering_margin(t1: float, t2: float):
    """Half bisector margin of the plus0/plus1 torus against the minus0 sphere.

    Closed form (verified against the chart in the tests):

      sqrt7 sin(t2-t1) - sqrt7 sin t2 - cos(t1-t2) - 3 cos t2
      - 2 cos t1 + 2 sqrt7 sin t1 + 5

    Negative values mean the torus point is strictly interior to the
    minus0 sphere; a certified negative upper bound over the whole
    Giraud disk shows the plus0/plus1 ridge is empty.
    """
    s7 = math.sqrt(7.0)
    return (
        s7 * np.sin(t2 - t1)
        - s7 * np.sin(t2)
        - np.cos(t1 - t2)
        - 3.0 * np.cos(t2)
        - 2.0 * np.cos(t1)
        + 2.0 * s7 * np.sin(t1)
        + 5.0
    )


def covering_disk_norm(t1: float, t2: float):
    """<V, V> on the plus0/plus1 torus (closed form, verified in tests)."""
    s7 = math.sqrt(7.0)
    return (
        13.0
        - 4.0 * np.cos(t1)
        + 2.0 * s7 * np.sin(t1)
        - 2.0 * s7 * np.sin(t2)
        - 2.0 * np.cos(t1 - t2)
        - 4.0 * np.cos(t2)
    )


def _cov_margin_interval(b):
    """Vectorized interval enclosure of covering_margin on boxes (n, 4)."""
    t1lo, t1hi, t2lo, t2hi = b[:, 0], b[:, 1], b[:, 2], b[:, 3]
    c1 = v_cos(t1lo, t1hi)
    s1 = v_sin(t1lo, t1hi)
    c2 = v_cos(t2lo, t2hi)
    s2 = v_sin(t2lo, t2hi)
    d_lo, d_hi = v_sub(t2lo, t2hi, t1lo, t1hi)       # t2 - t1
    s21 = v_sin(d_lo, d_hi)
    c12 = v_cos(*v_sub(t1lo, t1hi, t2lo, t2hi))      # cos(t1 - t2)
    acc = v_scale_iv(*s21, SQRT7)
    acc = v_add(*acc, *v_scale_iv(*v_scale(*s2, -1.0), SQRT7))
    acc = v_add(*acc, *v_scale(*c12, -1.0))
    acc = v_add(*acc, *v_scale(*c2, -3.0))
    acc = v_add(*acc, *v_scale(*c1, -2.0))
    acc = v_add(*acc, *v_scale_iv(*v_scale(*s1, 2.0), SQRT7))
    return v_shift(*acc, 5.0)


def _cov_norm_interval(b):
    """Vectorized interval enclosure of covering_disk_norm on boxes (n, 4)."""
    t1lo, t1hi, t2lo, t2hi = b[:, 0], b[:, 1], b[:, 2], b[:, 3]
    c1 = v_cos(t1lo, t1hi)
    s1 = v_sin(t1lo, t1hi)
    c2 = v_cos(t2lo, t2hi)
    s2 = v_sin(t2lo, t2hi)
    c12 = v_cos(*v_sub(t1lo, t1hi, t2lo, t2hi))
    acc = v_scale(*c1, -4.0)
    acc = v_add(*acc, *v_scale_iv(*v_scale(*s1, 2.0), SQRT7))
    acc = v_add(*acc, *v_scale_iv(*v_scale(*s2, -2.0), SQRT7))
    acc = v_add(*acc, *v_scale(*c12, -2.0))
    acc = v_add(*acc, *v_scale(*c2, -4.0))
    return v_shift(*acc, 13.0)


@dataclass(frozen=True)
class CertResult:
    """Outcome of a branch-and-prune sign certification."""

    verdict: str            # "certified" or "undecided"
    bound: float            # certified upper bound of the target on the region
    boxes_examined: int
    depth: int


def certify_upper_bound(
    region_interval,
    target_interval,
    threshold: float,
    grid_n: int = 1024,
    max_depth: int = 12,
) -> CertResult:
    """Certify target <= threshold on {region <= 0} within [-pi, pi]^2.

    `region_interval` and `target_interval` map an (n, 4) array of boxes
    to (lo, hi) arrays.  Boxes with region_lo > 0 are pruned; boxes with
    target_hi <= threshold are accepted; the rest are bisected, up to
    `max_depth` rounds past the initial grid.
    """
    edges = np.linspace(-math.pi, math.pi, grid_n + 1)
    lo_e, hi_e = edges[:-1], edges[1:]
    t1lo, t2lo = np.meshgrid(lo_e, lo_e, indexing="ij")
    t1hi, t2hi = np.meshgrid(hi_e, hi_e, indexing="ij")
    boxes = np.stack(
        [t1lo.ravel(), t1hi.ravel(), t2lo.ravel(), t2hi.ravel()], axis=1
    )
    examined = 0
    bound = -math.inf
    depth = 0
    for depth in range(max_depth + 1):
        examined += len(boxes)
        rlo, _ = region_interval(boxes)
        keep = rlo <= 0.0
        boxes = boxes[keep]
        if len(boxes) == 0:
            break
        tlo, thi = target_interval(boxes)
        undecided = thi > threshold
        if bound > -math.inf or not undecided.all():
            bound = max(bound, float(thi[~undecided].max(initial=-math.inf)))
        boxes = boxes[undecided]
        if len(boxes) == 0:
            break
        if depth == max_depth:
            return CertResult("undecided", float(thi[undecided].max()), examined, depth)
        boxes = split_boxes(boxes)
    return CertResult("certified", bound, examined, depth)


def certify_ridge_covered(
    threshold: float = -0.68, grid_n: int = 1024, max_depth: int = 12
) -> CertResult:
    """Certified: covering_margin <= threshold on the plus0/plus1 Giraud disk."""
    return certify_upper_bound(
        _cov_norm_interval, _cov_margin_interval, threshold, grid_n, max_depth
    )


# --------------------------------------------------------------------------
# Sector decomposition of the plus0/minus-1 ridge
# --------------------------------------------------------------------------

def sector_margin(t1: float, t2: float):
    """Margin of the plus0/minus-1 torus against the hat-1 sphere, divided by 8.

    Closed form -1 - cos(t1-t2) + cos t1 + cos t2, which factors as
    -4 cos((t1-t2)/2) sin(t1/2) sin(t2/2).
    """
    return -1.0 - np.cos(t1 - t2) + np.cos(t1) + np.cos(t2)


def sector_margin_factored(t1: float, t2: float):
    return -4.0 * np.cos((t1 - t2) / 2.0) * np.sin(t1 / 2.0) * np.sin(t2 / 2.0)


def sector_disk_norm(t1: float, t2: float):
    """<V, V> on the plus0/minus-1 torus: 6 - 2cos(t1-t2) - 4cos t1 - 4cos t2."""
    return 6.0 - 2.0 * np.cos(t1 - t2) - 4.0 * np.cos(t1) - 4.0 * np.cos(t2)


@dataclass(frozen=True)
class SectorDecomposition:
    """Zero set of the sector margin inside the Giraud disk.

    Two coordinate segments crossing at the origin; the third factor's
    zero branch (t2 = t1 - pi mod 2pi) stays outside the disk, where
    <V, V> is identically 8.
    """

    segments: tuple
    endpoint: float                  # arccos(1/3)
    factor_identity_residual: float
    branch_norm_residual: float      # max |<V,V> - 8| on t2 = t1 - pi
    crossing_point_checks: dict


def sector_decomposition(rep: GroupRep) -> SectorDecomposition:
    """Certify the sector structure of the plus0/minus-1 ridge cut by hat-1.

    * the margin factors exactly (residual reported on a dense grid);
    * the zero set inside the disk is {t1 = 0} union {t2 = 0}, clipped
      at +-arccos(1/3) where the disk boundary is reached;
    * the branch t1 - t2 = +-pi carries <V, V> = 8, outside the disk;
    * the ridge point p* = (-sqrt2/2 - i sqrt2/2, 1, 1) of the two
      bounding spheres maps under B to the exterior of the plus1 sphere.
    """
    ts = np.linspace(-math.pi, math.pi, 601)
    t1g, t2g = np.meshgrid(ts, ts, indexing="ij")
    res_fact = float(
        np.max(np.abs(sector_margin(t1g, t2g) - sector_margin_factored(t1g, t2g)))
    )
    res_branch = float(np.max(np.abs(sector_disk_norm(ts, ts - math.pi) - 8.0)))
    endpoint = math.acos(1.0 / 3.0)
    segments = (
        ("theta1=0", (-endpoint, endpoint)),
        ("theta2=0", (-endpoint, endpoint)),
    )
    # endpoint: <V,V>(0, t2) = 2 - 6 cos t2 vanishes at t2 = +-arccos(1/3)
    end_res = abs(sector_disk_norm(0.0, endpoint))
    # p* checks
    s2 = math.sqrt(2.0)
    pstar = HVector([-s2 / 2 - 1j * s2 / 2, 1.0, 1.0])
    qinf = lift_infinity()
    b = rep.B
    on_plus0 = abs(
        abs(herm_inner(pstar, qinf)) - abs(herm_inner(pstar, b.inverse().apply(qinf)))
    )
    g_m1 = evaluate_word(rep, family_word(SphereLabel("minus", -1)))
    on_minus_m1 = abs(
        abs(herm_inner(pstar, qinf)) - abs(herm_inner(pstar, g_m1.inverse().apply(qinf)))
    )
    bp = b.apply(pstar)
    g_p1 = evaluate_word(rep, family_word(SphereLabel("plus", 1)))
    ext_margin = abs(herm_inner(bp, qinf)) - abs(herm_inner(bp, g_p1.inverse().apply(qinf)))
    checks = {
        "pstar_on_plus0": float(on_plus0),
        "pstar_on_minus-1": float(on_minus_m1),
        "endpoint_norm_residual": float(end_res),
        "B(pstar)_exterior_plus1_margin": float(ext_margin),  # negative = exterior
    }
    return SectorDecomposition(segments, endpoint, res_fact, res_branch, checks)
