"""Isometric spheres of the two groups and their certified contact pattern.

For g in SU(2,1) not fixing the point at infinity, the isometric sphere
I(g) is the Cygan sphere with

    center  [conj(g32)/conj(g31),  2 Im(conj(g33)/conj(g31))],
    radius  sqrt(2 / |g31|).

The three families studied here are indexed by the conjugating power k
of the unipotent translation A:

* ``plus_k``  = I(A^k B A^-k)
* ``minus_k`` = I(A^k B^-1 A^-k)
* ``hat_k``   = I(A^k (B^-1 A B^-1) A^-k)   (34p only)

Pairwise relations are decided by closed-form fourth-power center
distances, certified with outward-rounded intervals; tangencies are
*verified against supplied points*, never discovered numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

import numpy as np

from .heisenberg import (
    CyganSphere,
    HeisenbergPoint,
    cygan_distance4,
    heis_mul,
)
from .hermitian import herm_inner, lift_infinity
from .intervals import Interval
from .isometry import Isometry, boundary_action, fixes_infinity
from .reps import GroupRep, evaluate_word, heis_of_lift

SQRT3 = math.sqrt(3.0)
SQRT7 = math.sqrt(7.0)


@dataclass(frozen=True)
class SphereLabel:
    """Family name ('plus', 'minus' or 'hat') and translation index k."""

    family: str
    k: int

    def __post_init__(self):
        if self.family not in ("plus", "minus", "hat"):
            raise ValueError(f"unknown family {self.family!r}")

    def __str__(self) -> str:
        return f"{self.family}[{self.k}]"


@dataclass(frozen=True)
class IsometricSphere:
    """A labelled isometric sphere with its defining word."""

    word: str
    center: HeisenbergPoint
    radius: float
    label: SphereLabel | None = None

    def as_cygan(self) -> CyganSphere:
        return CyganSphere(self.center, self.radius)


def isometric_sphere(
    g: Isometry, word: str = "", label: SphereLabel | None = None
) -> IsometricSphere:
    """Isometric sphere of an element not fixing the point at infinity."""
    if fixes_infinity(g):
        raise ValueError("element fixes the point at infinity; no isometric sphere")
    m = g.matrix
    g31 = np.conj(m[2, 0])
    center = HeisenbergPoint(np.conj(m[2, 1]) / g31, 2.0 * (np.conj(m[2, 2]) / g31).imag)
    radius = math.sqrt(2.0 / abs(m[2, 0]))
    return IsometricSphere(word, center, radius, label)


def family_word(label: SphereLabel) -> str:
    """Defining word of the labelled sphere (conjugate of B, B^-1 or B^-1AB^-1)."""
    core = {"plus": "B", "minus": "b", "hat": "bAb"}[label.family]
    k = label.k
    if k >= 0:
        return "A" * k + core + "a" * k
    return "a" * (-k) + core + "A" * (-k)


def sphere_family(rep: GroupRep, k_range: int = 8) -> list[IsometricSphere]:
    """All labelled spheres with |k| <= k_range for the given group."""
    families = ("plus", "minus", "hat") if rep.label == "34p" else ("plus", "minus")
    out = []
    for fam in families:
        for k in range(-k_range, k_range + 1):
            label = SphereLabel(fam, k)
            word = family_word(label)
            out.append(isometric_sphere(evaluate_word(rep, word), word, label))
    return out


def expected_center(group: str, label: SphereLabel) -> HeisenbergPoint:
    """Closed-form center of the labelled sphere.

    These rational/radical expressions are what the interval certificates
    run on; sphere_family reproduces them from the matrices.
    """
    k = label.k
    if group == "3pp":
        if label.family == "plus":
            return HeisenbergPoint(-2.0 * k, 8.0 * k / SQRT3)
        if label.family == "minus":
            return HeisenbergPoint(-2.0 * k - 2j / SQRT3, 0.0)
        raise ValueError("3pp has no hat family")
    if group == "34p":
        if label.family == "plus":
            return HeisenbergPoint((-3.0 * k - SQRT7 * k * 1j) / 2.0, 2.0 * SQRT7 * k)
        if label.family == "minus":
            return HeisenbergPoint(
                (-3.0 * k + 1.0 - SQRT7 * (k + 1.0) * 1j) / 2.0, 0.0
            )
        return HeisenbergPoint(
            (-3.0 * k - 1.0 - (k + 1.0) * SQRT7 * 1j) / 2.0, (k + 1.0) * SQRT7
        )
    raise ValueError(f"unknown group {group!r}")


def expected_radius(group: str, family: str) -> float:
    if group == "3pp":
        return 2.0 / SQRT3
    if family == "hat":
        return 1.0
    return math.sqrt(2.0)


# --------------------------------------------------------------------------
# closed-form fourth-power center distances
# --------------------------------------------------------------------------

def center_distance4_poly(group: str, fam1: str, fam2: str, m: int) -> tuple:
    """Coefficients (c4, c2, c1, c0, extra) of d^4 between family centers.

    Returns a pair (poly_in_m, sqrt7_flag): for the separations used here
    d^4 as a function of the index difference m has one of the exact forms

      3pp  plus/plus, minus/minus : 16 m^4 + (64/3) m^2
      3pp  plus/minus             : (4 m^2 + 4/3)^2
      34p  plus/plus, minus/minus : 16 m^4 + 28 m^2
      34p  plus/minus   (m=j-k)   : (4 m^2 - 2 m + 2)^2
      34p  hat/hat                : 16 m^4
      34p  hat_j/plus_k (m=k-j)   : (4 m^2 - 5 m + 2)^2 + 7 (m-1)^2
      34p  hat_j/minus_k (m=k-j)  : (4 m^2 - 3 m + 1)^2 + 7 m^2

    The orientation of m for mixed families is the one stated above.
    """
    pair = frozenset((fam1, fam2))
    if group == "3pp":
        if pair in (frozenset(("plus",)), frozenset(("minus",))):
            return 16.0 * m ** 4 + (64.0 / 3.0) * m ** 2
        return (4.0 * m ** 2 + 4.0 / 3.0) ** 2
    if pair in (frozenset(("plus",)), frozenset(("minus",))):
        return 16.0 * m ** 4 + 28.0 * m ** 2
    if pair == frozenset(("plus", "minus")):
        return (4.0 * m ** 2 - 2.0 * m + 2.0) ** 2
    if pair == frozenset(("hat",)):
        return 16.0 * m ** 4
    if pair == frozenset(("hat", "plus")):
        return (4.0 * m ** 2 - 5.0 * m + 2.0) ** 2 + 7.0 * (m - 1.0) ** 2
    if pair == frozenset(("hat", "minus")):
        return (4.0 * m ** 2 - 3.0 * m + 1.0) ** 2 + 7.0 * m ** 2
    raise ValueError(f"unknown pair {pair}")


def pair_index(group: str, l1: SphereLabel, l2: SphereLabel) -> int:
    """Index difference m in the orientation used by center_distance4_poly."""
    if l1.family == l2.family:
        return l2.k - l1.k
    # mixed: orientation (plus_j, minus_k) -> m = j - k; (hat_j, X_k) -> m = k - j
    if "hat" in (l1.family, l2.family):
        if l1.family == "hat":
            return l2.k - l1.k
        return l1.k - l2.k
    if l1.family == "plus":
        return l1.k - l2.k
    return l2.k - l1.k


def center_distance4_interval(group: str, l1: SphereLabel, l2: SphereLabel) -> Interval:
    """Certified enclosure of d^4 between the two labelled centers.

    Works directly on the closed-form center coordinates, seeding the
    irrational entries with 2-ulp intervals.
    """
    c1 = expected_center(group, l1)
    c2 = expected_center(group, l2)
    x1, y1 = Interval.around(c1.z.real), Interval.around(c1.z.imag)
    x2, y2 = Interval.around(c2.z.real), Interval.around(c2.z.imag)
    t1, t2 = Interval.around(c1.t), Interval.around(c2.t)
    dz2 = (x1 - x2).square() + (y1 - y2).square()
    # Im(conj(z2) z1) = x2 y1 - y2 x1
    nu = t1 - t2 + 2.0 * (x2 * y1 - y2 * x1)
    return dz2.square() + nu.square()


class Side(Enum):
    INTERIOR = "interior"
    ON = "on"
    EXTERIOR = "exterior"


def point_side(p, g: Isometry, tol: float = 1e-9) -> Side:
    """Side of the isometric sphere I(g) a lifted point is on.

    Compares |<p, q_inf>| with |<p, g^{-1} q_inf>|; the exterior is the
    side of the point at infinity.  ``p`` may be any lift (Null or
    horospherical).
    """
    p = np.asarray(p, dtype=complex)
    qinf = lift_infinity()
    a = abs(herm_inner(p, qinf))
    b = abs(herm_inner(p, g.inverse().apply(qinf)))
    scale = max(a, b, 1e-300)
    if abs(a - b) <= tol * scale:
        return Side.ON
    return Side.EXTERIOR if a < b else Side.INTERIOR


@dataclass(frozen=True)
class PairRelation:
    """Relation of two isometric spheres.

    kind 'disjoint': `gap` is a certified positive enclosure of
    d^4 - (r1+r2)^4.  kind 'tangent': `point` is the verified common
    point.  kind 'overlapping': `witness` is a boundary point strictly
    inside both.
    """

    kind: str
    gap: Interval | None = None
    point: HeisenbergPoint | None = None
    witness: HeisenbergPoint | None = None


def radius_sum4_interval(group: str, fam1: str, fam2: str) -> Interval:
    r1 = Interval.around(expected_radius(group, fam1))
    r2 = Interval.around(expected_radius(group, fam2))
    return (r1 + r2).pow4()


def pair_relation(
    group: str,
    l1: SphereLabel,
    l2: SphereLabel,
    tangency_hint: HeisenbergPoint | None = None,
    tol: float = 1e-12,
) -> PairRelation:
    """Certified relation between two labelled spheres of one group.

    Disjointness is certified by intervals on the closed-form center
    distance.  A tangency is only reported when a hint point is supplied
    and verified to lie on both spheres with the center distance exactly
    the sum of radii.  Otherwise an overlap witness is searched on the
    center segment (and its vertical perturbations) and verified.
    """
    d4 = center_distance4_interval(group, l1, l2)
    thr = radius_sum4_interval(group, l1.family, l2.family)
    gap = d4 - thr
    if gap.is_positive():
        return PairRelation("disjoint", gap=gap)
    if tangency_hint is not None:
        s1 = CyganSphere(expected_center(group, l1), expected_radius(group, l1.family))
        s2 = CyganSphere(expected_center(group, l2), expected_radius(group, l2.family))
        on1 = abs(cygan_distance4(s1.center, tangency_hint) - s1.radius ** 4)
        on2 = abs(cygan_distance4(s2.center, tangency_hint) - s2.radius ** 4)
        d4_mid = cygan_distance4(s1.center, s2.center)
        sum4 = (s1.radius + s2.radius) ** 4
        if on1 <= tol * 10 and on2 <= tol * 10 and abs(d4_mid - sum4) <= 1e-9:
            return PairRelation("tangent", point=tangency_hint)
        raise ValueError(
            f"tangency hint rejected for {l1}/{l2}: residuals {on1:.2e}, {on2:.2e}"
        )
    witness = _overlap_witness(group, l1, l2)
    if witness is None:
        raise ValueError(
            f"{l1}/{l2}: not certified disjoint and no overlap witness found "
            "(a tangency requires an explicit hint)"
        )
    return PairRelation("overlapping", witness=witness)


def _overlap_witness(
    group: str, l1: SphereLabel, l2: SphereLabel
) -> HeisenbergPoint | None:
    """A boundary point strictly inside both spheres, if one can be found."""
    s1 = CyganSphere(expected_center(group, l1), expected_radius(group, l1.family))
    s2 = CyganSphere(expected_center(group, l2), expected_radius(group, l2.family))
    # scan the boundary sphere of one for a point strictly inside the other,
    # then pull slightly towards the scanned sphere's center so both margins
    # come out strictly negative
    for sa, sb in ((s1, s2), (s2, s1)):
        r = sa.radius
        alpha = np.linspace(-math.pi / 2, math.pi / 2, 61)[:, None]
        gamma = np.linspace(0.0, 2.0 * math.pi, 121, endpoint=False)[None, :]
        zloc = r * np.sqrt(np.clip(np.cos(alpha), 0.0, None)) * np.exp(1j * gamma)
        tloc = (r * r * np.sin(alpha)) * np.ones_like(gamma)
        # translate by sa.center and evaluate the margin against sb in bulk
        za, ta = sa.center.z, sa.center.t
        z = za + zloc
        t = ta + tloc - 2.0 * (np.conj(za) * zloc).imag
        zb, tb, rb = sb.center.z, sb.center.t, sb.radius
        nu = t - tb + 2.0 * (np.conj(zb) * z).imag
        margin = np.abs(z - zb) ** 4 + nu * nu - rb ** 4
        if margin.min() >= 0.0:
            continue
        ia, ig = np.unravel_index(int(np.argmin(margin)), margin.shape)
        best_local = HeisenbergPoint(zloc[ia, ig], tloc[ia, ig])
        for lam in (0.999, 0.995, 0.99, 0.97):
            inner = HeisenbergPoint(lam * best_local.z, lam * lam * best_local.t)
            p = heis_mul(sa.center, inner)
            if s1.boundary_margin(p) < 0.0 and s2.boundary_margin(p) < 0.0:
                return p
    return None


def tangency_table(rep: GroupRep) -> dict[frozenset, HeisenbergPoint]:
    """The known tangencies, keyed by label pairs, valued by their points.

    Each point is a parabolic fixed point of the group: the four 3pp
    tangencies sit at the fixed points of the four length-2 words, and
    the 34p ones at the fixed point of AB and at the translate of the
    fixed point of B^-1AB^-1.
    """
    fp = {k: heis_of_lift(v) for k, v in rep.named_fixed_points.items()}
    if rep.label == "3pp":
        return {
            frozenset((SphereLabel("plus", 0), SphereLabel("minus", 1))): fp["AB"],
            frozenset((SphereLabel("plus", 0), SphereLabel("minus", -1))): fp["bA"],
            frozenset((SphereLabel("plus", 1), SphereLabel("minus", 0))): fp["Ba"],
            frozenset((SphereLabel("plus", -1), SphereLabel("minus", 0))): fp["BA"],
        }
    return {
        frozenset((SphereLabel("plus", 0), SphereLabel("minus", 1))): fp["AB"],
        frozenset((SphereLabel("hat", 0), SphereLabel("hat", 1))): fp["AbAba"],
        frozenset((SphereLabel("hat", -1), SphereLabel("hat", 0))): fp["bAb"],
    }


def translate_tangency(
    rep: GroupRep, pair: frozenset, k: int
) -> tuple[frozenset, HeisenbergPoint]:
    """Image of a base tangency under A^k (labels shift, point maps)."""
    base = tangency_table(rep)[pair]
    labels = sorted(pair, key=lambda l: (l.family, l.k))
    shifted = frozenset(SphereLabel(l.family, l.k + k) for l in labels)
    img = boundary_action(rep.A.power(k), base)
    return shifted, img


def contact_graph(rep: GroupRep, k_range: int = 8) -> dict[frozenset, PairRelation]:
    """Certified pairwise relations for all labelled spheres with |k| < k_range.

    Every pair is classified as disjoint (interval certificate), tangent
    (verified hint) or overlapping (verified witness).
    """
    group = rep.label
    families = ("plus", "minus", "hat") if group == "34p" else ("plus", "minus")
    labels = [
        SphereLabel(f, k) for f in families for k in range(-k_range + 1, k_range)
    ]
    base_tangencies = tangency_table(rep)
    # propagate tangencies through the A-translation so every translated
    # pair in range has its hint available
    hints: dict[frozenset, HeisenbergPoint] = {}
    for pair in base_tangencies:
        for k in range(-k_range, k_range + 1):
            shifted, img = translate_tangency(rep, pair, k)
            hints[shifted] = img
    out: dict[frozenset, PairRelation] = {}
    for l1, l2 in combinations(labels, 2):
        pair = frozenset((l1, l2))
        out[pair] = pair_relation(group, l1, l2, tangency_hint=hints.get(pair))
    return out


def expected_exceptions(group: str, label: SphereLabel) -> set[SphereLabel]:
    """Labels whose sphere meets the given one in more than a point.

    3pp: plus_k overlaps only minus_k.  34p: the index-difference rules
    read off the closed-form distances (see center_distance4_poly).
    """
    k = label.k
    if group == "3pp":
        other = "minus" if label.family == "plus" else "plus"
        return {SphereLabel(other, k)}
    fam = label.family
    if fam == "plus":
        return {
            SphereLabel("plus", k - 1),
            SphereLabel("plus", k + 1),
            SphereLabel("minus", k),
            SphereLabel("minus", k - 1),
            SphereLabel("hat", k),
            SphereLabel("hat", k - 1),
        }
    if fam == "minus":
        return {
            SphereLabel("minus", k - 1),
            SphereLabel("minus", k + 1),
            SphereLabel("plus", k),
            SphereLabel("plus", k + 1),
            SphereLabel("hat", k),
            SphereLabel("hat", k - 1),
        }
    return {
        SphereLabel("plus", k),
        SphereLabel("plus", k + 1),
        SphereLabel("minus", k),
        SphereLabel("minus", k + 1),
    }


def expected_tangencies(group: str, label: SphereLabel) -> set[SphereLabel]:
    k = label.k
    if group == "3pp":
        other = "minus" if label.family == "plus" else "plus"
        return {SphereLabel(other, k - 1), SphereLabel(other, k + 1)}
    if label.family == "plus":
        return {SphereLabel("minus", k + 1)}
    if label.family == "minus":
        return {SphereLabel("plus", k - 1)}
    return {SphereLabel("hat", k - 1), SphereLabel("hat", k + 1)}


def mapping_check(
    rep: GroupRep, label: SphereLabel, n_samples: int = 100, seed: int = 7
) -> dict[str, float]:
    """g maps I(g) onto I(g^{-1}) and the exterior onto the interior.

    Samples points on the sphere of I(g) (mapped points must land on
    I(g^{-1})) and strictly outside it (mapped points must land strictly
    inside).  Returns the worst membership residual for the first check
    and the worst (most positive) interior margin for the second; the
    margin must come back negative.
    """
    word = family_word(label)
    g = evaluate_word(rep, word)
    sph = isometric_sphere(g, word, label)
    inv_word = word[::-1].swapcase()
    g_inv_sph = isometric_sphere(evaluate_word(rep, inv_word))
    rng = np.random.default_rng(seed)
    worst_on = 0.0
    worst_margin = -math.inf
    r = sph.radius
    r4_img = g_inv_sph.radius ** 4
    for _ in range(n_samples):
        theta = rng.uniform(0, 2 * math.pi)
        alpha = math.asin(rng.uniform(-1.0, 1.0))
        zloc = r * math.sqrt(math.cos(alpha)) * np.exp(1j * theta)
        tloc = r * r * math.sin(alpha)
        # on the sphere: image must satisfy the image sphere equation
        p = heis_mul(sph.center, HeisenbergPoint(zloc, tloc))
        img = boundary_action(g, p)
        worst_on = max(
            worst_on, abs(cygan_distance4(g_inv_sph.center, img) - r4_img)
        )
        # strictly outside (local dilation by 1.5): image strictly inside
        lam = 1.5
        p_out = heis_mul(sph.center, HeisenbergPoint(lam * zloc, lam * lam * tloc))
        img_out = boundary_action(g, p_out)
        worst_margin = max(
            worst_margin, cygan_distance4(g_inv_sph.center, img_out) - r4_img
        )
    return {"on_residual": worst_on, "exterior_to_interior_margin": worst_margin}
