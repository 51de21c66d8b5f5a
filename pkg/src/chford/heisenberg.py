"""Heisenberg group structure on the punctured boundary sphere.

Finite boundary points are pairs [z, t] with the group product

    [z, t] . [w, s] = [z + w, t + s - 2 Im(conj(z) w)],

realized by unipotent upper-triangular matrices on null lifts.  The
point at infinity is a distinguished sentinel (:data:`Q_INFINITY`),
never a coordinate pair.  The Cygan metric, its extension into the
ball, Cygan spheres, geographic coordinates on them, and polar vectors
of complex circles all live here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hermitian import HVector, PointClass, classify, herm_inner, lift_boundary


class _PointAtInfinity:
    """Singleton sentinel for the distinguished boundary point."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Q_INFINITY"


Q_INFINITY = _PointAtInfinity()


@dataclass(frozen=True)
class HeisenbergPoint:
    """Finite boundary point [z, t]."""

    z: complex
    t: float

    def __post_init__(self):
        if not (np.isfinite(self.z) and np.isfinite(self.t)):
            raise ValueError(f"non-finite Heisenberg point ({self.z}, {self.t})")
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "t", float(self.t))

    def lift(self) -> HVector:
        return lift_boundary(self.z, self.t)

    def inverse(self) -> "HeisenbergPoint":
        return HeisenbergPoint(-self.z, -self.t)

    def close_to(self, other: "HeisenbergPoint", tol: float = 1e-9) -> bool:
        return abs(self.z - other.z) <= tol and abs(self.t - other.t) <= tol


ORIGIN = HeisenbergPoint(0.0, 0.0)


def heis_mul(a: HeisenbergPoint, b: HeisenbergPoint) -> HeisenbergPoint:
    """Group product [z,t].[w,s] = [z+w, t+s-2Im(conj(z) w)]."""
    return HeisenbergPoint(a.z + b.z, a.t + b.t - 2.0 * (np.conj(a.z) * b.z).imag)


def heis_inverse(a: HeisenbergPoint) -> HeisenbergPoint:
    return a.inverse()


def cygan_distance(p: HeisenbergPoint, q: HeisenbergPoint) -> float:
    """|2 <p_lift, q_lift>|^(1/2); the left-invariant metric on finite points."""
    return math.sqrt(abs(2.0 * herm_inner(p.lift(), q.lift())))


def cygan_distance4(p: HeisenbergPoint, q: HeisenbergPoint) -> float:
    """Fourth power of the Cygan distance, |z1-z2|^4 + (t1-t2+2Im(conj(z2) z1))^2."""
    dz2 = abs(p.z - q.z) ** 2
    nu = p.t - q.t + 2.0 * (np.conj(q.z) * p.z).imag
    return dz2 * dz2 + nu * nu


def extended_cygan_distance(p, q) -> float:
    """Extended metric on horospherical triples (z, t, u) with u >= 0.

    Fourth power: (|z1-z2|^2 + |u1-u2|)^2 + (t1-t2+2Im(conj(z2) z1))^2.
    Restricts to cygan_distance when both heights vanish.
    """
    z1, t1, u1 = complex(p[0]), float(p[1]), float(p[2])
    z2, t2, u2 = complex(q[0]), float(q[1]), float(q[2])
    if u1 < 0 or u2 < 0:
        raise ValueError("heights must be >= 0")
    a = abs(z1 - z2) ** 2 + abs(u1 - u2)
    nu = t1 - t2 + 2.0 * (np.conj(z2) * z1).imag
    return (a * a + nu * nu) ** 0.25


def on_cygan_sphere(p, r: float, tol: float = 1e-9) -> bool:
    """Membership of the triple (z, t, u) on the sphere of radius r about the origin.

    The sphere is (|z|^2 + u)^2 + t^2 = r^4; general centers are handled
    by translating with heis_mul first (see CyganSphere.contains).
    """
    z, t, u = complex(p[0]), float(p[1]), float(p[2])
    lhs = (abs(z) ** 2 + u) ** 2 + t * t
    return abs(lhs - r ** 4) <= tol * max(1.0, r ** 4)


@dataclass(frozen=True)
class CyganSphere:
    """Cygan sphere with a finite center and positive radius."""

    center: HeisenbergPoint
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"radius must be > 0, got {self.radius}")

    def contains_boundary(self, p: HeisenbergPoint, tol: float = 1e-9) -> bool:
        """Is the boundary point on the sphere?"""
        q = heis_mul(self.center.inverse(), p)
        return on_cygan_sphere((q.z, q.t, 0.0), self.radius, tol)

    def contains(self, z: complex, t: float, u: float, tol: float = 1e-9) -> bool:
        """Is the horospherical point (z, t, u) on the sphere?"""
        q = heis_mul(self.center.inverse(), HeisenbergPoint(z, t))
        return on_cygan_sphere((q.z, q.t, u), self.radius, tol)

    def boundary_margin(self, p: HeisenbergPoint) -> float:
        """d^4(center, p) - radius^4: negative inside, positive outside."""
        return cygan_distance4(self.center, p) - self.radius ** 4


def geographic_point(r: float, alpha: float, beta: float, w: float) -> HVector:
    """Point of the radius-r Cygan sphere about the origin in geographic coordinates.

    Lift: (-r^2 e^{-i alpha} / 2,  r w e^{i(-alpha/2 + beta)},  1) with
    alpha in [-pi/2, pi/2], beta in [0, pi) (normalized mod pi on entry),
    |w| <= sqrt(cos alpha).  The result is Null exactly on the two caps
    w = +-sqrt(cos alpha) and Negative in between (height
    u = r^2 (cos alpha - w^2) above the boundary).
    """
    if not r > 0:
        raise ValueError(f"radius must be > 0, got {r}")
    if not -math.pi / 2 <= alpha <= math.pi / 2:
        raise ValueError(f"alpha out of [-pi/2, pi/2]: {alpha}")
    beta = beta % math.pi
    wmax = math.sqrt(max(math.cos(alpha), 0.0))
    if abs(w) > wmax + 1e-12:
        raise ValueError(f"|w| = {abs(w)} exceeds sqrt(cos alpha) = {wmax}")
    return HVector(
        [
            -(r ** 2) * np.exp(-1j * alpha) / 2.0,
            r * w * np.exp(1j * (-alpha / 2.0 + beta)),
            1.0,
        ]
    )


def vertical_projection(p: HeisenbergPoint) -> complex:
    """Projection [z, t] -> z onto the horizontal complex line."""
    return p.z


def ccircle_polar(center: HeisenbergPoint, r: float) -> HVector:
    """Polar (Positive) vector of the complex circle with given center and radius.

    For center [x + yi, t]:  ((r^2 - x^2 - y^2 + it)/2,  x + yi,  1).
    Null lifts of circle points are orthogonal to it.
    """
    if not r > 0:
        raise ValueError(f"radius must be > 0, got {r}")
    v = HVector(
        [
            (r ** 2 - abs(center.z) ** 2 + 1j * center.t) / 2.0,
            center.z,
            1.0,
        ]
    )
    if classify(v) is not PointClass.POSITIVE:
        raise AssertionError("polar vector of a complex circle must be Positive")
    return v
