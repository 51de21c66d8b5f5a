"""Hermitian form of signature (2,1) on C^3 and the induced projective geometry.

The ball model used throughout the library is the set of complex lines
spanned by vectors of negative square norm for the anti-diagonal form

    J = [[0, 0, 1],
         [0, 1, 0],
         [1, 0, 0]],

with inner product ``<v, w> = conj(w)^T J v``.  Boundary points away from
the distinguished point at infinity (lift ``(1, 0, 0)``) correspond to
null vectors normalized to third coordinate 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

FORM_MATRIX = np.array([[0, 0, 1], [0, 1, 0], [1, 0, 0]], dtype=complex)

NULL_TOL = 1e-9


class PointClass(Enum):
    NEGATIVE = "negative"   # inside the ball
    NULL = "null"           # on the boundary sphere
    POSITIVE = "positive"   # polar vectors of complex lines


class HVector(np.ndarray):
    """A vector of C^3 carrying the signature-(2,1) form; subclasses ndarray.

    Construction coerces to complex dtype and shape (3,).  All numpy
    arithmetic is available; the extra methods interpret the vector
    projectively.
    """

    def __new__(cls, data) -> "HVector":
        arr = np.asarray(data, dtype=complex).reshape(3)
        return arr.view(cls)

    def herm_sq(self) -> float:
        return herm_inner(self, self).real

    def classify(self, tol: float = NULL_TOL) -> PointClass:
        return classify(self, tol)

    def proj_equal(self, other, tol: float = 1e-9) -> bool:
        return proj_equal(self, other, tol)

    def normalized_last(self) -> "HVector":
        """Scale so the third coordinate is 1 (error when it vanishes)."""
        if abs(self[2]) < 1e-13 * float(np.linalg.norm(self)):
            raise ValueError("third coordinate vanishes; point at infinity")
        return HVector(self / self[2])


@dataclass(frozen=True)
class HermitianForm:
    """The form matrix together with its tolerance conventions."""

    matrix: np.ndarray = None
    null_tol: float = NULL_TOL

    def __post_init__(self):
        if self.matrix is None:
            object.__setattr__(self, "matrix", FORM_MATRIX)

    def inner(self, v, w) -> complex:
        return complex(np.conj(np.asarray(w, dtype=complex)) @ (self.matrix @ np.asarray(v, dtype=complex)))

    def classify(self, v, tol: float | None = None) -> PointClass:
        t = self.null_tol if tol is None else tol
        return classify(v, t)


DEFAULT_FORM = HermitianForm()


def herm_inner(v, w) -> complex:
    """<v, w> = conj(w)^T J v; linear in v, conjugate-linear in w."""
    v = np.asarray(v, dtype=complex)
    w = np.asarray(w, dtype=complex)
    return complex(np.conj(w) @ (FORM_MATRIX @ v))


def classify(v, tol: float = NULL_TOL) -> PointClass:
    """Sign class of <v, v> with a scale-invariant null band.

    The square norm is compared against ``tol`` times the Euclidean
    square norm, so scaling the vector never changes the class.
    """
    v = np.asarray(v, dtype=complex)
    scale = float(np.vdot(v, v).real)
    if scale == 0.0:
        raise ValueError("cannot classify the zero vector")
    q = herm_inner(v, v)
    if abs(q.imag) > tol * scale * 10.0:
        raise ValueError(f"<v,v> not real: {q}")
    if abs(q.real) <= tol * scale:
        return PointClass.NULL
    return PointClass.NEGATIVE if q.real < 0 else PointClass.POSITIVE


def cross(p, q) -> HVector:
    """Hermitian cross product: the vector orthogonal to both p and q.

    For the anti-diagonal form J (an involution), the polar vector of
    span(p, q) is J @ conj(p x q) with x the Euclidean cross product.
    """
    p = np.asarray(p, dtype=complex)
    q = np.asarray(q, dtype=complex)
    return HVector(FORM_MATRIX @ np.conj(np.cross(p, q)))


def lift_boundary(z: complex, t: float) -> HVector:
    """Null lift of the finite boundary point [z, t]."""
    return HVector([(-abs(z) ** 2 + 1j * t) / 2.0, z, 1.0])


def lift_infinity() -> HVector:
    """Lift of the distinguished boundary point at infinity."""
    return HVector([1.0, 0.0, 0.0])


def lift_horospherical(z: complex, t: float, u: float) -> HVector:
    """Lift of the point at height u >= 0 above [z, t] (u = 0 on the boundary)."""
    if u < 0:
        raise ValueError(f"height must be >= 0, got {u}")
    return HVector([(-abs(z) ** 2 - u + 1j * t) / 2.0, z, 1.0])


def proj_equal(p, q, tol: float = 1e-9) -> bool:
    """Projective equality: p and q span the same complex line."""
    p = np.asarray(p, dtype=complex)
    q = np.asarray(q, dtype=complex)
    np_, nq = np.linalg.norm(p), np.linalg.norm(q)
    if np_ == 0 or nq == 0:
        raise ValueError("zero vector")
    # |p x q| vanishes iff the vectors are parallel
    return float(np.linalg.norm(np.cross(p / np_, q / nq))) <= tol


def bergman_distance(p, q) -> float:
    """Distance in the ball metric normalized by cosh^2(d/2) = |<p,q>|^2 / (<p,p><q,q>).

    Both arguments must be Negative vectors.
    """
    pp = herm_inner(p, p).real
    qq = herm_inner(q, q).real
    if pp >= 0 or qq >= 0:
        raise ValueError("bergman_distance needs two Negative vectors")
    pq = herm_inner(p, q)
    c2 = (pq * np.conj(pq)).real / (pp * qq)
    # c2 = cosh^2(d/2) >= 1 up to roundoff
    c = math.sqrt(max(c2, 1.0))
    return 2.0 * math.acosh(c)
