"""Certified elements of SU(2,1): construction, classification, boundary action.

An :class:`Isometry` wraps a 3x3 complex matrix that has been checked to
preserve the Hermitian form and to have determinant 1 (both within
1e-9).  Composition re-certifies; inverses use the exact relation
M^{-1} = J M^* J available for form-preserving matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .hermitian import FORM_MATRIX, HVector, PointClass, classify
from .heisenberg import Q_INFINITY, HeisenbergPoint

SU21_TOL = 1e-9


@dataclass(frozen=True)
class Isometry:
    """A certified matrix of SU(2,1)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (3, 3):
            raise ValueError(f"need a 3x3 matrix, got shape {m.shape}")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        form_res = float(np.max(np.abs(np.conj(m.T) @ FORM_MATRIX @ m - FORM_MATRIX)))
        det_res = abs(np.linalg.det(m) - 1.0)
        if form_res > SU21_TOL or det_res > SU21_TOL:
            raise ValueError(
                f"matrix is not in SU(2,1): form residual {form_res:.3e}, "
                f"determinant residual {det_res:.3e}"
            )

    # -- group structure ---------------------------------------------------
    def __matmul__(self, other: "Isometry") -> "Isometry":
        return Isometry(self.matrix @ other.matrix)

    def inverse(self) -> "Isometry":
        # J M^* J inverts any matrix preserving the form J
        return Isometry(FORM_MATRIX @ np.conj(self.matrix.T) @ FORM_MATRIX)

    def power(self, k: int) -> "Isometry":
        base = self if k >= 0 else self.inverse()
        out = np.eye(3, dtype=complex)
        for _ in range(abs(k)):
            out = out @ base.matrix
        return Isometry(out)

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def apply(self, v) -> HVector:
        return HVector(self.matrix @ np.asarray(v, dtype=complex))

    def is_identity(self, tol: float = 1e-9) -> bool:
        return proj_identity_residual(self.matrix) <= tol

    def close_to(self, other: "Isometry", tol: float = 1e-9) -> bool:
        """Projective comparison (up to the cube roots of unity in the center)."""
        return proj_identity_residual(self.matrix @ np.asarray(other.inverse().matrix)) <= tol


def proj_identity_residual(m: np.ndarray) -> float:
    """Distance of m from the scalar matrices omega*I with omega^3 = 1."""
    best = math.inf
    for k in range(3):
        omega = np.exp(2j * math.pi * k / 3.0)
        best = min(best, float(np.max(np.abs(m - omega * np.eye(3)))))
    return best


def check_su21(m, tol: float = SU21_TOL) -> Isometry:
    """Certify a raw matrix as an element of SU(2,1) (raises with residuals)."""
    if tol != SU21_TOL:
        m = np.asarray(m, dtype=complex)
        form_res = float(np.max(np.abs(np.conj(m.T) @ FORM_MATRIX @ m - FORM_MATRIX)))
        det_res = abs(np.linalg.det(m) - 1.0)
        if form_res > tol or det_res > tol:
            raise ValueError(
                f"matrix is not in SU(2,1): form residual {form_res:.3e}, "
                f"determinant residual {det_res:.3e}"
            )
    return Isometry(np.asarray(m, dtype=complex))


class TraceKind(Enum):
    ELLIPTIC = "elliptic"
    UNIPOTENT = "unipotent"
    LOXODROMIC_OR_OTHER = "loxodromic_or_other"


@dataclass(frozen=True)
class TraceClass:
    kind: TraceKind
    order: int | None = None


def classify_by_real_trace(g: Isometry, tol: float = 1e-9) -> TraceClass:
    """Classification by the real-trace rule.

    For real trace: -1, 0, 1 give elliptic elements of order 2, 3, 4;
    3 gives a unipotent; other values in [-1, 3) are elliptic of
    unspecified order; anything else real is loxodromic-or-other.
    A genuinely complex trace is outside this rule and raises.
    """
    tr = g.trace()
    if abs(tr.imag) > tol:
        raise ValueError(f"trace {tr} is not real; rule does not apply")
    x = tr.real
    for val, order in ((-1.0, 2), (0.0, 3), (1.0, 4)):
        if abs(x - val) <= tol:
            return TraceClass(TraceKind.ELLIPTIC, order)
    if abs(x - 3.0) <= tol:
        return TraceClass(TraceKind.UNIPOTENT)
    if -1.0 <= x < 3.0:
        return TraceClass(TraceKind.ELLIPTIC, None)
    return TraceClass(TraceKind.LOXODROMIC_OR_OTHER)


def heis_translation(z: complex, t: float) -> Isometry:
    """Left Heisenberg translation by [z, t] (fixes the point at infinity)."""
    z = complex(z)
    return Isometry(
        np.array(
            [
                [1.0, -np.conj(z), (-abs(z) ** 2 + 1j * t) / 2.0],
                [0.0, 1.0, z],
                [0.0, 0.0, 1.0],
            ],
            dtype=complex,
        )
    )


def heis_rotation(theta: float) -> Isometry:
    """Rotation (z, t) -> (e^{i theta} z, t) about the vertical axis."""
    a = np.exp(-1j * theta / 3.0)
    b = np.exp(2j * theta / 3.0)
    return Isometry(np.diag([a, b, a]).astype(complex))


def heis_dilation(lam: float) -> Isometry:
    """Dilation (z, t) -> (lam z, lam^2 t) for real lam != 0."""
    if lam == 0:
        raise ValueError("dilation factor must be nonzero")
    return Isometry(np.diag([lam, 1.0, 1.0 / lam]).astype(complex))


def complex_involution(n) -> Isometry:
    """Holomorphic involution fixing the complex line polar to the Positive vector n.

    Matrix of z -> -z + 2 <z, n>/<n, n> n.
    """
    n = np.asarray(n, dtype=complex)
    if classify(n) is not PointClass.POSITIVE:
        raise ValueError("complex involution needs a Positive polar vector")
    from .hermitian import herm_inner

    nn = herm_inner(n, n)
    m = -np.eye(3, dtype=complex) + 2.0 * np.outer(n, np.conj(n) @ FORM_MATRIX) / nn
    return Isometry(m)


def boundary_action(g: Isometry, p, tol: float = 1e-12):
    """Action on the boundary: HeisenbergPoint or Q_INFINITY in, same out.

    The image is Q_INFINITY exactly when the third coordinate of the
    image lift vanishes (within tol relative to the vector norm).
    """
    if p is Q_INFINITY:
        v = np.array([1.0, 0.0, 0.0], dtype=complex)
    else:
        v = np.asarray(p.lift(), dtype=complex)
    w = g.matrix @ v
    norm = float(np.linalg.norm(w))
    if abs(w[2]) <= tol * norm:
        return Q_INFINITY
    w = w / w[2]
    return HeisenbergPoint(w[1], 2.0 * w[0].imag)


def fixes_infinity(g: Isometry, tol: float = 1e-9) -> bool:
    """g fixes the point at infinity iff it is upper-triangular."""
    m = g.matrix
    scale = float(np.max(np.abs(m)))
    return max(abs(m[1, 0]), abs(m[2, 0]), abs(m[2, 1])) <= tol * scale


def boundary_fixed_points(g: Isometry, tol: float = 1e-8) -> list[HVector]:
    """Null eigenvectors of g, normalized (third coordinate 1 when possible).

    Unipotent elements use an SVD null space of (g - I) with singular
    value cutoff; everything else goes through the eigendecomposition
    and keeps eigenvectors that classify as Null.
    """
    m = g.matrix
    out: list[np.ndarray] = []
    tr = g.trace()
    if abs(tr.imag) <= 1e-9 and abs(tr.real - 3.0) <= 1e-9:
        # unipotent (or identity): null space of (g - I)
        _, s, vh = np.linalg.svd(m - np.eye(3))
        smax = s[0] if s[0] > 0 else 1.0
        for j in range(3):
            if s[j] <= tol * smax:
                out.append(vh[j].conj())
    else:
        w, vecs = np.linalg.eig(m)
        for j in range(3):
            v = vecs[:, j]
            if classify(v, 1e-6) is PointClass.NULL:
                out.append(v)
    result = []
    for v in out:
        if abs(v[2]) > 1e-8 * np.linalg.norm(v):
            v = v / v[2]
        else:
            v = v / v[np.argmax(np.abs(v))]
        # keep only genuinely fixed directions
        img = m @ v
        if np.linalg.norm(np.cross(img, v)) <= 1e-6 * np.linalg.norm(img) * np.linalg.norm(v):
            result.append(HVector(v))
    return result


def antiholomorphic_conjugate(g: Isometry) -> Isometry:
    """Entrywise complex conjugation (conjugation by the standard real form)."""
    return Isometry(np.conj(g.matrix))
