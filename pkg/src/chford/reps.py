"""The two boundary-unipotent triangle representations and their generators.

Each representation is generated by three complex involutions I1, I2, I3
whose products realize a triangle group with one elliptic vertex and
parabolic everything else:

* ``3pp``: I2 I3 of order 3, all other vertex words unipotent;
* ``34p``: I2 I3 of order 3, I3 I1 of order 4, I1 I2 and the cycle
  word unipotent.

The saved generator pair is (A, B) in normalized Heisenberg
coordinates, obtained from the involution products by an explicit
upper-triangular change of basis (the ``conjugator``).  Matrix entries
are stored as closed-form radicals evaluated once; the constraint
solver below re-derives the one-parameter family normal vector rather
than trusting the stored value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .hermitian import HVector
from .isometry import (
    Isometry,
    boundary_action,
    complex_involution,
    proj_identity_residual,
)
from .heisenberg import HeisenbergPoint

SQRT3 = math.sqrt(3.0)
SQRT7 = math.sqrt(7.0)
_I = 1j


@dataclass(frozen=True)
class ConstraintSolution:
    """Real parameters (x, y, z) of a mirror polar vector (x, y + zi, 1)."""

    x: float
    y: float
    z: float


def solve_I3_constraints() -> list[ConstraintSolution]:
    """Solve the trace conditions pinning the third mirror of the 3pp group.

    With n3 = (x, y + zi, 1) and the first two mirrors fixed, clearing
    the denominator <n3, n3> = 2x + y^2 + z^2 from the three vertex
    trace conditions gives

      order-infinity at I3 I1:   -8x = 0                      (forces x = 0)
      order 3 at I2 I3:          3(y^2 + z^2) - 2x - 8y + 4 = 0   (a circle)
      order-infinity cycle word: (y - 1)(y^2 + z^2) = 0 at x = 0  (a line)

    Since y^2 + z^2 > 0 the cubic factor forces the line y = 1, and the
    circle then pins z^2 = 1/3.  Exactly two solutions, conjugate to
    each other.
    """
    x = 0.0
    y = 1.0
    # circle at x = 0, y = 1:  3(1 + z^2) - 8 + 4 = 0
    z2 = (8.0 * y - 4.0 - 3.0 * y * y) / 3.0
    z = math.sqrt(z2)
    sols = [ConstraintSolution(x, y, -z), ConstraintSolution(x, y, z)]
    for s in sols:
        n = np.array([s.x, s.y + _I * s.z, 1.0], dtype=complex)
        m3 = complex_involution(n)
        t31 = np.trace(m3.matrix @ _I1_3PP)
        t23 = np.trace(_I2_3PP @ m3.matrix)
        t_cycle = np.trace(_I1_3PP @ m3.matrix @ _I2_3PP @ m3.matrix)
        assert abs(t31 - 3.0) < 1e-12 and abs(t23) < 1e-12 and abs(t_cycle - 3.0) < 1e-12
    return sols


@dataclass(frozen=True)
class GroupRep:
    """A triangle-group representation with normalized generators.

    named_fixed_points maps words over {A, a, B, b} to the null lifts of
    their parabolic fixed points (third coordinate normalized to 1).
    """

    label: str
    I1: Isometry
    I2: Isometry
    I3: Isometry
    A: Isometry
    B: Isometry
    conjugator: Isometry
    named_fixed_points: dict[str, HVector] = field(default_factory=dict)

    def generator(self, letter: str) -> Isometry:
        if letter == "A":
            return self.A
        if letter == "a":
            return self.A.inverse()
        if letter == "B":
            return self.B
        if letter == "b":
            return self.B.inverse()
        raise ValueError(f"unknown generator letter {letter!r}; use A, a, B, b")


MAX_WORD_LEN = 64


def evaluate_word(rep: GroupRep, word: str) -> Isometry:
    """Evaluate a word over {A, a, B, b}; certified after accumulation.

    Words longer than 64 letters are rejected (double-precision drift
    would outgrow the certification tolerance).
    """
    if len(word) > MAX_WORD_LEN:
        raise ValueError(f"word length {len(word)} exceeds {MAX_WORD_LEN}")
    m = np.eye(3, dtype=complex)
    for letter in word:
        m = m @ rep.generator(letter).matrix
    return Isometry(m)  # re-certifies SU(2,1) membership


# --------------------------------------------------------------------------
# 3pp: mirrors, conjugator, normalized generators
# --------------------------------------------------------------------------

_I1_3PP = np.array([[-1, 0, 0], [0, 1, 0], [0, 0, -1]], dtype=complex)
_I2_3PP = np.array([[-1, -2, 2], [0, 1, -2], [0, 0, -1]], dtype=complex)
_I3_3PP = np.array(
    [
        [-1, 0, 0],
        [(3 + SQRT3 * _I) / 2, 1, 0],
        [3 / 2, (3 - SQRT3 * _I) / 2, -1],
    ],
    dtype=complex,
)
_T_3PP = np.array(
    [
        [1, 1 - _I / SQRT3, -2 / 3],
        [0, 1, -1 - _I / SQRT3],
        [0, 0, 1],
    ],
    dtype=complex,
)
_A_3PP = np.array(
    [[1, 2, -2 + 4 * _I / SQRT3], [0, 1, -2], [0, 0, 1]], dtype=complex
)
_B_3PP = np.array(
    [[1, 2 * _I / SQRT3, -2 / 3], [SQRT3 * _I, -1, 0], [-3 / 2, 0, 0]],
    dtype=complex,
)

_FIXED_3PP = {
    "bA": HVector([-2 / 3, 1 - SQRT3 * _I / 3, 1]),
    "Ba": HVector([-2 / 3 + 2 * SQRT3 * _I / 3, -1 - SQRT3 * _I / 3, 1]),
    "BA": HVector([-2 / 3 - 2 * SQRT3 * _I / 3, 1 - SQRT3 * _I / 3, 1]),
    "AB": HVector([-2 / 3, -1 - SQRT3 * _I / 3, 1]),
}


def build_3pp() -> GroupRep:
    """The representation with one order-3 vertex and three unipotent ones."""
    return GroupRep(
        label="3pp",
        I1=Isometry(_I1_3PP),
        I2=Isometry(_I2_3PP),
        I3=Isometry(_I3_3PP),
        A=Isometry(_A_3PP),
        B=Isometry(_B_3PP),
        conjugator=Isometry(_T_3PP),
        named_fixed_points=dict(_FIXED_3PP),
    )


# --------------------------------------------------------------------------
# 34p: mirrors, conjugator, normalized generators
# --------------------------------------------------------------------------

_I1_34P = np.array([[-1, 2, 2], [0, 1, 2], [0, 0, -1]], dtype=complex)
_I2_34P = np.array(
    [
        [-1, 0, 0],
        [-(1 - SQRT7 * _I) / 2, 1, 0],
        [1, -(1 + SQRT7 * _I) / 2, -1],
    ],
    dtype=complex,
)
_I3_34P = np.array([[0, 0, 1], [0, -1, 0], [1, 0, 0]], dtype=complex)
_T_34P = np.array(
    [
        [1, (-1 - SQRT7 * _I) / 2, -1],
        [0, 1, (1 - SQRT7 * _I) / 2],
        [0, 0, 1],
    ],
    dtype=complex,
)
_A_34P = np.array(
    [
        [1, (3 - SQRT7 * _I) / 2, -2 + SQRT7 * _I],
        [0, 1, (-3 - SQRT7 * _I) / 2],
        [0, 0, 1],
    ],
    dtype=complex,
)
_B_34P = np.array(
    [
        [1, (1 + SQRT7 * _I) / 2, -1],
        [(-1 + SQRT7 * _I) / 2, -1, 0],
        [-1, 0, 0],
    ],
    dtype=complex,
)

_FIXED_34P = {
    "AB": HVector([-1, -1 / 2 - SQRT7 * _I / 2, 1]),
    "bAb": HVector([-1 / 4 + SQRT7 * _I / 4, 1 / 4 - SQRT7 * _I / 4, 1]),
}


def build_34p() -> GroupRep:
    """The representation with order-3 and order-4 vertices, the rest unipotent."""
    fixed = dict(_FIXED_34P)
    # image of the hat-sphere tangency point under the translation generator
    a = Isometry(_A_34P)
    img = a.matrix @ np.asarray(fixed["bAb"], dtype=complex)
    fixed["AbAba"] = HVector(img / img[2])
    return GroupRep(
        label="34p",
        I1=Isometry(_I1_34P),
        I2=Isometry(_I2_34P),
        I3=Isometry(_I3_34P),
        A=a,
        B=Isometry(_B_34P),
        conjugator=Isometry(_T_34P),
        named_fixed_points=fixed,
    )


def build(label: str) -> GroupRep:
    if label == "3pp":
        return build_3pp()
    if label == "34p":
        return build_34p()
    raise ValueError(f"unknown group label {label!r}; use '3pp' or '34p'")


def _proj_point_residual(p: HeisenbergPoint, q: HeisenbergPoint) -> float:
    return max(abs(p.z - q.z), abs(p.t - q.t))


def verify_cycle_transformations(rep: GroupRep) -> dict[str, float]:
    """Residuals of the cycle-transformation identities for the group.

    All values should be ~1e-12; callers assert their own thresholds.
    """
    out: dict[str, float] = {}
    if rep.label == "3pp":
        for k in range(-2, 3):
            ak = rep.A.power(k)
            conj_b = ak @ rep.B @ ak.inverse()
            cube = conj_b @ conj_b @ conj_b
            out[f"(A^{k} B A^{-k})^3 = id"] = proj_identity_residual(cube.matrix)
        img = boundary_action(rep.A, _heis_of(rep.named_fixed_points["bA"]))
        out["A maps fix(bA) to fix(Ba)"] = _proj_point_residual(
            img, _heis_of(rep.named_fixed_points["Ba"])
        )
        img = boundary_action(rep.A, _heis_of(rep.named_fixed_points["BA"]))
        out["A maps fix(BA) to fix(AB)"] = _proj_point_residual(
            img, _heis_of(rep.named_fixed_points["AB"])
        )
    elif rep.label == "34p":
        b3 = rep.B @ rep.B @ rep.B
        out["B^3 = id"] = proj_identity_residual(b3.matrix)
        ab = rep.A.inverse() @ rep.B
        out["(a B)^4 = id"] = proj_identity_residual(ab.power(4).matrix)
        lhs = evaluate_word(rep, "bAb")
        rhs = evaluate_word(rep, "aBaBa")
        out["bAb = aBaBa (projectively)"] = float(
            np.max(np.abs(lhs.matrix - _best_scalar(lhs.matrix, rhs.matrix) * rhs.matrix))
        )
        img = boundary_action(rep.A, _heis_of(rep.named_fixed_points["bAb"]))
        out["A maps fix(bAb) to fix(AbAba)"] = _proj_point_residual(
            img, _heis_of(rep.named_fixed_points["AbAba"])
        )
    else:
        raise ValueError(f"unknown group label {rep.label!r}")
    return out


def _best_scalar(m1: np.ndarray, m2: np.ndarray) -> complex:
    """Unit-cube-root scalar aligning two projectively equal matrices."""
    best, best_res = 1.0 + 0j, math.inf
    for k in range(3):
        om = np.exp(2j * math.pi * k / 3.0)
        res = float(np.max(np.abs(m1 - om * m2)))
        if res < best_res:
            best, best_res = om, res
    return best


def _heis_of(v: HVector) -> HeisenbergPoint:
    w = np.asarray(v, dtype=complex)
    w = w / w[2]
    return HeisenbergPoint(w[1], 2.0 * w[0].imag)


def heis_of_lift(v) -> HeisenbergPoint:
    """Heisenberg coordinates of a null lift with nonvanishing third coordinate."""
    return _heis_of(HVector(v))
