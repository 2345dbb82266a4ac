"""Quaternion and complex-quaternion algebra.

Scalars come in two flavours that must not be confused:

* the complex unit ``i`` is the first quaternionic imaginary unit, so the
  plane spanned by ``{1, i}`` sits inside the quaternions;
* the commuting unit (written ``I`` below) is an independent imaginary unit
  that commutes with ``i``, ``j``, ``k``.  It is represented by the
  imaginary part of Python/numpy ``complex`` scalars.

A complex quaternion ``q1 + I*q2`` (``q1``, ``q2`` real quaternions) is
therefore the same thing as a quaternion whose four coefficients are
``complex`` numbers, and the Hamilton product with complex coefficients
implements the full bicomplex-quaternion product.  The array helpers at the
bottom work on ``(..., 4)`` complex arrays in the ``1, i, j, k`` coefficient
order; the dataclasses are thin value types over the same arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Scalars of the commuting complex plane C(I).  Kept as a named alias so the
# public signatures say what they mean; the representation is plain complex
# with .real / .imag as the two components.
CxScalar = complex


# {{{ array layer


def qmul_arr(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Hamilton product of coefficient arrays of shape ``(..., 4)``.

    Broadcasts over leading axes.  Works for real or complex coefficients;
    with complex coefficients this is the bicomplex-quaternion product.
    """
    a0, a1, a2, a3 = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    b0, b1, b2, b3 = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    return np.stack(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ],
        axis=-1,
    )


def qconj_arr(a: np.ndarray) -> np.ndarray:
    """Quaternionic conjugation: negate the i, j, k coefficients.

    The commuting unit is untouched (no complex conjugation of the scalars).
    """
    out = np.array(a, copy=True)
    out[..., 1:] = -out[..., 1:]
    return out


def qabs_arr(a: np.ndarray) -> np.ndarray:
    """Entrywise magnitude sqrt(sum |c_k|^2) over the last axis."""
    return np.sqrt(np.sum(np.abs(a) ** 2, axis=-1))


def qscalar_arr(w: np.ndarray | complex) -> np.ndarray:
    """Lift C(I) scalars to coefficient arrays (scalar in the 1-slot)."""
    w = np.asarray(w, dtype=complex)
    out = np.zeros(w.shape + (4,), dtype=complex)
    out[..., 0] = w
    return out


def ci_conj_arr(a: np.ndarray) -> np.ndarray:
    """Conjugation of the inner complex plane C(i): negate the i coefficient.

    For elements with zero j, k parts this is the complex conjugation of
    ``c0 + c1*i`` over the commuting scalars.
    """
    out = np.array(a, copy=True)
    out[..., 1] = -out[..., 1]
    return out


def ci_scalar_arr(w1: np.ndarray, ij_part: np.ndarray | None = None) -> np.ndarray:
    """Build C(i)-valued elements ``w1 + w2*i`` as coefficient arrays.

    ``w1`` and ``ij_part`` are complex arrays (values in C(I)); they land in
    the 1- and i-slots respectively.
    """
    w1 = np.asarray(w1, dtype=complex)
    out = np.zeros(w1.shape + (4,), dtype=complex)
    out[..., 0] = w1
    if ij_part is not None:
        out[..., 1] = np.asarray(ij_part, dtype=complex)
    return out


# }}}


# {{{ value types


@dataclass(frozen=True)
class Quaternion:
    """Real quaternion x0 + x1*i + x2*j + x3*k."""

    x0: float = 0.0
    x1: float = 0.0
    x2: float = 0.0
    x3: float = 0.0

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(
            self.x0 + other.x0,
            self.x1 + other.x1,
            self.x2 + other.x2,
            self.x3 + other.x3,
        )

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(
            self.x0 - other.x0,
            self.x1 - other.x1,
            self.x2 - other.x2,
            self.x3 - other.x3,
        )

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.x0, -self.x1, -self.x2, -self.x3)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        return Quaternion(
            self.x0 * other, self.x1 * other, self.x2 * other, self.x3 * other
        )

    def __rmul__(self, other):
        # scalar * quaternion; reals commute
        return self.__mul__(other)

    def scale(self, c: float) -> "Quaternion":
        return Quaternion(self.x0 * c, self.x1 * c, self.x2 * c, self.x3 * c)

    def conj(self) -> "Quaternion":
        return Quaternion(self.x0, -self.x1, -self.x2, -self.x3)

    def norm2(self) -> float:
        return self.x0**2 + self.x1**2 + self.x2**2 + self.x3**2

    def norm(self) -> float:
        return math.sqrt(self.norm2())

    def inverse(self) -> "Quaternion":
        n2 = self.norm2()
        if n2 == 0.0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return self.conj().scale(1.0 / n2)

    def as_array(self) -> np.ndarray:
        return np.array([self.x0, self.x1, self.x2, self.x3], dtype=float)

    @staticmethod
    def from_array(a: np.ndarray) -> "Quaternion":
        return Quaternion(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    @staticmethod
    def from_complex_pair(z1: complex, z2: complex) -> "Quaternion":
        """Plain embedding q = z1 + z2*j of a pair of C(i) numbers."""
        return Quaternion(z1.real, z1.imag, z2.real, z2.imag)

    def to_complex_pair(self) -> tuple[complex, complex]:
        return complex(self.x0, self.x1), complex(self.x2, self.x3)


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product with ij = k, jk = i, ki = j and anticommutation."""
    return Quaternion(
        p.x0 * q.x0 - p.x1 * q.x1 - p.x2 * q.x2 - p.x3 * q.x3,
        p.x0 * q.x1 + p.x1 * q.x0 + p.x2 * q.x3 - p.x3 * q.x2,
        p.x0 * q.x2 - p.x1 * q.x3 + p.x2 * q.x0 + p.x3 * q.x1,
        p.x0 * q.x3 + p.x1 * q.x2 - p.x2 * q.x1 + p.x3 * q.x0,
    )


def quat_conj(q: Quaternion) -> Quaternion:
    return q.conj()


@dataclass(frozen=True)
class BiComplexQuaternion:
    """Complex quaternion q1 + I*q2 with commuting unit I.

    Stored as a pair of real quaternions so that the embedding of the real
    quaternions is literally the restriction ``q2 == 0``.  This algebra has
    zero divisors, so no division is provided.
    """

    q1: Quaternion = Quaternion()
    q2: Quaternion = Quaternion()

    def __add__(self, other: "BiComplexQuaternion") -> "BiComplexQuaternion":
        return BiComplexQuaternion(self.q1 + other.q1, self.q2 + other.q2)

    def __sub__(self, other: "BiComplexQuaternion") -> "BiComplexQuaternion":
        return BiComplexQuaternion(self.q1 - other.q1, self.q2 - other.q2)

    def __neg__(self) -> "BiComplexQuaternion":
        return BiComplexQuaternion(-self.q1, -self.q2)

    def __mul__(self, other: "BiComplexQuaternion") -> "BiComplexQuaternion":
        return bc_mul(self, other)

    def conj(self) -> "BiComplexQuaternion":
        return bc_conj(self)

    def scale(self, c: CxScalar) -> "BiComplexQuaternion":
        """Multiply by a C(I) scalar (commutes with everything)."""
        c = complex(c)
        return BiComplexQuaternion(
            self.q1.scale(c.real) - self.q2.scale(c.imag),
            self.q2.scale(c.real) + self.q1.scale(c.imag),
        )

    def norm(self) -> float:
        return math.sqrt(self.q1.norm2() + self.q2.norm2())

    def coeffs(self) -> np.ndarray:
        """Coefficients of 1, i, j, k as a length-4 complex array."""
        return self.q1.as_array() + 1j * self.q2.as_array()

    @staticmethod
    def from_coeffs(c: np.ndarray) -> "BiComplexQuaternion":
        c = np.asarray(c, dtype=complex)
        return BiComplexQuaternion(
            Quaternion.from_array(c.real), Quaternion.from_array(c.imag)
        )

    @staticmethod
    def from_quaternion(q: Quaternion) -> "BiComplexQuaternion":
        return BiComplexQuaternion(q, Quaternion())

    @staticmethod
    def zero() -> "BiComplexQuaternion":
        return BiComplexQuaternion()


def bc_mul(p: BiComplexQuaternion, q: BiComplexQuaternion) -> BiComplexQuaternion:
    """Product in the complex quaternions: I commutes, quaternion units do not."""
    return BiComplexQuaternion(
        quat_mul(p.q1, q.q1) - quat_mul(p.q2, q.q2),
        quat_mul(p.q1, q.q2) + quat_mul(p.q2, q.q1),
    )


def bc_conj(q: BiComplexQuaternion) -> BiComplexQuaternion:
    """Quaternionic conjugation, componentwise in the I-parts."""
    return BiComplexQuaternion(q.q1.conj(), q.q2.conj())


@dataclass(frozen=True)
class CPoint2:
    """A point (z1, z2) of C(i)^2, identified with R^4 via Re/Im parts."""

    z1: complex = 0j
    z2: complex = 0j

    def coords(self) -> tuple[float, float, float, float]:
        return (self.z1.real, self.z1.imag, self.z2.real, self.z2.imag)

    @staticmethod
    def from_coords(x0: float, x1: float, x2: float, x3: float) -> "CPoint2":
        return CPoint2(complex(x0, x1), complex(x2, x3))

    def __add__(self, other: "CPoint2") -> "CPoint2":
        return CPoint2(self.z1 + other.z1, self.z2 + other.z2)

    def __sub__(self, other: "CPoint2") -> "CPoint2":
        return CPoint2(self.z1 - other.z1, self.z2 - other.z2)

    def abs(self) -> float:
        return math.sqrt(abs(self.z1) ** 2 + abs(self.z2) ** 2)


def theta_pair_mul(p: CPoint2, q: CPoint2) -> CPoint2:
    """Pair product (z1, z2)(w1, w2) = (z1 w1 - conj(z2) w2, conj(z1) w2 + z2 w1).

    This is the quaternion product transported through the basis
    {1, i, i e^{i theta} j, e^{i theta} j}; the rule itself does not depend
    on theta.
    """
    return CPoint2(
        p.z1 * q.z1 - p.z2.conjugate() * q.z2,
        p.z1.conjugate() * q.z2 + p.z2 * q.z1,
    )


def pair_conj(p: CPoint2) -> CPoint2:
    """Quaternionic conjugation in pair coordinates: (conj(z1), -z2)."""
    return CPoint2(p.z1.conjugate(), -p.z2)


@dataclass(frozen=True)
class StructuralSet:
    """The orthonormal basis {1, i, i e^{i theta} j, e^{i theta} j} of R^4.

    theta is in radians; theta = 0 gives {1, i, k, j}.
    """

    theta: float = 0.0

    @property
    def psi2(self) -> Quaternion:
        s, c = math.sin(self.theta), math.cos(self.theta)
        return Quaternion(0.0, 0.0, -s, c)

    @property
    def psi3(self) -> Quaternion:
        s, c = math.sin(self.theta), math.cos(self.theta)
        return Quaternion(0.0, 0.0, c, s)

    def basis(self) -> tuple[Quaternion, Quaternion, Quaternion, Quaternion]:
        return (
            Quaternion(1.0),
            Quaternion(0.0, 1.0),
            self.psi2,
            self.psi3,
        )

    def basis_coeffs(self) -> np.ndarray:
        """Basis as a (4, 4) real array of 1, i, j, k coefficients."""
        return np.stack([b.as_array() for b in self.basis()])


def theta_embed(p: CPoint2, s: StructuralSet) -> Quaternion:
    """Embed (z1, z2) as z1 + i e^{i theta} j z2 expanded over {1, i, j, k}.

    Complex scalars act from the left; the j-commutation a j = j conj(a)
    makes the j, k coefficients theta-dependent combinations of z2.
    """
    x0, x1, x2, x3 = p.coords()
    st, ct = math.sin(s.theta), math.cos(s.theta)
    return Quaternion(x0, x1, -st * x2 + ct * x3, ct * x2 + st * x3)


# }}}
