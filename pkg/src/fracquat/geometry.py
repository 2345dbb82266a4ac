"""The 4-D rectangle, its oriented boundary, and tensor-product cubature.

Points of C(i)^2 are handled as ``(n, 4)`` float coordinate arrays
``(x0, x1, x2, x3) = (Re z1, Im z1, Re z2, Im z2)``; integrand callables map
such arrays to ``(n, 4)`` complex quaternion-coefficient arrays.

Cubature is Gauss-Legendre (or midpoint) per axis.  A ``grade_power`` larger
than 1 pushes nodes toward the low corner with the map ``x = lo + (hi-lo)
t^p``; fractional-operator integrands are algebraically singular precisely
on the low faces, and grading restores fast convergence there without
giving up smooth-case accuracy.  All reductions are fixed-shape pairwise
trees, so a result depends only on the spec, never on scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .algebra import CPoint2, Quaternion, StructuralSet, theta_embed
from .errors import EvaluationError, GeometryError, ValidationError
from .frac1d import pairwise_sum


@dataclass(frozen=True)
class Rect4:
    """Axis-aligned rectangle in C(i)^2 with corners a < b componentwise."""

    a: CPoint2
    b: CPoint2

    def __post_init__(self):
        lo, hi = self.a.coords(), self.b.coords()
        if not all(lo[k] < hi[k] for k in range(4)):
            raise GeometryError(
                f"rectangle needs strict corner ordering, got a={lo}, b={hi}"
            )

    def lows(self) -> np.ndarray:
        return np.array(self.a.coords())

    def highs(self) -> np.ndarray:
        return np.array(self.b.coords())

    def edges(self) -> np.ndarray:
        return self.highs() - self.lows()

    def contains(self, q: CPoint2) -> bool:
        x = np.array(q.coords())
        return bool(np.all(x > self.lows()) and np.all(x < self.highs()))

    def sub_to(self, q: CPoint2) -> "Rect4":
        """The sub-rectangle from the low corner a up to q."""
        return Rect4(self.a, q)

    def center(self) -> CPoint2:
        c = 0.5 * (self.lows() + self.highs())
        return CPoint2.from_coords(*c)


def measure(r: Rect4) -> float:
    """Product of the four edge lengths."""
    return float(np.prod(r.edges()))


@dataclass(frozen=True)
class Face3:
    """One of the 8 axis-aligned boundary faces, with outward unit normal."""

    fixed_axis: int
    side: str  # "low" | "high"
    value: float
    free_axes: tuple[int, int, int]
    bounds: tuple[tuple[float, float], ...]

    @property
    def outward_normal(self) -> np.ndarray:
        n = np.zeros(4)
        n[self.fixed_axis] = -1.0 if self.side == "low" else 1.0
        return n

    @property
    def area(self) -> float:
        return float(np.prod([hi - lo for lo, hi in self.bounds]))


def faces(r: Rect4) -> list[Face3]:
    lo, hi = r.lows(), r.highs()
    out = []
    for ax in range(4):
        free = tuple(k for k in range(4) if k != ax)
        bounds = tuple((float(lo[k]), float(hi[k])) for k in free)
        out.append(Face3(ax, "low", float(lo[ax]), free, bounds))
        out.append(Face3(ax, "high", float(hi[ax]), free, bounds))
    return out


@dataclass(frozen=True)
class QuadratureSpec:
    """Node counts and policies for volume, boundary and embedded 1-D rules."""

    volume_nodes: int = 16
    boundary_nodes: int = 16
    rule: str = "gauss-legendre"
    frac_nodes: int = 64
    exclusion_delta: float = 0.0
    grade_power: int = 1

    def __post_init__(self):
        if self.volume_nodes < 2 or self.boundary_nodes < 2:
            raise ValidationError("node counts must be at least 2")
        if self.rule not in ("gauss-legendre", "midpoint"):
            raise ValidationError(f"unknown rule {self.rule!r}")
        if self.exclusion_delta < 0:
            raise ValidationError("exclusion_delta must be nonnegative")
        if self.grade_power < 1:
            raise ValidationError("grade_power must be >= 1")

    def with_nodes(self, n: int) -> "QuadratureSpec":
        return QuadratureSpec(
            n, n, self.rule, self.frac_nodes, self.exclusion_delta, self.grade_power
        )


@lru_cache(maxsize=128)
def _axis_rule(n: int, rule: str):
    if rule == "midpoint":
        t = (np.arange(n) + 0.5) / n
        w = np.full(n, 1.0 / n)
    else:
        from numpy.polynomial.legendre import leggauss

        u, w = leggauss(n)
        t = (u + 1.0) / 2.0
        w = w / 2.0
    t.setflags(write=False)
    w.setflags(write=False)
    return t, w


def axis_nodes(lo: float, hi: float, n: int, rule: str, grade_power: int = 1):
    """Nodes/weights on [lo, hi]; grading > 1 clusters toward lo."""
    t, w = _axis_rule(n, rule)
    if grade_power > 1:
        p = float(grade_power)
        x = lo + (hi - lo) * t**p
        wx = w * (hi - lo) * p * t ** (p - 1.0)
    else:
        x = lo + (hi - lo) * t
        wx = w * (hi - lo)
    return x, wx


def volume_nodes(r: Rect4, spec: QuadratureSpec):
    """Tensor-product nodes (m, 4) and weights (m,) over the rectangle."""
    lo, hi = r.lows(), r.highs()
    per_axis = [
        axis_nodes(lo[k], hi[k], spec.volume_nodes, spec.rule, spec.grade_power)
        for k in range(4)
    ]
    xs = [p[0] for p in per_axis]
    ws = [p[1] for p in per_axis]
    grid = np.stack(np.meshgrid(*xs, indexing="ij"), axis=-1).reshape(-1, 4)
    wgt = (
        ws[0][:, None, None, None]
        * ws[1][None, :, None, None]
        * ws[2][None, None, :, None]
        * ws[3][None, None, None, :]
    ).reshape(-1)
    return grid, wgt


def volume_integral(f, r: Rect4, spec: QuadratureSpec) -> np.ndarray:
    """Cubature of a quaternion-valued integrand over the rectangle.

    ``f`` maps an (m, 4) float coordinate array to (m, 4) complex
    coefficients; returns the (4,) complex integral.
    """
    pts, wgt = volume_nodes(r, spec)
    try:
        vals = np.asarray(f(pts), dtype=complex)
    except (ValidationError, EvaluationError):
        raise
    except Exception as exc:  # noqa: BLE001 - annotate with location
        raise EvaluationError(f"volume integrand failed: {exc}", where=r) from exc
    if vals.shape != pts.shape:
        raise EvaluationError(
            f"integrand returned shape {vals.shape}, expected {pts.shape}"
        )
    return pairwise_sum(wgt[:, None] * vals, axis=0)


def sigma_theta(normal: np.ndarray, s: StructuralSet) -> Quaternion:
    """Face value of the H-valued area form: sigma = nu dS with nu below.

    For an outward coordinate unit normal n the 3-form reduces to
    ``nu = n0 + n1 i + n2 (i e^{i theta} j) + n3 (e^{i theta} j)`` times the
    Euclidean surface measure.
    """
    n = np.asarray(normal, dtype=float)
    nz = np.nonzero(n)[0]
    if len(nz) != 1 or abs(abs(n[nz[0]]) - 1.0) > 1e-14:
        raise GeometryError(f"normal must be a coordinate unit vector, got {n}")
    return theta_embed(CPoint2.from_coords(*n), s)


def face_nodes(face: Face3, spec: QuadratureSpec, grade_low: bool = True):
    """Tensor nodes (m, 4) and weights (m,) on one boundary face."""
    per_axis = [
        axis_nodes(
            lo, hi, spec.boundary_nodes, spec.rule,
            spec.grade_power if grade_low else 1,
        )
        for lo, hi in face.bounds
    ]
    xs = [p[0] for p in per_axis]
    ws = [p[1] for p in per_axis]
    grid3 = np.stack(np.meshgrid(*xs, indexing="ij"), axis=-1).reshape(-1, 3)
    wgt = (
        ws[0][:, None, None] * ws[1][None, :, None] * ws[2][None, None, :]
    ).reshape(-1)
    pts = np.empty((grid3.shape[0], 4))
    pts[:, face.fixed_axis] = face.value
    for c, ax in enumerate(face.free_axes):
        pts[:, ax] = grid3[:, c]
    return pts, wgt


def boundary_integral(
    g_left,
    g_right,
    r: Rect4,
    s: StructuralSet,
    spec: QuadratureSpec,
    face_weight=None,
) -> np.ndarray:
    """Sum over the 8 faces of int g_left * w(face) * g_right dS.

    By default ``w(face)`` is the area-form value from :func:`sigma_theta`
    (outward orientation).  ``face_weight(face) -> (4,) complex`` overrides
    it, which is how the split complex-valued 3-forms are integrated.
    Either field may be ``None`` for the constant 1.
    """
    from .algebra import qmul_arr

    total = np.zeros(4, dtype=complex)
    for face in faces(r):
        pts, wgt = face_nodes(face, spec)
        if face_weight is None:
            w = sigma_theta(face.outward_normal, s).as_array().astype(complex)
        else:
            w = np.asarray(face_weight(face), dtype=complex)
        try:
            if g_left is not None:
                lv = np.asarray(g_left(pts), dtype=complex)
            if g_right is not None:
                rv = np.asarray(g_right(pts), dtype=complex)
        except (ValidationError, EvaluationError):
            raise
        except Exception as exc:  # noqa: BLE001
            raise EvaluationError(
                f"boundary integrand failed: {exc}",
                where=(face.fixed_axis, face.side),
            ) from exc

        if g_left is None and g_right is None:
            vals = np.broadcast_to(w, (pts.shape[0], 4)).copy()
        elif g_left is None:
            vals = qmul_arr(np.broadcast_to(w, rv.shape), rv)
        elif g_right is None:
            vals = qmul_arr(lv, np.broadcast_to(w, lv.shape))
        else:
            vals = qmul_arr(qmul_arr(lv, np.broadcast_to(w, lv.shape)), rv)
        total = total + pairwise_sum(wgt[:, None] * vals, axis=0)
    return total
