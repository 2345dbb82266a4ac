"""One-dimensional Riemann-Liouville operators of complex order.

All operators act on functions with values in the complex quaternions,
represented throughout as ``(n, 4)`` complex coefficient arrays (see
:mod:`fracquat.algebra`).  Orders ``alpha`` are complex with
``0 < Re alpha < 1``; the real part enters a Gauss-Jacobi weight while the
unit-modulus oscillatory factor ``(x - t)^{i Im alpha}`` is folded into the
integrand.

Derivatives are evaluated in the integrated-by-parts form

    D_{a+}^alpha f(x) = f(a) (x-a)^{-alpha} / Gamma(1-alpha)
                        + I_{a+}^{1-alpha}[f'](x)

(valid for absolutely continuous f), which avoids differentiating quadrature
output.  Functions may declare algebraic endpoint behaviour
``f(t) ~ (t-a)^sigma * smooth`` via :attr:`Func1D.left_exponent` (mirrored on
the right); the quadrature then absorbs ``Re sigma`` into the Jacobi weight,
which is what makes compositions like D^alpha I^alpha numerically spectral.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.special import roots_jacobi

from .algebra import BiComplexQuaternion, CxScalar
from .errors import OrderGateError, PoleError, ValidationError

ORDER_EPS = 1.0e-6
DEFAULT_FRAC_NODES = 64


def pairwise_sum(a: np.ndarray, axis: int = 0) -> np.ndarray:
    """Sum along ``axis`` with a fixed-shape binary tree.

    The reduction order depends only on the length of the axis, so results
    are bit-identical no matter how callers are scheduled.
    """
    a = np.moveaxis(np.asarray(a), axis, 0)
    while a.shape[0] > 1:
        n = a.shape[0]
        m = n // 2
        head = a[:m] + a[m : 2 * m]
        if 2 * m != n:
            head = np.concatenate([head, a[2 * m :]], axis=0)
        a = head
    return a[0]


# {{{ gamma


_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _near_nonpositive_int(z: complex, tol: float = 1.0e-12) -> bool:
    n = round(z.real)
    return n <= 0 and abs(z - n) < tol


def gamma_c(z: CxScalar) -> complex:
    """Complex gamma function (Lanczos approximation, reflection for Re z < 1/2).

    Relative accuracy is ~1e-13 on the strip |Re z| < 10, |Im z| < 10.
    Raises :class:`PoleError` within 1e-12 of a nonpositive integer.
    """
    z = complex(z)
    if _near_nonpositive_int(z):
        raise PoleError(f"gamma pole at z = {z}")
    if z.real < 0.5:
        # Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return math.pi / (cmath.sin(math.pi * z) * gamma_c(1.0 - z))
    z -= 1.0
    x = _LANCZOS_C[0]
    for k, c in enumerate(_LANCZOS_C[1:], start=1):
        x += c / (z + k)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * x


def rgamma_c(z: CxScalar) -> complex:
    """Reciprocal gamma; entire, returns exactly 0 at nonpositive integers."""
    z = complex(z)
    if _near_nonpositive_int(z):
        return 0.0 + 0.0j
    return 1.0 / gamma_c(z)


# }}}


# {{{ domain types


@dataclass(frozen=True)
class FracOrder:
    """Complex fractional order constrained to eps <= Re alpha <= 1 - eps."""

    alpha: complex

    def __post_init__(self):
        a = complex(self.alpha)
        if not (ORDER_EPS <= a.real <= 1.0 - ORDER_EPS):
            raise OrderGateError(
                f"order must satisfy {ORDER_EPS} <= Re alpha <= {1 - ORDER_EPS}: "
                f"got {a}"
            )
        object.__setattr__(self, "alpha", a)

    @property
    def complement(self) -> "FracOrder":
        """The complementary order 1 - alpha (same admissible strip)."""
        return FracOrder(1.0 - self.alpha)


def as_order(alpha) -> FracOrder:
    return alpha if isinstance(alpha, FracOrder) else FracOrder(complex(alpha))


@dataclass(frozen=True)
class Interval:
    a: float
    b: float

    def __post_init__(self):
        if not self.b - self.a > 0.0:
            raise ValidationError(f"need a < b, got [{self.a}, {self.b}]")

    @property
    def length(self) -> float:
        return self.b - self.a


@dataclass(frozen=True)
class Func1D:
    """A quaternion-valued function of one real variable.

    ``eval`` maps a float array of shape (n,) to an (n, 4) complex array of
    1, i, j, k coefficients.  ``deriv`` (same convention) is optional; RL
    derivatives fall back to finite differences without it.  The exponent
    fields declare algebraic endpoint behaviour relative to the interval the
    function is used on: ``f(t) ~ (t - a)^left_exponent * smooth`` near the
    left endpoint (and mirrored with ``(b - t)`` on the right).
    """

    eval: Callable[[np.ndarray], np.ndarray]
    deriv: Callable[[np.ndarray], np.ndarray] | None = None
    left_exponent: complex | None = None
    right_exponent: complex | None = None

    def value_at(self, t: float) -> BiComplexQuaternion:
        return BiComplexQuaternion.from_coeffs(self.eval(np.array([t]))[0])


def func1d_const(value: BiComplexQuaternion | complex) -> Func1D:
    if not isinstance(value, BiComplexQuaternion):
        c = np.zeros(4, dtype=complex)
        c[0] = complex(value)
    else:
        c = value.coeffs()

    def ev(t: np.ndarray) -> np.ndarray:
        return np.broadcast_to(c, np.shape(t) + (4,)).copy()

    def dv(t: np.ndarray) -> np.ndarray:
        return np.zeros(np.shape(t) + (4,), dtype=complex)

    return Func1D(eval=ev, deriv=dv)


def func1d_scalar(
    fn: Callable[[np.ndarray], np.ndarray],
    dfn: Callable[[np.ndarray], np.ndarray] | None = None,
    left_exponent: complex | None = None,
    right_exponent: complex | None = None,
) -> Func1D:
    """Wrap a complex scalar function into the 1-coefficient slot."""

    def ev(t: np.ndarray) -> np.ndarray:
        out = np.zeros(np.shape(t) + (4,), dtype=complex)
        out[..., 0] = fn(np.asarray(t, dtype=float))
        return out

    dv = None
    if dfn is not None:

        def dv(t: np.ndarray) -> np.ndarray:
            out = np.zeros(np.shape(t) + (4,), dtype=complex)
            out[..., 0] = dfn(np.asarray(t, dtype=float))
            return out

    return Func1D(
        eval=ev, deriv=dv, left_exponent=left_exponent, right_exponent=right_exponent
    )


# }}}


# {{{ quadrature plumbing


@lru_cache(maxsize=512)
def _jacobi_rule(n: int, a_exp: float, b_exp: float):
    if n < 2:
        raise ValidationError(f"need at least 2 quadrature nodes, got {n}")
    if a_exp <= -1.0 or b_exp <= -1.0:
        raise ValidationError(
            f"Jacobi exponents must exceed -1: got ({a_exp}, {b_exp})"
        )
    with np.errstate(invalid="ignore"):
        u, w = roots_jacobi(n, a_exp, b_exp)
    u.setflags(write=False)
    w.setflags(write=False)
    return u, w


def _cpow(base: np.ndarray, expo: complex) -> np.ndarray:
    """base**expo for strictly positive real base arrays, complex exponent."""
    base = np.asarray(base, dtype=float)
    if expo == 0:
        return np.ones_like(base, dtype=complex)
    return np.exp(complex(expo) * np.log(base))


def _legendre_matrix(n: int, u: np.ndarray) -> np.ndarray:
    """P_j(u_k) for j = 0..n-1 as an (n, len(u)) array (Bonnet recurrence)."""
    p = np.empty((n, u.size), dtype=float)
    p[0] = 1.0
    if n > 1:
        p[1] = u
    for j in range(1, n - 1):
        p[j + 1] = ((2 * j + 1) * u * p[j] - j * p[j - 1]) / (j + 1)
    return p


def _legendre_power_moments(n: int, rho: complex) -> np.ndarray:
    """Closed-form moments m_j = int_{-1}^1 (1-u)^rho P_j(u) du, j = 0..n-1.

    m_j = (-1)^j 2^(rho+1) Gamma(rho+1)^2 / (Gamma(rho+2+j) Gamma(rho+1-j));
    evaluated through loggamma with the reflection formula so the decaying
    magnitudes stay accurate for large j.
    """
    from scipy.special import loggamma

    rho = complex(rho)
    j = np.arange(n)
    lg_top = 2.0 * loggamma(rho + 1.0)
    lg_denom = loggamma(rho + 2.0 + j)
    # 1/Gamma(rho+1-j) = (-1)^j sin(pi (rho+1)) Gamma(j-rho) / pi  for j >= 1
    m = np.empty(n, dtype=complex)
    m[0] = 2.0 ** (rho + 1.0) / (rho + 1.0)
    if n > 1:
        lg_ref = loggamma(j[1:] - rho)
        m[1:] = (
            2.0 ** (rho + 1.0)
            * cmath.sin(math.pi * (rho + 1.0))
            / math.pi
            * np.exp(lg_top + lg_ref - lg_denom[1:])
        )
    return m


@lru_cache(maxsize=512)
def _product_rule_onesided(n: int, rho: complex):
    """Interpolatory rule for int_{-1}^1 (1-u)^rho g(u) du, complex rho.

    Gauss-Legendre nodes; the weights integrate P_j (1-u)^rho exactly for
    j < n via the closed-form moments, so the complex-power weight (its
    oscillatory part included) is handled exactly and only the smooth factor
    g is approximated.
    """
    from numpy.polynomial.legendre import leggauss

    u, w = leggauss(n)
    p = _legendre_matrix(n, u)
    m = _legendre_power_moments(n, rho)
    scale = (2.0 * np.arange(n) + 1.0) / 2.0
    wt = w * np.einsum("j,j,jk->k", m, scale, p)
    u.setflags(write=False)
    wt.setflags(write=False)
    return u, wt


@lru_cache(maxsize=512)
def _complex_weight_rule(n: int, rho_hi: complex, rho_lo: complex):
    """Nodes/weights for int_{-1}^1 (1-u)^rho_hi (1+u)^rho_lo g(u) du.

    Real exponents use classic Gauss-Jacobi.  A complex exponent on one end
    uses the one-sided product rule with the other end's factor folded into
    g; with complex exponents on both ends the interval is split at 0 and
    each half gets a one-sided rule (the off-end factor is analytic there).
    Returned weights already include the full (possibly complex) weight.
    """
    rho_hi = complex(rho_hi)
    rho_lo = complex(rho_lo)
    if rho_hi.imag == 0.0 and rho_lo.imag == 0.0:
        u, w = _jacobi_rule(n, rho_hi.real, rho_lo.real)
        return u, w.astype(complex)
    if rho_lo == 0:
        return _product_rule_onesided(n, rho_hi)
    if rho_hi == 0:
        u, w = _product_rule_onesided(n, rho_lo)
        return -u[::-1], w[::-1]
    # both ends carry exponents: split at u = 0
    u_r, w_r = _complex_weight_rule(n, rho_hi, 0.0 + 0.0j)
    u_l, w_l = _complex_weight_rule(n, 0.0 + 0.0j, rho_lo)
    # right half u in [0, 1]: u = (1+v)/2, (1-u) = (1-v)/2, (1+u) smooth
    ur = (1.0 + u_r) / 2.0
    wr = w_r * 0.5 * 0.5**rho_hi * np.exp(rho_lo * np.log(1.0 + ur))
    # left half u in [-1, 0]: u = (v-1)/2, (1+u) = (1+v)/2, (1-u) smooth
    ul = (u_l - 1.0) / 2.0
    wl = w_l * 0.5 * 0.5**rho_lo * np.exp(rho_hi * np.log(1.0 - ul))
    u = np.concatenate([ul, ur])
    w = np.concatenate([wl, wr])
    u.setflags(write=False)
    w.setflags(write=False)
    return u, w


def _fd_deriv(f: Func1D, iv: Interval) -> Callable[[np.ndarray], np.ndarray]:
    # O(h^2) central differences, shrinking one-sidedly at the endpoints
    h = 1.0e-6 * iv.length

    def dv(t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        lo = np.maximum(t - h, iv.a)
        hi = np.minimum(t + h, iv.b)
        return (f.eval(hi) - f.eval(lo)) / (hi - lo)[..., None]

    return dv


def _deriv_func(f: Func1D, iv: Interval) -> Func1D:
    dv = f.deriv if f.deriv is not None else _fd_deriv(f, iv)
    le = None if f.left_exponent in (None, 0) else f.left_exponent - 1
    re_ = None if f.right_exponent in (None, 0) else f.right_exponent - 1
    return Func1D(eval=dv, left_exponent=le, right_exponent=re_)


# }}}


# {{{ Riemann-Liouville integrals


def rl_integral_left_many(
    f: Func1D,
    iv: Interval,
    alpha: FracOrder | complex,
    xs: np.ndarray,
    nodes: int = DEFAULT_FRAC_NODES,
) -> np.ndarray:
    """I_{a+}^alpha f at each x in ``xs``; returns an (m, 4) complex array.

    Product quadrature: the weight (x - t)^{Re alpha - 1} (and a declared
    (t - a)^{Re sigma} factor of f) go into a Gauss-Jacobi rule, bounded
    oscillatory powers multiply the integrand.
    """
    al = as_order(alpha).alpha
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    if np.any(xs <= iv.a) or np.any(xs > iv.b + 1e-15 * iv.length):
        raise ValidationError(f"left integral needs a < x <= b, got x={xs}")

    sg = complex(f.left_exponent) if f.left_exponent is not None else 0.0 + 0.0j
    u, w = _complex_weight_rule(nodes, al - 1.0, sg)

    half = (xs - iv.a)[:, None] / 2.0  # (m, 1)
    tau = iv.a + half * (1.0 + u)  # (m, n)
    vals = f.eval(tau.ravel()).reshape(tau.shape + (4,))
    if sg != 0:
        # divide out the declared singular factor at interior nodes
        vals = vals * np.exp(-sg * np.log(tau - iv.a))[..., None]

    s = pairwise_sum(w[None, :, None] * vals, axis=1)  # (m, 4)
    pref = _cpow(half[:, 0], al + sg) / gamma_c(al)
    return pref[:, None] * s


def rl_integral_right_many(
    f: Func1D,
    iv: Interval,
    alpha: FracOrder | complex,
    xs: np.ndarray,
    nodes: int = DEFAULT_FRAC_NODES,
) -> np.ndarray:
    """I_{b-}^alpha f at each x in ``xs``; mirror of the left integral."""
    al = as_order(alpha).alpha
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    if np.any(xs >= iv.b) or np.any(xs < iv.a - 1e-15 * iv.length):
        raise ValidationError(f"right integral needs a <= x < b, got x={xs}")

    sg = complex(f.right_exponent) if f.right_exponent is not None else 0.0 + 0.0j
    # weight (1+u)^{alpha - 1} at tau = x end, (1-u)^{sigma} at tau = b
    u, w = _complex_weight_rule(nodes, sg, al - 1.0)

    half = (iv.b - xs)[:, None] / 2.0
    tau = xs[:, None] + half * (1.0 + u)
    vals = f.eval(tau.ravel()).reshape(tau.shape + (4,))
    if sg != 0:
        vals = vals * np.exp(-sg * np.log(iv.b - tau))[..., None]

    s = pairwise_sum(w[None, :, None] * vals, axis=1)
    pref = _cpow(half[:, 0], al + sg) / gamma_c(al)
    return pref[:, None] * s


def rl_integral_left(
    f: Func1D, iv: Interval, alpha, x: float, nodes: int = DEFAULT_FRAC_NODES
) -> BiComplexQuaternion:
    return BiComplexQuaternion.from_coeffs(
        rl_integral_left_many(f, iv, alpha, np.array([x]), nodes)[0]
    )


def rl_integral_right(
    f: Func1D, iv: Interval, alpha, x: float, nodes: int = DEFAULT_FRAC_NODES
) -> BiComplexQuaternion:
    return BiComplexQuaternion.from_coeffs(
        rl_integral_right_many(f, iv, alpha, np.array([x]), nodes)[0]
    )


# }}}


# {{{ Riemann-Liouville derivatives


def rl_deriv_left_many(
    f: Func1D,
    iv: Interval,
    alpha: FracOrder | complex,
    xs: np.ndarray,
    nodes: int = DEFAULT_FRAC_NODES,
) -> np.ndarray:
    """D_{a+}^alpha f at each x in ``xs`` (boundary term + I^{1-alpha}[f'])."""
    al = as_order(alpha).alpha
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    if np.any(xs <= iv.a):
        raise ValidationError("left derivative needs x > a")
    if f.left_exponent is not None and complex(f.left_exponent).real < 0:
        raise ValidationError(
            "left derivative needs f bounded at a "
            f"(declared exponent {f.left_exponent})"
        )

    fa = f.eval(np.array([iv.a], dtype=float))[0]  # (4,)
    cb = _cpow(xs - iv.a, -al) / gamma_c(1.0 - al)  # (m,)
    boundary = cb[:, None] * fa[None, :]
    tail = rl_integral_left_many(_deriv_func(f, iv), iv, 1.0 - al, xs, nodes)
    return boundary + tail


def rl_deriv_right_many(
    f: Func1D,
    iv: Interval,
    alpha: FracOrder | complex,
    xs: np.ndarray,
    nodes: int = DEFAULT_FRAC_NODES,
) -> np.ndarray:
    """D_{b-}^alpha f = f(b)(b-x)^{-alpha}/Gamma(1-alpha) - I_{b-}^{1-alpha}[f']."""
    al = as_order(alpha).alpha
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    if np.any(xs >= iv.b):
        raise ValidationError("right derivative needs x < b")
    if f.right_exponent is not None and complex(f.right_exponent).real < 0:
        raise ValidationError(
            "right derivative needs f bounded at b "
            f"(declared exponent {f.right_exponent})"
        )

    fb = f.eval(np.array([iv.b], dtype=float))[0]
    cb = _cpow(iv.b - xs, -al) / gamma_c(1.0 - al)
    boundary = cb[:, None] * fb[None, :]
    tail = rl_integral_right_many(_deriv_func(f, iv), iv, 1.0 - al, xs, nodes)
    return boundary - tail


def rl_deriv_left(
    f: Func1D, iv: Interval, alpha, x: float, nodes: int = DEFAULT_FRAC_NODES
) -> BiComplexQuaternion:
    return BiComplexQuaternion.from_coeffs(
        rl_deriv_left_many(f, iv, alpha, np.array([x]), nodes)[0]
    )


def rl_deriv_right(
    f: Func1D, iv: Interval, alpha, x: float, nodes: int = DEFAULT_FRAC_NODES
) -> BiComplexQuaternion:
    return BiComplexQuaternion.from_coeffs(
        rl_deriv_right_many(f, iv, alpha, np.array([x]), nodes)[0]
    )


# }}}


# {{{ antiderivative wrappers (exact-derivative identities)


def rl_integral_left_func(
    f: Func1D, iv: Interval, alpha, nodes: int = DEFAULT_FRAC_NODES
) -> Func1D:
    """Package x -> I_{a+}^alpha f(x) as a Func1D.

    The derivative evaluator uses the classical identity
    d/dx I^alpha f = f(a)(x-a)^{alpha-1}/Gamma(alpha) + I^alpha[f'](x),
    and the wrapper declares the (x-a)^alpha endpoint behaviour, so RL
    derivatives of the wrapper stay spectrally accurate.
    """
    al = as_order(alpha).alpha
    sg = complex(f.left_exponent) if f.left_exponent is not None else 0.0 + 0.0j
    ga = gamma_c(al)
    fa = f.eval(np.array([iv.a], dtype=float))[0] if sg == 0 else None
    df = _deriv_func(f, iv)

    def ev(t: np.ndarray) -> np.ndarray:
        t = np.atleast_1d(np.asarray(t, dtype=float))
        out = np.zeros(t.shape + (4,), dtype=complex)
        inside = t > iv.a
        if np.any(inside):
            out[inside] = rl_integral_left_many(f, iv, al, t[inside], nodes)
        return out

    def dv(t: np.ndarray) -> np.ndarray:
        t = np.atleast_1d(np.asarray(t, dtype=float))
        tail = rl_integral_left_many(df, iv, al, t, nodes)
        if fa is not None:
            tail = tail + (_cpow(t - iv.a, al - 1.0) / ga)[:, None] * fa[None, :]
        return tail

    return Func1D(eval=ev, deriv=dv, left_exponent=al + sg)


def rl_integral_right_func(
    f: Func1D, iv: Interval, alpha, nodes: int = DEFAULT_FRAC_NODES
) -> Func1D:
    """Package x -> I_{b-}^alpha f(x); mirror of the left wrapper."""
    al = as_order(alpha).alpha
    sg = complex(f.right_exponent) if f.right_exponent is not None else 0.0 + 0.0j
    ga = gamma_c(al)
    fb = f.eval(np.array([iv.b], dtype=float))[0] if sg == 0 else None
    df = _deriv_func(f, iv)

    def ev(t: np.ndarray) -> np.ndarray:
        t = np.atleast_1d(np.asarray(t, dtype=float))
        out = np.zeros(t.shape + (4,), dtype=complex)
        inside = t < iv.b
        if np.any(inside):
            out[inside] = rl_integral_right_many(f, iv, al, t[inside], nodes)
        return out

    def dv(t: np.ndarray) -> np.ndarray:
        # d/dx I_{b-}^alpha f = -f(b)(b-x)^{alpha-1}/Gamma(alpha) + I_{b-}^alpha[f']
        t = np.atleast_1d(np.asarray(t, dtype=float))
        tail = rl_integral_right_many(df, iv, al, t, nodes)
        if fb is not None:
            tail = tail - (_cpow(iv.b - t, al - 1.0) / ga)[:, None] * fb[None, :]
        return tail

    return Func1D(eval=ev, deriv=dv, right_exponent=al + sg)


# }}}


# {{{ closed-form power oracle

_ORACLE_KINDS = ("int_left", "int_right", "deriv_left", "deriv_right")


def rl_power_oracle(
    iv: Interval, beta: CxScalar, alpha, kind: str, x: float
) -> complex:
    """Euler power rule for RL operators applied to (t-a)^{beta-1} or (b-t)^{beta-1}.

    Exact values via Gamma ratios, used as an independent oracle against the
    quadrature path.  Derivative kinds go through the reciprocal gamma so the
    kernel cases Gamma(beta - alpha) = poles return exactly 0.
    """
    if kind not in _ORACLE_KINDS:
        raise ValidationError(f"unknown oracle kind {kind!r}")
    be = complex(beta)
    if be.real <= 0:
        raise ValidationError(f"power oracle needs Re beta > 0, got {be}")
    al = as_order(alpha).alpha

    if kind.endswith("left"):
        if not iv.a < x <= iv.b:
            raise ValidationError(f"need a < x <= b for {kind}")
        base = x - iv.a
    else:
        if not iv.a <= x < iv.b:
            raise ValidationError(f"need a <= x < b for {kind}")
        base = iv.b - x

    if kind.startswith("int"):
        expo = be + al - 1.0
        coeff = gamma_c(be) / gamma_c(be + al)
    else:
        expo = be - al - 1.0
        coeff = gamma_c(be) * rgamma_c(be - al)

    if coeff == 0:
        return 0.0 + 0.0j
    return coeff * complex(_cpow(np.array([base]), expo)[0])


def power_func_left(iv: Interval, beta: CxScalar) -> Func1D:
    """(t - a)^(beta - 1) with exact derivative and declared endpoint exponent."""
    be = complex(beta)
    a = iv.a

    def fn(t):
        return np.exp((be - 1.0) * np.log(np.maximum(t - a, 1e-300)))

    def dfn(t):
        return (be - 1.0) * np.exp((be - 2.0) * np.log(np.maximum(t - a, 1e-300)))

    sg = None if be == 1.0 else be - 1.0
    return func1d_scalar(fn, dfn, left_exponent=sg)


def power_func_right(iv: Interval, beta: CxScalar) -> Func1D:
    """(b - t)^(beta - 1), mirror of :func:`power_func_left`."""
    be = complex(beta)
    b = iv.b

    def fn(t):
        return np.exp((be - 1.0) * np.log(np.maximum(b - t, 1e-300)))

    def dfn(t):
        return -(be - 1.0) * np.exp((be - 2.0) * np.log(np.maximum(b - t, 1e-300)))

    sg = None if be == 1.0 else be - 1.0
    return func1d_scalar(fn, dfn, right_exponent=sg)


# }}}
