"""Evaluator registry for test fields on the rectangle.

A :class:`Field` evaluates vectorized on complex coordinate arrays
``(z1, z2)`` and returns ``(n, 4)`` quaternion-coefficient arrays; exact
first partials in the four real coordinates are carried alongside whenever
the closed form is available (all registry entries have them).

Registry families:

* ``const``   -- constant quaternion;
* ``poly``    -- polynomials in the real coordinates with quaternion
  coefficients (the "coord monomials" are one-term cases);
* ``zpoly``   -- f1(z1,z2) + f2(z1,z2) j with polynomial holomorphic parts;
* ``expz``    -- c1 exp(a1 z1 + b1 z2) + c2 exp(a2 z1 + b2 z2) j;
* ``expx``    -- c exp(lam . x), real-coordinate exponential.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .algebra import BiComplexQuaternion, CPoint2
from .errors import ValidationError

Evaluator = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class Field:
    """A map from the rectangle into the complex quaternions."""

    name: str
    eval: Evaluator
    partials: tuple[Evaluator, Evaluator, Evaluator, Evaluator] | None = None
    scalar_ci: bool = False
    holomorphic: bool = False

    def at(self, q: CPoint2) -> BiComplexQuaternion:
        z1 = np.array([q.z1], dtype=complex)
        z2 = np.array([q.z2], dtype=complex)
        return BiComplexQuaternion.from_coeffs(self.eval(z1, z2)[0])

    def on_points(self, pts: np.ndarray) -> np.ndarray:
        """Evaluate on an (n, 4) real coordinate array."""
        pts = np.asarray(pts, dtype=float)
        return self.eval(pts[..., 0] + 1j * pts[..., 1], pts[..., 2] + 1j * pts[..., 3])

    def partial_on_points(self, axis: int, pts: np.ndarray) -> np.ndarray:
        if self.partials is None:
            raise ValidationError(f"field {self.name!r} carries no exact partials")
        pts = np.asarray(pts, dtype=float)
        return self.partials[axis](
            pts[..., 0] + 1j * pts[..., 1], pts[..., 2] + 1j * pts[..., 3]
        )


def _coeff4(c) -> np.ndarray:
    c = np.asarray(c, dtype=complex)
    if c.shape != (4,):
        raise ValidationError(f"expected 4 coefficients, got shape {c.shape}")
    return c


# {{{ constant and real-coordinate polynomials


def const_field(coeff=(1.0, 0.0, 0.0, 0.0), name: str = "const") -> Field:
    c = _coeff4(coeff)

    def ev(z1, z2):
        return np.broadcast_to(c, np.shape(z1) + (4,)).copy()

    def dz(z1, z2):
        return np.zeros(np.shape(z1) + (4,), dtype=complex)

    scalar = bool(c[2] == 0 and c[3] == 0 and c[0].imag == 0 and c[1].imag == 0)
    return Field(name, ev, (dz, dz, dz, dz), scalar_ci=scalar, holomorphic=True)


def poly_field(terms: Sequence[tuple], name: str = "poly") -> Field:
    """Sum of quaternion-coefficient monomials in the real coordinates.

    ``terms`` is a sequence of ``(coeff4, (p0, p1, p2, p3))`` with
    nonnegative integer powers.
    """
    parsed = [(_coeff4(c), tuple(int(p) for p in pw)) for c, pw in terms]
    for _, pw in parsed:
        if len(pw) != 4 or any(p < 0 for p in pw):
            raise ValidationError(f"bad powers {pw}")

    def coords(z1, z2):
        return np.real(z1), np.imag(z1), np.real(z2), np.imag(z2)

    def ev(z1, z2):
        x = coords(z1, z2)
        out = np.zeros(np.shape(z1) + (4,), dtype=complex)
        for c, pw in parsed:
            mono = np.ones_like(x[0])
            for k in range(4):
                if pw[k]:
                    mono = mono * x[k] ** pw[k]
            out += mono[..., None] * c
        return out

    def partial(axis):
        def dv(z1, z2):
            x = coords(z1, z2)
            out = np.zeros(np.shape(z1) + (4,), dtype=complex)
            for c, pw in parsed:
                if pw[axis] == 0:
                    continue
                mono = np.full_like(x[0], float(pw[axis]))
                for k in range(4):
                    p = pw[k] - (1 if k == axis else 0)
                    if p:
                        mono = mono * x[k] ** p
                out += mono[..., None] * c
            return out

        return dv

    return Field(name, ev, tuple(partial(k) for k in range(4)))


# }}}


# {{{ holomorphic families


def _zpoly_eval(terms):
    def ev(z1, z2):
        out = np.zeros(np.shape(z1), dtype=complex)
        for c, m, n in terms:
            out += c * z1**m * z2**n
        return out

    return ev


def _zpoly_dz(terms, wrt: int):
    def ev(z1, z2):
        out = np.zeros(np.shape(z1), dtype=complex)
        for c, m, n in terms:
            if wrt == 0 and m:
                out += c * m * z1 ** (m - 1) * z2**n
            elif wrt == 1 and n:
                out += c * n * z1**m * z2 ** (n - 1)
        return out

    return ev


def _pack_pair(w1: np.ndarray, w2: np.ndarray) -> np.ndarray:
    """(f1, f2) in C(i) to quaternion coefficients of f1 + f2 j."""
    out = np.empty(np.shape(w1) + (4,), dtype=complex)
    out[..., 0] = w1.real
    out[..., 1] = w1.imag
    out[..., 2] = w2.real
    out[..., 3] = w2.imag
    return out


def zpoly_field(
    f1_terms: Sequence[tuple] = (), f2_terms: Sequence[tuple] = (), name: str = "zpoly"
) -> Field:
    """f = f1(z1, z2) + f2(z1, z2) j with polynomial holomorphic f1, f2.

    Terms are ``(coeff, m, n)`` for ``coeff z1^m z2^n`` with complex (C(i))
    coefficients.
    """
    t1 = [(complex(c), int(m), int(n)) for c, m, n in f1_terms]
    t2 = [(complex(c), int(m), int(n)) for c, m, n in f2_terms]
    p1, p2 = _zpoly_eval(t1), _zpoly_eval(t2)
    d1 = (_zpoly_dz(t1, 0), _zpoly_dz(t1, 1))
    d2 = (_zpoly_dz(t2, 0), _zpoly_dz(t2, 1))

    def ev(z1, z2):
        return _pack_pair(p1(z1, z2), p2(z1, z2))

    # holomorphic: d/dx0 = d/dz1, d/dx1 = i d/dz1, d/dx2 = d/dz2, d/dx3 = i d/dz2
    def partial(axis):
        wrt = 0 if axis in (0, 1) else 1
        unit = 1.0 if axis in (0, 2) else 1.0j

        def dv(z1, z2):
            return _pack_pair(unit * d1[wrt](z1, z2), unit * d2[wrt](z1, z2))

        return dv

    return Field(
        name,
        ev,
        tuple(partial(k) for k in range(4)),
        scalar_ci=not t2,
        holomorphic=True,
    )


def expz_field(
    c1: complex = 1.0,
    a1: complex = 1.0,
    b1: complex = 0.0,
    c2: complex = 0.0,
    a2: complex = 0.0,
    b2: complex = 0.0,
    name: str = "expz",
) -> Field:
    """f = c1 exp(a1 z1 + b1 z2) + c2 exp(a2 z1 + b2 z2) j (holomorphic)."""
    c1, a1, b1 = complex(c1), complex(a1), complex(b1)
    c2, a2, b2 = complex(c2), complex(a2), complex(b2)

    def parts(z1, z2):
        return c1 * np.exp(a1 * z1 + b1 * z2), c2 * np.exp(a2 * z1 + b2 * z2)

    def ev(z1, z2):
        return _pack_pair(*parts(z1, z2))

    def partial(axis):
        unit = 1.0 if axis in (0, 2) else 1.0j
        g1 = a1 if axis in (0, 1) else b1
        g2 = a2 if axis in (0, 1) else b2

        def dv(z1, z2):
            w1, w2 = parts(z1, z2)
            return _pack_pair(unit * g1 * w1, unit * g2 * w2)

        return dv

    return Field(
        name,
        ev,
        tuple(partial(k) for k in range(4)),
        scalar_ci=c2 == 0,
        holomorphic=True,
    )


def expx_field(coeff=(1.0, 0.0, 0.0, 0.0), lam=(1.0, 0.0, 0.0, 0.0),
               name: str = "expx") -> Field:
    """c exp(lam . x) with a quaternion coefficient and real rates."""
    c = _coeff4(coeff)
    lam = np.asarray(lam, dtype=float)
    if lam.shape != (4,):
        raise ValidationError("lam must have 4 entries")

    def ev(z1, z2):
        x = (np.real(z1), np.imag(z1), np.real(z2), np.imag(z2))
        e = np.exp(sum(lam[k] * x[k] for k in range(4)))
        return e[..., None] * c

    def partial(axis):
        def dv(z1, z2):
            return lam[axis] * ev(z1, z2)

        return dv

    return Field(name, ev, tuple(partial(k) for k in range(4)))


# }}}


# {{{ registry

_REGISTRY: dict[str, tuple[Callable[..., Field], str]] = {
    "const": (const_field, "constant quaternion; params: coeff=[4 reals/complex]"),
    "poly": (
        poly_field,
        "real-coordinate polynomial; params: terms=[[coeff4, [p0,p1,p2,p3]], ...]",
    ),
    "zpoly": (
        zpoly_field,
        "holomorphic pair f1 + f2 j; params: f1_terms/f2_terms=[[c, m, n], ...]",
    ),
    "expz": (expz_field, "holomorphic exponential; params: c1, a1, b1, c2, a2, b2"),
    "expx": (expx_field, "real exponential; params: coeff=[...4], lam=[...4]"),
}


def build_field(name: str, params: dict | None = None) -> Field:
    if name not in _REGISTRY:
        raise ValidationError(f"unknown field {name!r}; see list_fields()")
    builder, _ = _REGISTRY[name]
    params = dict(params or {})
    # JSON carries complex numbers as [re, im]
    def decode(v):
        if isinstance(v, (list, tuple)) and len(v) == 2 and all(
            isinstance(x, (int, float)) for x in v
        ):
            return complex(v[0], v[1])
        if isinstance(v, (list, tuple)):
            return [decode(x) for x in v]
        return v

    params = {k: decode(v) for k, v in params.items()}
    return builder(**params)


def list_fields() -> list[tuple[str, str]]:
    return [(k, doc) for k, (_, doc) in sorted(_REGISTRY.items())]


def zero_field() -> Field:
    return const_field((0.0, 0.0, 0.0, 0.0), name="zero")


def random_quadratic(rng: np.random.Generator, name: str = "quad") -> Field:
    """Random quaternionic polynomial of total degree <= 2."""
    powers = [
        (0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
        (2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2),
        (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1),
        (0, 0, 1, 1),
    ]
    terms = [(rng.uniform(-1, 1, size=4), pw) for pw in powers]
    return poly_field(terms, name=name)


# }}}
