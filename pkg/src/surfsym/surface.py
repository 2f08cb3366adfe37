"""Polynomial surface parametrizations and their first fundamental form."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arith import MPoly
from .errors import DegenerateSurface, RetriesExhausted

PARAMS = ("t", "s")
MAX_RETRIES = 16


def cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _const(p):
    return p.constant_value() if isinstance(p, MPoly) else p


@dataclass(frozen=True)
class Parametrization:
    """x(t, s) = (x, y, z) with cached partials and origin data."""

    x: MPoly
    y: MPoly
    z: MPoly
    substitution: Optional[tuple] = None
    xt: tuple = field(init=False, repr=False, compare=False)
    xs: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        comps = tuple(c.with_vars(PARAMS) if isinstance(c, MPoly) else MPoly.const(c, PARAMS)
                      for c in (self.x, self.y, self.z))
        object.__setattr__(self, "x", comps[0])
        object.__setattr__(self, "y", comps[1])
        object.__setattr__(self, "z", comps[2])
        object.__setattr__(self, "xt", tuple(c.partial("t") for c in comps))
        object.__setattr__(self, "xs", tuple(c.partial("s") for c in comps))

    @classmethod
    def from_polys(cls, x, y, z):
        return cls(x, y, z)

    @property
    def components(self):
        return (self.x, self.y, self.z)

    @property
    def n(self) -> int:
        """Total degree: the maximum of the component total degrees."""
        return max(max(c.degree(), 0) for c in self.components)

    def at(self, t, s):
        pt = {"t": t, "s": s}
        return tuple(_const(c.evaluate(pt)) for c in self.components)

    def partials_at(self, t, s):
        pt = {"t": t, "s": s}
        return (tuple(_const(c.evaluate(pt)) for c in self.xt),
                tuple(_const(c.evaluate(pt)) for c in self.xs))

    @property
    def origin_point(self):
        return self.at(0, 0)

    @property
    def origin_normal(self):
        xt0, xs0 = self.partials_at(0, 0)
        return cross(xt0, xs0)

    def normal_field(self):
        """xt x xs as a triple of polynomials."""
        return cross(self.xt, self.xs)

    def transformed(self, R, w):
        """The parametrization R * x + w for a 3x3 matrix R and a shift w."""
        comps = self.components
        out = []
        for i in range(3):
            acc = MPoly.const(w[i], PARAMS)
            for j in range(3):
                if R[i][j]:
                    acc = acc + comps[j] * R[i][j]
            out.append(acc)
        return Parametrization(*out)

    def __str__(self):
        return f"x = {self.x}\ny = {self.y}\nz = {self.z}"


@dataclass(frozen=True)
class FundamentalForm:
    E: MPoly
    F: MPoly
    G: MPoly
    A: Fraction
    B: Fraction
    C: Fraction


def plane_check(P: Parametrization) -> bool:
    """True when xt x xs keeps a constant direction, i.e. the image is planar."""
    N = P.normal_field()
    if all(c.is_zero() for c in N):
        return False
    n0 = None
    for pt in ((0, 0), (1, 0), (0, 1), (1, 1), (2, -1), (-3, 2), (5, 7)):
        cand = tuple(_const(c.evaluate({"t": pt[0], "s": pt[1]})) for c in N)
        if any(cand):
            n0 = cand
            break
    if n0 is None:
        # N vanishes on all probe points yet is nonzero: fall back to the leading term
        n0 = tuple(c.leading_coefficient() if c else 0 for c in N)
    return all(c.is_zero() for c in cross(N, n0))


def _substitute(P, a, b, c, d, e, f):
    sub = {"t": MPoly.from_dict(PARAMS, {(1, 0): a, (0, 1): b, (0, 0): c}),
           "s": MPoly.from_dict(PARAMS, {(1, 0): d, (0, 1): e, (0, 0): f})}
    comps = [comp.subs(sub, PARAMS) for comp in P.components]
    return Parametrization(*comps, substitution=(a, b, c, d, e, f))


def prepare(P_raw: Parametrization, seed: int = 0) -> Parametrization:
    """Return a parametrization of the same surface that is regular at (0, 0).

    The identity is kept when the origin is already regular.  Otherwise a
    random affine change (t, s) -> (a t + b s + c, d t + e s + f) with integer
    coefficients in [-5, 5] is tried, with fresh draws, up to 16 times.
    """
    if all(c.is_zero() for c in P_raw.normal_field()):
        raise DegenerateSurface()
    if any(P_raw.origin_normal):
        return P_raw
    rng = random.Random(seed)
    for _ in range(MAX_RETRIES):
        a, b, c, d, e, f = (rng.randint(-5, 5) for _ in range(6))
        if a * e - b * d == 0:
            continue
        P = _substitute(P_raw, a, b, c, d, e, f)
        if any(P.origin_normal):
            return P
    raise RetriesExhausted(f"no regular origin after {MAX_RETRIES} random substitutions")


def fundamental_form(P: Parametrization) -> FundamentalForm:
    E = dot(P.xt, P.xt)
    F = dot(P.xt, P.xs)
    G = dot(P.xs, P.xs)
    origin = {"t": 0, "s": 0}
    A, B, C = (_const(q.evaluate(origin)) for q in (E, F, G))
    if not (A > 0 and C > 0 and A * C - B * B > 0):
        raise DegenerateSurface("first fundamental form is not positive definite at the origin")
    n0 = P.origin_normal
    assert A * C - B * B == dot(n0, n0)
    return FundamentalForm(E, F, G, A, B, C)
