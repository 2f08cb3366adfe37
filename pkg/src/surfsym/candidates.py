"""The six configurations of the plane involution and the symbolic frame (Q, b).

Each configuration writes the parameter-plane involution as
``phi(t, s) = Am * (t, s) + c`` where the entries of ``Am`` and ``c`` depend on
two unknowns ``(u, v)``.  Only ``Am`` ever has a denominator, so every
template stores ``Am = num / den`` with polynomial ``num`` and ``den``.  The
matrix entry the paper calls ``c`` is written ``m21`` here to keep it apart
from the shift vector.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import List, Tuple

from .arith import MPoly, RatFn
from .surface import FundamentalForm, Parametrization, cross

UNKNOWNS = ("u", "v")
CASE_NAMES = ("A", "B", "C", "D1", "D2i", "D2ii")


@dataclass(frozen=True, order=True)
class CaseId:
    """A configuration together with the sign of det(Q)."""

    name: str
    sign: int

    def __post_init__(self):
        if self.name not in CASE_NAMES:
            raise ValueError(f"unknown case {self.name!r}")
        if self.sign not in (1, -1):
            raise ValueError("detSign must be +1 or -1")

    @property
    def index(self):
        return (CASE_NAMES.index(self.name), -self.sign)

    @property
    def direct(self):
        return self.sign == 1

    @property
    def label(self):
        return f"{self.name}{'+' if self.sign > 0 else '-'}"

    def __str__(self):
        return self.label

    @classmethod
    def parse(cls, text):
        """Accept ``D1``, ``D1+``, ``D1-``, ``D1+1`` or ``D1:-1``; returns a list."""
        text = text.strip().replace(":", "")
        for suffix, signs in (("+1", (1,)), ("-1", (-1,)), ("+", (1,)), ("-", (-1,))):
            if text.endswith(suffix) and text[: -len(suffix)] in CASE_NAMES:
                return [cls(text[: -len(suffix)], s) for s in signs]
        for name in CASE_NAMES:
            if text.lower() == name.lower():
                return [cls(name, 1), cls(name, -1)]
        raise ValueError(f"unknown case id {text!r}")


def all_cases():
    return [CaseId(n, s) for n in CASE_NAMES for s in (1, -1)]


def _uv(expr):
    return MPoly.from_dict(UNKNOWNS, expr)


U = MPoly.var("u", UNKNOWNS)
V = MPoly.var("v", UNKNOWNS)
ONE = MPoly.const(1, UNKNOWNS)
ZERO = MPoly.const(0, UNKNOWNS)


@dataclass(frozen=True)
class PhiTemplate:
    """phi(t, s) = (num / den) * (t, s) + shift, with side conditions."""

    name: str
    num: Tuple[Tuple[MPoly, MPoly], Tuple[MPoly, MPoly]]
    den: MPoly
    shift: Tuple[MPoly, MPoly]
    side_conditions: List[MPoly] = field(default_factory=list)

    @cached_property
    def m11(self):
        return RatFn(self.num[0][0], self.den)

    @cached_property
    def m12(self):
        return RatFn(self.num[0][1], self.den)

    @cached_property
    def m21(self):
        return RatFn(self.num[1][0], self.den)

    @cached_property
    def m22(self):
        return RatFn(self.num[1][1], self.den)

    @property
    def shift1(self):
        return RatFn(self.shift[0])

    @property
    def shift2(self):
        return RatFn(self.shift[1])

    @cached_property
    def delta(self):
        """ad - bc; identically +1 for case A and -1 for the others."""
        (a, b), (c, d) = self.num
        return RatFn(a * d - b * c, self.den * self.den)

    def involution_defects(self):
        """Numerators of Am^2 - I and (Am + I) c; all vanish for a valid template."""
        (a, b), (c, d) = self.num
        D = self.den
        c1, c2 = self.shift
        sq = [a * a + b * c - D * D, a * b + b * d, c * a + d * c, c * b + d * d - D * D]
        fix = [(a + D) * c1 + b * c2, c * c1 + (d + D) * c2]
        return sq + fix


def phi_template(case, form: FundamentalForm) -> PhiTemplate:
    """Template of the parameter-plane involution for one configuration."""
    name = case.name if isinstance(case, CaseId) else case
    if name == "A":
        return PhiTemplate(name, ((-ONE, ZERO), (ZERO, -ONE)), ONE, (U, V))
    if name == "B":
        return PhiTemplate(name, ((ONE, U), (ZERO, -ONE)), ONE, (U * V * Fraction(-1, 2), V))
    if name == "C":
        return PhiTemplate(name, ((-ONE, U), (ZERO, ONE)), ONE, (V, ZERO))
    if name == "D1":
        # (u, v) = (a, m21); b = (1 - a^2) / m21
        return PhiTemplate(name, ((U * V, ONE - U * U), (V * V, -U * V)), V, (ZERO, ZERO), [V])
    if name == "D2i":
        # (u, v) = (m21, c2) with a = 1, b = 0, c1 = 0
        return PhiTemplate(name, ((ONE, ZERO), (U, -ONE)), ONE, (ZERO, V), [U, V])
    if name == "D2ii":
        return _d2ii(form)
    raise ValueError(f"unknown case {name!r}")


def _d2ii(form):
    """(u, v) = (c1, c2); a = N / W with the remaining entries forced by Am c = -c."""
    A, B, C = form.A, form.B, form.C
    at_c = {"t": U, "s": V}
    Ec = form.E.subs(at_c, UNKNOWNS)
    Fc = form.F.subs(at_c, UNKNOWNS)
    W = U * U * A + U * V * (2 * B) + V * V * C
    N = -(U * U * Ec) - U * V * (Fc - B) + V * V * C
    uv = U * V
    num = ((N * uv, -(W + N) * U * U), (V * V * (N - W), -(N * uv)))
    return PhiTemplate("D2ii", num, uv * W, (U, V), [U, V, W, N - W])


def fff_constraints(case, form: FundamentalForm, phi: PhiTemplate) -> List[MPoly]:
    """First-fundamental-form relations at the shift, cleared of denominators.

    Pulling the metric back along phi at the origin gives
    I(c) = Am^T I(0) Am, i.e. E(c) = a^2 A + 2ac B + c^2 C,
    F(c) = ab A + (ad + bc) B + cd C, G(c) = b^2 A + 2bd B + d^2 C.
    """
    (a, b), (c, d) = phi.num
    D2 = phi.den * phi.den
    A, B, C = form.A, form.B, form.C
    at_c = {"t": phi.shift[0], "s": phi.shift[1]}
    Ec, Fc, Gc = (q.subs(at_c, UNKNOWNS) for q in (form.E, form.F, form.G))
    return [
        Ec * D2 - (a * a * A + a * c * (2 * B) + c * c * C),
        Fc * D2 - (a * b * A + (a * d + b * c) * B + c * d * C),
        Gc * D2 - (b * b * A + b * d * (2 * B) + d * d * C),
    ]


def _inverse3(M):
    """Exact inverse of a 3x3 rational matrix by Gauss-Jordan."""
    n = 3
    aug = [[Fraction(M[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular frame matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [[row[n + j] for j in range(n)] for row in aug]


@dataclass(frozen=True)
class CandidateFrame:
    """Q = L M^-1 and b = x(c) - Q x(0) for one case, scaled by the template denominator.

    ``Qn`` and ``bn`` are polynomial: Q = Qn / den and b = bn / den.
    """

    case: CaseId
    phi: PhiTemplate
    M: tuple
    Ln: tuple
    Qn: tuple
    bn: tuple

    @property
    def den(self):
        return self.phi.den

    @cached_property
    def L(self):
        return tuple(tuple(RatFn(e, self.den) for e in row) for row in self.Ln)

    @cached_property
    def Q(self):
        return tuple(tuple(RatFn(e, self.den) for e in row) for row in self.Qn)

    @cached_property
    def b(self):
        return tuple(RatFn(e, self.den) for e in self.bn)


def frame(P: Parametrization, case: CaseId, form: FundamentalForm, phi: PhiTemplate = None):
    """Build the symbolic frame of ``case`` for a prepared parametrization."""
    if phi is None:
        phi = phi_template(case, form)
    xt0, xs0 = P.partials_at(0, 0)
    n0 = cross(xt0, xs0)
    M = tuple(tuple(col[i] for col in (xt0, xs0, n0)) for i in range(3))
    Minv = _inverse3(M)
    at_c = {"t": phi.shift[0], "s": phi.shift[1]}
    xtc = [q.subs(at_c, UNKNOWNS) for q in P.xt]
    xsc = [q.subs(at_c, UNKNOWNS) for q in P.xs]
    xc = [q.subs(at_c, UNKNOWNS) for q in P.components]
    (a, b), (c, d) = phi.num
    D = phi.den
    delta = phi.delta
    if not delta.is_constant():
        raise ArithmeticError("template determinant is not constant")
    scale = case.sign * delta.constant_value()
    nc = cross(xtc, xsc)
    cols = [
        [xtc[i] * a + xsc[i] * c for i in range(3)],
        [xtc[i] * b + xsc[i] * d for i in range(3)],
        [nc[i] * D * scale for i in range(3)],
    ]
    Ln = tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))
    Qn = tuple(
        tuple(sum((Ln[i][k] * Minv[k][j] for k in range(3) if Minv[k][j]), ZERO) for j in range(3))
        for i in range(3)
    )
    x0 = P.origin_point
    bn = tuple(xc[i] * D - sum((Qn[i][j] * x0[j] for j in range(3) if x0[j]), ZERO)
               for i in range(3))
    return CandidateFrame(case, phi, M, Ln, Qn, bn)
