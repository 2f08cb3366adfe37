"""Assemble the bivariate system Q x(t, s) + b = x(phi(t, s)), coefficientwise."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

from .arith import MPoly
from .candidates import UNKNOWNS, CandidateFrame, CaseId, fff_constraints
from .surface import FundamentalForm, Parametrization

WORK_VARS = ("t", "s") + UNKNOWNS
COMPONENTS = "xyz"


@dataclass
class PolySystem:
    """Equations in (u, v) that must vanish, and side conditions that must not."""

    equations: List[MPoly]
    side_conditions: List[MPoly]
    case: CaseId
    provenance: List[Tuple] = field(default_factory=list)

    def __len__(self):
        return len(self.equations)

    def dump(self) -> str:
        """Plain-text form: one expanded equation per line, then ``# side:`` lines."""
        lines = [f"# case: {self.case.label}"]
        for eq, tag in zip(self.equations, self.provenance):
            lines.append(f"# from: {_tag_text(tag)}")
            lines.append(str(eq))
        for sc in self.side_conditions:
            lines.append(f"# side: {sc}")
        return "\n".join(lines) + "\n"


def _tag_text(tag):
    if tag[0] == "fff":
        return f"fff {'EFG'[tag[1]]}"
    comp, i, j = tag
    return f"{comp} t^{i}*s^{j}"


def _bitsize(p):
    return max((abs(c).bit_length() for c in p.terms.values()), default=0)


def _lift(p):
    return p.with_vars(WORK_VARS)


def saturate(p: MPoly, factors) -> MPoly:
    """Divide out every side-condition factor as often as it divides exactly."""
    for h in factors:
        if h.is_constant():
            continue
        while True:
            q, r = p.divmod(h)
            if r.terms:
                break
            p = q
    return p


def _coefficients(poly, sink, comp):
    """Split a (t, s, u, v) polynomial into its (u, v) coefficients per t^i s^j."""
    shift = 2 * 24
    mask = (1 << shift) - 1
    groups = {}
    for k, c in poly.terms.items():
        groups.setdefault(k >> shift, {})[k & mask] = c
    for key in sorted(groups):
        i, j = key >> 24, key & ((1 << 24) - 1)
        sink.append(((comp, i, j), MPoly(UNKNOWNS, groups[key])))


def assemble(P: Parametrization, frame: CandidateFrame, form: FundamentalForm) -> PolySystem:
    """The system whose real solutions are the parameters of involutions in this case."""
    phi = frame.phi
    D = _lift(phi.den)
    n = P.n
    (a, b), (c, d) = phi.num
    t = MPoly.var("t", WORK_VARS)
    s = MPoly.var("s", WORK_VARS)
    T = _lift(a) * t + _lift(b) * s + _lift(phi.shift[0]) * D
    S = _lift(c) * t + _lift(d) * s + _lift(phi.shift[1]) * D
    Tp = [MPoly.const(1, WORK_VARS)]
    Sp = [MPoly.const(1, WORK_VARS)]
    Dp = [MPoly.const(1, WORK_VARS)]
    for _ in range(n):
        Tp.append(Tp[-1] * T)
        Sp.append(Sp[-1] * S)
        Dp.append(Dp[-1] * D)
    comps = [_lift(q) for q in P.components]
    raw = []
    for k in range(3):
        # den^n * x_k(phi): every monomial t^i s^j becomes T^i S^j den^(n-i-j)
        comp_phi = MPoly.const(0, WORK_VARS)
        for (i, j), coef in P.components[k].items():
            comp_phi = comp_phi + Tp[i] * Sp[j] * Dp[n - i - j] * coef
        lin = _lift(frame.bn[k])
        for j in range(3):
            if frame.Qn[k][j]:
                lin = lin + _lift(frame.Qn[k][j]) * comps[j]
        diff = lin * Dp[n - 1] - comp_phi
        _coefficients(diff, raw, COMPONENTS[k])
    for idx, eq in enumerate(fff_constraints(frame.case, form, phi)):
        raw.append((("fff", idx), eq))
    sides = [h for h in phi.side_conditions if not h.is_constant()]
    seen = set()
    entries = []
    for tag, eq in raw:
        if eq.is_zero():
            continue
        eq = saturate(eq.primitive_part(), sides)
        if eq.is_constant():
            # a nonzero constant equation: the case is inconsistent
            eq = MPoly.const(1, UNKNOWNS)
        eq = eq.primitive_part()
        key = frozenset(eq.terms.items())
        if key in seen:
            continue
        seen.add(key)
        entries.append((eq.degree(), _bitsize(eq), len(eq.terms), _tag_order(tag), tag, eq))
    entries.sort(key=lambda e: e[:4])
    return PolySystem([e[5] for e in entries], [h.primitive_part() for h in sides],
                      frame.case, [e[4] for e in entries])


def _tag_order(tag):
    if tag[0] == "fff":
        return (3, tag[1], 0)
    return (COMPONENTS.index(tag[0]), tag[1], tag[2])
