"""Real solutions of the bivariate systems: finite, empty, or a real curve.

Finite solving eliminates ``v`` with resultants of low-degree equation pairs,
isolates the real roots of the gcd of those resultants, and recovers ``v`` at
each root by a gcd of all equations.  Irrational ``u`` roots are handled in
Q(alpha) with dynamic evaluation (see :mod:`surfsym.arith.algebraic`).  Every
candidate is verified exactly against all equations and side conditions.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from .arith import MPoly, gcd, gcd_list, resultant, squarefree_part, upoly
from .arith.algebraic import AlgElem, NumberField, enclosure, eval_poly, same_value
from .candidates import UNKNOWNS
from .errors import EliminationDegenerate, ZeroWidthRequest
from .systems import PolySystem

MAX_RETRIES = 8
RESULTANTS_PER_ATTEMPT = 2


@dataclass(frozen=True)
class Root2D:
    """A real solution (u, v); each coordinate is a Fraction or an AlgElem."""

    u: object
    v: object
    certified: bool = True

    @property
    def exact(self) -> bool:
        return not isinstance(self.u, AlgElem) and not isinstance(self.v, AlgElem)

    @property
    def field(self):
        for x in (self.u, self.v):
            if isinstance(x, AlgElem):
                return x.field
        return None

    def u_root(self):
        return _as_root_interval(self.u, "u")

    def v_root(self):
        return _as_root_interval(self.v, "v")

    def enclosure(self, width):
        return enclosure(self.u, width), enclosure(self.v, width)

    def sort_key(self):
        (ul, uh), (vl, vh) = self.enclosure(Fraction(1, 2 ** 40))
        return ((ul + uh) / 2, (vl + vh) / 2)

    def values(self):
        return {"u": self.u, "v": self.v}

    def __str__(self):
        if self.exact:
            return f"(u={self.u}, v={self.v})"
        (ul, uh), (vl, vh) = self.enclosure(Fraction(1, 10 ** 6))
        return f"(u~{float((ul + uh) / 2):.6g}, v~{float((vl + vh) / 2):.6g})"


def _as_root_interval(x, var):
    if isinstance(x, AlgElem):
        return x.root_interval(var)
    x = Fraction(x)
    return upoly.RootInterval((-x.numerator, x.denominator), x, x, x, var)


@dataclass
class SolutionSet:
    """kind is ``empty``, ``finite`` or ``positive`` (a real curve of solutions)."""

    kind: str
    roots: List[Root2D] = field(default_factory=list)
    witness: Optional[MPoly] = None

    @property
    def is_empty(self):
        return self.kind == "empty"

    @property
    def positive_dimensional(self):
        return self.kind == "positive"

    def __str__(self):
        if self.kind == "positive":
            extra = f" + {len(self.roots)} isolated" if self.roots else ""
            return f"PositiveDimensional({self.witness}){extra}"
        if self.kind == "empty":
            return "Empty"
        return "Finite{" + ", ".join(str(r) for r in self.roots) + "}"


def refine(root: Root2D, width) -> Root2D:
    """A copy of ``root`` whose coordinate enclosures are narrower than ``width``."""
    width = Fraction(width)
    K = root.field
    if K is None:
        return root
    if width <= 0:
        raise ZeroWidthRequest("cannot refine an irrational root to zero width")
    K2 = K.copy()
    u, v = (AlgElem(K2, x.coeffs) if isinstance(x, AlgElem) else x for x in (root.u, root.v))
    for x in (u, v):
        if isinstance(x, AlgElem):
            x.enclosure(width)
    return Root2D(u, v, root.certified)


# -- real curve detection ---------------------------------------------------------

def _content_in(p, var, other):
    """gcd of the coefficients of p in ``var``: a univariate poly in ``other``."""
    g = None
    for c in p.coeffs_in(var).values():
        g = c if g is None else gcd(g, c)
        if g.is_constant():
            break
    return g


def _has_real_root(p):
    """Whether a univariate MPoly has a real root."""
    if p.is_constant():
        return False
    return upoly.count_real_roots(p.to_dense()) > 0


def has_real_curve(g: MPoly) -> bool:
    """Whether the real zero set of g in the (u, v)-plane is infinite.

    Lines u = const and v = const come from the contents of g.  For the rest,
    the number of real v-roots over u is constant between consecutive real
    roots of lc_v(g) * Res_v(g, g_v); one rational sample per cell decides.
    """
    g = g.with_vars(UNKNOWNS)
    if g.is_zero():
        return True
    if g.is_constant():
        return False
    cu = _content_in(g, "v", "u")
    if _has_real_root(cu):
        return True
    g = g.divexact(cu)
    cv = _content_in(g, "u", "v")
    if _has_real_root(cv):
        return True
    g = g.divexact(cv)
    if g.is_constant():
        return False
    g = squarefree_part(g)
    dv = g.degree("v")
    if dv == 1:
        return True
    gv = g.partial("v")
    lc = g.coeffs_in("v")[dv]
    disc = resultant(g, gv, "v") * lc
    samples = _cell_samples(disc)
    for u0 in samples:
        gu = g.evaluate({"u": u0})
        if upoly.count_real_roots(gu.to_dense("v")) > 0:
            return True
    return False


def _cell_samples(p):
    """One rational point in each open cell cut out by the real roots of p."""
    if p.is_constant():
        return [Fraction(0)]
    roots = upoly.isolate_real_roots(p.to_dense("u"))
    if not roots:
        return [Fraction(0)]
    pts = [roots[0].lo - 1]
    for a, b in zip(roots, roots[1:]):
        pts.append((a.hi + b.lo) / 2)
    pts.append(roots[-1].hi + 1)
    return pts


# -- finite solving ---------------------------------------------------------------------

def _complexity(p):
    return (p.degree(), p.degree("v"), max(abs(c).bit_length() for c in p.terms.values()), len(p.terms))


def _shear(p, lam):
    """p(u' - lam v, v) in the variables (u', v), written again as (u, v)."""
    if not lam:
        return p
    sub = {"u": MPoly.from_dict(UNKNOWNS, {(1, 0): 1, (0, 1): -lam}),
           "v": MPoly.var("v", UNKNOWNS)}
    return p.subs(sub, UNKNOWNS)


def eliminate(eqs, rng=None):
    """A nonzero univariate polynomial in u vanishing at every solution's u."""
    rng = rng or random.Random(0)
    R = None
    for e in eqs:
        if e.degree("v") <= 0 and not e.is_constant():
            R = e if R is None else gcd(R, e)
    withv = sorted((e for e in eqs if e.degree("v") > 0), key=_complexity)
    count = 0
    pairs = [(i, j) for i in range(len(withv)) for j in range(i + 1, len(withv))]
    pairs.sort(key=lambda ij: (_complexity(withv[ij[0]])[0] * _complexity(withv[ij[1]])[0], ij))
    for i, j in pairs:
        if count >= RESULTANTS_PER_ATTEMPT or (R is not None and R.is_constant()):
            break
        r = resultant(withv[i], withv[j], "v")
        if r.is_zero():
            continue
        R = r if R is None else gcd(R, r)
        count += 1
    if R is None and len(withv) >= 2:
        for _ in range(MAX_RETRIES):
            p = sum((e * rng.randint(-9, 9) for e in withv), MPoly.const(0, UNKNOWNS))
            q = sum((e * rng.randint(-9, 9) for e in withv), MPoly.const(0, UNKNOWNS))
            if p.degree("v") <= 0 or q.degree("v") <= 0:
                continue
            r = resultant(p, q, "v")
            if not r.is_zero():
                return r
        raise EliminationDegenerate("all resultants vanish although the equations are coprime")
    if R is None:
        raise EliminationDegenerate("no pair of equations to eliminate with")
    return R


def _univariate_gcd_q(eqs, u0):
    g = []
    for e in eqs:
        d = e.evaluate({"u": u0}).to_dense("v")
        g = upoly.gcd_int(g, d) if g else upoly.primitive_int(d)
        if len(g) == 1:
            return g
    return g


def _kstrip(p):
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return p


def _kgcd(a, b):
    """Monic gcd in K[v] (coefficient lists, low degree first)."""
    a, b = _kstrip(a), _kstrip(b)
    while b:
        if len(b) == 1:
            return [b[0] / b[0]]
        inv = Fraction(1) / b[-1]
        r = list(a)
        db = len(b) - 1
        while len(r) - 1 >= db:
            q = r[-1] * inv
            k = len(r) - 1 - db
            for i in range(db + 1):
                r[i + k] = r[i + k] - q * b[i]
            r.pop()
            r = _kstrip(r)
            if not r:
                break
        a, b = b, r
    if not a:
        return a
    inv = Fraction(1) / a[-1]
    return [c * inv for c in a]


def _fiber_over_algebraic(eqs, K):
    """Common v-roots of the equations at u = alpha as elements of K, or None when
    the fiber has several points (the caller then shears)."""
    g = None
    for e in eqs:
        coeffs = e.coeffs_in("v")
        dv = max(coeffs)
        poly = []
        for k in range(dv + 1):
            c = coeffs.get(k)
            poly.append(AlgElem(K, c.to_dense("u")) if c is not None else AlgElem(K, []))
        poly = _kstrip(poly)
        if not poly:
            continue
        g = poly if g is None else _kgcd(g, poly)
        if len(g) == 1:
            return []
    if g is None:
        return None
    if len(g) > 2:
        sq = _kgcd(g, _kderiv(g))
        if len(sq) > 1:
            return None  # repeated v-root: not in generic position
        return None
    return [-g[0] / g[1]]


def finite_solve(eqs, rng=None):
    """Candidate real solutions of a system with finitely many complex solutions."""
    rng = rng or random.Random(0)
    eqs = [e.with_vars(UNKNOWNS) for e in eqs if not e.is_zero()]
    if any(e.is_constant() for e in eqs):
        return []
    for attempt in range(MAX_RETRIES):
        lam = 0 if attempt == 0 else rng.choice([1, -1, 2, -2, 3, -3, 5, -5])
        sheared = [_shear(e, lam).primitive_part() for e in eqs]
        R = eliminate(sheared, rng)
        pts = _points_over(R, sheared)
        if pts is None:
            continue
        return [(u - lam * v, v) if lam else (u, v) for u, v in pts]
    raise EliminationDegenerate("no generic projection found")


def _points_over(R, eqs):
    out = []
    Rd = upoly.squarefree_int(R.to_dense("u"))
    for iv in upoly.isolate_real_roots(Rd, "u"):
        if iv.exact is not None:
            u0 = iv.exact
            h = _univariate_gcd_q(eqs, u0)
            if not h:
                return None
            for jv in upoly.isolate_real_roots(h, "v") if len(h) > 1 else []:
                if jv.exact is not None:
                    out.append((u0, jv.exact))
                else:
                    K = NumberField.from_root(jv)
                    out.append((Fraction(u0), K.gen()))
        else:
            K = NumberField.from_root(iv)
            vs = _fiber_over_algebraic(eqs, K)
            if vs is None:
                return None
            out.extend((K.gen(), v) for v in vs)
    return out


def _normalize_scalar(x):
    if isinstance(x, AlgElem):
        q = x.rational_value()
        if q is not None:
            return q
        return x
    return Fraction(x)


def verify_point(u, v, system: PolySystem) -> bool:
    vals = {"u": u, "v": v}
    for e in system.equations:
        if not _is_zero(eval_poly(e, vals)):
            return False
    for h in system.side_conditions:
        if _is_zero(eval_poly(h, vals)):
            return False
    return True


def _is_zero(x):
    if isinstance(x, AlgElem):
        return x.is_zero()
    return x == 0


def _dedupe(points):
    out = []
    for u, v in points:
        if any(same_value(u, a) and same_value(v, b) for a, b in out):
            continue
        out.append((u, v))
    return out


def solve_real(system: PolySystem, seed: int = 0) -> SolutionSet:
    """Decide the real solution set of a system (see module docstring)."""
    rng = random.Random(seed)
    eqs = [e.with_vars(UNKNOWNS) for e in system.equations if not e.is_zero()]
    if any(e.is_constant() for e in eqs):
        return SolutionSet("empty")
    if not eqs:
        return SolutionSet("positive", [], MPoly.const(0, UNKNOWNS))
    g = gcd_list(eqs)
    witness = None
    if not g.is_constant():
        gs = squarefree_part(g)
        residual = [e.divexact(g) for e in eqs]
        cands = finite_solve(residual, rng)
        if has_real_curve(gs):
            witness = gs.primitive_part()
            cands = [(u, v) for u, v in cands if not _is_zero(eval_poly(gs, {"u": u, "v": v}))]
        else:
            cands = cands + finite_solve([gs, gs.partial("u"), gs.partial("v")], rng)
    else:
        cands = finite_solve(eqs, rng)
    cands = [(_normalize_scalar(u), _normalize_scalar(v)) for u, v in cands]
    roots = [Root2D(u, v) for u, v in _dedupe(cands) if verify_point(u, v, system)]
    roots.sort(key=Root2D.sort_key)
    if witness is not None:
        return SolutionSet("positive", roots, witness)
    return SolutionSet("finite", roots) if roots else SolutionSet("empty")
