"""Verified involutions, their kinds and fixed-point elements, and the final report.

All routines are written against a scalar type that is either ``Fraction``
or :class:`~surfsym.arith.algebraic.AlgElem`; both support the field
operations, and zero tests go through :func:`is_zero`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import List, Optional, Tuple

from .arith import MPoly
from .arith.algebraic import AlgElem, eval_poly, same_value
from .candidates import CandidateFrame, CaseId
from .errors import CentralNotUnique, VerificationFailed
from .solver import Root2D
from .surface import Parametrization, cross

AXIAL, PLANAR, CENTRAL = "axial", "planar", "central"


# -- scalar helpers -------------------------------------------------------------------

def is_zero(x) -> bool:
    if isinstance(x, AlgElem):
        return x.is_zero()
    return x == 0


def _simplify(x):
    if isinstance(x, AlgElem):
        q = x.rational_value()
        return q if q is not None else x
    if isinstance(x, float):
        raise TypeError("floating point value in exact computation")
    return Fraction(x)


def is_exact(x) -> bool:
    return not isinstance(x, AlgElem)


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _matmul(A, B):
    n, m, k = len(A), len(B[0]), len(B)
    return tuple(tuple(sum((A[i][l] * B[l][j] for l in range(k)), Fraction(0)) for j in range(m))
                 for i in range(n))


def _matvec(A, x):
    return tuple(sum((A[i][j] * x[j] for j in range(len(x))), Fraction(0)) for i in range(len(A)))


def _identity(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def _det3(M):
    return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
            - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
            + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))


def _all_zero(xs):
    return all(is_zero(x) for x in xs)


def _mat_eq(A, B):
    return all(is_zero(A[i][j] - B[i][j]) for i in range(len(A)) for j in range(len(A[0])))


def solve_linear(A, rhs):
    """Solutions of A x = rhs as (particular, nullspace basis), or None if inconsistent."""
    rows = [list(A[i]) + [rhs[i]] for i in range(len(A))]
    n = len(A[0])
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if not is_zero(rows[i][col])), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = Fraction(1) / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not is_zero(rows[i][col]):
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    for i in range(r, len(rows)):
        if not is_zero(rows[i][n]):
            return None
    part = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        part[col] = rows[i][n]
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for i, col in enumerate(pivots):
            vec[col] = -rows[i][f]
        basis.append(tuple(vec))
    return tuple(part), basis


def normalize_direction(vec):
    """Primitive integer vector with positive first nonzero entry, when rational;
    otherwise scaled so that the first nonzero entry is 1."""
    vec = [_simplify(x) for x in vec]
    lead = next(x for x in vec if not is_zero(x))
    if all(is_exact(x) for x in vec):
        den = 1
        for x in vec:
            den = lcm(den, Fraction(x).denominator)
        ints = [int(Fraction(x) * den) for x in vec]
        g = 0
        for x in ints:
            g = gcd(g, x)
        if lead < 0:
            g = -g
        return tuple(Fraction(x // g) for x in ints)
    inv = Fraction(1) / lead
    return tuple(_simplify(x * inv) for x in vec)


# -- elements ----------------------------------------------------------------------

@dataclass(frozen=True)
class Point:
    center: tuple

    type = "point"

    def contains(self, p):
        return _all_zero(a - b for a, b in zip(p, self.center))

    def sample_points(self):
        return [self.center]


@dataclass(frozen=True)
class Line:
    point: tuple
    direction: tuple

    type = "line"

    def contains(self, p):
        d = tuple(a - b for a, b in zip(p, self.point))
        return _all_zero(cross(d, self.direction))

    def sample_points(self):
        return [self.point, tuple(a + b for a, b in zip(self.point, self.direction))]

    def same_as(self, other):
        return (isinstance(other, Line) and _all_zero(cross(self.direction, other.direction))
                and self.contains(other.point))


@dataclass(frozen=True)
class Plane:
    normal: tuple
    offset: object

    type = "plane"

    def contains(self, p):
        return is_zero(_dot(self.normal, p) - self.offset)

    def sample_points(self):
        n = self.normal
        k = next(i for i in range(3) if not is_zero(n[i]))
        base = [Fraction(0)] * 3
        base[k] = self.offset / n[k]
        # a second point: move along a vector orthogonal to n
        j = (k + 1) % 3
        step = [Fraction(0)] * 3
        step[j] = n[k]
        step[k] = -n[j]
        return [tuple(base), tuple(a + b for a, b in zip(base, step))]


def _line_from(part, direction):
    d = normalize_direction(direction)
    # foot of the perpendicular from the origin: a canonical point on the line
    lam = _dot(part, d) / _dot(d, d)
    p = tuple(_simplify(a - lam * b) for a, b in zip(part, d))
    return Line(p, d)


# -- fixed locus in the parameter plane --------------------------------------------

@dataclass(frozen=True)
class PointLocus:
    t: object
    s: object


@dataclass(frozen=True)
class LineLocus:
    """The line p*t + q*s = r in the parameter plane."""

    p: object
    q: object
    r: object

    def parametrize(self):
        """(base point, direction) of the line."""
        if not is_zero(self.p):
            base = (self.r / self.p, Fraction(0))
        else:
            base = (Fraction(0), self.r / self.q)
        return base, (-self.q, self.p)


@dataclass(frozen=True)
class ConcretePhi:
    matrix: tuple
    shift: tuple

    def __call__(self, t, s):
        (a, b), (c, d) = self.matrix
        return (a * t + b * s + self.shift[0], c * t + d * s + self.shift[1])


def fixed_locus(phi: ConcretePhi):
    """Fixed points of phi, from (Am - I) p = -c solved directly."""
    (a, b), (c, d) = phi.matrix
    A = ((a - 1, b), (c, d - 1))
    rhs = (-phi.shift[0], -phi.shift[1])
    sol = solve_linear(A, rhs)
    if sol is None:
        raise VerificationFailed("parameter involution has no fixed point")
    part, basis = sol
    if not basis:
        return PointLocus(_simplify(part[0]), _simplify(part[1]))
    row = A[0] if not _all_zero(A[0]) else A[1]
    k = 0 if row is A[0] else 1
    vals = [_simplify(x) for x in (row[0], row[1], rhs[k])]
    lead = vals[0] if not is_zero(vals[0]) else vals[1]
    return LineLocus(*(_simplify(x / lead) for x in vals))


# -- involutions ----------------------------------------------------------------------

@dataclass(frozen=True)
class Involution:
    kind: str
    Q: tuple
    b: tuple
    phi: ConcretePhi
    case: CaseId
    element: object
    root: Root2D
    locus: object = None

    @property
    def exact(self):
        return all(is_exact(x) for row in self.Q for x in row) and all(is_exact(x) for x in self.b)

    @property
    def detQ(self):
        return 1 if self.kind == AXIAL else -1

    def apply(self, p):
        return tuple(a + b for a, b in zip(_matvec(self.Q, p), self.b))

    def same_motion(self, other):
        return (all(same_value(x, y) for r1, r2 in zip(self.Q, other.Q) for x, y in zip(r1, r2))
                and all(same_value(x, y) for x, y in zip(self.b, other.b)))


class _BiPoly:
    """Tiny bivariate polynomial over the scalar field: {(i, j): coefficient}."""

    @staticmethod
    def mul(a, b):
        out = {}
        for (i1, j1), c1 in a.items():
            for (i2, j2), c2 in b.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out[k] + c1 * c2 if k in out else c1 * c2
        return out

    @staticmethod
    def add_into(acc, a, scale):
        for k, c in a.items():
            acc[k] = acc[k] + c * scale if k in acc else c * scale


def _compose(comp: MPoly, T, S):
    """comp(T, S) for bivariate T, S given as _BiPoly dicts."""
    tp, sp = [{(0, 0): Fraction(1)}], [{(0, 0): Fraction(1)}]
    acc = {}
    for (i, j), c in comp.items():
        while len(tp) <= i:
            tp.append(_BiPoly.mul(tp[-1], T))
        while len(sp) <= j:
            sp.append(_BiPoly.mul(sp[-1], S))
        _BiPoly.add_into(acc, _BiPoly.mul(tp[i], sp[j]), c)
    return acc


def identity_defect(P: Parametrization, Q, b, phi: ConcretePhi):
    """Coefficients of Q x(t, s) + b - x(phi(t, s)), as a dict per component."""
    (a, bb), (c, d) = phi.matrix
    T = {(1, 0): a, (0, 1): bb, (0, 0): phi.shift[0]}
    S = {(1, 0): c, (0, 1): d, (0, 0): phi.shift[1]}
    comps = [{e: Fraction(cf) for e, cf in comp.items()} for comp in P.components]
    out = []
    for k in range(3):
        acc = {(0, 0): b[k]}
        for j in range(3):
            _BiPoly.add_into(acc, comps[j], Q[k][j])
        composed = _compose(P.components[k], T, S)
        _BiPoly.add_into(acc, composed, Fraction(-1))
        out.append(acc)
    return out


def _x_along(P, base, direction):
    """x(base + lam * direction) as polynomials in lam: a list of coefficient lists."""
    T = {(0, 0): base[0], (1, 0): direction[0]}
    S = {(0, 0): base[1], (1, 0): direction[1]}
    out = []
    for comp in P.components:
        composed = _compose(comp, T, S)
        deg = max((i for i, _ in composed), default=0)
        out.append([composed.get((i, 0), Fraction(0)) for i in range(deg + 1)])
    return out


def classify(inv_or_Q) -> str:
    """Axial when det Q = 1; otherwise central iff det(Q - I) != 0, else planar."""
    Q = inv_or_Q.Q if isinstance(inv_or_Q, Involution) else inv_or_Q
    dq = _det3(Q)
    if is_zero(dq - 1):
        return AXIAL
    QmI = tuple(tuple(Q[i][j] - (1 if i == j else 0) for j in range(3)) for i in range(3))
    return PLANAR if is_zero(_det3(QmI)) else CENTRAL


def element(Q, b, kind=None):
    """Fixed set of x -> Qx + b from (Q - I) x = -b: point, line or plane."""
    QmI = tuple(tuple(Q[i][j] - (1 if i == j else 0) for j in range(3)) for i in range(3))
    sol = solve_linear(QmI, tuple(-x for x in b))
    if sol is None:
        raise VerificationFailed("involution has no fixed point")
    part, basis = sol
    if len(basis) == 0:
        return Point(tuple(_simplify(x) for x in part))
    if len(basis) == 1:
        return _line_from(part, basis[0])
    if len(basis) == 2:
        row = next(r for r in QmI if not _all_zero(r))
        n = normalize_direction(row)
        return Plane(n, _simplify(_dot(n, part)))
    raise VerificationFailed("identity motion is not an involution")


def _cross_check(P, inv_kind, elem, locus):
    """The image of the parameter fixed locus must lie in the element."""
    if isinstance(locus, PointLocus):
        X = tuple(eval_poly(c, {"t": locus.t, "s": locus.s}) for c in P.components)
        if not elem.contains(X):
            raise VerificationFailed("image of the fixed parameter point is off the element")
        if inv_kind == CENTRAL and not Point(X).contains(elem.center):
            raise VerificationFailed("center differs from the image of the fixed point")
        if inv_kind == AXIAL:
            xt = tuple(eval_poly(c, {"t": locus.t, "s": locus.s}) for c in P.xt)
            xs = tuple(eval_poly(c, {"t": locus.t, "s": locus.s}) for c in P.xs)
            nrm = cross(xt, xs)
            if not _all_zero(nrm) and not _all_zero(cross(nrm, elem.direction)):
                raise VerificationFailed("axis is not the surface normal at the fixed point")
        return
    base, direction = locus.parametrize()
    curve = _x_along(P, base, direction)
    deg = max(len(c) for c in curve)
    # sample deg + 1 parameter values: a polynomial identity of degree <= deg
    for lam in range(deg + 1):
        X = tuple(sum((cf * Fraction(lam) ** i for i, cf in enumerate(c)), Fraction(0)) for c in curve)
        if not elem.contains(X):
            raise VerificationFailed("image of the fixed parameter line leaves the element")


def instantiate(frame: CandidateFrame, root: Root2D, P: Parametrization) -> Involution:
    """Substitute a certified root into the frame and verify the involution exactly."""
    vals = root.values()
    den = eval_poly(frame.den, vals)
    if is_zero(den):
        raise VerificationFailed("template denominator vanishes at the root")
    inv = Fraction(1) / den
    Q = tuple(tuple(_simplify(eval_poly(e, vals) * inv) for e in row) for row in frame.Qn)
    b = tuple(_simplify(eval_poly(e, vals) * inv) for e in frame.bn)
    num = frame.phi.num
    Am = tuple(tuple(_simplify(eval_poly(e, vals) * inv) for e in row) for row in num)
    shift = tuple(_simplify(eval_poly(e, vals)) for e in frame.phi.shift)
    phi = ConcretePhi(Am, shift)
    I3, I2 = _identity(3), _identity(2)
    Qt = tuple(tuple(Q[j][i] for j in range(3)) for i in range(3))
    if not _mat_eq(_matmul(Qt, Q), I3):
        raise VerificationFailed(f"{frame.case}: Q is not orthogonal")
    if not _mat_eq(_matmul(Q, Q), I3):
        raise VerificationFailed(f"{frame.case}: Q^2 != I")
    if not _mat_eq(_matmul(Am, Am), I2):
        raise VerificationFailed(f"{frame.case}: phi is not an involution")
    if not _all_zero(_matvec(((Am[0][0] + 1, Am[0][1]), (Am[1][0], Am[1][1] + 1)), shift)):
        raise VerificationFailed(f"{frame.case}: phi shift not in ker(Am + I)")
    QpI = tuple(tuple(Q[i][j] + (1 if i == j else 0) for j in range(3)) for i in range(3))
    if not _all_zero(_matvec(QpI, b)):
        raise VerificationFailed(f"{frame.case}: b not in ker(Q + I)")
    for comp in identity_defect(P, Q, b, phi):
        if not _all_zero(comp.values()):
            raise VerificationFailed(f"{frame.case}: Q x + b != x o phi")
    kind = classify(Q)
    if (kind == AXIAL) != (frame.case.sign == 1):
        raise VerificationFailed(f"{frame.case}: det Q disagrees with the case sign")
    elem = element(Q, b, kind)
    locus = fixed_locus(phi)
    _cross_check(P, kind, elem, locus)
    return Involution(kind, Q, b, phi, frame.case, elem, root, locus)


# -- report ------------------------------------------------------------------------

@dataclass
class CaseOutcome:
    case: CaseId
    status: str
    detail: str = ""
    involutions: List[Involution] = field(default_factory=list)
    witness: Optional[MPoly] = None
    frame: Optional[CandidateFrame] = None
    timings: dict = field(default_factory=dict)


@dataclass
class SymmetryReport:
    involutions: List[Involution]
    revolution: Optional[dict]
    surface: Tuple[str, str, str]
    outcomes: List[CaseOutcome]
    warnings: List[str] = field(default_factory=list)

    def of_kind(self, kind):
        return [i for i in self.involutions if i.kind == kind]

    @property
    def axial(self):
        return self.of_kind(AXIAL)

    @property
    def planar(self):
        return self.of_kind(PLANAR)

    @property
    def central(self):
        return self.of_kind(CENTRAL)


def family_axis(frame: CandidateFrame, witness: MPoly):
    """Common fixed locus of every member of a positive-dimensional family.

    A point x is fixed by all members iff (Qn - den I) x + bn is divisible by
    the witness curve; the remainder of division by a single polynomial is
    canonical, so this is a linear system over Q.
    """
    g = witness
    rows = []
    for i in range(3):
        polys = []
        for j in range(3):
            e = frame.Qn[i][j] - (frame.den if i == j else 0)
            polys.append(e.divmod(g)[1] if not e.is_zero() else e)
        rb = frame.bn[i].divmod(g)[1] if not frame.bn[i].is_zero() else frame.bn[i]
        monos = set(rb.terms)
        for p in polys:
            monos.update(p.terms)
        for k in sorted(monos):
            rows.append(([Fraction(p.terms.get(k, 0)) for p in polys], Fraction(-rb.terms.get(k, 0))))
    if not rows:
        return None
    sol = solve_linear([r[0] for r in rows], [r[1] for r in rows])
    if sol is None:
        return None
    part, basis = sol
    if len(basis) != 1:
        return None
    return _line_from(part, basis[0])


def _common_axis(involutions):
    lines = [inv.element for inv in involutions if inv.kind == AXIAL]
    if not lines:
        return None
    first = lines[0]
    if all(first.same_as(other) for other in lines[1:]):
        return first
    return None


def _dedupe(involutions):
    out = []
    for inv in involutions:
        if any(inv.same_motion(o) for o in out):
            continue
        out.append(inv)
    return out


def aggregate(outcomes: List[CaseOutcome], surface=("", "", "")) -> SymmetryReport:
    """Join the per-case results into a report (deterministic order)."""
    outcomes = sorted(outcomes, key=lambda o: o.case.index)
    found = []
    for o in outcomes:
        found.extend(sorted(o.involutions, key=lambda i: i.root.sort_key()))
    invs = _dedupe(found)
    if len([i for i in invs if i.kind == CENTRAL]) > 1:
        raise CentralNotUnique("more than one symmetry center: the input violates the preconditions")
    warnings = []
    revolution = None
    positive = [o for o in outcomes if o.status == "positive"]
    if positive:
        common = _common_axis(invs)
        fam = None
        for o in positive:
            if o.frame is not None and o.witness is not None:
                fam = family_axis(o.frame, o.witness)
                if fam is not None:
                    src = o
                    break
        if common is not None and fam is not None and not common.same_as(fam):
            warnings.append("revolution axis from the family differs from the common symmetry axis")
        axis = common if common is not None else fam
        witness_case = positive[0] if fam is None else src
        revolution = {
            "axis": axis,
            "case": witness_case.case,
            "witness": witness_case.witness,
            "source": "common axis" if common is not None else ("family" if fam is not None else "none"),
        }
        if axis is None:
            warnings.append("surface of revolution detected but its axis could not be pinned")
    return SymmetryReport(invs, revolution, tuple(surface), outcomes, warnings)
