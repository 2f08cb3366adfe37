"""Exact arithmetic in Q(alpha) for a real algebraic alpha.

``alpha`` is given by a square-free integer polynomial ``m`` and an isolating
interval.  ``m`` need not be irreducible: zero tests follow the dynamic
evaluation idea, so whenever an element shares a factor ``g`` with ``m`` the
modulus is replaced by whichever of ``g`` and ``m / g`` vanishes at alpha.
Afterwards every nonzero element is invertible.  Elements stay valid across
such splits because the new modulus divides the old one.
"""
from __future__ import annotations

from fractions import Fraction

from . import upoly
from .mpoly import MPoly, norm, unpack
from .resultant import resultant


def _reduce(coeffs, m):
    if len(coeffs) < len(m):
        return upoly.strip(coeffs)
    return upoly.divmod_q(coeffs, m)[1]


def _horner_interval(coeffs, lo, hi):
    """Enclosure of p([lo, hi]) by interval Horner evaluation."""
    acc_lo = acc_hi = Fraction(0)
    for c in reversed(coeffs):
        cands = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
        acc_lo = min(cands) + c
        acc_hi = max(cands) + c
    return acc_lo, acc_hi


class NumberField:
    """Q[w]/(m) together with the real root alpha of m in [lo, hi]."""

    __slots__ = ("m", "lo", "hi", "var")

    def __init__(self, m, lo, hi, var="w"):
        m = upoly.primitive_int(m)
        if len(m) < 2:
            raise ValueError("modulus must have positive degree")
        self.m = m
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self.var = var
        if self.lo != self.hi and upoly.sign_at(m, self.lo) * upoly.sign_at(m, self.hi) >= 0:
            raise ValueError("interval does not isolate a simple root of the modulus")

    @classmethod
    def from_root(cls, iv):
        """Field generated by the root of a RootInterval (irrational roots only)."""
        if iv.exact is not None:
            raise ValueError("rational roots do not need a number field")
        m = upoly.primitive_int(list(iv.poly))
        for r in upoly.rational_roots(m):
            m = upoly.primitive_int(upoly.divexact_int(m, [-r.numerator, r.denominator]))
        return cls(m, iv.lo, iv.hi, iv.var)

    @property
    def degree(self):
        return len(self.m) - 1

    def copy(self):
        return NumberField(self.m, self.lo, self.hi, self.var)

    def gen(self):
        return AlgElem(self, [0, 1])

    def __call__(self, x):
        if isinstance(x, AlgElem):
            if x.field is not self:
                raise ValueError("element of another field")
            return x
        return AlgElem(self, [x])

    # -- dynamic evaluation ---------------------------------------------------
    def _root_of(self, g):
        """Whether alpha is a root of ``g`` (a divisor of m)."""
        return upoly.sign_at(g, self.lo) * upoly.sign_at(g, self.hi) < 0

    def is_zero(self, coeffs):
        r = _reduce(coeffs, self.m)
        if not r:
            return True
        g = upoly.gcd_int(r, self.m)
        if len(g) == 1:
            return False
        if self._root_of(g):
            self.m = g
            return True
        self.m = upoly.primitive_int(upoly.divexact_int(self.m, g))
        return False

    def inverse(self, coeffs):
        if self.is_zero(coeffs):
            raise ZeroDivisionError("division by zero in a number field")
        a = [Fraction(c) for c in _reduce(coeffs, self.m)]
        # extended Euclid on (m, a): track s with s * a = r (mod m)
        r0, r1 = [Fraction(c) for c in self.m], a
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = upoly.divmod_q(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, upoly.sub(s0, upoly.mul(q, s1))
        if not r1:  # pragma: no cover - excluded by the zero test above
            raise ZeroDivisionError("element shares a factor with the modulus")
        inv = Fraction(1) / r1[0]
        return _reduce([norm(c * inv) for c in s1], self.m)

    # -- real embedding -------------------------------------------------------
    def refine(self, width):
        """Bisect the isolating interval of alpha until it is narrower than ``width``."""
        width = Fraction(width)
        slo = upoly.sign_at(self.m, self.lo)
        while self.hi - self.lo >= width:
            mid = (self.lo + self.hi) / 2
            sm = upoly.sign_at(self.m, mid)
            if sm == 0:  # pragma: no cover - m has no rational roots
                raise ArithmeticError("rational root inside a number field modulus")
            if sm == slo:
                self.lo = mid
            else:
                self.hi = mid

    def enclosure(self, coeffs):
        return _horner_interval(_reduce(coeffs, self.m), self.lo, self.hi)

    def __repr__(self):
        return f"NumberField(m={self.m}, [{self.lo}, {self.hi}])"


class AlgElem:
    """An element of a NumberField, stored as a polynomial in alpha."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = _reduce([norm(Fraction(c)) if not isinstance(c, int) else c for c in coeffs],
                              field.m)

    def _lift(self, other):
        if isinstance(other, AlgElem):
            if other.field is not self.field:
                raise ValueError("elements of different number fields")
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return [other] if other else []
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return AlgElem(self.field, upoly.add(self.coeffs, o))

    __radd__ = __add__

    def __neg__(self):
        return AlgElem(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return AlgElem(self.field, upoly.sub(self.coeffs, o))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return AlgElem(self.field, _reduce(upoly.mul(self.coeffs, o), self.field.m))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * AlgElem(self.field, self.field.inverse(o))

    def __rtruediv__(self, other):
        return AlgElem(self.field, self.field.inverse(self.coeffs)) * other

    def __pow__(self, k):
        out = AlgElem(self.field, [1])
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def is_zero(self):
        return self.field.is_zero(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.field.is_zero(upoly.sub(self.coeffs, o))

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    def rational_value(self):
        """The value as a Fraction when the representative is constant, else None."""
        c = _reduce(self.coeffs, self.field.m)
        if len(c) <= 1:
            return Fraction(c[0]) if c else Fraction(0)
        return None

    def enclosure(self, width=None):
        if width is not None:
            width = Fraction(width)
            while True:
                lo, hi = self.field.enclosure(self.coeffs)
                if hi - lo < width:
                    return lo, hi
                self.field.refine((self.field.hi - self.field.lo) / 4)
        return self.field.enclosure(self.coeffs)

    def sign(self):
        if self.is_zero():
            return 0
        while True:
            lo, hi = self.field.enclosure(self.coeffs)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            self.field.refine((self.field.hi - self.field.lo) / 4)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __float__(self):
        lo, hi = self.enclosure(Fraction(1, 2 ** 60))
        return float((lo + hi) / 2)

    def charpoly(self):
        """Integer polynomial (low degree first) vanishing at this element."""
        m = self.field.m
        w, z = "w", "z"
        mw = MPoly.from_univariate(m, w, (w, z))
        e = MPoly.from_univariate(self.coeffs, w, (w, z)) if self.coeffs else MPoly.const(0, (w, z))
        r = resultant(mw, MPoly.var(z, (w, z)) - e, w)
        return upoly.primitive_int(r.to_dense(z))

    def root_interval(self, var="x"):
        """This element as a RootInterval of a square-free integer polynomial."""
        q = self.rational_value()
        poly = upoly.squarefree_int(self.charpoly())
        if q is not None:
            return upoly.RootInterval(tuple(poly), q, q, q, var)
        roots = upoly.isolate_real_roots(poly, var)
        while True:
            lo, hi = self.enclosure()
            hits = [iv for iv in roots if not (iv.hi < lo or iv.lo > hi)]
            if len(hits) == 1:
                iv = hits[0]
                if iv.exact is not None:
                    return iv
                # the enclosure pins the root: intersect to keep the tighter interval
                if iv.lo <= lo and hi <= iv.hi and upoly.sign_at(list(iv.poly), lo) * upoly.sign_at(list(iv.poly), hi) < 0:
                    return upoly.RootInterval(iv.poly, lo, hi, None, var)
                return iv
            self.field.refine((self.field.hi - self.field.lo) / 4)
            roots = [iv.refine(iv.width / 2) if iv.exact is None else iv for iv in hits]

    def __repr__(self):
        terms = " + ".join(f"{c}*a^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c)
        return f"AlgElem({terms or '0'})"


def enclosure(x, width):
    """Rational interval of width < ``width`` around a Fraction or AlgElem."""
    if isinstance(x, AlgElem):
        q = x.rational_value()
        if q is None:
            return x.enclosure(width)
        x = q
    x = Fraction(x)
    return x, x


def same_value(x, y):
    """Exact equality of two real numbers, possibly from different fields."""
    xa, ya = isinstance(x, AlgElem), isinstance(y, AlgElem)
    if not xa and not ya:
        return Fraction(x) == Fraction(y)
    if not xa:
        return y == x
    if not ya or x.field is y.field:
        return x == y
    c = upoly.squarefree_int(x.charpoly())
    acc = AlgElem(y.field, [0])
    for coef in reversed(c):
        acc = acc * y + coef
    if not acc.is_zero():
        return False
    # both are roots of c: equal iff they sit in the same isolating interval
    roots = upoly.isolate_real_roots(c)
    width = min((iv.width for iv in roots if iv.exact is None), default=Fraction(1))
    while True:
        xl, xh = x.enclosure()
        yl, yh = y.enclosure()
        hx = [i for i, iv in enumerate(roots) if not (iv.hi < xl or iv.lo > xh)]
        hy = [i for i, iv in enumerate(roots) if not (iv.hi < yl or iv.lo > yh)]
        if len(hx) == 1 and len(hy) == 1:
            return hx == hy
        x.field.refine(width / 4)
        y.field.refine(width / 4)
        width /= 4


def eval_poly(p: MPoly, values):
    """Evaluate an MPoly at scalars that support + and * (Fraction or AlgElem)."""
    n = len(p.vars)
    vals = [values[v] for v in p.vars]
    pows = [dict() for _ in range(n)]
    acc = 0
    for k, c in p.terms.items():
        e = unpack(k, n)
        term = c
        for i in range(n):
            if e[i]:
                cache = pows[i]
                pw = cache.get(e[i])
                if pw is None:
                    pw = cache[e[i]] = vals[i] ** e[i]
                term = pw * term
        acc = term + acc
    return acc
