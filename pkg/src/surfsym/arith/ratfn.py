"""Rational functions num/den over Q in lowest terms."""
from __future__ import annotations

from fractions import Fraction

from .mgcd import gcd
from .mpoly import MPoly, as_rat, coerce_all, norm


class RatFn:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        if not isinstance(num, MPoly):
            num = MPoly.const(as_rat(num), den.vars if isinstance(den, MPoly) else ())
        if den is None:
            den = MPoly.const(1, num.vars)
        elif not isinstance(den, MPoly):
            den = MPoly.const(as_rat(den), num.vars)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        vars, (num, den) = coerce_all([num, den])
        if reduce and not den.is_constant() and num:
            g = gcd(num, den)
            if not g.is_constant():
                num = num.divexact(g)
                den = den.divexact(g)
        if num.is_zero():
            den = MPoly.const(1, vars)
        lc = den.leading_coefficient()
        if lc != 1:
            inv = norm(Fraction(1) / lc)
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @property
    def vars(self):
        return self.num.vars

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RatFn):
            return x
        if isinstance(x, MPoly):
            return cls(x)
        return cls(MPoly.const(as_rat(x)))

    def is_polynomial(self):
        return self.den.is_constant()

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        return norm(Fraction(self.num.constant_value()) / self.den.constant_value())

    def __add__(self, other):
        o = RatFn.coerce(other)
        if self.den == o.den:
            return RatFn(self.num + o.num, self.den)
        return RatFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-RatFn.coerce(other))

    def __rsub__(self, other):
        return RatFn.coerce(other) - self

    def __mul__(self, other):
        o = RatFn.coerce(other)
        return RatFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFn.coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RatFn.coerce(other) / self

    def __pow__(self, k):
        return RatFn(self.num ** k, self.den ** k, reduce=False)

    def __eq__(self, other):
        try:
            o = RatFn.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, point):
        num = self.num.evaluate(point)
        den = self.den.evaluate(point)
        if den.is_zero():
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        if num.is_constant() and den.is_constant():
            return norm(Fraction(num.constant_value()) / den.constant_value())
        return RatFn(num, den)

    def __str__(self):
        if self.den.is_constant() and self.den.constant_value() == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFn({str(self)!r})"


def compose(p, subs):
    """p with each variable replaced by an MPoly or RatFn, as a reduced RatFn."""
    if all(isinstance(v, MPoly) or not isinstance(v, RatFn) for v in subs.values()):
        polys = {k: (v if isinstance(v, MPoly) else MPoly.const(as_rat(v))) for k, v in subs.items()}
        return RatFn(p.subs(polys))
    imgs = {k: RatFn.coerce(v) for k, v in subs.items()}
    acc = RatFn(0)
    for exps, c in p.items():
        term = RatFn(c)
        for v, e in zip(p.vars, exps):
            if e:
                img = imgs.get(v, RatFn(MPoly.var(v)))
                term = term * img ** e
        acc = acc + term
    return acc
