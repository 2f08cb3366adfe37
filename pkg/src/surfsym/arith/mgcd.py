"""Multivariate gcd over Q by recursive primitive remainder sequences."""
from __future__ import annotations

import random
from fractions import Fraction
from math import gcd as igcd

from . import upoly
from .mpoly import MPoly, coerce_all


def _int_content(p):
    g = 0
    for c in p.terms.values():
        g = igcd(g, c)
        if g == 1:
            break
    return g


def _normalize(p):
    """Positive leading coefficient, integer content removed."""
    return p.primitive()[1]


def _lc_in(p, x):
    cs = p.coeffs_in(x)
    return cs[max(cs)]


def content_in(p, x):
    """gcd of the coefficients of p viewed as a polynomial in x."""
    g = None
    for c in p.coeffs_in(x).values():
        g = c if g is None else _gcd_rec(g, c)
        if g.is_constant():
            return MPoly.const(1, p.vars)
    return _normalize(g) if g is not None else MPoly.const(0, p.vars)


def _prem_lazy(a, b, x):
    db = b.degree(x)
    lb = _lc_in(b, x)
    xv = MPoly.var(x, a.vars)
    r = a
    while r and r.degree(x) >= db:
        dr = r.degree(x)
        lr = _lc_in(r, x)
        r = lb * r - lr * (xv ** (dr - db)) * b
    return r


def _coprime_hint(a, b, x, others):
    """True when a specialisation proves deg_x gcd(a, b) = 0."""
    la, lb = _lc_in(a, x), _lc_in(b, x)
    rng = random.Random(0x5EED)
    for _ in range(3):
        pt = {v: rng.randint(-97, 97) for v in others}
        if la.evaluate(pt).is_zero() or lb.evaluate(pt).is_zero():
            continue
        ua = a.evaluate(pt).to_dense(x)
        ub = b.evaluate(pt).to_dense(x)
        return len(upoly.gcd_int(ua, ub)) == 1
    return False


def _gcd_rec(p, q):
    """gcd of two integral polynomials in a shared context (positive lc)."""
    if p.is_zero():
        return _normalize(q) if q else q
    if q.is_zero():
        return _normalize(p)
    if p.is_constant() or q.is_constant():
        g = igcd(_int_content(p), _int_content(q))
        return MPoly.const(g, p.vars)
    up, uq = p.used_vars(), q.used_vars()
    used = [v for v in p.vars if v in up or v in uq]
    x = used[0]
    if x not in up:
        return _gcd_rec(p, content_in(q, x) * _int_content(q))
    if x not in uq:
        return _gcd_rec(content_in(p, x) * _int_content(p), q)
    cp, cq = content_in(p, x), content_in(q, x)
    c = _gcd_rec(cp * _int_content(p), cq * _int_content(q))
    a = _normalize(p.divexact(cp))
    b = _normalize(q.divexact(cq))
    if a.degree(x) < b.degree(x):
        a, b = b, a
    others = [v for v in used if v != x]
    if others and _coprime_hint(a, b, x, others):
        return c
    if not others:
        g = upoly.gcd_int(a.to_dense(x), b.to_dense(x))
        return c * MPoly.from_univariate(g, x, p.vars)
    while True:
        if b.degree(x) == 0:
            return c
        r = _prem_lazy(a, b, x)
        if not r:
            break
        a, b = b, _normalize(r.divexact(content_in(r, x)))
    g = _normalize(b.divexact(content_in(b, x)))
    return _normalize(c * g)


def gcd(p, q):
    """Monic (lex leading coefficient 1) gcd over Q."""
    vars, (p, q) = coerce_all([p, q])
    if p.is_zero() and q.is_zero():
        return MPoly(vars, {})
    g = _gcd_rec(p.primitive_part() if p else p, q.primitive_part() if q else q)
    return g.monic()


def gcd_list(polys):
    polys = [p for p in polys if p]
    if not polys:
        raise ValueError("gcd of an empty list")
    vars, polys = coerce_all(polys)
    g = polys[0].primitive_part()
    for p in sorted(polys[1:], key=lambda f: (f.degree(), len(f.terms))):
        g = _gcd_rec(g, p.primitive_part())
        if g.is_constant():
            return MPoly.const(1, vars)
    return g.monic()


def squarefree_part(p):
    """Square-free part of a univariate or multivariate MPoly (monic)."""
    used = p.used_vars()
    if not used:
        return MPoly.const(1, p.vars) if p else p
    d = gcd_list([p] + [p.partial(v) for v in used])
    if d.is_constant():
        return p.monic()
    return p.divexact(d).monic()
