"""Sparse multivariate polynomials with exact rational coefficients.

Monomials are packed into a single Python int, ``SHIFT`` bits per variable,
with the first variable in the most significant field.  Integer order of the
packed keys is therefore lexicographic order with ``vars[0] > vars[1] > ...``,
which is the canonical term order used for leading terms and printing.

Coefficients are ``int`` whenever they are integral and ``Fraction``
otherwise, so equal polynomials always have identical term maps.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from numbers import Rational

from . import _kernel

SHIFT = 24
MASK = (1 << SHIFT) - 1


def norm(c):
    """Canonical coefficient: integral Fractions collapse to int."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def as_rat(c):
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return norm(c)
    if isinstance(c, Rational):
        return norm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"not an exact rational: {c!r}")


def pack(exps) -> int:
    key = 0
    for e in exps:
        if e < 0 or e > MASK:
            raise OverflowError(f"exponent {e} out of range")
        key = (key << SHIFT) | e
    return key


def unpack(key: int, n: int) -> tuple:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = key & MASK
        key >>= SHIFT
    return tuple(out)


def _repack(terms, old_vars, new_vars):
    pos = [new_vars.index(v) for v in old_vars]
    n_old, n_new = len(old_vars), len(new_vars)
    out = {}
    for k, c in terms.items():
        e = unpack(k, n_old)
        ne = [0] * n_new
        for i, p in enumerate(pos):
            ne[p] = e[i]
        out[pack(ne)] = c
    return out


class MPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        self.vars = tuple(vars)
        self.terms = terms if terms is not None else {}

    # -- construction -------------------------------------------------------
    @classmethod
    def from_dict(cls, vars, d):
        vars = tuple(vars)
        terms = {}
        for exps, c in d.items():
            if isinstance(exps, int):
                exps = (exps,)
            if len(exps) != len(vars):
                raise ValueError("exponent vector length does not match variables")
            c = as_rat(c)
            if c:
                k = pack(exps)
                terms[k] = norm(terms.get(k, 0) + c)
                if not terms[k]:
                    del terms[k]
        return cls(vars, terms)

    @classmethod
    def const(cls, c, vars=()):
        c = as_rat(c)
        return cls(vars, {0: c} if c else {})

    @classmethod
    def var(cls, name, vars=None):
        vars = tuple(vars) if vars is not None else (name,)
        if name not in vars:
            vars = vars + (name,)
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls(vars, {pack(e): 1})

    @classmethod
    def from_univariate(cls, coeffs, var, vars=None):
        """Build from a dense coefficient list (low degree first)."""
        vars = tuple(vars) if vars is not None else (var,)
        i = vars.index(var)
        shift = SHIFT * (len(vars) - 1 - i)
        return cls(vars, {d << shift: norm(c) for d, c in enumerate(coeffs) if c})

    def zero_like(self):
        return MPoly(self.vars, {})

    # -- variable context ---------------------------------------------------
    def with_vars(self, vars):
        vars = tuple(vars)
        if vars == self.vars:
            return self
        missing = [v for v in self.vars if v not in vars]
        if missing:
            used = self.used_vars()
            if any(v in used for v in missing):
                raise ValueError(f"cannot drop variables in use: {missing}")
            keep = tuple(v for v in self.vars if v in vars)
            self = self._drop_to(keep)
        return MPoly(vars, _repack(self.terms, self.vars, vars))

    def _drop_to(self, keep):
        idx = [self.vars.index(v) for v in keep]
        n = len(self.vars)
        out = {}
        for k, c in self.terms.items():
            e = unpack(k, n)
            out[pack([e[i] for i in idx])] = c
        return MPoly(keep, out)

    def used_vars(self):
        n = len(self.vars)
        seen = [False] * n
        for k in self.terms:
            e = unpack(k, n)
            for i in range(n):
                if e[i]:
                    seen[i] = True
        return tuple(v for v, s in zip(self.vars, seen) if s)

    def _align(self, other):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        merged = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return (merged, _repack(self.terms, self.vars, merged),
                _repack(other.terms, other.vars, merged))

    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other
        return MPoly.const(as_rat(other), self.vars)

    # -- predicates ---------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(0, 0)

    def is_integral(self):
        return all(type(c) is int for c in self.terms.values())

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        vars, a, b = self._align(other)
        out = dict(a)
        for k, c in b.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = norm(s)
            else:
                out.pop(k, None)
        return MPoly(vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = as_rat(other)
            if not c:
                return MPoly(self.vars, {})
            return MPoly(self.vars, {k: norm(v * c) for k, v in self.terms.items()})
        vars, a, b = self._align(other)
        if not a or not b:
            return MPoly(vars, {})
        out = _kernel.mul_terms(a, b)
        if not (self.is_integral() and other.is_integral()):
            out = {k: norm(c) for k, c in out.items()}
        return MPoly(vars, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MPoly):
            if other.is_constant() and other.terms:
                other = other.constant_value()
            else:
                return self.divexact(other)
        c = as_rat(other)
        if not c:
            raise ZeroDivisionError("division of polynomial by zero")
        inv = Fraction(1) / c
        return MPoly(self.vars, {k: norm(v * inv) for k, v in self.terms.items()})

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            try:
                other = self._coerce(other)
            except TypeError:
                return NotImplemented
        if self.vars == other.vars:
            return self.terms == other.terms
        _, a, b = self._align(other)
        return a == b

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        n = len(self.vars)
        items = []
        for k, c in self.terms.items():
            e = unpack(k, n)
            items.append((tuple((v, x) for v, x in zip(self.vars, e) if x), c))
        return hash(frozenset(items))

    # -- structure ----------------------------------------------------------
    def _index(self, var):
        try:
            return self.vars.index(var)
        except ValueError:
            raise KeyError(f"unknown variable {var!r}") from None

    def degree(self, var=None):
        """Degree in ``var``; total degree when ``var`` is None. Zero poly -> -1."""
        if not self.terms:
            return -1
        n = len(self.vars)
        if var is None:
            return max(sum(unpack(k, n)) for k in self.terms)
        if var not in self.vars:
            return 0
        sh = SHIFT * (n - 1 - self.vars.index(var))
        return max((k >> sh) & MASK for k in self.terms)

    total_degree = degree

    def items(self):
        """(exponent tuple, coefficient) pairs in descending lex order."""
        n = len(self.vars)
        for k in sorted(self.terms, reverse=True):
            yield unpack(k, n), self.terms[k]

    def leading_term(self):
        k = max(self.terms)
        return unpack(k, len(self.vars)), self.terms[k]

    def leading_coefficient(self):
        return self.terms[max(self.terms)] if self.terms else 0

    def coeffs_in(self, var):
        """Map exponent of ``var`` -> coefficient MPoly (same variable context)."""
        if var not in self.vars:
            return {0: self} if self.terms else {}
        n = len(self.vars)
        sh = SHIFT * (n - 1 - self.vars.index(var))
        out = {}
        for k, c in self.terms.items():
            d = (k >> sh) & MASK
            out.setdefault(d, {})[k - (d << sh)] = c
        return {d: MPoly(self.vars, t) for d, t in out.items()}

    @classmethod
    def from_coeffs_in(cls, var, coeffs, vars):
        vars = tuple(vars)
        sh = SHIFT * (len(vars) - 1 - vars.index(var))
        out = {}
        for d, p in coeffs.items():
            p = p.with_vars(vars) if isinstance(p, MPoly) else MPoly.const(p, vars)
            for k, c in p.terms.items():
                out[k + (d << sh)] = c
        return cls(vars, out)

    def to_dense(self, var=None):
        """Dense coefficient list of a univariate polynomial."""
        if var is None:
            used = self.used_vars()
            if len(used) > 1:
                raise ValueError("polynomial is not univariate")
            var = used[0] if used else (self.vars[0] if self.vars else None)
        if not self.terms:
            return []
        if var is None:
            return [self.terms[0]]
        cs = self.coeffs_in(var)
        out = [0] * (max(cs) + 1)
        for d, p in cs.items():
            if not p.is_constant():
                raise ValueError("polynomial is not univariate")
            out[d] = p.constant_value()
        return out

    def partial(self, var):
        i = self._index(var)
        n = len(self.vars)
        sh = SHIFT * (n - 1 - i)
        unit = 1 << sh
        out = {}
        for k, c in self.terms.items():
            d = (k >> sh) & MASK
            if d:
                out[k - unit] = norm(c * d)
        return MPoly(self.vars, out)

    # -- substitution -------------------------------------------------------
    def evaluate(self, point):
        """Substitute exact numbers for some variables; returns an MPoly."""
        n = len(self.vars)
        idx = [(i, as_rat(point[v])) for i, v in enumerate(self.vars) if v in point]
        if not idx:
            return self
        keep = [i for i in range(n) if self.vars[i] not in point]
        kv = tuple(self.vars[i] for i in keep)
        out = {}
        pows = {}
        for k, c in self.terms.items():
            e = unpack(k, n)
            val = c
            for i, x in idx:
                if e[i]:
                    key = (i, e[i])
                    p = pows.get(key)
                    if p is None:
                        p = pows[key] = x ** e[i]
                    val = val * p
            if val:
                nk = pack([e[i] for i in keep])
                out[nk] = out.get(nk, 0) + val
        out = {k: norm(c) for k, c in out.items() if c}
        return MPoly(kv, out).with_vars(tuple(v for v in self.vars if v not in point) or ())

    def __call__(self, *args, **kw):
        point = dict(zip(self.vars, args))
        point.update(kw)
        r = self.evaluate(point)
        return r.constant_value() if r.is_constant() else r

    def subs(self, mapping, vars=None):
        """Compose with polynomial substitutions ``var -> MPoly``.

        Variables without an entry are kept.  Powers of each substitution are
        cached so repeated exponents cost one multiplication.
        """
        mapping = {v: (p if isinstance(p, MPoly) else MPoly.const(p)) for v, p in mapping.items()}
        if vars is None:
            vs = [v for v in self.vars if v not in mapping]
            for p in mapping.values():
                vs.extend(v for v in p.vars if v not in vs)
            vars = tuple(vs)
        vars = tuple(vars)
        images = []
        for v in self.vars:
            if v in mapping:
                images.append(mapping[v].with_vars(vars))
            else:
                images.append(MPoly.var(v, vars))
        n = len(self.vars)
        cache = [{0: MPoly.const(1, vars), 1: images[i]} for i in range(n)]

        def power(i, e):
            c = cache[i]
            if e not in c:
                c[e] = power(i, e // 2) * power(i, e - e // 2)
            return c[e]

        # group by the leading variable powers to reuse partial products
        acc = {}
        for k, c in self.terms.items():
            e = unpack(k, n)
            term = None
            for i in range(n):
                if e[i]:
                    f = power(i, e[i])
                    term = f if term is None else term * f
            if term is None:
                term = MPoly.const(1, vars)
            for kk, cc in term.terms.items():
                acc[kk] = acc.get(kk, 0) + c * cc
        return MPoly(vars, {k: norm(c) for k, c in acc.items() if c})

    # -- content and division -----------------------------------------------
    def primitive(self):
        """(c, p) with self == c * p, p integral, coefficient gcd 1, positive leading coefficient."""
        if not self.terms:
            return 1, self
        den = 1
        for c in self.terms.values():
            if type(c) is Fraction:
                den = lcm(den, c.denominator)
        ints = {k: int(c * den) for k, c in self.terms.items()}
        g = 0
        for c in ints.values():
            g = gcd(g, c)
            if g == 1:
                break
        if ints[max(ints)] < 0:
            g = -g
        return norm(Fraction(g, den)), MPoly(self.vars, {k: c // g for k, c in ints.items()})

    def primitive_part(self):
        return self.primitive()[1]

    def monic(self):
        if not self.terms:
            return self
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return self / lc

    def divmod(self, divisor):
        """Multivariate division by one polynomial in lex order: (q, r)."""
        if not divisor.terms:
            raise ZeroDivisionError("division by zero polynomial")
        vars, a, b = self._align(divisor)
        n = len(vars)
        bl = max(b)
        bc = b[bl]
        be = unpack(bl, n)
        inv = Fraction(1) / bc if bc not in (1, -1) else bc
        rem = dict(a)
        quot = {}
        out_rem = {}
        bitems = [(k - bl, c) for k, c in b.items() if k != bl]
        while rem:
            k = max(rem)
            c = rem.pop(k)
            e = unpack(k, n)
            if all(x >= y for x, y in zip(e, be)):
                qk = k - bl
                qc = norm(c * inv)
                quot[qk] = qc
                for off, bcoef in bitems:
                    kk = qk + bl + off
                    s = rem.get(kk, 0) - qc * bcoef
                    if s:
                        rem[kk] = norm(s)
                    else:
                        rem.pop(kk, None)
            else:
                out_rem[k] = c
        return MPoly(vars, quot), MPoly(vars, out_rem)

    def divexact(self, divisor):
        q, r = self.divmod(divisor)
        if r.terms:
            raise ArithmeticError("inexact polynomial division")
        return q

    def divides(self, other):
        """True when ``self`` divides ``other`` exactly."""
        return not other.divmod(self)[1].terms

    # -- printing -----------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.items():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, exps) if e)
            neg = c < 0
            a = -c if neg else c
            if mono:
                coef = "" if a == 1 else f"{a}*"
                body = coef + mono
            else:
                body = str(a)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"MPoly({self.vars!r}, {str(self)!r})"


def coerce_all(polys):
    """Re-embed a list of polynomials into one shared variable context."""
    vs = []
    for p in polys:
        vs.extend(v for v in p.vars if v not in vs)
    vs = tuple(vs)
    return vs, [p.with_vars(vs) for p in polys]


def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def poly_pow(p, k):
    return p ** k


def partial(p, var):
    return p.partial(var)
