"""Dense univariate polynomials: gcd, square-free parts, Sturm chains, real roots.

Polynomials are coefficient lists, low degree first.  Integer lists are the
working representation; rational input goes through :func:`primitive_int`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional

from . import _kernel
from .mpoly import MPoly, norm
from ..errors import ZeroWidthRequest


def strip(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def deg(p):
    return len(p) - 1


def primitive_int(p):
    """Integer primitive part with positive leading coefficient."""
    p = strip(p)
    if not p:
        return []
    den = 1
    for c in p:
        if type(c) is Fraction:
            den = lcm(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
        if g == 1:
            break
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def content_int(p):
    g = 0
    for c in p:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def deriv(p):
    return [i * c for i, c in enumerate(p)][1:]


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return strip(out)


def sub(a, b):
    return add(a, [-c for c in b])


def mul(a, b):
    return strip(_kernel.umul(a, b))


def scale(a, c):
    return strip([x * c for x in a])


def divmod_q(a, b):
    """Division over Q."""
    a = [Fraction(x) for x in strip(a)]
    b = strip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    lb = Fraction(b[-1])
    q = [Fraction(0)] * max(len(a) - db, 0)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] / lb
        q[k] = c
        if c:
            for i in range(db + 1):
                a[k + i] -= c * b[i]
    r = strip(a[:db])
    return [norm(x) for x in strip(q)], [norm(x) for x in r]


def divexact_int(a, b):
    q, r = divmod_q(a, b)
    if r:
        raise ArithmeticError("inexact univariate division")
    return q


def prem(a, b):
    return _kernel.uprem(a, b)


def _is_prime(n):
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for p in small:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _gcd_primes():
    n = (1 << 61) - 1
    while True:
        if _is_prime(n):
            yield n
        n -= 2


def _symmetric(c, m):
    return c - m if c > m // 2 else c


def gcd_int(a, b):
    """Primitive integer gcd by modular images and Chinese remaindering.

    The images of gcd(a, b) modulo primes not dividing the leading
    coefficients have degree at least deg gcd; primes giving a larger degree
    are discarded.  Images are scaled to leading coefficient gcd(lc a, lc b),
    combined, and the lifted candidate is accepted once it divides both.
    """
    a = primitive_int(a)
    b = primitive_int(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) == 1 or len(b) == 1:
        return [1]
    lc = gcd(a[-1], b[-1])
    best = min(len(a), len(b)) - 1
    acc, modulus, last = None, 1, None
    for p in _gcd_primes():
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        g = _gcd_mod(a, b, p)
        d = len(g) - 1
        if d == 0:
            return [1]
        if d > best:
            continue
        if d < best:
            best, acc, modulus, last = d, None, 1, None
        scale_ = lc * pow(g[-1], -1, p) % p
        g = [c * scale_ % p for c in g]
        if acc is None:
            acc, modulus = g, p
        else:
            # x = acc (mod modulus), x = g (mod p)
            inv = pow(modulus, -1, p)
            acc = [x + modulus * ((y - x) * inv % p) for x, y in zip(acc, g)]
            modulus *= p
        cand = primitive_int([_symmetric(c, modulus) for c in acc])
        if cand == last and not prem(a, cand) and not prem(b, cand):
            return cand
        last = cand


def gcd_q(a, b):
    """Monic gcd over Q."""
    g = gcd_int(a, b)
    if not g:
        return []
    lc = g[-1]
    return [norm(Fraction(c, lc)) for c in g]


def squarefree_int(p):
    """Square-free primitive integer part of p."""
    p = primitive_int(p)
    if len(p) <= 2:
        return p
    g = gcd_int(p, deriv(p))
    if len(g) == 1:
        return p
    return primitive_int(divexact_int(p, g))


def eval_exact(p, x):
    """p(x) for a rational x, exact."""
    x = Fraction(x)
    if not p:
        return 0
    if all(type(c) is int for c in p):
        v = _kernel.horner_scaled(p, x.numerator, x.denominator)
        return norm(Fraction(v, x.denominator ** (len(p) - 1)))
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return norm(acc)


def sign_at(p, x):
    """Sign of an integer polynomial at a rational point."""
    if type(x) is int:
        v = _kernel.horner_scaled(p, x, 1)
    else:
        x = Fraction(x)
        v = _kernel.horner_scaled(p, x.numerator, x.denominator)
    return (v > 0) - (v < 0)


def cauchy_bound(p):
    """1 + max |a_i / a_n| (exact)."""
    p = strip(p)
    lead = abs(Fraction(p[-1]))
    if len(p) == 1:
        return Fraction(1)
    return 1 + max(abs(Fraction(c)) for c in p[:-1]) / lead


# -- Sturm sequences ----------------------------------------------------------

def sturm_chain(p):
    """Sturm sequence of a primitive integer polynomial, positive content removed."""
    p = primitive_int(p)
    chain = [p]
    d = deriv(p)
    if not d:
        return chain
    chain.append(primitive_int(d))
    while len(chain[-1]) > 1:
        a, b = chain[-2], chain[-1]
        r = prem(a, b)
        if not r:
            break
        delta = len(a) - len(b)
        # prem = lc(b)^(delta+1) * a mod b; the Sturm remainder is -a mod b
        neg = b[-1] < 0 and delta % 2 == 0
        g = content_int(r)
        if neg:
            g = -g
        chain.append([-c // g for c in r])
    return chain


def _variations(signs):
    v = 0
    last = 0
    for s in signs:
        if s:
            if last and s != last:
                v += 1
            last = s
    return v


def variations_at(chain, x):
    return _variations(sign_at(q, x) for q in chain)


def variations_at_inf(chain, positive=True):
    signs = []
    for q in chain:
        s = 1 if q[-1] > 0 else -1
        if not positive and (len(q) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def count_roots(chain, lo, hi):
    """Number of distinct roots in (lo, hi] (square-free leading polynomial)."""
    return variations_at(chain, lo) - variations_at(chain, hi)


def count_real_roots(p):
    chain = sturm_chain(squarefree_int(p))
    return variations_at_inf(chain, False) - variations_at_inf(chain, True)


# -- rational roots -------------------------------------------------------------

_PRIMES = [p for p in range(101, 6000) if all(p % d for d in range(2, int(p ** 0.5) + 1))]


def _mod_poly(p, m):
    return strip([c % m for c in p])


def _gcd_mod(a, b, m):
    a = _mod_poly(a, m)
    b = _mod_poly(b, m)
    while b:
        inv = pow(b[-1], -1, m)
        r = list(a)
        db = len(b) - 1
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] * inv % m
            if c:
                for i in range(db + 1):
                    r[k + i] = (r[k + i] - c * b[i]) % m
        a, b = b, strip(r[:db])
    return a


def _eval_mod(p, x, m):
    acc = 0
    for c in reversed(p):
        acc = (acc * x + c) % m
    return acc


def _ratrec(r, modulus, bound_num, bound_den):
    r0, r1 = modulus, r % modulus
    s0, s1 = 0, 1
    while r1 > bound_num:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0:
        return None
    num, den = r1, s1
    if den < 0:
        num, den = -num, -den
    if den > bound_den or gcd(num, den) != 1:
        return None
    return Fraction(num, den)


def rational_roots(p):
    """All distinct rational roots of a nonzero polynomial, sorted.

    Every rational root num/den of a primitive integer polynomial has den | a_n
    and num | a_0, so its image modulo a prime l not dividing a_n is a root of
    p mod l.  Each such root is lifted l-adically past 2|a_0||a_n| and
    reconstructed as a fraction; candidates are confirmed by exact evaluation.
    """
    p = squarefree_int(p)
    roots = []
    if not p:
        raise ValueError("zero polynomial")
    if p[0] == 0:
        roots.append(Fraction(0))
        p = primitive_int(p[1:])
    if len(p) <= 1:
        return roots
    if len(p) == 2:
        roots.append(Fraction(-p[0], p[1]))
        return sorted(roots)
    a0, an = abs(p[0]), abs(p[-1])
    dp = deriv(p)
    ell = None
    for cand in _PRIMES:
        if an % cand == 0 or cand <= len(p):
            continue
        if len(_gcd_mod(p, dp, cand)) == 1:
            ell = cand
            break
    if ell is None:  # pragma: no cover - needs a pathological discriminant
        raise ArithmeticError("no good prime for rational root search")
    target = 2 * a0 * an + 1
    found = set()
    for r in range(ell):
        if _eval_mod(p, r, ell):
            continue
        mod = ell
        x = r
        while mod < target:
            mod = mod * mod
            fx = _eval_mod(p, x, mod)
            dfx = _eval_mod(dp, x, mod)
            x = (x - fx * pow(dfx, -1, mod)) % mod
        cand = _ratrec(x, mod, a0, an)
        if cand is not None and cand not in found and sign_at(p, cand) == 0:
            found.add(cand)
    roots.extend(found)
    return sorted(roots)


# -- root isolation ---------------------------------------------------------------

@dataclass(frozen=True)
class RootInterval:
    """Isolating interval [lo, hi] for one real root of a square-free polynomial."""

    poly: tuple
    lo: Fraction
    hi: Fraction
    exact: Optional[Fraction] = None
    var: str = "u"

    @property
    def is_exact(self):
        return self.exact is not None

    @property
    def mpoly(self):
        return MPoly.from_univariate(list(self.poly), self.var)

    @property
    def width(self):
        return self.hi - self.lo

    def midpoint(self):
        return (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.exact if self.exact is not None else self.midpoint())

    def refine(self, width):
        """Bisect until hi - lo < width; exact roots are returned unchanged."""
        if self.exact is not None:
            return self
        width = Fraction(width)
        if width <= 0:
            raise ZeroWidthRequest("cannot refine an irrational root to zero width")
        p = list(self.poly)
        lo, hi = self.lo, self.hi
        slo = sign_at(p, lo)
        while hi - lo >= width:
            m = (lo + hi) / 2
            s = sign_at(p, m)
            if s == 0:
                return RootInterval(self.poly, m, m, m, self.var)
            if s == slo:
                lo = m
            else:
                hi = m
        return RootInterval(self.poly, lo, hi, None, self.var)

    def contains(self, x):
        return self.lo <= x <= self.hi

    def has_root_of(self, factor):
        """Whether ``factor`` (dividing self.poly) vanishes at this root."""
        if self.exact is not None:
            return eval_exact(factor, self.exact) == 0
        q = primitive_int(factor)
        if len(q) <= 1:
            return False
        return sign_at(q, self.lo) * sign_at(q, self.hi) < 0


def _isolate_sqfree(p):
    """Isolating intervals for a square-free integer polynomial without rational roots."""
    if len(p) <= 1:
        return []
    chain = sturm_chain(p)
    b = cauchy_bound(p)
    lo, hi = -b, b
    total = count_roots(chain, lo, hi)
    out = []
    stack = [(lo, hi, variations_at(chain, lo), variations_at(chain, hi))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        m = (lo + hi) / 2
        if sign_at(p, m) == 0:
            # cannot happen once rational roots are divided out; nudge off the root
            m = (lo + 3 * hi) / 4 if sign_at(p, (lo + 3 * hi) / 4) else (3 * lo + hi) / 4
        vm = variations_at(chain, m)
        stack.append((lo, m, vlo, vm))
        stack.append((m, hi, vm, vhi))
    assert len(out) == total
    return sorted(out)


def isolate_real_roots(p, var="u"):
    """One RootInterval per distinct real root, sorted, rational roots exact."""
    p = strip(p)
    if not p:
        raise ValueError("cannot isolate roots of the zero polynomial")
    sf = squarefree_int(p)
    if len(sf) <= 1:
        return []
    rats = rational_roots(sf)
    rest = sf
    for r in rats:
        rest = primitive_int(divexact_int(rest, [-r.numerator, r.denominator]))
    key = tuple(sf)
    result = [RootInterval(key, r, r, r, var) for r in rats]
    raw = _isolate_sqfree(rest)
    # shared endpoints and rational roots must lie outside every open interval
    avoid = set(rats)
    for lo, hi in raw:
        avoid.add(lo)
        avoid.add(hi)
    for lo, hi in raw:
        lo, hi = _shrink(rest, lo, hi, avoid)
        result.append(RootInterval(key, lo, hi, None, var))
    result.sort(key=lambda iv: (iv.lo, iv.hi))
    return result


def _shrink(p, lo, hi, avoid):
    """Bisect an isolating interval of p until no point of ``avoid`` lies in it."""
    slo = sign_at(p, lo)
    while any(lo <= a <= hi for a in avoid):
        m = (lo + hi) / 2
        s = sign_at(p, m)
        if s == slo:
            lo = m
        else:
            hi = m
    return lo, hi


def squarefree_part(p):
    """Square-free part of a univariate MPoly, monic."""
    var = p.used_vars()[0] if p.used_vars() else (p.vars[0] if p.vars else "u")
    sf = squarefree_int(p.to_dense(var))
    if not sf:
        return p
    lc = sf[-1]
    return MPoly.from_univariate([Fraction(c, lc) for c in sf], var, p.vars or (var,))
