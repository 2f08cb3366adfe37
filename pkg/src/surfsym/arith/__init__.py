"""Exact arithmetic kernel: rationals, sparse polynomials, resultants, real roots."""
from fractions import Fraction as Rat

from ._kernel import BACKEND
from .mgcd import gcd, gcd_list, squarefree_part as msquarefree_part
from .mpoly import MPoly, partial, poly_add, poly_mul, poly_pow
from .ratfn import RatFn, compose
from .resultant import resultant
from .upoly import RootInterval, isolate_real_roots as _isolate_dense, rational_roots


def isolate_real_roots(p):
    """Isolate the distinct real roots of a univariate MPoly."""
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    used = p.used_vars()
    var = used[0] if used else (p.vars[0] if p.vars else "u")
    if len(used) > 1:
        raise ValueError("polynomial is not univariate")
    return _isolate_dense(p.to_dense(var), var)


def squarefree_part(p):
    return msquarefree_part(p)


__all__ = [
    "BACKEND", "MPoly", "Rat", "RatFn", "RootInterval", "compose", "gcd", "gcd_list",
    "isolate_real_roots", "partial", "poly_add", "poly_mul", "poly_pow", "rational_roots",
    "resultant", "squarefree_part",
]
