"""Resultants by Sylvester determinants, evaluated point-wise and interpolated.

The Sylvester matrix is built with the *formal* degrees of both inputs, so
specialising the other variables commutes with taking the determinant and the
interpolated polynomial is exactly the Sylvester resultant.  The sign
convention puts the coefficients of ``p`` in the top rows, which gives
``Res_v(v - 1, v + 1) = 2``.
"""
from __future__ import annotations

from fractions import Fraction

from . import _kernel
from .mpoly import MPoly, coerce_all, norm


def sylvester_rows(pc, qc):
    """Sylvester matrix from descending coefficient lists of formal degree m, n."""
    m = len(pc) - 1
    n = len(qc) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(pc) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(qc) + [0] * (size - n - 1 - i))
    return rows


def _nodes():
    k = 0
    yield 0
    while True:
        k += 1
        yield k
        yield -k


def newton_interpolate(xs, ys):
    """Dense coefficients (low first) of the interpolating polynomial."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = [Fraction(0)] * n
    # Horner expansion of the Newton form
    for i in range(n - 1, -1, -1):
        # out = out * (x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + out[:-1]
        for k in range(n):
            shifted[k] -= xs[i] * out[k]
        shifted[0] += coef[i]
        out = shifted
    while out and out[-1] == 0:
        out.pop()
    return [norm(c) for c in out]


def _dense_in(p, var, other):
    """p as {deg_var: dense int list in ``other``}."""
    out = {}
    for d, c in p.coeffs_in(var).items():
        out[d] = c.to_dense(other) if other is not None else [c.constant_value()]
    return out


def _bivariate_int(P, Q, var, other, m, n):
    pd = _dense_in(P, var, other)
    qd = _dense_in(Q, var, other)
    dP = max((len(c) - 1 for c in pd.values()), default=0)
    dQ = max((len(c) - 1 for c in qd.values()), default=0)
    bound = m * dQ + n * dP
    xs, ys = [], []
    for x in _nodes():
        if len(xs) > bound:
            break
        pc = [_kernel.horner_scaled(pd.get(d, []), x, 1) for d in range(m, -1, -1)]
        qc = [_kernel.horner_scaled(qd.get(d, []), x, 1) for d in range(n, -1, -1)]
        xs.append(x)
        ys.append(_kernel.det_bareiss(sylvester_rows(pc, qc)))
    return newton_interpolate(xs, ys)


def _numeric(P, Q, var, m, n):
    pc = [P.coeffs_in(var).get(d, MPoly()).terms.get(0, 0) for d in range(m, -1, -1)]
    qc = [Q.coeffs_in(var).get(d, MPoly()).terms.get(0, 0) for d in range(n, -1, -1)]
    return _kernel.det_bareiss(sylvester_rows(pc, qc))


def _res_int(P, Q, var, others, m, n, vars):
    if not others:
        return MPoly.const(_numeric(P, Q, var, m, n), vars)
    if len(others) == 1:
        dense = _bivariate_int(P, Q, var, others[0], m, n)
        return MPoly.from_univariate(dense, others[0], vars)
    w, rest = others[0], others[1:]
    bound = m * Q.degree(w) + n * P.degree(w)
    xs, vals = [], []
    for x in _nodes():
        if len(xs) > bound:
            break
        xs.append(x)
        vals.append(_res_int(P.evaluate({w: x}).with_vars(vars), Q.evaluate({w: x}).with_vars(vars),
                             var, rest, m, n, vars))
    monos = set()
    for v in vals:
        monos.update(v.terms)
    out = MPoly(vars, {})
    for k in monos:
        dense = newton_interpolate(xs, [v.terms.get(k, 0) for v in vals])
        mono = MPoly(vars, {k: 1})
        out = out + mono * MPoly.from_univariate(dense, w, vars)
    return out


def resultant(p, q, var):
    """Res_var(p, q) as an MPoly in the remaining variables."""
    vars, (p, q) = coerce_all([p, q])
    if var not in vars:
        raise ValueError(f"variable {var!r} does not occur")
    m = p.degree(var)
    n = q.degree(var)
    if m <= 0 or n <= 0:
        raise ValueError("resultant needs positive degree in the eliminated variable")
    cp, P = p.primitive()
    cq, Q = q.primitive()
    used = set(P.used_vars()) | set(Q.used_vars())
    others = [v for v in vars if v != var and v in used]
    R = _res_int(P, Q, var, others, m, n, vars)
    scale = Fraction(cp) ** n * Fraction(cq) ** m
    return R * norm(scale)
