"""Pure-Python versions of the arithmetic hot loops.

``_ckernel.pyx`` mirrors every function here with the same signature; the
selector in ``_kernel`` picks one at import time.
"""


def mul_terms(a, b):
    """Product of two sparse term maps keyed by packed exponent ints."""
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    bi = list(b.items())
    for ka, ca in a.items():
        for kb, cb in bi:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def det_bareiss(rows):
    """Determinant of a square integer matrix (list of lists, consumed)."""
    n = len(rows)
    if n == 0:
        return 1
    m = rows
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        mk = m[k]
        pivot = mk[k]
        for i in range(k + 1, n):
            mi = m[i]
            f = mi[k]
            for j in range(k + 1, n):
                mi[j] = (pivot * mi[j] - f * mk[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def horner_scaled(coeffs, num, den):
    """den**deg * p(num/den) for integer coefficients (low degree first)."""
    acc = 0
    dpow = 1
    for c in reversed(coeffs):
        acc = acc * num + c * dpow
        dpow *= den
    return acc


def umul(a, b):
    """Dense univariate product, coefficient lists low degree first."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def uprem(a, b):
    """Pseudo-remainder of integer coefficient lists: lc(b)**(da-db+1) * a mod b."""
    da = len(a) - 1
    db = len(b) - 1
    if da < db:
        return list(a)
    r = list(a)
    lb = b[db]
    for k in range(da - db, -1, -1):
        top = r[db + k]
        if top:
            for i in range(len(r)):
                r[i] *= lb
            for i in range(db + 1):
                r[i + k] -= top * b[i]
        else:
            for i in range(len(r)):
                r[i] *= lb
    r = r[:db]
    while r and r[-1] == 0:
        r.pop()
    return r
