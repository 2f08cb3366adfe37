# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the arithmetic hot loops.

Same signatures and results as ``_pykernel``.  Coefficients stay Python
objects (unbounded ints or Fractions); the gain comes from typed indices,
list access without bounds checks and no interpreter dispatch per step.
"""


def mul_terms(dict a, dict b):
    if len(a) < len(b):
        a, b = b, a
    cdef dict out = {}
    cdef list bk = list(b.keys())
    cdef list bc = list(b.values())
    cdef Py_ssize_t j, nb = len(bk)
    cdef object ka, ca, k, prev
    for ka, ca in a.items():
        for j in range(nb):
            k = ka + bk[j]
            prev = out.get(k)
            if prev is None:
                out[k] = ca * bc[j]
            else:
                out[k] = prev + ca * bc[j]
    return {k: c for k, c in out.items() if c}


def det_bareiss(list rows):
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef list m = rows
    cdef list mk, mi
    cdef Py_ssize_t i, j, k
    cdef int sign = 1
    cdef object prev = 1, pivot, f
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
            if f == 0:
                if prev == pivot:
                    continue
                for j in range(k + 1, n):
                    mi[j] = (pivot * mi[j]) // prev
            else:
                for j in range(k + 1, n):
                    mi[j] = (pivot * mi[j] - f * mk[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def horner_scaled(coeffs, num, den):
    cdef object acc = 0, dpow = 1
    cdef list cs = list(coeffs)
    cdef Py_ssize_t i
    for i in range(len(cs) - 1, -1, -1):
        acc = acc * num + cs[i] * dpow
        dpow *= den
    return acc


def umul(a, b):
    cdef list la = list(a), lb = list(b)
    cdef Py_ssize_t na = len(la), nb = len(lb), i, j
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    cdef object x
    for i in range(na):
        x = la[i]
        if x:
            for j in range(nb):
                out[i + j] += x * lb[j]
    return out


def uprem(a, b):
    cdef list r = list(a), lb_ = list(b)
    cdef Py_ssize_t da = len(r) - 1, db = len(lb_) - 1, i, k, nr
    if da < db:
        return r
    cdef object lb = lb_[db], top
    nr = len(r)
    for k in range(da - db, -1, -1):
        top = r[db + k]
        for i in range(nr):
            r[i] *= lb
        if top:
            for i in range(db + 1):
                r[i + k] -= top * lb_[i]
    r = r[:db]
    while r and r[len(r) - 1] == 0:
        r.pop()
    return r
