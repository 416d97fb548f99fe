# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled arithmetic kernel; mirrors _pykernel semantics exactly.

Values whose magnitude stays below 2**31 take a C fast path (64-bit
arithmetic sized so intermediates cannot overflow); anything larger
falls back to exact Python-int arithmetic.
"""

from cpython.long cimport PyLong_AsLongLongAndOverflow

from math import gcd as _pygcd

COMPILED = True

cdef long long FAST_LIMIT = 2147483647


cdef inline long long _gcd_ll(long long a, long long b):
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline bint _fits(object x, long long* out) except -1:
    cdef int overflow = 0
    cdef long long v = PyLong_AsLongLongAndOverflow(x, &overflow)
    if overflow != 0:
        return False
    if v > FAST_LIMIT or v < -FAST_LIMIT:
        return False
    out[0] = v
    return True


cdef tuple _norm_obj(object num, object den):
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    if num == 0:
        return (0, 1)
    if den < 0:
        num = -num
        den = -den
    g = _pygcd(num, den)
    if g > 1:
        num //= g
        den //= g
    return (num, den)


cpdef tuple rat_norm(object num, object den):
    cdef long long n, d, g
    if _fits(num, &n) and _fits(den, &d):
        if d == 0:
            raise ZeroDivisionError("rational with zero denominator")
        if n == 0:
            return (0, 1)
        if d < 0:
            n = -n
            d = -d
        g = _gcd_ll(n, d)
        if g > 1:
            n //= g
            d //= g
        return (n, d)
    return _norm_obj(num, den)


cdef tuple _add_obj(object an, object ad, object bn, object bd):
    cdef object num, den
    g = _pygcd(ad, bd)
    if g == 1:
        return (an * bd + bn * ad, ad * bd)
    ad1 = ad // g
    num = an * (bd // g) + bn * ad1
    den = ad1 * bd
    g2 = _pygcd(num, g)
    if g2 > 1:
        return (num // g2, den // g2)
    return (num, den)


cpdef tuple rat_add(tuple a, tuple b):
    cdef long long an, ad, bn, bd, num, den, g
    if _fits(a[0], &an) and _fits(a[1], &ad) and _fits(b[0], &bn) and _fits(b[1], &bd):
        if ad == bd:
            if ad == 1:
                return (an + bn, 1)
            num = an + bn
            g = _gcd_ll(num, ad)
            if g > 1:
                return (num // g, ad // g)
            return (num, ad)
        num = an * bd + bn * ad
        den = ad * bd
        if num == 0:
            return (0, 1)
        g = _gcd_ll(num, den)
        if g > 1:
            return (num // g, den // g)
        return (num, den)
    return _add_obj(a[0], a[1], b[0], b[1])


cpdef tuple rat_sub(tuple a, tuple b):
    return rat_add(a, (-b[0], b[1]))


cpdef tuple rat_neg(tuple a):
    return (-a[0], a[1])


cdef tuple _mul_obj(object an, object ad, object bn, object bd):
    g1 = _pygcd(an, bd) if bd > 1 else 1
    g2 = _pygcd(bn, ad) if ad > 1 else 1
    if g1 > 1:
        an //= g1
        bd //= g1
    if g2 > 1:
        bn //= g2
        ad //= g2
    return (an * bn, ad * bd)


cpdef tuple rat_mul(tuple a, tuple b):
    cdef long long an, ad, bn, bd, g1, g2
    if _fits(a[0], &an) and _fits(a[1], &ad) and _fits(b[0], &bn) and _fits(b[1], &bd):
        if an == 0 or bn == 0:
            return (0, 1)
        if bd > 1:
            g1 = _gcd_ll(an, bd)
            if g1 > 1:
                an //= g1
                bd //= g1
        if ad > 1:
            g2 = _gcd_ll(bn, ad)
            if g2 > 1:
                bn //= g2
                ad //= g2
        return (an * bn, ad * bd)
    if a[0] == 0 or b[0] == 0:
        return (0, 1)
    return _mul_obj(a[0], a[1], b[0], b[1])


cpdef tuple rat_inv(tuple a):
    if a[0] == 0:
        raise ZeroDivisionError("inverse of zero")
    if a[0] > 0:
        return (a[1], a[0])
    return (-a[1], -a[0])


cpdef tuple rat_div(tuple a, tuple b):
    return rat_mul(a, rat_inv(b))


cpdef tuple vec_add(tuple u, tuple v):
    cdef Py_ssize_t i, n = len(u)
    out = [None] * n
    for i in range(n):
        out[i] = rat_add(<tuple> u[i], <tuple> v[i])
    return tuple(out)


cpdef tuple vec_sub(tuple u, tuple v):
    cdef Py_ssize_t i, n = len(u)
    out = [None] * n
    for i in range(n):
        out[i] = rat_sub(<tuple> u[i], <tuple> v[i])
    return tuple(out)


cpdef tuple vec_neg(tuple u):
    cdef Py_ssize_t i, n = len(u)
    out = [None] * n
    for i in range(n):
        a = <tuple> u[i]
        out[i] = (-a[0], a[1])
    return tuple(out)


cpdef tuple vec_scale(tuple u, tuple r):
    cdef Py_ssize_t i, n = len(u)
    if r[0] == 1 and r[1] == 1:
        return u
    if r[0] == 0:
        return ((0, 1),) * n
    out = [None] * n
    for i in range(n):
        out[i] = rat_mul(<tuple> u[i], r)
    return tuple(out)


cpdef tuple cyc_mul_reduce(tuple u, tuple v, tuple red):
    """Product of two reduced coefficient vectors, reduced again."""
    cdef Py_ssize_t i, j, k, phi = len(u)
    cdef tuple a, b, c, row
    if phi == 1:
        return (rat_mul(<tuple> u[0], <tuple> v[0]),)
    conv = [(0, 1)] * (2 * phi - 1)
    for i in range(phi):
        a = <tuple> u[i]
        if a[0] == 0:
            continue
        for j in range(phi):
            b = <tuple> v[j]
            if b[0] == 0:
                continue
            k = i + j
            conv[k] = rat_add(<tuple> conv[k], rat_mul(a, b))
    out = conv[:phi]
    for k in range(phi, 2 * phi - 1):
        c = <tuple> conv[k]
        if c[0] == 0:
            continue
        row = <tuple> red[k - phi]
        for j in range(phi):
            r = row[j]
            if r:
                out[j] = rat_add(<tuple> out[j], rat_mul(c, (r, 1)))
    return tuple(out)
