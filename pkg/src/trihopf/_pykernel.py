"""Pure-Python arithmetic kernel.

A rational is a tuple ``(num, den)`` of ints with ``den > 0`` and
``gcd(num, den) == 1``; zero is ``(0, 1)``.  A coefficient vector is a
tuple of rationals.  The compiled twin ``_ckernel`` exports the same
functions with the same semantics; ``trihopf.scalars`` picks one at
import time.
"""

from math import gcd

COMPILED = False


def rat_norm(num, den):
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    if num == 0:
        return (0, 1)
    if den < 0:
        num, den = -num, -den
    g = gcd(num, den)
    if g > 1:
        num //= g
        den //= g
    return (num, den)


def rat_add(a, b):
    an, ad = a
    bn, bd = b
    if ad == bd:
        if ad == 1:
            return (an + bn, 1)
        num = an + bn
        g = gcd(num, ad)
        return (num // g, ad // g) if g > 1 else (num, ad)
    g = gcd(ad, bd)
    if g == 1:
        return (an * bd + bn * ad, ad * bd)
    ad1 = ad // g
    num = an * (bd // g) + bn * ad1
    den = ad1 * bd
    g2 = gcd(num, g)
    return (num // g2, den // g2) if g2 > 1 else (num, den)


def rat_sub(a, b):
    return rat_add(a, (-b[0], b[1]))


def rat_neg(a):
    return (-a[0], a[1])


def rat_mul(a, b):
    an, ad = a
    bn, bd = b
    if an == 0 or bn == 0:
        return (0, 1)
    g1 = gcd(an, bd) if bd > 1 else 1
    g2 = gcd(bn, ad) if ad > 1 else 1
    return ((an // g1) * (bn // g2), (ad // g2) * (bd // g1))


def rat_inv(a):
    num, den = a
    if num == 0:
        raise ZeroDivisionError("inverse of zero")
    return (den, num) if num > 0 else (-den, -num)


def rat_div(a, b):
    return rat_mul(a, rat_inv(b))


def vec_add(u, v):
    return tuple(rat_add(a, b) for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(rat_sub(a, b) for a, b in zip(u, v))


def vec_neg(u):
    return tuple((-n, d) for n, d in u)


def vec_scale(u, r):
    if r == (1, 1):
        return tuple(u)
    if r[0] == 0:
        return ((0, 1),) * len(u)
    return tuple(rat_mul(a, r) for a in u)


def cyc_mul_reduce(u, v, red):
    """Product of two reduced coefficient vectors, reduced again.

    ``red[i]`` is the integer coefficient row of x**(phi+i) modulo the
    cyclotomic polynomial, for i in range(phi-1).
    """
    phi = len(u)
    if phi == 1:
        return (rat_mul(u[0], v[0]),)
    conv = [(0, 1)] * (2 * phi - 1)
    for i, a in enumerate(u):
        if a[0] == 0:
            continue
        for j, b in enumerate(v):
            if b[0] == 0:
                continue
            k = i + j
            conv[k] = rat_add(conv[k], rat_mul(a, b))
    out = conv[:phi]
    for k in range(phi, 2 * phi - 1):
        c = conv[k]
        if c[0] == 0:
            continue
        row = red[k - phi]
        for j in range(phi):
            r = row[j]
            if r:
                out[j] = rat_add(out[j], rat_mul(c, (r, 1)))
    return tuple(out)
