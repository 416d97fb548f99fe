"""Exact rational and cyclotomic arithmetic."""

import pytest
from hypothesis import given, settings, strategies as st

from trihopf.errors import DivisionByZero, ShapeError
from trihopf.scalars import (
    CycScalar,
    Rational,
    cyclotomic_poly,
    euler_phi,
    kernel_name,
    root_of_unity,
)

ORDERS = [1, 2, 3, 4, 5, 6, 8, 12, 16]


def rand_scalar(data, orders=ORDERS):
    n = data.draw(st.sampled_from(orders))
    coeffs = [
        (data.draw(st.integers(-9, 9)), data.draw(st.integers(1, 7)))
        for _ in range(euler_phi(n))
    ]
    return CycScalar(n, coeffs)


def test_rational_arithmetic():
    assert Rational(1, 2) + Rational(1, 3) == Rational(5, 6)
    assert Rational(2, 4) == Rational(1, 2)
    assert Rational(3, -6) == Rational(-1, 2)
    assert Rational(1, 2) * Rational(2, 3) == Rational(1, 3)
    assert Rational(7, 3).inv() == Rational(3, 7)
    assert -Rational(0, 5) == Rational(0)
    with pytest.raises(DivisionByZero):
        Rational(1, 0)
    with pytest.raises(DivisionByZero):
        Rational(0).inv()


def test_root_of_unity_basics():
    assert root_of_unity(1, 0) == CycScalar.one()
    assert root_of_unity(2, 1) == CycScalar.from_int(-1)
    z3 = root_of_unity(3, 1)
    assert z3 ** 3 == CycScalar.one()
    assert z3 != CycScalar.one() and z3 ** 2 != CycScalar.one()


def test_defining_relations():
    z4 = root_of_unity(4, 1)
    assert z4 * z4 == CycScalar.from_int(-1)
    # reduction mod Phi_6 = x^2 - x + 1
    z6 = root_of_unity(6, 1)
    assert z6 * z6 == z6 - CycScalar.one()


def test_root_of_unity_multiplicative_order():
    from math import gcd

    for n in (1, 2, 3, 4, 6, 8, 12):
        for k in range(n):
            z = root_of_unity(n, k)
            expected = n // gcd(n, k) if k else 1
            order = 1
            acc = z
            while acc != CycScalar.one():
                acc = acc * z
                order += 1
                assert order <= n
            assert order == expected


def test_powers_below_order_nontrivial():
    for n in (2, 3, 4, 5, 6, 8, 12, 16):
        z = root_of_unity(n, 1)
        acc = CycScalar.one()
        for j in range(1, n):
            acc = acc * z
            assert acc != CycScalar.one(), (n, j)
        assert acc * z == CycScalar.one()


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_mixed_order_promotion():
    z4, z3 = root_of_unity(4, 1), root_of_unity(3, 1)
    assert z4 * z3 == root_of_unity(12, 7)
    assert z4 + z3 - z3 == z4


def test_rational_demotion():
    z4 = root_of_unity(4, 1)
    sq = z4 * z4
    assert sq.order == 1 and sq.coeffs == ((-1, 1),)
    assert (z4 - z4).order == 1


def test_wire_roundtrip():
    vals = [
        CycScalar.from_rational(-7, 3),
        root_of_unity(8, 3) + CycScalar.from_rational(1, 2),
        CycScalar.zero(),
    ]
    for v in vals:
        assert CycScalar.from_obj(v.to_obj()) == v
    obj = root_of_unity(6, 1).to_obj()
    assert obj["n"] == 6
    assert all(isinstance(x, str) for pair in obj["c"] for x in pair)


def test_division_errors():
    with pytest.raises(DivisionByZero):
        CycScalar.zero().inv()
    with pytest.raises(ShapeError):
        CycScalar(6, ((1, 1),))  # wrong coefficient count


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_field_axioms(data):
    a = rand_scalar(data)
    b = rand_scalar(data)
    c = rand_scalar(data)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inv() == CycScalar.one()


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_embedding_is_ring_homomorphism(data):
    n = data.draw(st.sampled_from([1, 2, 3, 4, 6]))
    m = data.draw(st.sampled_from([12, 24]))
    a = rand_scalar(data, orders=[n])
    b = rand_scalar(data, orders=[n])
    emb = lambda x: CycScalar(m, x._embedded(m))
    assert emb(a) + emb(b) == a + b
    assert emb(a) * emb(b) == a * b


def test_kernel_selected():
    assert kernel_name() in ("compiled", "pure")
