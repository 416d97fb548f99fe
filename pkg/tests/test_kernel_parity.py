"""The compiled kernel must agree with the pure kernel bit for bit."""

import pytest
from hypothesis import given, settings, strategies as st

from trihopf import _pykernel

ckernel = pytest.importorskip("trihopf._ckernel")

# magnitudes straddling the compiled fast-path limit (2**31)
ints = st.integers(-(2 ** 40), 2 ** 40) | st.integers(-50, 50)
pos = st.integers(1, 2 ** 40) | st.integers(1, 50)


@st.composite
def rationals(draw):
    return _pykernel.rat_norm(draw(ints), draw(pos))


@given(ints, pos)
@settings(max_examples=200, deadline=None)
def test_norm_parity(n, d):
    assert ckernel.rat_norm(n, d) == _pykernel.rat_norm(n, d)


@given(rationals(), rationals())
@settings(max_examples=200, deadline=None)
def test_binary_op_parity(a, b):
    assert ckernel.rat_add(a, b) == _pykernel.rat_add(a, b)
    assert ckernel.rat_sub(a, b) == _pykernel.rat_sub(a, b)
    assert ckernel.rat_mul(a, b) == _pykernel.rat_mul(a, b)
    if b[0]:
        assert ckernel.rat_div(a, b) == _pykernel.rat_div(a, b)


@given(rationals())
@settings(max_examples=100, deadline=None)
def test_unary_op_parity(a):
    assert ckernel.rat_neg(a) == _pykernel.rat_neg(a)
    if a[0]:
        assert ckernel.rat_inv(a) == _pykernel.rat_inv(a)


@given(st.lists(rationals(), min_size=1, max_size=6), st.lists(rationals(), min_size=1, max_size=6))
@settings(max_examples=100, deadline=None)
def test_vector_op_parity(u, v):
    n = min(len(u), len(v))
    u, v = tuple(u[:n]), tuple(v[:n])
    assert ckernel.vec_add(u, v) == _pykernel.vec_add(u, v)
    assert ckernel.vec_sub(u, v) == _pykernel.vec_sub(u, v)
    assert ckernel.vec_neg(u) == _pykernel.vec_neg(u)
    assert ckernel.vec_scale(u, v[0]) == _pykernel.vec_scale(u, v[0])


@given(st.data())
@settings(max_examples=100, deadline=None)
def test_cyc_mul_reduce_parity(data):
    from trihopf.scalars import _reduction_rows, euler_phi

    n = data.draw(st.sampled_from([3, 4, 6, 8, 12]))
    phi = euler_phi(n)
    u = tuple(
        _pykernel.rat_norm(data.draw(ints), data.draw(pos)) for _ in range(phi)
    )
    v = tuple(
        _pykernel.rat_norm(data.draw(ints), data.draw(pos)) for _ in range(phi)
    )
    red = _reduction_rows(n)
    assert ckernel.cyc_mul_reduce(u, v, red) == _pykernel.cyc_mul_reduce(u, v, red)


def test_zero_division_parity():
    for k in (ckernel, _pykernel):
        with pytest.raises(ZeroDivisionError):
            k.rat_norm(1, 0)
        with pytest.raises(ZeroDivisionError):
            k.rat_inv((0, 1))
