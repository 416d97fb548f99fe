"""Exact linear algebra and tensor-square arithmetic."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from trihopf.constructions import group_algebra, supergroup_algebra
from trihopf.errors import NotInvertible, ShapeError
from trihopf.groups import FiniteGroup, GroupRep
from trihopf.scalars import CycScalar, root_of_unity
from trihopf.tensor import (
    Mat,
    Tensor2,
    Vec,
    embed13_23_12,
    flip,
    mat_inv,
    mat_kernel,
    mat_rank,
    solve_linear,
    tensor2_inv,
    tensor2_mul,
    unit_tensor2,
    unit_tensor3,
)

ONE = CycScalar.one()
ZERO = CycScalar.zero()


def sc(n, d=1):
    return CycScalar.from_rational(n, d)


def mat_of_ints(rows):
    return Mat([[sc(x) for x in row] for row in rows])


# --- kernels and ranks ------------------------------------------------------

def test_kernel_identity_is_injective():
    assert mat_kernel(Mat.identity(3)) == []


def test_kernel_zero_matrix():
    basis = mat_kernel(Mat.zero(2, 2))
    assert len(basis) == 2
    assert basis[0] == Vec.basis(2, 0) and basis[1] == Vec.basis(2, 1)


def test_kernel_rank_one_symmetric():
    basis = mat_kernel(mat_of_ints([[1, 1], [1, 1]]))
    assert len(basis) == 1
    v = basis[0]
    # spanned by (1, -1)
    assert v.entries[0] * sc(-1) == v.entries[1]


def test_kernel_vectors_are_annihilated_and_rank_nullity():
    rng = random.Random(7)
    for _ in range(25):
        rows = [[sc(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(4)] for _ in range(3)]
        m = Mat(rows)
        basis = mat_kernel(m)
        for v in basis:
            assert m.matvec(v).is_zero()
        assert mat_rank(m) + len(basis) == m.ncols


def test_kernel_with_cyclotomic_entries():
    z = root_of_unity(4, 1)
    m = Mat([[ONE, z], [z, -ONE]])  # second row = z * first row
    basis = mat_kernel(m)
    assert len(basis) == 1
    assert m.matvec(basis[0]).is_zero()


def test_mat_inv_and_solve():
    m = mat_of_ints([[2, 1], [1, 1]])
    inv = mat_inv(m)
    assert m @ inv == Mat.identity(2)
    rhs = Vec([sc(3), sc(2)])
    x = solve_linear(m, rhs)
    assert m.matvec(x) == rhs
    assert solve_linear(mat_of_ints([[1, 0], [1, 0]]), Vec([sc(0), sc(1)])) is None
    with pytest.raises(NotInvertible):
        mat_inv(mat_of_ints([[1, 1], [1, 1]]))


# --- tensor squares ---------------------------------------------------------

@pytest.fixture(scope="module")
def kz2():
    return group_algebra(FiniteGroup.cyclic(2))


def basis2(h, i, j):
    return Tensor2.outer(Vec.basis(h.dim, i), Vec.basis(h.dim, j))


def test_unit_tensor_is_neutral(kz2):
    x = Tensor2.from_dict(2, {(0, 1): sc(3), (1, 0): sc(-2, 5)})
    assert tensor2_mul(unit_tensor2(kz2), x, kz2) == x
    assert tensor2_mul(x, unit_tensor2(kz2), kz2) == x


def test_gg_squares_to_unit(kz2):
    gg = basis2(kz2, 1, 1)
    assert tensor2_mul(gg, gg, kz2) == unit_tensor2(kz2)
    assert tensor2_inv(gg, kz2) == gg
    assert tensor2_inv(unit_tensor2(kz2), kz2) == unit_tensor2(kz2)


def test_ru_squares_to_unit_against_symbolic_oracle(kz2):
    # independent oracle: expand the 16-term product in k[Z2] (x) k[Z2]
    # symbolically, multiplying exponent pairs mod 2.
    half = sc(1, 2)
    terms = {(0, 0): half, (0, 1): half, (1, 0): half, (1, 1): -half}
    expected = {}
    for (a1, b1), c1 in terms.items():
        for (a2, b2), c2 in terms.items():
            key = ((a1 + a2) % 2, (b1 + b2) % 2)
            expected[key] = expected.get(key, ZERO) + c1 * c2
    expected = {k: v for k, v in expected.items() if not v.is_zero()}
    assert expected == {(0, 0): ONE}  # the oracle itself collapses to 1 (x) 1

    r_u = Tensor2.from_dict(2, terms)
    assert tensor2_mul(r_u, r_u, kz2) == unit_tensor2(kz2)
    assert tensor2_inv(r_u, kz2) == r_u


def test_tensor2_mul_shape_error(kz2):
    with pytest.raises(ShapeError):
        tensor2_mul(Tensor2.from_dict(3, {}), Tensor2.from_dict(3, {}), kz2)


def test_tensor2_inv_singular(kz2):
    # 1 (x) (1 + g) annihilates 1 (x) (1 - g)
    t = Tensor2.from_dict(2, {(0, 0): ONE, (0, 1): ONE})
    with pytest.raises(NotInvertible):
        tensor2_inv(t, kz2)


def test_flip():
    t = Tensor2.from_dict(2, {(0, 1): sc(2)})
    assert flip(t) == Tensor2.from_dict(2, {(1, 0): sc(2)})
    sym = Tensor2.from_dict(2, {(0, 1): sc(1), (1, 0): sc(1)})
    assert flip(sym) == sym
    rnd = Tensor2.from_dict(2, {(0, 0): sc(1), (1, 0): sc(-3, 2)})
    assert flip(flip(rnd)) == rnd


def test_flip_super_sign():
    h = supergroup_algebra(
        FiniteGroup.cyclic(2), GroupRep.from_sign_characters(FiniteGroup.cyclic(2), [(1, -1)])
    )
    # v (x) v picks up the Koszul sign; indices 1 and 3 are odd
    t = Tensor2.from_dict(h.dim, {(1, 1): ONE})
    assert flip(t, h) == Tensor2.from_dict(h.dim, {(1, 1): -ONE})
    t2 = Tensor2.from_dict(h.dim, {(0, 1): ONE})
    assert flip(t2, h) == Tensor2.from_dict(h.dim, {(1, 0): ONE})


def test_flip_antihomomorphism(kz2):
    rng = random.Random(3)
    for _ in range(10):
        a = Tensor2.from_dict(
            2, {(rng.randint(0, 1), rng.randint(0, 1)): sc(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3)}
        )
        b = Tensor2.from_dict(
            2, {(rng.randint(0, 1), rng.randint(0, 1)): sc(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3)}
        )
        # k[Z2] (x) k[Z2] is commutative, so flip is an algebra map here
        assert flip(tensor2_mul(a, b, kz2)) == tensor2_mul(flip(a), flip(b), kz2)


def test_embeddings(kz2):
    one = unit_tensor2(kz2)
    assert embed13_23_12(one, "13", kz2) == unit_tensor3(kz2)
    gg = basis2(kz2, 1, 1)
    t = embed13_23_12(gg, "13", kz2)
    assert t == _t3(kz2, {(1, 0, 1): ONE})
    assert embed13_23_12(gg, "12", kz2) == _t3(kz2, {(1, 1, 0): ONE})
    assert embed13_23_12(gg, "23", kz2) == _t3(kz2, {(0, 1, 1): ONE})
    # (Delta (x) id)(1 (x) 1) = 1 (x) 1 (x) 1
    assert embed13_23_12(one, "delta_id", kz2) == unit_tensor3(kz2)
    assert embed13_23_12(one, "id_delta", kz2) == unit_tensor3(kz2)
    with pytest.raises(ShapeError):
        embed13_23_12(one, "31", kz2)


def _t3(h, entries):
    from trihopf.tensor import Tensor3

    return Tensor3.from_dict(h.dim, entries)


@given(st.data())
@settings(max_examples=25, deadline=None)
def test_tensor2_mul_associative_unital(data):
    h = group_algebra(FiniteGroup.cyclic(3))

    def rand_t2():
        entries = {}
        for _ in range(data.draw(st.integers(0, 4))):
            i = data.draw(st.integers(0, 2))
            j = data.draw(st.integers(0, 2))
            entries[(i, j)] = sc(data.draw(st.integers(-4, 4)), data.draw(st.integers(1, 3)))
        return Tensor2.from_dict(3, entries)

    a, b, c = rand_t2(), rand_t2(), rand_t2()
    assert tensor2_mul(tensor2_mul(a, b, h), c, h) == tensor2_mul(a, tensor2_mul(b, c, h), h)
    assert tensor2_mul(unit_tensor2(h), a, h) == a
