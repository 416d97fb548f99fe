"""Quasitriangularity, the Drinfeld element, structural theorem checks."""

import pytest

from trihopf.constructions import (
    apply_twist,
    build_bicharacter_twist,
    group_algebra,
    modified_supergroup_algebra,
    semisimple_triangular,
)
from trihopf.errors import InvalidDrinfeldElement, NotQuasitriangular
from trihopf.groups import (
    Bicharacter,
    FiniteGroup,
    GroupRep,
    alternating_nondegenerate_bicharacters,
    half_bicharacter,
)
from trihopf.hopf import verify_hopf
from trihopf.scalars import CycScalar, root_of_unity
from trihopf.tensor import Tensor2, Vec, flip, tensor2_mul, unit_tensor2
from trihopf.triangular import (
    RMatrix,
    check_structure_theorems,
    drinfeld_element,
    modify_r,
    r_matrix_rank,
    r_u,
    verify_quasitriangular,
    verify_triangular,
)

ONE = CycScalar.one()


def sc(n, d=1):
    return CycScalar.from_rational(n, d)


@pytest.fixture(scope="module")
def kz2():
    return group_algebra(FiniteGroup.cyclic(2))


@pytest.fixture(scope="module")
def sweedler():
    z2 = FiniteGroup.cyclic(2)
    sign = GroupRep.from_sign_characters(z2, [(1, -1)])
    return modified_supergroup_algebra(z2, sign, u=1)


def test_unit_r_on_cocommutative(kz2):
    assert verify_quasitriangular(kz2, unit_tensor2(kz2))
    assert verify_triangular(kz2, unit_tensor2(kz2))


def test_gg_fails_hexagon(kz2):
    # (Delta (x) id)(g (x) g) = g (x) g (x) g but R13 R23 = g (x) g (x) g^2
    gg = Tensor2.from_dict(2, {(1, 1): ONE})
    assert not verify_quasitriangular(kz2, gg)


def test_ru_quasitriangular_on_modified(sweedler):
    h, ru = sweedler
    assert verify_quasitriangular(h, ru)
    assert verify_triangular(h, ru)


def test_quasitriangular_but_not_triangular():
    # symmetric nondegenerate bicharacter on Z3: R = sum beta(s,t) E_s (x) E_t
    # satisfies the hexagons on the cocommutative k[Z3] but flip(R) R != 1.
    z3 = FiniteGroup.cyclic(3)
    h = group_algebra(z3)
    a = z3.abelian_subgroup(range(3))
    w = root_of_unity(3, 1)
    vals = tuple(tuple(w ** ((s * t) % 3) for t in range(3)) for s in range(3))
    beta = Bicharacter((3,), vals)
    r = build_bicharacter_twist(a, beta)
    assert verify_quasitriangular(h, r)
    assert not verify_triangular(h, r)
    assert tensor2_mul(flip(r), r, h) != unit_tensor2(h)


def test_drinfeld_unit(kz2):
    assert drinfeld_element(kz2, unit_tensor2(kz2)) == kz2.unit


def test_drinfeld_of_ru_is_u(sweedler):
    h, ru = sweedler
    assert drinfeld_element(h, ru) == Vec.basis(4, 2)


def test_drinfeld_rejects_non_quasitriangular(sweedler):
    h, _ = sweedler
    # R = 1 (x) 1 gives u = 1, but S^2 != id on the Sweedler algebra
    with pytest.raises(NotQuasitriangular):
        drinfeld_element(h, unit_tensor2(h))


def test_r_u_formula_and_involution(kz2):
    u = Vec.basis(2, 1)
    ru = r_u(kz2, u)
    half = sc(1, 2)
    assert {(i, j): c for i, j, c in ru.nonzeros} == {
        (0, 0): half, (0, 1): half, (1, 0): half, (1, 1): -half,
    }
    assert tensor2_mul(ru, ru, kz2) == unit_tensor2(kz2)
    assert flip(ru) == ru
    # u = 1 collapses to the unit tensor
    assert r_u(kz2, kz2.unit) == unit_tensor2(kz2)


def test_r_u_rejects_non_involution():
    z4 = FiniteGroup.cyclic(4)
    h = group_algebra(z4)
    with pytest.raises(InvalidDrinfeldElement):
        r_u(h, Vec.basis(4, 1))  # order 4
    with pytest.raises(InvalidDrinfeldElement):
        r_u(h, Vec.basis(4, 0) + Vec.basis(4, 2))  # not group-like


def test_modify_r_involution(kz2, sweedler):
    u = Vec.basis(2, 1)
    ru = r_u(kz2, u)
    assert modify_r(kz2, ru, u) == unit_tensor2(kz2)
    assert modify_r(kz2, unit_tensor2(kz2), kz2.unit) == unit_tensor2(kz2)
    assert modify_r(kz2, modify_r(kz2, ru, u), u) == ru
    h, ru_s = sweedler
    u_s = Vec.basis(4, 2)
    assert modify_r(h, modify_r(h, ru_s, u_s), u_s) == ru_s


def test_r_matrix_rank_examples(kz2, sweedler):
    assert r_matrix_rank(unit_tensor2(kz2)) == 1
    _, ru = sweedler
    assert r_matrix_rank(ru) == 2


def test_rank4_twisted_z2z2():
    z2z2 = FiniteGroup.direct_product(FiniteGroup.cyclic(2), FiniteGroup.cyclic(2))
    a = z2z2.abelian_subgroup(range(4))
    gamma = alternating_nondegenerate_bicharacters((2, 2))[0]
    h, r = semisimple_triangular(z2z2, a, gamma, u=0)
    assert r_matrix_rank(r) == 4


def test_rmatrix_caches_inverse(sweedler):
    h, ru = sweedler
    rm = RMatrix(h, ru)
    assert rm.inverse == ru  # R_u is its own inverse
    assert verify_triangular(h, rm)
    rm2 = RMatrix(h, ru, inverse=ru)
    assert rm2.inverse == ru


def test_structure_theorems_sweedler(sweedler):
    h, ru = sweedler
    rep = check_structure_theorems(h, ru)
    assert rep.ok
    assert rep.u == Vec.basis(4, 2)
    assert rep.u_squared_is_one and rep.u_grouplike
    assert rep.s4_is_id and rep.s2_is_ad_u
    assert rep.odd_dim_forces_u1_semisimple  # dim even: vacuous
    assert rep.chevalley
    obj = rep.to_obj()
    assert obj["u_support"] == [2]


def test_structure_theorems_odd_dim():
    z3 = FiniteGroup.cyclic(3)
    h = group_algebra(z3)
    rep = check_structure_theorems(h, unit_tensor2(h))
    assert rep.ok and rep.u == h.unit


def test_structure_theorems_twisted_z3z3():
    z3z3 = FiniteGroup.direct_product(FiniteGroup.cyclic(3), FiniteGroup.cyclic(3))
    a = z3z3.abelian_subgroup(range(9))
    gamma = alternating_nondegenerate_bicharacters((3, 3))[1]
    h, r = semisimple_triangular(z3z3, a, gamma, u=0)
    rep = check_structure_theorems(h, r)
    assert rep.ok
    assert rep.u == h.unit and rep.odd_dim_forces_u1_semisimple


def test_drinfeld_element_twist_invariant():
    # compute u before and after twisting: it must not move
    z2z2 = FiniteGroup.direct_product(FiniteGroup.cyclic(2), FiniteGroup.cyclic(2))
    h = group_algebra(z2z2)
    a = z2z2.abelian_subgroup(range(4))
    beta = half_bicharacter(alternating_nondegenerate_bicharacters((2, 2))[0])
    for u_idx in range(4):
        ru = r_u(h, Vec.basis(4, u_idx))
        u_before = drinfeld_element(h, ru)
        h2, r2 = apply_twist(h, build_bicharacter_twist(a, beta), r=ru)
        assert verify_hopf(h2).ok
        u_after = drinfeld_element(h2, r2)
        assert u_before == u_after == Vec.basis(4, u_idx)
