"""Axiom verification, duality, radical, Chevalley property."""

import pytest

from trihopf.constructions import (
    exterior_algebra,
    group_algebra,
    modified_supergroup_algebra,
    supergroup_algebra,
)
from trihopf.errors import NotInvertible, OrderNotFound
from trihopf.groups import FiniteGroup, GroupRep
from trihopf.hopf import (
    algebra_inverse,
    antipode_order,
    dual_hopf,
    is_chevalley,
    is_cocommutative,
    is_semisimple,
    jacobson_radical,
    make_hopf,
    verify_hopf,
)
from trihopf.scalars import CycScalar
from trihopf.tensor import Mat, Vec

from _oracles import bruteforce_radical, same_span

ONE = CycScalar.one()
ZERO = CycScalar.zero()


@pytest.fixture(scope="module")
def sweedler():
    z2 = FiniteGroup.cyclic(2)
    sign = GroupRep.from_sign_characters(z2, [(1, -1)])
    h, _ = modified_supergroup_algebra(z2, sign, u=1)
    return h


@pytest.fixture(scope="module")
def sg_z2_sign():
    z2 = FiniteGroup.cyclic(2)
    return supergroup_algebra(z2, GroupRep.from_sign_characters(z2, [(1, -1)]))


def test_group_algebras_verify():
    for g in (
        FiniteGroup.trivial(),
        FiniteGroup.cyclic(2),
        FiniteGroup.symmetric3(),
        FiniteGroup.dihedral4(),
    ):
        h = group_algebra(g)
        assert verify_hopf(h).ok
        assert is_cocommutative(h)
        assert h.antipode @ h.antipode == Mat.identity(h.dim)


def test_sweedler_verifies(sweedler):
    assert verify_hopf(sweedler).ok


def test_broken_antipode_reports_witness():
    h = group_algebra(FiniteGroup.cyclic(2))
    broken = h.replace(antipode=Mat.zero(2, 2))
    report = verify_hopf(broken)
    assert not report.antipode
    assert report.associativity and report.coassociativity
    assert report.witnesses["antipode"] == (0,)
    assert not report.ok


def test_broken_associativity_reports_witness():
    h = group_algebra(FiniteGroup.cyclic(2))
    # zero out 1*g: then (g*1)*g = 1 but g*(1*g) = 0
    mult = list(list(row) for row in h.mult)
    mult[0][1] = ()
    broken = h.replace(mult=tuple(tuple(row) for row in mult))
    report = verify_hopf(broken)
    assert not report.ok
    assert not report.associativity
    assert not report.unit
    # first failing triple: (1*g)*g = 0 while 1*(g*g) = 1
    assert report.witnesses["associativity"] == (0, 1, 1)


def test_cocommutativity():
    assert is_cocommutative(group_algebra(FiniteGroup.symmetric3()))
    dual = dual_hopf(group_algebra(FiniteGroup.symmetric3()))
    assert not is_cocommutative(dual)


def test_supergroup_supercocommutative(sg_z2_sign):
    assert verify_hopf(sg_z2_sign).ok
    assert is_cocommutative(sg_z2_sign)


def test_modified_supergroup_not_cocommutative(sweedler):
    assert not is_cocommutative(sweedler)


# --- duality ----------------------------------------------------------------

def test_dual_of_kz2_is_idempotent_basis_table():
    h = group_algebra(FiniteGroup.cyclic(2))
    d = dual_hopf(h)
    assert verify_hopf(d).ok
    # hand computation in the basis f+- = (1 +- g)/2: multiplication is
    # diagonal, Delta(f+) = f+ (x) f+ + f- (x) f-, Delta(f-) mixes.
    expected = make_hopf(
        dim=2,
        unit=Vec([ONE, ONE]),
        mult=(
            (((0, ONE),), ()),
            ((), ((1, ONE),)),
        ),
        comult=(
            ((0, 0, ONE), (1, 1, ONE)),
            ((0, 1, ONE), (1, 0, ONE)),
        ),
        counit=(ONE, ZERO),
        antipode=Mat.identity(2),
    )
    assert d.same_structure(expected)


def test_dual_of_s3_commutative_not_cocommutative():
    d = dual_hopf(group_algebra(FiniteGroup.symmetric3()))
    assert verify_hopf(d).ok
    assert all(
        dict(d.mult[i][j]) == dict(d.mult[j][i]) for i in range(6) for j in range(6)
    )
    assert not is_cocommutative(d)


def test_double_dual_identity():
    for h in (
        group_algebra(FiniteGroup.symmetric3()),
        exterior_algebra(2),
        supergroup_algebra(
            FiniteGroup.cyclic(2),
            GroupRep.from_sign_characters(FiniteGroup.cyclic(2), [(1, -1)]),
        ),
    ):
        dd = dual_hopf(dual_hopf(h))
        assert dd.same_structure(h)


def test_dual_super_verifies():
    e2 = exterior_algebra(2)
    d = dual_hopf(e2)
    assert verify_hopf(d).ok
    assert d.super and d.parity == e2.parity


# --- radical / semisimplicity -----------------------------------------------

def test_group_algebra_radical_empty():
    for g in (FiniteGroup.cyclic(3), FiniteGroup.symmetric3(), FiniteGroup.quaternion8()):
        assert jacobson_radical(group_algebra(g)) == []
        assert is_semisimple(group_algebra(g))


def test_sweedler_radical(sweedler):
    rad = jacobson_radical(sweedler)
    assert len(rad) == 2
    # spanned by x and gx: basis indices 1 and 3
    assert same_span(rad, [Vec.basis(4, 1), Vec.basis(4, 3)])
    assert not is_semisimple(sweedler)


def test_supergroup_radical_dimension_formula():
    z2 = FiniteGroup.cyclic(2)
    for chars in ([(1, -1)], [(1, -1), (1, -1)]):
        v = GroupRep.from_sign_characters(z2, chars)
        h = supergroup_algebra(z2, v)
        expected = z2.order * (2 ** len(chars) - 1)
        assert len(jacobson_radical(h)) == expected


def test_radical_is_nilpotent_ideal(sweedler):
    rad = jacobson_radical(sweedler)
    from trihopf.tensor import in_span, span_echelon

    ech, pivots = span_echelon(rad)
    for r in rad:
        for i in range(sweedler.dim):
            e = Vec.basis(sweedler.dim, i)
            assert in_span(ech, pivots, sweedler.mul_vec(r, e))
            assert in_span(ech, pivots, sweedler.mul_vec(e, r))
    # products of dim(Rad)+1 radical elements vanish
    for a in rad:
        for b in rad:
            for c in rad:
                assert sweedler.mul_vec(sweedler.mul_vec(a, b), c).is_zero()


def test_bruteforce_radical_agrees(sweedler, sg_z2_sign):
    instances = [
        group_algebra(FiniteGroup.cyclic(4)),
        group_algebra(FiniteGroup.symmetric3()),
        sweedler,
        sg_z2_sign,
        exterior_algebra(2),
        dual_hopf(group_algebra(FiniteGroup.cyclic(3))),
    ]
    for h in instances:
        assert same_span(jacobson_radical(h), bruteforce_radical(h))


# --- Chevalley property ------------------------------------------------------

def test_chevalley_semisimple_trivial():
    assert is_chevalley(group_algebra(FiniteGroup.symmetric3()))


def test_chevalley_sweedler(sweedler):
    assert is_chevalley(sweedler)


def test_hopf_ideal_subroutine_rejects_span_of_unit(sweedler):
    # span{1} fails the epsilon-vanishing leg: counit(1) = 1 != 0
    from trihopf.hopf import subspace_is_hopf_ideal

    assert not subspace_is_hopf_ideal(sweedler, [Vec.basis(4, 0)])
    assert subspace_is_hopf_ideal(sweedler, [])


# --- antipode order -----------------------------------------------------------

def test_antipode_orders(sweedler):
    assert antipode_order(group_algebra(FiniteGroup.cyclic(2))) == 1
    assert antipode_order(group_algebra(FiniteGroup.cyclic(3))) == 2
    assert antipode_order(sweedler) == 4
    s2 = sweedler.antipode @ sweedler.antipode
    assert s2 != Mat.identity(4)
    assert s2 @ s2 == Mat.identity(4)


def test_antipode_order_bound():
    h = group_algebra(FiniteGroup.cyclic(3))
    # scaled antipode never returns to the identity
    twisted = h.replace(antipode=Mat([[c + c for c in row] for row in h.antipode.rows]))
    with pytest.raises(OrderNotFound):
        antipode_order(twisted, bound=8)


def test_algebra_inverse(sweedler):
    g = Vec.basis(4, 2)
    assert algebra_inverse(sweedler, g) == g
    with pytest.raises(NotInvertible):
        algebra_inverse(sweedler, Vec.basis(4, 1))  # x is nilpotent
