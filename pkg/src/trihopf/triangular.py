"""Quasitriangular and triangular structure verification.

An R-matrix lives in H (x) H; the verifiers check the two hexagon
identities and the conjugation identity exhaustively in H (x) H (x) H,
triangularity adds flip(R) * R = 1 (x) 1.  The Drinfeld element
u = sum S(b_i) a_i implements S^2 as conjugation; the checks bundled in
check_structure_theorems assert u^2 = 1, u group-like, S^4 = id,
S^2 = Ad(u), and the odd-dimension degeneration u = 1 with
semisimplicity, recording failures instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import InvalidDrinfeldElement, NotInvertible, NotQuasitriangular
from .hopf import HopfData, algebra_inverse, is_chevalley, is_semisimple
from .scalars import SC_HALF, SC_ZERO
from .tensor import (
    Mat,
    Tensor2,
    Vec,
    embed13_23_12,
    flip,
    mat_rank,
    tensor2_inv,
    tensor2_mul,
    tensor3_mul,
    unit_tensor2,
)


class RMatrix:
    """A candidate triangular structure with a cached inverse."""

    __slots__ = ("hopf", "value", "_inverse")

    def __init__(self, hopf: HopfData, value: Tensor2, inverse: Optional[Tensor2] = None):
        if value.dim != hopf.dim:
            raise NotQuasitriangular("R-matrix dimension does not match the host")
        self.hopf = hopf
        self.value = value
        if inverse is not None:
            unit2 = unit_tensor2(hopf)
            if (
                tensor2_mul(value, inverse, hopf) != unit2
                or tensor2_mul(inverse, value, hopf) != unit2
            ):
                raise NotInvertible("provided inverse is not two-sided")
        self._inverse = inverse

    @property
    def inverse(self) -> Tensor2:
        if self._inverse is None:
            self._inverse = tensor2_inv(self.value, self.hopf)
        return self._inverse


def _as_tensor(r: Union[RMatrix, Tensor2]) -> Tensor2:
    return r.value if isinstance(r, RMatrix) else r


def verify_quasitriangular(h: HopfData, r: Union[RMatrix, Tensor2]) -> bool:
    """Hexagon identities plus the conjugation identity, exhaustively.

    (Delta (x) id)(R) = R13 R23, (id (x) Delta)(R) = R13 R12, and
    R Delta(x) = flip(Delta(x)) R for every basis x; a singular R
    returns False.
    """
    t = _as_tensor(r)
    try:
        if isinstance(r, RMatrix):
            r.inverse
        else:
            tensor2_inv(t, h)
    except NotInvertible:
        return False
    lhs1 = embed13_23_12(t, "delta_id", h)
    rhs1 = tensor3_mul(embed13_23_12(t, "13", h), embed13_23_12(t, "23", h), h)
    if lhs1 != rhs1:
        return False
    lhs2 = embed13_23_12(t, "id_delta", h)
    rhs2 = tensor3_mul(embed13_23_12(t, "13", h), embed13_23_12(t, "12", h), h)
    if lhs2 != rhs2:
        return False
    for i in range(h.dim):
        delta = h.comult_tensor(i)
        if tensor2_mul(t, delta, h) != tensor2_mul(flip(delta), t, h):
            return False
    return True


def verify_triangular(h: HopfData, r: Union[RMatrix, Tensor2]) -> bool:
    """Quasitriangular with the unitarity condition flip(R) R = 1 (x) 1."""
    t = _as_tensor(r)
    if tensor2_mul(flip(t), t, h) != unit_tensor2(h):
        return False
    return verify_quasitriangular(h, r)


def drinfeld_element(h: HopfData, r: Union[RMatrix, Tensor2]) -> Vec:
    """u = sum S(b_i) a_i for R = sum a_i (x) b_i.

    Validated by its defining property S^2(x) = u x u^-1 on every basis
    element; failure raises NotQuasitriangular.
    """
    t = _as_tensor(r)
    acc = [SC_ZERO] * h.dim
    s_cols = h.s_columns
    for i, j, c in t.nonzeros:
        for p, sc in s_cols[j]:
            csc = c * sc
            for k, w in h.mult[p][i]:
                acc[k] = acc[k] + csc * w
    u = Vec(acc)
    try:
        u_inv = algebra_inverse(h, u)
    except NotInvertible:
        raise NotQuasitriangular("Drinfeld candidate is not invertible") from None
    s2 = h.antipode @ h.antipode
    for i in range(h.dim):
        e = h.basis_vec(i)
        if h.mul_vec(h.mul_vec(u, e), u_inv) != s2.col(i):
            raise NotQuasitriangular("S^2 is not conjugation by the Drinfeld candidate")
    return u


def r_u(h: HopfData, u: Vec) -> Tensor2:
    """The rank <= 2 triangular structure attached to an involutive group-like.

    (1/2)(1 (x) 1 + 1 (x) u + u (x) 1 - u (x) u); requires u^2 = 1 and
    Delta(u) = u (x) u.
    """
    if h.mul_vec(u, u) != h.unit:
        raise InvalidDrinfeldElement("u^2 != 1")
    if h.comult_vec(u) != Tensor2.outer(u, u):
        raise InvalidDrinfeldElement("u is not group-like")
    one = h.unit
    t = (
        Tensor2.outer(one, one)
        + Tensor2.outer(one, u)
        + Tensor2.outer(u, one)
        - Tensor2.outer(u, u)
    )
    return t.scale(SC_HALF)


def modify_r(h: HopfData, r: Union[RMatrix, Tensor2], u: Vec) -> Tensor2:
    """R~ = R * R_u, the central modification of the triangular structure."""
    return tensor2_mul(_as_tensor(r), r_u(h, u), h)


def r_matrix_rank(r: Union[RMatrix, Tensor2]) -> int:
    """Rank of the coefficient matrix in the fixed basis, by exact elimination."""
    return mat_rank(_as_tensor(r).coefficient_matrix())


@dataclass(frozen=True)
class TheoremReport:
    """Bundled structural facts about a triangular pair (H, R)."""

    u: Vec
    u_squared_is_one: bool
    u_grouplike: bool
    s4_is_id: bool
    s2_is_ad_u: bool
    odd_dim_forces_u1_semisimple: bool
    chevalley: bool

    @property
    def ok(self) -> bool:
        return (
            self.u_squared_is_one
            and self.u_grouplike
            and self.s4_is_id
            and self.s2_is_ad_u
            and self.odd_dim_forces_u1_semisimple
            and self.chevalley
        )

    def to_obj(self):
        return {
            "u_support": [i for i, _ in self.u.nonzeros()],
            "u_squared_is_one": self.u_squared_is_one,
            "u_grouplike": self.u_grouplike,
            "s4_is_id": self.s4_is_id,
            "s2_is_ad_u": self.s2_is_ad_u,
            "odd_dim_forces_u1_semisimple": self.odd_dim_forces_u1_semisimple,
            "chevalley": self.chevalley,
        }


def check_structure_theorems(h: HopfData, r: Union[RMatrix, Tensor2]) -> TheoremReport:
    """Assert the structural consequences of triangularity, as a report.

    Any failure on a constructed catalog instance is a builder bug, so
    the suite doubles as a regression harness.
    """
    t = _as_tensor(r)
    u = drinfeld_element(h, t)
    u_sq = h.mul_vec(u, u) == h.unit
    u_gl = h.comult_vec(u) == Tensor2.outer(u, u)
    s2 = h.antipode @ h.antipode
    s4_ok = s2 @ s2 == Mat.identity(h.dim)
    u_inv = algebra_inverse(h, u)
    ad_ok = all(
        h.mul_vec(h.mul_vec(u, h.basis_vec(i)), u_inv) == s2.col(i)
        for i in range(h.dim)
    )
    if h.dim % 2 == 1:
        odd_ok = u == h.unit and is_semisimple(h)
    else:
        odd_ok = True
    return TheoremReport(
        u=u,
        u_squared_is_one=u_sq,
        u_grouplike=u_gl,
        s4_is_id=s4_ok,
        s2_is_ad_u=ad_ok,
        odd_dim_forces_u1_semisimple=odd_ok,
        chevalley=is_chevalley(h),
    )
