"""Builders for the catalog of (super) Hopf algebras.

Group algebras, exterior algebras, smash products k[G] x Lambda(V),
their triangular modifications via a central involution, bicharacter
twists supported on abelian subgroups, and the septuple pipeline that
composes them.  Every builder returns validated HopfData whose axioms
the verifiers re-check exhaustively in the test suite.

Basis order of the smash product is group-major, subset-minor with
subsets in bitmask order: index = g * 2**w + mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import (
    SeptupleInvariantViolation,
    ShapeError,
    TwistError,
    UnsupportedStratum,
)
from .groups import (
    AbelianSubgroup,
    Bicharacter,
    FiniteGroup,
    GroupRep,
    characters,
    half_bicharacter,
)
from .hopf import HopfData, algebra_inverse, make_hopf
from .scalars import SC_ONE, SC_ZERO, CycScalar
from .tensor import (
    Mat,
    Tensor2,
    Vec,
    flip,
    solve_linear,
    tensor2_inv,
    tensor2_mul,
    tensor3_mul,
    embed13_23_12,
    unit_tensor2,
)
from .triangular import r_u


# ---------------------------------------------------------------------------
# group algebras

def group_algebra(g: FiniteGroup) -> HopfData:
    """k[G]: basis the group elements, Delta(g) = g (x) g, S(g) = g^-1."""
    d = g.order
    mult = tuple(
        tuple(((g.table[i][j], SC_ONE),) for j in range(d)) for i in range(d)
    )
    comult = tuple(((i, i, SC_ONE),) for i in range(d))
    counit = (SC_ONE,) * d
    antipode = Mat(
        tuple(
            tuple(SC_ONE if i == g.inverse[j] else SC_ZERO for j in range(d))
            for i in range(d)
        )
    )
    return make_hopf(
        dim=d,
        unit=Vec.basis(d, g.identity),
        mult=mult,
        comult=comult,
        counit=counit,
        antipode=antipode,
    )


# ---------------------------------------------------------------------------
# exterior-algebra combinatorics (basis masks over v_1 < v_2 < ... < v_w)

def _popcount_below(mask: int, bit: int) -> int:
    return bin(mask & ((1 << bit) - 1)).count("1")


def _wedge(a_mask: int, b_mask: int):
    """Sign and mask of v_A ^ v_B, or None when they share a factor."""
    if a_mask & b_mask:
        return None
    inv = 0
    m = a_mask
    while m:
        bit = (m & -m).bit_length() - 1
        inv += _popcount_below(b_mask, bit)
        m &= m - 1
    return (-1) ** inv, a_mask | b_mask


def _split_sign(t_mask: int, c_mask: int) -> int:
    """Koszul sign of the shuffle splitting v_S into v_T (x) v_C."""
    inv = 0
    m = c_mask
    while m:
        bit = (m & -m).bit_length() - 1
        inv += bin(t_mask >> (bit + 1)).count("1")
        m &= m - 1
    return (-1) ** inv


def _subsets(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _det(rows, row_idx, col_idx) -> CycScalar:
    if not row_idx:
        return SC_ONE
    if len(row_idx) == 1:
        return rows[row_idx[0]][col_idx[0]]
    acc = SC_ZERO
    for t, r in enumerate(row_idx):
        c = rows[r][col_idx[0]]
        if c.is_zero():
            continue
        sub = _det(rows, row_idx[:t] + row_idx[t + 1 :], col_idx[1:])
        term = c * sub
        acc = acc + term if t % 2 == 0 else acc - term
    return acc


def _exterior_image(m: Mat, mask: int, degree: int):
    """Expansion of rho(v_mask) under a linear map, via minors."""
    cols = [b for b in range(degree) if mask >> b & 1]
    if not cols:
        return ((0, SC_ONE),)
    out = []
    for rows_subset in combinations(range(degree), len(cols)):
        det = _det(m.rows, rows_subset, tuple(cols))
        if not det.is_zero():
            out_mask = 0
            for b in rows_subset:
                out_mask |= 1 << b
            out.append((out_mask, det))
    return tuple(out)


def exterior_algebra(n: int) -> HopfData:
    """Lambda(V) on n odd primitive generators, as a super Hopf algebra."""
    if n < 0:
        raise ShapeError("negative exterior dimension")
    d = 1 << n
    mult = []
    for s in range(d):
        row = []
        for t in range(d):
            w = _wedge(s, t)
            if w is None:
                row.append(())
            else:
                sign, mask = w
                row.append(((mask, SC_ONE if sign > 0 else -SC_ONE),))
        mult.append(tuple(row))
    comult = []
    for s in range(d):
        entry = []
        for t in _subsets(s):
            c = s & ~t
            sign = _split_sign(t, c)
            entry.append((t, c, SC_ONE if sign > 0 else -SC_ONE))
        comult.append(tuple(entry))
    counit = tuple(SC_ONE if s == 0 else SC_ZERO for s in range(d))
    antipode = Mat(
        tuple(
            tuple(
                (SC_ONE if bin(j).count("1") % 2 == 0 else -SC_ONE) if i == j else SC_ZERO
                for j in range(d)
            )
            for i in range(d)
        )
    )
    parity = tuple(bin(s).count("1") % 2 for s in range(d))
    return make_hopf(
        dim=d,
        unit=Vec.basis(d, 0),
        mult=mult,
        comult=comult,
        counit=counit,
        antipode=antipode,
        parity=parity,
        super=True,
    )


# ---------------------------------------------------------------------------
# smash products k[G] x Lambda(V)

def _smash_mult(g: FiniteGroup, v: GroupRep):
    """Sparse structure tensor of the smash product.

    (g, S)(h, T) = (gh, rho(h^-1)(v_S) ^ v_T); moving v_S across h uses
    the action, so g v = rho(g)(v) g holds in the result.
    """
    w = v.degree
    size = 1 << w
    dim = g.order * size
    # image table under rho(h^-1) per h and source mask
    images = []
    for h in range(g.order):
        m = v.matrices[g.inverse[h]] if w else None
        images.append(
            tuple(_exterior_image(m, mask, w) if w else ((0, SC_ONE),) for mask in range(size))
        )
    mult = []
    for i in range(dim):
        gi, si = divmod(i, size)
        row = []
        for j in range(dim):
            hj, tj = divmod(j, size)
            gh = g.table[gi][hj]
            acc = {}
            for u_mask, coeff in images[hj][si]:
                wedge = _wedge(u_mask, tj)
                if wedge is None:
                    continue
                sign, mask = wedge
                k = gh * size + mask
                c = coeff if sign > 0 else -coeff
                cur = acc.get(k)
                acc[k] = c if cur is None else cur + c
            row.append(tuple((k, c) for k, c in sorted(acc.items()) if not c.is_zero()))
        mult.append(tuple(row))
    return tuple(mult), size, dim


def _same_group(a: FiniteGroup, b: FiniteGroup) -> bool:
    return a is b or (a.table == b.table and a.identity == b.identity)


def supergroup_algebra(g: FiniteGroup, v: GroupRep) -> HopfData:
    """k[G] x Lambda(V): group-likes even, generators odd and primitive."""
    if not _same_group(v.group, g):
        raise ShapeError("representation must act on the given group")
    mult, size, dim = _smash_mult(g, v)
    comult = []
    for i in range(dim):
        gi, si = divmod(i, size)
        entry = []
        for t in _subsets(si):
            c = si & ~t
            sign = _split_sign(t, c)
            entry.append(
                (gi * size + t, gi * size + c, SC_ONE if sign > 0 else -SC_ONE)
            )
        comult.append(tuple(entry))
    counit = tuple(
        SC_ONE if i % size == 0 else SC_ZERO for i in range(dim)
    )
    # S(g v_S) = (-1)^|S| (g^-1, rho(g) v_S)
    cols = []
    for i in range(dim):
        gi, si = divmod(i, size)
        col = [SC_ZERO] * dim
        ginv = g.inverse[gi]
        img = _exterior_image(v.matrices[gi], si, v.degree) if v.degree else ((0, SC_ONE),)
        neg = bin(si).count("1") % 2 == 1
        for mask, coeff in img:
            col[ginv * size + mask] = -coeff if neg else coeff
        cols.append(col)
    antipode = Mat(tuple(zip(*cols)))
    parity = tuple(bin(i % size).count("1") % 2 for i in range(dim))
    return make_hopf(
        dim=dim,
        unit=Vec.basis(dim, g.identity * size),
        mult=mult,
        comult=comult,
        counit=counit,
        antipode=antipode,
        parity=parity,
        super=True,
    )


def _check_modifier(g: FiniteGroup, v: GroupRep, u: int):
    if not (0 <= u < g.order):
        raise SeptupleInvariantViolation("modifier index out of range")
    if not g.is_central(u):
        raise SeptupleInvariantViolation("modifier u must be central")
    if g.table[u][u] != g.identity:
        raise SeptupleInvariantViolation("modifier u must square to the identity")
    if not v.acts_by_minus_one(u):
        raise SeptupleInvariantViolation("modifier u must act by -1 on V")


def modified_supergroup_algebra(
    g: FiniteGroup, v: GroupRep, u: int
) -> tuple[HopfData, Tensor2]:
    """Ordinary triangular Hopf algebra on the smash-product algebra.

    Group elements stay group-like while Delta(v) = v (x) 1 + u (x) v
    and S(v) = -u v; returns the rank <= 2 triangular structure
    R_u = (1/2)(1 (x) 1 + 1 (x) u + u (x) 1 - u (x) u) alongside.
    """
    if not _same_group(v.group, g):
        raise ShapeError("representation must act on the given group")
    _check_modifier(g, v, u)
    mult, size, dim = _smash_mult(g, v)
    w = v.degree
    unit_idx = g.identity * size
    u_idx = u * size

    def tensor_dict_mul(acc: dict, factor: dict) -> dict:
        out: dict = {}
        for (a, b), c1 in acc.items():
            for (p, q), c2 in factor.items():
                c = c1 * c2
                for k1, w1 in mult[a][p]:
                    left = c * w1
                    for k2, w2 in mult[b][q]:
                        key = (k1, k2)
                        val = left * w2
                        cur = out.get(key)
                        out[key] = val if cur is None else cur + val
        return {k: c for k, c in out.items() if not c.is_zero()}

    comult = []
    for i in range(dim):
        gi, si = divmod(i, size)
        acc = {(gi * size, gi * size): SC_ONE}
        for bit in range(w):
            if si >> bit & 1:
                vi = unit_idx + (1 << bit)
                acc = tensor_dict_mul(acc, {(vi, unit_idx): SC_ONE, (u_idx, vi): SC_ONE})
        comult.append(tuple((a, b, c) for (a, b), c in sorted(acc.items())))
    counit = tuple(SC_ONE if i % size == 0 else SC_ZERO for i in range(dim))

    def vec_dict_mul(acc: dict, factor: dict) -> dict:
        out: dict = {}
        for a, c1 in acc.items():
            for p, c2 in factor.items():
                c = c1 * c2
                for k, w1 in mult[a][p]:
                    val = c * w1
                    cur = out.get(k)
                    out[k] = val if cur is None else cur + val
        return {k: c for k, c in out.items() if not c.is_zero()}

    cols = []
    for i in range(dim):
        gi, si = divmod(i, size)
        acc = {unit_idx: SC_ONE}
        for bit in range(w - 1, -1, -1):  # S reverses the factor order
            if si >> bit & 1:
                uv = u_idx + (1 << bit)  # u * v_bit lands on one basis element
                acc = vec_dict_mul(acc, {uv: -SC_ONE})
        acc = vec_dict_mul(acc, {g.inverse[gi] * size: SC_ONE})
        col = [SC_ZERO] * dim
        for k, c in acc.items():
            col[k] = c
        cols.append(col)
    antipode = Mat(tuple(zip(*cols)))

    h = make_hopf(
        dim=dim,
        unit=Vec.basis(dim, unit_idx),
        mult=mult,
        comult=comult,
        counit=counit,
        antipode=antipode,
    )
    return h, r_u(h, Vec.basis(dim, u_idx))


# ---------------------------------------------------------------------------
# bicharacter twists

def build_bicharacter_twist(a: AbelianSubgroup, beta: Bicharacter) -> Tensor2:
    """J = sum over dual labels of beta(s,t) E_s (x) E_t inside k[G] (x) k[G].

    beta is the bimultiplicative twist datum itself; to realize a
    classification datum gamma (alternating, nondegenerate) pass
    half_bicharacter(gamma), whose skew is gamma.
    """
    if tuple(beta.factors) != tuple(a.factors):
        raise ShapeError(
            f"bicharacter factors {beta.factors} do not match subgroup factors {a.factors}"
        )
    parent_dim = a.parent.order
    labels, _, idems = characters(a)
    # inflate idempotents from subgroup coordinates to parent coordinates
    inflated = []
    for e in idems:
        coords = [SC_ZERO] * parent_dim
        for local, c in enumerate(e.entries):
            coords[a.elements[local]] = c
        inflated.append(coords)
    index = {lab: i for i, lab in enumerate(labels)}
    acc: dict = {}
    for s in labels:
        es = inflated[index[s]]
        for t in labels:
            b = beta.values[index[s]][index[t]]
            if b.is_zero():
                continue
            et = inflated[index[t]]
            for p, cp in enumerate(es):
                if cp.is_zero():
                    continue
                left = b * cp
                for q, cq in enumerate(et):
                    if cq.is_zero():
                        continue
                    key = (p, q)
                    val = left * cq
                    cur = acc.get(key)
                    acc[key] = val if cur is None else cur + val
    return Tensor2.from_dict(parent_dim, {k: v for k, v in acc.items() if not v.is_zero()})


def inflate_group_tensor(t: Tensor2, factor: int, dim: int) -> Tensor2:
    """Map a tensor over k[G] into the smash basis (index g -> g * factor)."""
    if t.dim * factor != dim:
        raise ShapeError("inflation factor does not match dimensions")
    return Tensor2.from_dict(
        dim, {(i * factor, j * factor): c for i, j, c in t.nonzeros}
    )


def _twist_identities_hold(h: HopfData, j: Tensor2) -> bool:
    left = [SC_ZERO] * h.dim
    right = [SC_ZERO] * h.dim
    for i, k, c in j.nonzeros:
        left[k] = left[k] + c * h.counit[i]
        right[i] = right[i] + c * h.counit[k]
    if Vec(left) != h.unit or Vec(right) != h.unit:
        return False
    lhs = tensor3_mul(
        embed13_23_12(j, "12", h), embed13_23_12(j, "delta_id", h), h
    )
    rhs = tensor3_mul(
        embed13_23_12(j, "23", h), embed13_23_12(j, "id_delta", h), h
    )
    return lhs == rhs


def verify_twist(h: HopfData, j: Tensor2) -> bool:
    """Counit normalization and the cocycle identity, checked exhaustively.

    Returns False on identity failures; raises NotInvertible when the
    identities hold but j is singular in H (x) H.
    """
    if not _twist_identities_hold(h, j):
        return False
    tensor2_inv(j, h)
    return True


def apply_twist(
    h: HopfData,
    j: Tensor2,
    r: Optional[Tensor2] = None,
    j_inv: Optional[Tensor2] = None,
) -> tuple[HopfData, Optional[Tensor2]]:
    """Conjugate the comultiplication by a verified twist.

    Multiplication, unit and counit are untouched; Delta^J(x) =
    J^-1 Delta(x) J, the antipode conjugates by Q = m(S (x) id)(J), and
    an optional triangular structure transforms as J21^-1 R J.
    """
    if h.super:
        raise TwistError("twisting super Hopf algebras is not supported")
    if not _twist_identities_hold(h, j):
        raise TwistError("counit or cocycle identity fails")
    unit2 = unit_tensor2(h)
    if j_inv is None:
        j_inv = tensor2_inv(j, h)
    elif tensor2_mul(j, j_inv, h) != unit2 or tensor2_mul(j_inv, j, h) != unit2:
        raise TwistError("provided inverse is not a two-sided inverse")
    comult_new = []
    for i in range(h.dim):
        t = tensor2_mul(tensor2_mul(j_inv, h.comult_tensor(i), h), j, h)
        comult_new.append(tuple((a, b, c) for a, b, c in t.nonzeros))
    # Q = m(S (x) id)(J)
    q = [SC_ZERO] * h.dim
    s_cols = h.s_columns
    for i, k, c in j.nonzeros:
        for t_idx, sc in s_cols[i]:
            csc = c * sc
            for m_idx, w in h.mult[t_idx][k]:
                q[m_idx] = q[m_idx] + csc * w
    q_vec = Vec(q)
    q_inv = algebra_inverse(h, q_vec)
    cols = []
    for i in range(h.dim):
        img = h.mul_vec(h.mul_vec(q_inv, h.antipode.col(i)), q_vec)
        cols.append(list(img.entries))
    antipode_new = Mat(tuple(zip(*cols)))
    out = make_hopf(
        dim=h.dim,
        unit=h.unit,
        mult=h.mult,
        comult=tuple(comult_new),
        counit=h.counit,
        antipode=antipode_new,
        parity=h.parity,
        super=h.super,
    )
    r_new = None
    if r is not None:
        r_new = tensor2_mul(tensor2_mul(flip(j_inv), r, h), j, h)
    return out, r_new


def semisimple_triangular(
    g: FiniteGroup, a: AbelianSubgroup, gamma: Bicharacter, u: int
) -> tuple[HopfData, Tensor2]:
    """Twisted group algebra (k[G]^J, J21^-1 R_u J).

    gamma is the alternating classification datum on A; the twist is
    built from its canonical bimultiplicative half.
    """
    h = group_algebra(g)
    if not g.is_central(u) or g.table[u][u] != g.identity:
        raise SeptupleInvariantViolation("u must be central of order <= 2")
    ru = r_u(h, Vec.basis(h.dim, u))
    beta = half_bicharacter(gamma)
    j = build_bicharacter_twist(a, beta)
    j_inv = build_bicharacter_twist(a, _inverse_bicharacter(beta))
    return apply_twist(h, j, r=ru, j_inv=j_inv)


def _inverse_bicharacter(beta: Bicharacter) -> Bicharacter:
    rows = tuple(tuple(v.inv() for v in row) for row in beta.values)
    return Bicharacter(beta.factors, rows)


# ---------------------------------------------------------------------------
# septuples

@dataclass(frozen=True)
class Septuple:
    """Classification datum (G, W, A, Y, B, V, u).

    The projective-representation datum V is carried as an alternating
    bicharacter on A plus its declared dimension; Y is a tuple of
    vectors in W's space and B a symmetric matrix in Y coordinates.
    """

    group: FiniteGroup
    w: GroupRep
    a_elements: tuple[int, ...]
    y_basis: tuple[Vec, ...]
    b: Optional[Mat]
    v_beta: Bicharacter
    v_dim: int
    u: int


@dataclass(frozen=True)
class SeptupleReport:
    checks: tuple[tuple[str, bool, str], ...]

    @property
    def valid(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> list[str]:
        return [name for name, ok, _ in self.checks if not ok]

    def to_obj(self):
        return {
            "valid": self.valid,
            "checks": [
                {"name": n, "passed": ok, "detail": d} for n, ok, d in self.checks
            ],
        }


def validate_septuple(s: Septuple) -> SeptupleReport:
    """Check every septuple invariant; failures are report entries."""
    checks: list[tuple[str, bool, str]] = []
    g = s.group
    elems = tuple(sorted(set(s.a_elements)))

    closed = bool(elems) and g.identity in elems and all(
        g.table[x][y] in set(elems) for x in elems for y in elems
    )
    checks.append(("a_closed_contains_identity", closed, f"A = {list(elems)}"))
    abelian = closed and all(
        g.table[x][y] == g.table[y][x] for x in elems for y in elems
    )
    checks.append(("a_abelian", abelian, ""))

    sub: Optional[AbelianSubgroup] = None
    if abelian:
        sub = AbelianSubgroup(g, elems)

    # Y invariance under A
    y_ok = True
    y_detail = ""
    if s.y_basis:
        from .tensor import span_echelon, in_span

        ech, pivots = span_echelon(list(s.y_basis))
        for x in elems:
            for yv in s.y_basis:
                img = s.w.matrices[x].matvec(yv)
                if not in_span(ech, pivots, img):
                    y_ok = False
                    y_detail = f"rho({x}) moves Y out of itself"
                    break
            if not y_ok:
                break
    checks.append(("y_a_invariant", y_ok, y_detail))

    # B: symmetric, invertible (nondegenerate on Y), A-invariant in Y coords
    b_ok = True
    b_detail = ""
    k = len(s.y_basis)
    if k == 0:
        if s.b is not None and s.b.nrows:
            b_ok, b_detail = False, "B given without Y"
    elif s.b is None or s.b.nrows != k or s.b.ncols != k:
        b_ok, b_detail = False, "B shape does not match Y"
    elif s.b != s.b.transpose():
        b_ok, b_detail = False, "B is not symmetric"
    else:
        from .tensor import mat_rank

        if mat_rank(s.b) != k:
            b_ok, b_detail = False, "B is degenerate"
        elif not y_ok:
            b_ok, b_detail = False, "Y not A-invariant, restriction undefined"
        else:
            # restriction matrices of rho(a) to Y, in Y coordinates
            y_mat_t = Mat([yv.entries for yv in s.y_basis]).transpose()
            for x in elems:
                cols = []
                solvable = True
                for yv in s.y_basis:
                    img = s.w.matrices[x].matvec(yv)
                    sol = solve_linear(y_mat_t, img)
                    if sol is None:
                        solvable = False
                        break
                    cols.append(list(sol.entries))
                if not solvable:
                    b_ok, b_detail = False, f"could not restrict rho({x}) to Y"
                    break
                r_a = Mat(tuple(zip(*cols)))
                if r_a @ s.b @ r_a.transpose() != s.b:
                    b_ok, b_detail = False, f"B not invariant under rho({x})"
                    break
    checks.append(("b_symmetric_invariant_nondegenerate", b_ok, b_detail))

    # V: dimension and bicharacter shape
    n_a = len(elems) if closed else 0
    dim_ok = closed and s.v_dim * s.v_dim == n_a
    checks.append(
        ("v_dimension_squared_is_a_order", dim_ok, f"dim(V)^2 = {s.v_dim ** 2}, |A| = {n_a}")
    )
    beta_ok = True
    beta_detail = ""
    if sub is not None:
        if tuple(s.v_beta.factors) != tuple(sub.factors):
            beta_ok, beta_detail = False, (
                f"bicharacter factors {s.v_beta.factors} != subgroup factors {sub.factors}"
            )
        elif not s.v_beta.is_alternating():
            beta_ok, beta_detail = False, "bicharacter is not alternating"
        elif not s.v_beta.is_nondegenerate():
            beta_ok, beta_detail = False, "bicharacter is degenerate"
    checks.append(("v_bicharacter_alternating_nondegenerate", beta_ok, beta_detail))

    u_ok = 0 <= s.u < g.order and g.is_central(s.u) and g.table[s.u][s.u] == g.identity
    checks.append(("u_central_order_le_2", u_ok, f"u = {s.u}"))
    acts_ok = s.w.acts_by_minus_one(s.u) if u_ok else False
    checks.append(("u_acts_by_minus_one_on_w", acts_ok, ""))

    return SeptupleReport(tuple(checks))


def septuple_pipeline(s: Septuple) -> tuple[HopfData, Tensor2]:
    """Modified supergroup algebra twisted on the abelian subgroup.

    Realizes the Y = B = 0 stratum; anything with Y or B nonzero is
    rejected as UnsupportedStratum.
    """
    report = validate_septuple(s)
    if not report.valid:
        raise SeptupleInvariantViolation(
            "septuple invariants fail: " + ", ".join(report.failures())
        )
    if s.y_basis or (s.b is not None and s.b.nrows):
        raise UnsupportedStratum(
            "only the Y = B = 0 stratum is implemented; nonzero Y or B is out of range"
        )
    h, ru = modified_supergroup_algebra(s.group, s.w, s.u)
    sub = AbelianSubgroup(s.group, s.a_elements)
    beta = half_bicharacter(s.v_beta)
    j = build_bicharacter_twist(sub, beta)
    j_inv = build_bicharacter_twist(sub, _inverse_bicharacter(beta))
    factor = h.dim // s.group.order
    j_big = inflate_group_tensor(j, factor, h.dim)
    j_inv_big = inflate_group_tensor(j_inv, factor, h.dim)
    return apply_twist(h, j_big, r=ru, j_inv=j_inv_big)
