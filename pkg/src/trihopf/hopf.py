"""The central (super) Hopf algebra datatype and its verifiers.

HopfData records a finite-dimensional algebra-and-coalgebra by exact
structure constants: sparse multiplication tensor, per-basis-element
comultiplication, counit covector, antipode matrix, and a Z2 parity
grading for the super case.  verify_hopf checks every axiom
exhaustively over basis tuples and reports the first failing witness
per axiom instead of raising.

The radical is computed from the kernel of the regular trace form
(valid in characteristic 0); the Chevalley check tests that the radical
is a Hopf ideal by exact linear algebra in an adapted basis.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property

from .errors import NotInvertible, OrderNotFound, ShapeError
from .scalars import SC_ONE, SC_ZERO, CycScalar
from .tensor import (
    Mat,
    Tensor2,
    Vec,
    flip,
    in_span,
    mat_inv,
    mat_kernel,
    solve_linear,
    span_echelon,
)

SparseRow = tuple[tuple[int, CycScalar], ...]


@dataclass(frozen=True, eq=False)
class HopfData:
    """A (super) Hopf algebra given by structure constants.

    mult[i][j] lists the nonzero (k, c) with e_i * e_j = sum c * e_k;
    comult[i] lists the nonzero (j, k, c) with Delta(e_i) = sum c *
    e_j (x) e_k; the antipode matrix acts on coordinate columns,
    S(e_i) = column i.
    """

    dim: int
    unit: Vec
    mult: tuple[tuple[SparseRow, ...], ...]
    comult: tuple[tuple[tuple[int, int, CycScalar], ...], ...]
    counit: tuple[CycScalar, ...]
    antipode: Mat
    parity: tuple[int, ...]
    super: bool = False

    def validate(self) -> "HopfData":
        """Structural well-formedness; axiom checking lives in verify_hopf."""
        d = self.dim
        if d < 1:
            raise ShapeError("dimension must be positive")
        if self.unit.dim != d or len(self.counit) != d or len(self.parity) != d:
            raise ShapeError("unit/counit/parity length mismatch")
        if len(self.mult) != d or any(len(row) != d for row in self.mult):
            raise ShapeError("multiplication tensor shape mismatch")
        if len(self.comult) != d:
            raise ShapeError("comultiplication shape mismatch")
        if self.antipode.nrows != d or self.antipode.ncols != d:
            raise ShapeError("antipode shape mismatch")
        if not self.super and any(self.parity):
            raise ShapeError("nonzero parity on a non-super algebra")
        if any(p not in (0, 1) for p in self.parity):
            raise ShapeError("parity entries must be 0 or 1")
        par = self.parity
        for i in range(d):
            for j in range(d):
                for k, c in self.mult[i][j]:
                    if not c.is_zero() and (par[i] + par[j]) % 2 != par[k]:
                        raise ShapeError(f"product parity violation at ({i},{j},{k})")
            for j, k, c in self.comult[i]:
                if not c.is_zero() and (par[j] + par[k]) % 2 != par[i]:
                    raise ShapeError(f"coproduct parity violation at ({i},{j},{k})")
            if par[i] and not self.unit.entries[i].is_zero():
                raise ShapeError("unit supported on odd basis elements")
        if self.counit_vec(self.unit) != SC_ONE:
            raise ShapeError("counit(unit) != 1")
        if self.comult_vec(self.unit) != Tensor2.outer(self.unit, self.unit):
            raise ShapeError("Delta(unit) != unit (x) unit")
        return self

    def replace(self, **changes) -> "HopfData":
        return replace(self, **changes)

    # --- basic linear maps -------------------------------------------------

    @cached_property
    def s_columns(self) -> tuple[SparseRow, ...]:
        cols = []
        for i in range(self.dim):
            cols.append(
                tuple(
                    (j, self.antipode.rows[j][i])
                    for j in range(self.dim)
                    if not self.antipode.rows[j][i].is_zero()
                )
            )
        return tuple(cols)

    def mul_basis(self, i: int, j: int) -> SparseRow:
        return self.mult[i][j]

    def mul_vec(self, x: Vec, y: Vec) -> Vec:
        out = [SC_ZERO] * self.dim
        for i, a in x.nonzeros():
            for j, b in y.nonzeros():
                ab = a * b
                for k, c in self.mult[i][j]:
                    out[k] = out[k] + ab * c
        return Vec(out)

    def counit_vec(self, x: Vec) -> CycScalar:
        acc = SC_ZERO
        for i, a in x.nonzeros():
            acc = acc + a * self.counit[i]
        return acc

    def antipode_vec(self, x: Vec) -> Vec:
        return self.antipode.matvec(x)

    def comult_tensor(self, i: int) -> Tensor2:
        return Tensor2.from_dict(self.dim, {(j, k): c for j, k, c in self.comult[i]})

    def comult_vec(self, x: Vec) -> Tensor2:
        acc: dict = {}
        for i, a in x.nonzeros():
            for j, k, c in self.comult[i]:
                key = (j, k)
                cur = acc.get(key)
                v = a * c
                acc[key] = v if cur is None else cur + v
        return Tensor2.from_dict(self.dim, {k: v for k, v in acc.items() if not v.is_zero()})

    def basis_vec(self, i: int) -> Vec:
        return Vec.basis(self.dim, i)

    def same_structure(self, other: "HopfData") -> bool:
        """Exact structure-constant equality in the shared fixed basis."""
        if (self.dim, self.super, self.parity) != (other.dim, other.super, other.parity):
            return False
        if self.unit != other.unit or self.antipode != other.antipode:
            return False
        if list(self.counit) != list(other.counit):
            return False
        for i in range(self.dim):
            for j in range(self.dim):
                if dict(self.mult[i][j]) != dict(other.mult[i][j]):
                    return False
            if {(j, k): c for j, k, c in self.comult[i]} != {
                (j, k): c for j, k, c in other.comult[i]
            }:
                return False
        return True


def make_hopf(dim, unit, mult, comult, counit, antipode, parity=None, super=False) -> HopfData:
    """Normalize raw structure constants into a validated HopfData."""
    parity = tuple(parity) if parity is not None else (0,) * dim
    mult_norm = tuple(
        tuple(tuple((k, c) for k, c in row if not c.is_zero()) for row in plane)
        for plane in mult
    )
    comult_norm = tuple(
        tuple((j, k, c) for j, k, c in entry if not c.is_zero()) for entry in comult
    )
    h = HopfData(
        dim=dim,
        unit=unit if isinstance(unit, Vec) else Vec(unit),
        mult=mult_norm,
        comult=comult_norm,
        counit=tuple(counit),
        antipode=antipode if isinstance(antipode, Mat) else Mat(antipode),
        parity=parity,
        super=super,
    )
    return h.validate()


# ---------------------------------------------------------------------------
# axiom verification

@dataclass(frozen=True)
class AxiomReport:
    associativity: bool
    unit: bool
    coassociativity: bool
    counit: bool
    bialgebra: bool
    antipode: bool
    witnesses: dict

    @property
    def ok(self) -> bool:
        return (
            self.associativity
            and self.unit
            and self.coassociativity
            and self.counit
            and self.bialgebra
            and self.antipode
        )

    def to_obj(self):
        return {
            "associativity": self.associativity,
            "unit": self.unit,
            "coassociativity": self.coassociativity,
            "counit": self.counit,
            "bialgebra": self.bialgebra,
            "antipode": self.antipode,
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
        }


def _sparse_product(mult, i: int, j: int, acc: dict, scale: CycScalar):
    for k, c in mult[i][j]:
        cur = acc.get(k)
        v = scale * c
        acc[k] = v if cur is None else cur + v


def _clean(acc: dict) -> dict:
    return {k: v for k, v in acc.items() if not v.is_zero()}


def verify_hopf(h: HopfData) -> AxiomReport:
    """Exhaustive axiom check over all basis tuples.

    Associativity runs over d**3 triples, the bialgebra compatibility
    over d**2 pairs (with the Koszul sign when super), coassociativity,
    counit and the antipode identity over d indices.  Failures are
    reported with the lowest-index witness, never raised.
    """
    d = h.dim
    mult = h.mult
    comult = h.comult
    parity = h.parity
    signed = h.super
    witnesses: dict = {}

    assoc = True
    for i in range(d):
        for j in range(d):
            row_ij = mult[i][j]
            for k in range(d):
                lhs: dict = {}
                for p, c in row_ij:
                    _sparse_product(mult, p, k, lhs, c)
                rhs: dict = {}
                for q, c in mult[j][k]:
                    _sparse_product(mult, i, q, rhs, c)
                if _clean(lhs) != _clean(rhs):
                    witnesses["associativity"] = (i, j, k)
                    assoc = False
                    break
            if not assoc:
                break
        if not assoc:
            break

    unit_ok = True
    for i in range(d):
        e = h.basis_vec(i)
        if h.mul_vec(h.unit, e) != e or h.mul_vec(e, h.unit) != e:
            witnesses["unit"] = (i,)
            unit_ok = False
            break

    coassoc = True
    for i in range(d):
        lhs3: dict = {}
        rhs3: dict = {}
        for j, k, c in comult[i]:
            for p, q, w in comult[j]:
                key = (p, q, k)
                v = c * w
                cur = lhs3.get(key)
                lhs3[key] = v if cur is None else cur + v
            for p, q, w in comult[k]:
                key = (j, p, q)
                v = c * w
                cur = rhs3.get(key)
                rhs3[key] = v if cur is None else cur + v
        if _clean(lhs3) != _clean(rhs3):
            witnesses["coassociativity"] = (i,)
            coassoc = False
            break

    counit_ok = True
    for i in range(d):
        left = [SC_ZERO] * d
        right = [SC_ZERO] * d
        for j, k, c in comult[i]:
            left[k] = left[k] + c * h.counit[j]
            right[j] = right[j] + c * h.counit[k]
        e = h.basis_vec(i)
        if Vec(left) != e or Vec(right) != e:
            witnesses["counit"] = (i,)
            counit_ok = False
            break

    bialg = True
    for i in range(d):
        for j in range(d):
            # counit multiplicativity
            eps = SC_ZERO
            for k, c in mult[i][j]:
                eps = eps + c * h.counit[k]
            if eps != h.counit[i] * h.counit[j]:
                witnesses["bialgebra"] = (i, j)
                bialg = False
                break
            # Delta(e_i e_j) = Delta(e_i) * Delta(e_j), Koszul-signed
            lhs2: dict = {}
            for k, c in mult[i][j]:
                for p, q, w in comult[k]:
                    key = (p, q)
                    v = c * w
                    cur = lhs2.get(key)
                    lhs2[key] = v if cur is None else cur + v
            rhs2: dict = {}
            for p, q, ca in comult[i]:
                pq = parity[q]
                for r, s, cb in comult[j]:
                    coef = ca * cb
                    if signed and pq and parity[r]:
                        coef = -coef
                    for k1, c1 in mult[p][r]:
                        left = coef * c1
                        for k2, c2 in mult[q][s]:
                            key = (k1, k2)
                            v = left * c2
                            cur = rhs2.get(key)
                            rhs2[key] = v if cur is None else cur + v
            if _clean(lhs2) != _clean(rhs2):
                witnesses["bialgebra"] = (i, j)
                bialg = False
                break
        if not bialg:
            break

    antipode_ok = True
    s_cols = h.s_columns
    for i in range(d):
        target = h.unit.scale(h.counit[i])
        left_acc = [SC_ZERO] * d
        right_acc = [SC_ZERO] * d
        for j, k, c in comult[i]:
            for t, sc in s_cols[j]:
                csc = c * sc
                for m, w in mult[t][k]:
                    left_acc[m] = left_acc[m] + csc * w
            for t, sc in s_cols[k]:
                csc = c * sc
                for m, w in mult[j][t]:
                    right_acc[m] = right_acc[m] + csc * w
        if Vec(left_acc) != target or Vec(right_acc) != target:
            witnesses["antipode"] = (i,)
            antipode_ok = False
            break

    return AxiomReport(
        associativity=assoc,
        unit=unit_ok,
        coassociativity=coassoc,
        counit=counit_ok,
        bialgebra=bialg,
        antipode=antipode_ok,
        witnesses=witnesses,
    )


def is_cocommutative(h: HopfData) -> bool:
    """flip(Delta) == Delta on every basis element (signed flip if super)."""
    for i in range(h.dim):
        t = h.comult_tensor(i)
        if flip(t, h) != t:
            return False
    return True


# ---------------------------------------------------------------------------
# duality

def dual_hopf(h: HopfData) -> HopfData:
    """The dual Hopf algebra on the dual basis.

    Multiplication is the transpose of the comultiplication and vice
    versa; the antipode transposes.  In the super case the evaluation
    pairing <f (x) g, x (x) y> = (-1)**(|g||x|) f(x) g(y) inserts the
    sign (-1)**(|i||j|) on both transposed structures.
    """
    d = h.dim
    par = h.parity
    mult_d = [[[] for _ in range(d)] for _ in range(d)]
    for t in range(d):
        for a, b, c in h.comult[t]:
            coef = -c if (h.super and par[a] and par[b]) else c
            mult_d[a][b].append((t, coef))
    comult_d = [[] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            for t, c in h.mult[i][j]:
                coef = -c if (h.super and par[i] and par[j]) else c
                comult_d[t].append((i, j, coef))
    return make_hopf(
        dim=d,
        unit=Vec(h.counit),
        mult=tuple(tuple(tuple(cell) for cell in row) for row in mult_d),
        comult=tuple(tuple(entry) for entry in comult_d),
        counit=h.unit.entries,
        antipode=h.antipode.transpose(),
        parity=par,
        super=h.super,
    )


# ---------------------------------------------------------------------------
# radical, semisimplicity, Chevalley property

def trace_form(h: HopfData) -> Mat:
    """T[i][j] = trace of left multiplication by e_i * e_j."""
    d = h.dim
    tr = [SC_ZERO] * d  # tr[k] = trace(L_{e_k})
    for k in range(d):
        acc = SC_ZERO
        for j in range(d):
            for t, c in h.mult[k][j]:
                if t == j:
                    acc = acc + c
        tr[k] = acc
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            acc = SC_ZERO
            for k, c in h.mult[i][j]:
                acc = acc + c * tr[k]
            row.append(acc)
        rows.append(tuple(row))
    return Mat(rows)


def jacobson_radical(h: HopfData) -> list[Vec]:
    """Exact radical basis: kernel of the regular trace form (char 0)."""
    return mat_kernel(trace_form(h))


def is_semisimple(h: HopfData) -> bool:
    return not jacobson_radical(h)


def _adapted_basis(h: HopfData, rad: list[Vec]) -> tuple[Mat, Mat, int]:
    """Invertible P whose first columns span the radical; returns (P, P^-1, rad_dim)."""
    d = h.dim
    cols = [list(v.entries) for v in rad]
    _, pivots = span_echelon(rad)
    pivot_set = set(pivots)
    for i in range(d):
        if i not in pivot_set:
            cols.append([SC_ONE if j == i else SC_ZERO for j in range(d)])
    p = Mat(tuple(zip(*cols)))
    return p, mat_inv(p), len(rad)


def subspace_is_hopf_ideal(h: HopfData, basis: list[Vec]) -> bool:
    """Counit vanishes on the span, S preserves it, and the coproduct
    lands in span (x) H + H (x) span.

    The membership test works in a basis adapted to the subspace, where
    span (x) H + H (x) span is a coordinate block.
    """
    if not basis:
        return True
    for r in basis:
        if not h.counit_vec(r).is_zero():
            return False
    ech, pivots = span_echelon(basis)
    for r in basis:
        if not in_span(ech, pivots, h.antipode_vec(r)):
            return False
    _, p_inv, k = _adapted_basis(h, basis)
    for r in basis:
        t = h.comult_vec(r)
        # coordinates of Delta(r) in the adapted basis: P^-1 T (P^-1)^T
        m = p_inv @ t.coefficient_matrix() @ p_inv.transpose()
        for a in range(k, h.dim):
            for b in range(k, h.dim):
                if not m.rows[a][b].is_zero():
                    return False
    return True


def is_chevalley(h: HopfData) -> bool:
    """True iff the radical is a Hopf ideal."""
    return subspace_is_hopf_ideal(h, jacobson_radical(h))


def antipode_order(h: HopfData, bound: int = 16) -> int:
    """Least k >= 1 with S**k = id; OrderNotFound past the bound."""
    ident = Mat.identity(h.dim)
    power = h.antipode
    for k in range(1, bound + 1):
        if power == ident:
            return k
        power = power @ h.antipode
    raise OrderNotFound(f"antipode order exceeds bound {bound}")


def algebra_inverse(h: HopfData, x: Vec) -> Vec:
    """Two-sided inverse of an element of H, by exact linear solve."""
    d = h.dim
    rows = [[SC_ZERO] * d for _ in range(d)]
    for s, a in x.nonzeros():
        for t in range(d):
            for k, c in h.mult[s][t]:
                rows[k][t] = rows[k][t] + a * c
    sol = solve_linear(Mat(rows), h.unit)
    if sol is None:
        raise NotInvertible("element has no inverse")
    if h.mul_vec(sol, x) != h.unit or h.mul_vec(x, sol) != h.unit:
        raise NotInvertible("element has no two-sided inverse")
    return sol
