"""Exact dense linear algebra and tensor-square/cube bookkeeping.

Vectors, matrices and tensors hold CycScalar entries and are immutable
after construction.  Tensor products against a host algebra iterate
cached nonzero coordinate lists through the host's sparse structure
tensor, with Koszul signs when the host is a superalgebra.  Kernels and
ranks come from fraction-free (Bareiss) elimination.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable, Optional, Sequence

from .errors import NotInvertible, ShapeError
from .scalars import SC_ONE, SC_ZERO, CycScalar

if TYPE_CHECKING:  # pragma: no cover
    from .hopf import HopfData


class Vec:
    """Element of the host algebra in its fixed basis."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[CycScalar]):
        self.entries = tuple(entries)

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def zero(cls, dim: int) -> "Vec":
        return cls((SC_ZERO,) * dim)

    @classmethod
    def basis(cls, dim: int, i: int) -> "Vec":
        return cls(tuple(SC_ONE if j == i else SC_ZERO for j in range(dim)))

    def nonzeros(self):
        return tuple((i, c) for i, c in enumerate(self.entries) if not c.is_zero())

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.entries)

    def __add__(self, other: "Vec") -> "Vec":
        if self.dim != other.dim:
            raise ShapeError("vector dimension mismatch")
        return Vec(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: "Vec") -> "Vec":
        if self.dim != other.dim:
            raise ShapeError("vector dimension mismatch")
        return Vec(a - b for a, b in zip(self.entries, other.entries))

    def __neg__(self) -> "Vec":
        return Vec(-a for a in self.entries)

    def scale(self, c: CycScalar) -> "Vec":
        return Vec(c * a for a in self.entries)

    def __eq__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        return self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return f"Vec({list(self.entries)!r})"


class Mat:
    """Dense matrix over CycScalar; rows are tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[CycScalar]]):
        self.rows = tuple(tuple(r) for r in rows)
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise ShapeError("ragged matrix rows")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(
            tuple(tuple(SC_ONE if i == j else SC_ZERO for j in range(n)) for i in range(n))
        )

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Mat":
        return cls(((SC_ZERO,) * ncols,) * nrows)

    def transpose(self) -> "Mat":
        return Mat(zip(*self.rows)) if self.rows else Mat(())

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ShapeError("matrix shape mismatch")
        cols = other.transpose().rows
        out = []
        for row in self.rows:
            nz = [(j, c) for j, c in enumerate(row) if not c.is_zero()]
            out_row = []
            for col in cols:
                acc = SC_ZERO
                for j, c in nz:
                    acc = acc + c * col[j]
                out_row.append(acc)
            out.append(tuple(out_row))
        return Mat(out)

    def matvec(self, v: Vec) -> Vec:
        if self.ncols != v.dim:
            raise ShapeError("matrix/vector shape mismatch")
        out = [SC_ZERO] * self.nrows
        for j, c in v.nonzeros():
            for i in range(self.nrows):
                e = self.rows[i][j]
                if not e.is_zero():
                    out[i] = out[i] + e * c
        return Vec(out)

    def col(self, j: int) -> Vec:
        return Vec(r[j] for r in self.rows)

    def __pow__(self, k: int) -> "Mat":
        if self.nrows != self.ncols:
            raise ShapeError("power of non-square matrix")
        result = Mat.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None

    def __repr__(self):
        return f"Mat({[list(r) for r in self.rows]!r})"


# ---------------------------------------------------------------------------
# elimination

def _bareiss_echelon(rows: Sequence[Sequence[CycScalar]]):
    """Fraction-free row echelon; returns (matrix, pivot column list)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    nr, nc = len(m), len(m[0])
    prev = SC_ONE
    pivots = []
    r = 0
    for c in range(nc):
        p = None
        for i in range(r, nr):
            if not m[i][c].is_zero():
                p = i
                break
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        pivot = m[r][c]
        for i in range(r + 1, nr):
            head = m[i][c]
            if head.is_zero():
                for j in range(c + 1, nc):
                    if not m[i][j].is_zero():
                        m[i][j] = (m[i][j] * pivot) / prev
            else:
                for j in range(c + 1, nc):
                    m[i][j] = (m[i][j] * pivot - head * m[r][j]) / prev
                m[i][c] = SC_ZERO
        prev = pivot
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return m, pivots


def mat_rank(m: Mat) -> int:
    _, pivots = _bareiss_echelon(m.rows)
    return len(pivots)


def mat_kernel(m: Mat) -> list[Vec]:
    """Exact null-space basis via fraction-free elimination.

    One basis vector per free column, with that coordinate set to 1;
    empty list means the matrix is injective.
    """
    ech, pivots = _bareiss_echelon(m.rows)
    nc = m.ncols
    pivot_set = set(pivots)
    free_cols = [c for c in range(nc) if c not in pivot_set]
    basis = []
    for f in free_cols:
        x = [SC_ZERO] * nc
        x[f] = SC_ONE
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            acc = SC_ZERO
            for j in range(c + 1, nc):
                if not x[j].is_zero() and not ech[r][j].is_zero():
                    acc = acc + ech[r][j] * x[j]
            if not acc.is_zero():
                x[c] = -acc / ech[r][c]
        basis.append(Vec(x))
    return basis


def mat_inv(m: Mat) -> Mat:
    """Exact inverse by Gauss-Jordan; raises NotInvertible when singular."""
    n = m.nrows
    if n != m.ncols:
        raise ShapeError("inverse of non-square matrix")
    aug = [list(m.rows[i]) + [SC_ONE if j == i else SC_ZERO for j in range(n)] for i in range(n)]
    for c in range(n):
        p = None
        for i in range(c, n):
            if not aug[i][c].is_zero():
                p = i
                break
        if p is None:
            raise NotInvertible("singular matrix")
        aug[c], aug[p] = aug[p], aug[c]
        inv_p = aug[c][c].inv()
        aug[c] = [e * inv_p for e in aug[c]]
        for i in range(n):
            if i != c and not aug[i][c].is_zero():
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return Mat(tuple(tuple(row[n:]) for row in aug))


def solve_linear(m: Mat, rhs: Vec) -> Optional[Vec]:
    """One exact solution of m @ x = rhs, or None when inconsistent."""
    if m.nrows != rhs.dim:
        raise ShapeError("matrix/vector shape mismatch")
    nc = m.ncols
    aug = Mat(tuple(tuple(m.rows[i]) + (rhs.entries[i],) for i in range(m.nrows)))
    ech, pivots = _bareiss_echelon(aug.rows)
    if pivots and pivots[-1] == nc:
        return None  # pivot in the rhs column
    x = [SC_ZERO] * nc
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        acc = ech[r][nc]
        for j in range(c + 1, nc):
            if not x[j].is_zero() and not ech[r][j].is_zero():
                acc = acc - ech[r][j] * x[j]
        x[c] = acc / ech[r][c]
    # rows below the last pivot must be consistent (all-zero coefficients)
    for r in range(len(pivots), m.nrows):
        if not ech[r][nc].is_zero():
            return None
    return Vec(x)


def in_span(basis_echelon, pivots, v: Vec) -> bool:
    """Membership test against a precomputed echelon basis (rows)."""
    x = list(v.entries)
    nc = len(x)
    for r, c in enumerate(pivots):
        if x[c].is_zero():
            continue
        f = x[c] / basis_echelon[r][c]
        for j in range(c, nc):
            e = basis_echelon[r][j]
            if not e.is_zero():
                x[j] = x[j] - f * e
    return all(e.is_zero() for e in x)


def span_echelon(vectors: Sequence[Vec]):
    """Echelonized spanning set for membership tests: (rows, pivots)."""
    if not vectors:
        return [], []
    ech, pivots = _bareiss_echelon([v.entries for v in vectors])
    return ech[: len(pivots)], pivots


# ---------------------------------------------------------------------------
# tensor square / cube

class Tensor2:
    """Element of H (x) H, stored dense with a cached nonzero list."""

    __slots__ = ("dim", "rows", "_nz")

    def __init__(self, rows: Iterable[Iterable[CycScalar]]):
        self.rows = tuple(tuple(r) for r in rows)
        self.dim = len(self.rows)
        if any(len(r) != self.dim for r in self.rows):
            raise ShapeError("tensor square must be a square array")
        self._nz = None

    @property
    def nonzeros(self):
        if self._nz is None:
            self._nz = tuple(
                (i, j, c)
                for i, row in enumerate(self.rows)
                for j, c in enumerate(row)
                if not c.is_zero()
            )
        return self._nz

    @classmethod
    def from_dict(cls, dim: int, entries: dict) -> "Tensor2":
        rows = [[SC_ZERO] * dim for _ in range(dim)]
        for (i, j), c in entries.items():
            rows[i][j] = c
        return cls(rows)

    @classmethod
    def outer(cls, x: Vec, y: Vec) -> "Tensor2":
        if x.dim != y.dim:
            raise ShapeError("outer product of mismatched vectors")
        ynz = y.nonzeros()
        rows = []
        for a in x.entries:
            if a.is_zero():
                rows.append((SC_ZERO,) * x.dim)
            else:
                row = [SC_ZERO] * x.dim
                for j, b in ynz:
                    row[j] = a * b
                rows.append(tuple(row))
        return cls(rows)

    def get(self, i: int, j: int) -> CycScalar:
        return self.rows[i][j]

    def __add__(self, other: "Tensor2") -> "Tensor2":
        if self.dim != other.dim:
            raise ShapeError("tensor dimension mismatch")
        return Tensor2(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)
        )

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        if self.dim != other.dim:
            raise ShapeError("tensor dimension mismatch")
        return Tensor2(
            tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)
        )

    def __neg__(self) -> "Tensor2":
        return Tensor2(tuple(-a for a in r) for r in self.rows)

    def scale(self, c: CycScalar) -> "Tensor2":
        return Tensor2(tuple(c * a for a in r) for r in self.rows)

    def coefficient_matrix(self) -> Mat:
        return Mat(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Tensor2):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None

    def __repr__(self):
        return f"Tensor2(dim={self.dim}, nnz={len(self.nonzeros)})"


class Tensor3:
    """Element of H (x) H (x) H; verification workspace only."""

    __slots__ = ("dim", "entries", "_nz")

    def __init__(self, entries):
        self.entries = tuple(tuple(tuple(r) for r in plane) for plane in entries)
        self.dim = len(self.entries)
        for plane in self.entries:
            if len(plane) != self.dim or any(len(r) != self.dim for r in plane):
                raise ShapeError("tensor cube must be a cubic array")
        self._nz = None

    @property
    def nonzeros(self):
        if self._nz is None:
            self._nz = tuple(
                (i, j, k, c)
                for i, plane in enumerate(self.entries)
                for j, row in enumerate(plane)
                for k, c in enumerate(row)
                if not c.is_zero()
            )
        return self._nz

    @classmethod
    def from_dict(cls, dim: int, entries: dict) -> "Tensor3":
        cube = [[[SC_ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), c in entries.items():
            cube[i][j][k] = c
        return cls(cube)

    def __eq__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        return self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return f"Tensor3(dim={self.dim}, nnz={len(self.nonzeros)})"


def _acc(acc: dict, key, val: CycScalar):
    cur = acc.get(key)
    acc[key] = val if cur is None else cur + val


def tensor2_mul(a: Tensor2, b: Tensor2, host: "HopfData") -> Tensor2:
    """Product in the algebra H (x) H.

    Componentwise through the host structure tensor; when the host is
    super the Koszul sign (-1)**(|a2||b1|) applies per term.
    """
    if a.dim != b.dim or a.dim != host.dim:
        raise ShapeError("tensor/host dimension mismatch")
    mult = host.mult
    parity = host.parity
    signed = host.super
    acc: dict = {}
    for i, j, ca in a.nonzeros:
        pj = parity[j]
        for p, q, cb in b.nonzeros:
            coef = ca * cb
            if signed and pj and parity[p]:
                coef = -coef
            for k, c1 in mult[i][p]:
                left = coef * c1
                for l, c2 in mult[j][q]:
                    _acc(acc, (k, l), left * c2)
    return Tensor2.from_dict(a.dim, {k: v for k, v in acc.items() if not v.is_zero()})


def tensor3_mul(a: Tensor3, b: Tensor3, host: "HopfData") -> Tensor3:
    if a.dim != b.dim or a.dim != host.dim:
        raise ShapeError("tensor/host dimension mismatch")
    mult = host.mult
    parity = host.parity
    signed = host.super
    acc: dict = {}
    for i1, i2, i3, ca in a.nonzeros:
        p2, p3 = parity[i2], parity[i3]
        for j1, j2, j3, cb in b.nonzeros:
            coef = ca * cb
            if signed:
                q1, q2 = parity[j1], parity[j2]
                if (p2 * q1 + p3 * (q1 + q2)) % 2:
                    coef = -coef
            for k1, c1 in mult[i1][j1]:
                left1 = coef * c1
                for k2, c2 in mult[i2][j2]:
                    left2 = left1 * c2
                    for k3, c3 in mult[i3][j3]:
                        _acc(acc, (k1, k2, k3), left2 * c3)
    return Tensor3.from_dict(a.dim, {k: v for k, v in acc.items() if not v.is_zero()})


def flip(a: Tensor2, host: Optional["HopfData"] = None) -> Tensor2:
    """Swap the tensor factors; Koszul sign when the host is super."""
    signed = host is not None and host.super
    parity = host.parity if signed else None
    out = {}
    for i, j, c in a.nonzeros:
        if signed and parity[i] and parity[j]:
            c = -c
        out[(j, i)] = c
    return Tensor2.from_dict(a.dim, out)


def unit_tensor2(host: "HopfData") -> Tensor2:
    return Tensor2.outer(host.unit, host.unit)


def unit_tensor3(host: "HopfData") -> Tensor3:
    u = host.unit
    acc = {}
    for i, a in u.nonzeros():
        for j, b in u.nonzeros():
            ab = a * b
            for k, c in u.nonzeros():
                acc[(i, j, k)] = ab * c
    return Tensor3.from_dict(host.dim, acc)


def embed13_23_12(a: Tensor2, pattern: str, host: "HopfData") -> Tensor3:
    """Canonical image of a tensor square inside H (x) H (x) H.

    Patterns: "12", "13", "23" insert the unit into the remaining slot;
    "delta_id" applies comultiplication to the first factor, "id_delta"
    to the second.
    """
    if a.dim != host.dim:
        raise ShapeError("tensor/host dimension mismatch")
    acc: dict = {}
    if pattern in ("12", "13", "23"):
        unit_nz = host.unit.nonzeros()
        for i, j, c in a.nonzeros:
            for k, u in unit_nz:
                cu = c * u
                if pattern == "12":
                    _acc(acc, (i, j, k), cu)
                elif pattern == "13":
                    _acc(acc, (i, k, j), cu)
                else:
                    _acc(acc, (k, i, j), cu)
    elif pattern == "delta_id":
        comult = host.comult
        for i, j, c in a.nonzeros:
            for p, q, w in comult[i]:
                _acc(acc, (p, q, j), c * w)
    elif pattern == "id_delta":
        comult = host.comult
        for i, j, c in a.nonzeros:
            for p, q, w in comult[j]:
                _acc(acc, (i, p, q), c * w)
    else:
        raise ShapeError(f"unknown slot pattern {pattern!r}")
    return Tensor3.from_dict(a.dim, {k: v for k, v in acc.items() if not v.is_zero()})


def tensor2_inv(a: Tensor2, host: "HopfData") -> Tensor2:
    """Two-sided inverse of a in the algebra H (x) H.

    Solves the left-multiplication system restricted to the coordinate
    subalgebra generated by the support of a (always valid: a unital
    subalgebra of a finite-dimensional algebra contains the inverse of
    any of its elements that are invertible in the big algebra).
    """
    if a.dim != host.dim:
        raise ShapeError("tensor/host dimension mismatch")
    mult = host.mult
    # coordinate support closure under multiplication
    supp = {i for i, _, _ in a.nonzeros} | {j for _, j, _ in a.nonzeros}
    supp |= {i for i, _ in host.unit.nonzeros()}
    while True:
        new = set()
        for i in supp:
            for j in supp:
                for k, _ in mult[i][j]:
                    if k not in supp:
                        new.add(k)
        if not new:
            break
        supp |= new
    basis = sorted(supp)
    pairs = [(p, q) for p in basis for q in basis]
    pair_index = {pq: t for t, pq in enumerate(pairs)}
    parity = host.parity
    signed = host.super
    # left multiplication by a on span{e_p (x) e_q : p, q in supp}
    rows = [[SC_ZERO] * len(pairs) for _ in range(len(pairs))]
    for t, (p, q) in enumerate(pairs):
        for i, j, c in a.nonzeros:
            coef = c
            if signed and parity[j] and parity[p]:
                coef = -coef
            for k, c1 in mult[i][p]:
                left = coef * c1
                for l, c2 in mult[j][q]:
                    rows[pair_index[(k, l)]][t] = rows[pair_index[(k, l)]][t] + left * c2
    unit2 = unit_tensor2(host)
    rhs = Vec([unit2.get(p, q) for (p, q) in pairs])
    sol = solve_linear(Mat(rows), rhs)
    if sol is None:
        raise NotInvertible("tensor has no inverse in H(x)H")
    out = {}
    for t, (p, q) in enumerate(pairs):
        c = sol.entries[t]
        if not c.is_zero():
            out[(p, q)] = c
    inv = Tensor2.from_dict(a.dim, out)
    # certify two-sidedness
    if tensor2_mul(a, inv, host) != unit2 or tensor2_mul(inv, a, host) != unit2:
        raise NotInvertible("tensor has no two-sided inverse in H(x)H")
    return inv
