"""Cayley-table groups, matrix representations, characters, bicharacters.

Groups are small (catalog order <= 16) and fully validated at
construction: permutation rows/columns, associativity on all triples,
identity behavior.  Abelian structure is carried explicitly as a list
of cyclic factor orders plus an exponent map, which feeds the character
and idempotent machinery.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product

from .errors import BicharacterError, GroupError, NotAbelian, ShapeError
from .scalars import SC_ONE, SC_ZERO, CycScalar, root_of_unity
from .tensor import Mat, Vec


class FiniteGroup:
    """A finite group as a Cayley table on indices 0..order-1."""

    def __init__(self, table, identity, invariant_factors=None, iso_map=None, name=""):
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        self.identity = identity
        self.name = name
        self._validate()
        self.invariant_factors = tuple(invariant_factors) if invariant_factors else None
        self.iso_map = tuple(tuple(e) for e in iso_map) if iso_map else None
        if self.invariant_factors is not None:
            self._validate_factors()

    def _validate(self):
        n = self.order
        if n < 1:
            raise GroupError("group must be nonempty")
        ref = set(range(n))
        for row in self.table:
            if len(row) != n or set(row) != ref:
                raise GroupError("Cayley table rows must be permutations")
        for j in range(n):
            if {self.table[i][j] for i in range(n)} != ref:
                raise GroupError("Cayley table columns must be permutations")
        e = self.identity
        if not (0 <= e < n):
            raise GroupError("identity index out of range")
        for i in range(n):
            if self.table[e][i] != i or self.table[i][e] != i:
                raise GroupError("identity does not behave as a unit")
        for a in range(n):
            for b in range(n):
                ab = self.table[a][b]
                for c in range(n):
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise GroupError(f"associativity fails at ({a},{b},{c})")

    def _validate_factors(self):
        factors = self.invariant_factors
        if self.iso_map is None or len(self.iso_map) != self.order:
            raise GroupError("invariant factors require a full exponent map")
        prod_order = 1
        for f in factors:
            prod_order *= f
        if prod_order != self.order:
            raise GroupError("factor orders do not multiply to the group order")
        seen = set()
        for idx, exps in enumerate(self.iso_map):
            if len(exps) != len(factors) or any(
                not (0 <= e < f) for e, f in zip(exps, factors)
            ):
                raise GroupError("exponent tuple out of range")
            if exps in seen:
                raise GroupError("exponent map is not injective")
            seen.add(exps)
        lookup = {exps: idx for idx, exps in enumerate(self.iso_map)}
        for a in range(self.order):
            for b in range(self.order):
                target = tuple(
                    (x + y) % f
                    for x, y, f in zip(self.iso_map[a], self.iso_map[b], factors)
                )
                if lookup[target] != self.table[a][b]:
                    raise GroupError("exponent map is not a homomorphism")

    # --- basic queries ---------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverse(self) -> tuple[int, ...]:
        inv = [0] * self.order
        for a in range(self.order):
            for b in range(self.order):
                if self.table[a][b] == self.identity:
                    inv[a] = b
                    break
        return tuple(inv)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(self.order))

    def is_central(self, a: int) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for b in range(self.order))

    def center(self) -> tuple[int, ...]:
        return tuple(a for a in range(self.order) if self.is_central(a))

    def central_involutions(self, include_identity: bool = True) -> tuple[int, ...]:
        """Central elements u with u*u = identity (order <= 2)."""
        out = []
        for a in self.center():
            if self.table[a][a] == self.identity:
                if include_identity or a != self.identity:
                    out.append(a)
        return tuple(out)

    def subgroup_closure(self, generators) -> tuple[int, ...]:
        elems = {self.identity}
        frontier = set(generators) - elems
        elems |= frontier
        while frontier:
            new = set()
            for a in frontier:
                for b in list(elems):
                    for c in (self.table[a][b], self.table[b][a]):
                        if c not in elems:
                            new.add(c)
            elems |= new
            frontier = new
        return tuple(sorted(elems))

    def all_subgroups(self) -> list[tuple[int, ...]]:
        """All subgroups (as sorted index tuples), by generated closure."""
        found = {(self.identity,)}
        frontier = {(self.identity,)}
        while frontier:
            new = set()
            for sub in frontier:
                for g in range(self.order):
                    if g in sub:
                        continue
                    bigger = self.subgroup_closure(set(sub) | {g})
                    if bigger not in found:
                        new.add(bigger)
            found |= new
            frontier = new
        return sorted(found, key=lambda s: (len(s), s))

    def abelian_subgroup(self, elements) -> "AbelianSubgroup":
        return AbelianSubgroup(self, elements)

    # --- constructors ----------------------------------------------------

    @classmethod
    def trivial(cls) -> "FiniteGroup":
        return cls(((0,),), 0, invariant_factors=(1,), iso_map=((0,),), name="Z1")

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        if n < 1:
            raise GroupError("cyclic order must be positive")
        table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
        return cls(table, 0, invariant_factors=(n,), iso_map=tuple((i,) for i in range(n)), name=f"Z{n}")

    @classmethod
    def direct_product(cls, *groups: "FiniteGroup") -> "FiniteGroup":
        if not groups:
            return cls.trivial()
        orders = [g.order for g in groups]
        elems = list(product(*[range(n) for n in orders]))
        index = {e: i for i, e in enumerate(elems)}
        table = []
        for ea in elems:
            row = []
            for eb in elems:
                row.append(index[tuple(g.mul(x, y) for g, x, y in zip(groups, ea, eb))])
            table.append(tuple(row))
        factors = None
        iso = None
        if all(g.invariant_factors is not None for g in groups):
            factors = tuple(f for g in groups for f in g.invariant_factors)
            iso = tuple(
                tuple(x for g, part in zip(groups, e) for x in g.iso_map[part]) for e in elems
            )
        name = "x".join(g.name or "?" for g in groups)
        ident = index[tuple(g.identity for g in groups)]
        return cls(table, ident, invariant_factors=factors, iso_map=iso, name=name)

    @classmethod
    def symmetric3(cls) -> "FiniteGroup":
        perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)]
        index = {p: i for i, p in enumerate(perms)}
        table = []
        for a in perms:
            row = []
            for b in perms:
                row.append(index[tuple(a[b[i]] for i in range(3))])
            table.append(tuple(row))
        return cls(table, 0, name="S3")

    @classmethod
    def dihedral4(cls) -> "FiniteGroup":
        # elements r^i s^j with s r = r^-1 s; index = i + 4*j
        def mul(x, y):
            i, j = x % 4, x // 4
            k, l = y % 4, y // 4
            i2 = (i + (k if j == 0 else -k)) % 4
            return i2 + 4 * ((j + l) % 2)

        table = tuple(tuple(mul(x, y) for y in range(8)) for x in range(8))
        return cls(table, 0, name="D4")

    @classmethod
    def quaternion8(cls) -> "FiniteGroup":
        # basis units 1, -1, i, -i, j, -j, k, -k
        names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        prod = {
            ("1", "1"): "1", ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
            ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
            ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
        }

        def base_mul(a, b):
            sign = 1
            if a.startswith("-"):
                sign, a = -sign, a[1:]
            if b.startswith("-"):
                sign, b = -sign, b[1:]
            if a == "1":
                out = b
            elif b == "1":
                out = a
            else:
                out = prod[(a, b)]
            if out.startswith("-"):
                sign, out = -sign, out[1:]
            return out if sign > 0 else "-" + out

        index = {n: i for i, n in enumerate(names)}
        table = tuple(
            tuple(index[base_mul(a, b)] for b in names) for a in names
        )
        return cls(table, 0, name="Q8")

    # --- serialization -----------------------------------------------------

    def to_obj(self):
        obj = {"order": self.order, "table": [list(r) for r in self.table], "identity": self.identity}
        if self.invariant_factors is not None:
            obj["invariant_factors"] = list(self.invariant_factors)
            obj["iso_map"] = [list(e) for e in self.iso_map]
        return obj

    @classmethod
    def from_obj(cls, obj) -> "FiniteGroup":
        return cls(
            obj["table"],
            obj["identity"],
            invariant_factors=obj.get("invariant_factors"),
            iso_map=obj.get("iso_map"),
            name=obj.get("name", ""),
        )

    def __repr__(self):
        return f"FiniteGroup({self.name or self.order})"


def _find_cyclic_decomposition(table, elements, identity):
    """Orders and exponent map of a small abelian group, by generator search."""
    n = len(elements)
    pos = {g: i for i, g in enumerate(elements)}

    def order_of(a):
        k, x = 1, a
        while x != identity:
            x = table[x][a]
            k += 1
        return k

    orders = {g: order_of(g) for g in elements}

    def powers(g):
        out = [identity]
        x = g
        while x != identity:
            out.append(x)
            x = table[x][g]
        return out

    # breadth over generator tuple sizes, deterministic order
    def search_tuples(k, gens):
        if k == 0:
            prod_order = 1
            for g in gens:
                prod_order *= orders[g]
            if prod_order != n:
                return None
            seen = {}
            for exps in product(*[range(orders[g]) for g in gens]):
                x = identity
                for g, e in zip(gens, exps):
                    p = powers(g)[e]
                    x = table[x][p]
                if x in seen:
                    return None
                seen[x] = exps
            return gens, seen
        start = elements.index(gens[-1]) + 1 if gens else 0
        for gi in range(start, n):
            g = elements[gi]
            if orders[g] == 1:
                continue
            hit = search_tuples(k - 1, gens + (g,))
            if hit is not None:
                return hit
        return None

    if n == 1:
        return (1,), {identity: (0,)}
    for k in range(1, 5):
        hit = search_tuples(k, ())
        if hit is not None:
            gens, seen = hit
            return tuple(orders[g] for g in gens), seen
    raise GroupError("could not decompose abelian group into cyclic factors")


class AbelianSubgroup:
    """An abelian subgroup of a parent group, with explicit cyclic factors."""

    def __init__(self, parent: FiniteGroup, elements):
        self.parent = parent
        self.elements = tuple(sorted(elements))
        if not self.elements:
            raise GroupError("subgroup must be nonempty")
        if parent.identity not in self.elements:
            raise GroupError("subgroup must contain the identity")
        elem_set = set(self.elements)
        for a in self.elements:
            for b in self.elements:
                if parent.table[a][b] not in elem_set:
                    raise GroupError("subset is not closed under the Cayley table")
        for a in self.elements:
            for b in self.elements:
                if parent.table[a][b] != parent.table[b][a]:
                    raise NotAbelian("subgroup is not abelian")
        self.order = len(self.elements)
        self.factors, exp_map = _find_cyclic_decomposition(
            parent.table, list(self.elements), parent.identity
        )
        self.exponents = {g: tuple(exp_map[g]) for g in self.elements}

    def labels(self) -> list[tuple[int, ...]]:
        """Dual-group labels: exponent tuples in mixed-radix order."""
        return [tuple(t) for t in product(*[range(f) for f in self.factors])]

    def as_group(self) -> FiniteGroup:
        """The subgroup as a standalone FiniteGroup on local indices."""
        pos = {g: i for i, g in enumerate(self.elements)}
        table = tuple(
            tuple(pos[self.parent.table[a][b]] for b in self.elements)
            for a in self.elements
        )
        iso = tuple(self.exponents[g] for g in self.elements)
        return FiniteGroup(
            table,
            pos[self.parent.identity],
            invariant_factors=self.factors,
            iso_map=iso,
            name=f"sub{self.order}of{self.parent.name}",
        )

    def __repr__(self):
        return f"AbelianSubgroup(order={self.order}, factors={self.factors})"


def characters(a: AbelianSubgroup | FiniteGroup):
    """Characters and orthogonal idempotents of a finite abelian group.

    Returns (labels, chars, idempotents): chars[s] is the covector of
    character values on the group elements, idempotents[s] the vector
    E_s = (1/|A|) sum_a chi_s(a)^-1 a over the group's own basis.
    """
    if isinstance(a, FiniteGroup):
        if a.invariant_factors is None:
            raise NotAbelian("group carries no invariant factors")
        a = AbelianSubgroup(a, range(a.order))
    labels = a.labels()
    factors = a.factors
    n = a.order
    inv_n = CycScalar.from_rational(1, n)
    chars = []
    idems = []
    for s in labels:
        values = []
        for g in a.elements:
            e = a.exponents[g]
            val = SC_ONE
            for f, si, ei in zip(factors, s, e):
                if f > 1 and si and ei:
                    val = val * root_of_unity(f, si * ei)
            values.append(val)
        chars.append(tuple(values))
        idem = []
        for g in a.elements:
            e = a.exponents[g]
            val = SC_ONE
            for f, si, ei in zip(factors, s, e):
                if f > 1 and si and ei:
                    val = val * root_of_unity(f, -si * ei)
            idem.append(inv_n * val)
        idems.append(Vec(idem))
    return labels, chars, idems


class GroupRep:
    """A matrix representation of a finite group over CycScalar."""

    def __init__(self, group: FiniteGroup, degree: int, matrices):
        self.group = group
        self.degree = degree
        self.matrices = tuple(m if isinstance(m, Mat) else Mat(m) for m in matrices)
        if len(self.matrices) != group.order:
            raise ShapeError("one matrix per group element required")
        for m in self.matrices:
            if m.nrows != degree or m.ncols != degree:
                raise ShapeError("representation matrix of wrong shape")
        if degree > 0:
            if self.matrices[group.identity] != Mat.identity(degree):
                raise ShapeError("identity must map to the identity matrix")
            for a in range(group.order):
                for b in range(group.order):
                    if self.matrices[a] @ self.matrices[b] != self.matrices[group.mul(a, b)]:
                        raise ShapeError(f"not a homomorphism at ({a},{b})")

    @classmethod
    def zero(cls, group: FiniteGroup) -> "GroupRep":
        return cls(group, 0, tuple(Mat(()) for _ in range(group.order)))

    @classmethod
    def from_sign_characters(cls, group: FiniteGroup, characters_pm) -> "GroupRep":
        """Diagonal representation from +-1 value rows (one per dimension)."""
        degree = len(characters_pm)
        mats = []
        for g in range(group.order):
            rows = []
            for i in range(degree):
                val = characters_pm[i][g]
                rows.append(
                    tuple(
                        (SC_ONE if val == 1 else -SC_ONE) if i == j else SC_ZERO
                        for j in range(degree)
                    )
                )
            mats.append(Mat(rows))
        return cls(group, degree, mats)

    def acts_by_minus_one(self, u: int) -> bool:
        if self.degree == 0:
            return True
        minus = Mat(
            tuple(
                tuple(-SC_ONE if i == j else SC_ZERO for j in range(self.degree))
                for i in range(self.degree)
            )
        )
        return self.matrices[u] == minus

    def to_obj(self):
        return {
            "group": self.group.to_obj(),
            "degree": self.degree,
            "matrices": [
                [[c.to_obj() for c in row] for row in m.rows] for m in self.matrices
            ],
        }

    @classmethod
    def from_obj(cls, obj, group: FiniteGroup | None = None) -> "GroupRep":
        if group is None:
            group = FiniteGroup.from_obj(obj["group"])
        mats = [
            Mat([[CycScalar.from_obj(c) for c in row] for row in m])
            for m in obj["matrices"]
        ]
        return cls(group, obj["degree"], mats)


def sign_characters(group: FiniteGroup) -> list[tuple[int, ...]]:
    """All homomorphisms G -> {+1, -1} as value tuples, brute force."""
    n = group.order
    out = []
    for bits in product((1, -1), repeat=n):
        if bits[group.identity] != 1:
            continue
        ok = True
        for a in range(n):
            for b in range(n):
                if bits[group.mul(a, b)] != bits[a] * bits[b]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(bits)
    return out


class Bicharacter:
    """A bimultiplicative pairing on the dual labels of an abelian group.

    values[s][t] is a root of unity indexed by the mixed-radix label
    order of the factors; bimultiplicativity and normalization are
    enforced at construction.
    """

    def __init__(self, factors, values):
        self.factors = tuple(factors)
        self.values = tuple(tuple(row) for row in values)
        self.labels = [tuple(t) for t in product(*[range(f) for f in self.factors])]
        n = len(self.labels)
        if len(self.values) != n or any(len(r) != n for r in self.values):
            raise BicharacterError("value table has wrong shape")
        index = {lab: i for i, lab in enumerate(self.labels)}
        add = lambda s, t: tuple((x + y) % f for x, y, f in zip(s, t, self.factors))
        for i, s in enumerate(self.labels):
            for j, t in enumerate(self.labels):
                for k, u in enumerate(self.labels):
                    if (
                        self.values[index[add(s, u)]][j]
                        != self.values[i][j] * self.values[k][j]
                    ):
                        raise BicharacterError("table not multiplicative in the first slot")
                    if (
                        self.values[i][index[add(t, u)]]
                        != self.values[i][j] * self.values[i][k]
                    ):
                        raise BicharacterError("table not multiplicative in the second slot")
        zero = index[tuple(0 for _ in self.factors)]
        for i in range(n):
            if self.values[zero][i] != SC_ONE or self.values[i][zero] != SC_ONE:
                raise BicharacterError("table not normalized at the trivial label")

    @classmethod
    def from_exponent_matrix(cls, factors, gen_exponents) -> "Bicharacter":
        """beta(s, t) = prod over generator pairs of zeta(gcd(ni,nj))**(c_ij s_i t_j)."""
        factors = tuple(factors)
        r = len(factors)
        labels = [tuple(t) for t in product(*[range(f) for f in factors])]
        from math import gcd

        rows = []
        for s in labels:
            row = []
            for t in labels:
                val = SC_ONE
                for i in range(r):
                    for j in range(r):
                        c = gen_exponents[i][j]
                        if c:
                            g = gcd(factors[i], factors[j])
                            if g > 1:
                                val = val * root_of_unity(g, c * s[i] * t[j])
                row.append(val)
            rows.append(tuple(row))
        return cls(factors, rows)

    @classmethod
    def trivial(cls, factors) -> "Bicharacter":
        n = 1
        for f in factors:
            n *= f
        return cls(factors, ((SC_ONE,) * n,) * n)

    def value(self, s, t) -> CycScalar:
        i = self.labels.index(tuple(s))
        j = self.labels.index(tuple(t))
        return self.values[i][j]

    def is_alternating(self) -> bool:
        for i, s in enumerate(self.labels):
            if self.values[i][i] != SC_ONE:
                return False
        return True

    def is_nondegenerate(self) -> bool:
        rows = {tuple((c.order, c.coeffs) for c in row) for row in self.values}
        return len(rows) == len(self.labels)

    def skew(self) -> "Bicharacter":
        """gamma(s,t) = beta(s,t) * beta(t,s)**-1, always alternating."""
        n = len(self.labels)
        rows = tuple(
            tuple(self.values[i][j] * self.values[j][i].inv() for j in range(n))
            for i in range(n)
        )
        return Bicharacter(self.factors, rows)

    def to_obj(self):
        # encode each value as an exponent of zeta_N, N = lcm of factors
        from math import lcm

        n_amb = 1
        for f in self.factors:
            n_amb = lcm(n_amb, f)
        table = []
        for row in self.values:
            out_row = []
            for v in row:
                for k in range(n_amb):
                    if v == root_of_unity(n_amb, k):
                        out_row.append(k)
                        break
                else:
                    raise BicharacterError("value is not a root of unity of the expected order")
            table.append(out_row)
        return {"factors": list(self.factors), "values": table}

    @classmethod
    def from_obj(cls, obj) -> "Bicharacter":
        from math import lcm

        factors = tuple(int(f) for f in obj["factors"])
        n_amb = 1
        for f in factors:
            n_amb = lcm(n_amb, f)
        rows = tuple(
            tuple(root_of_unity(n_amb, int(k)) for k in row) for row in obj["values"]
        )
        return cls(factors, rows)


def alternating_nondegenerate_bicharacters(factors) -> list[Bicharacter]:
    """All nondegenerate alternating bicharacters, via antisymmetric
    generator exponent matrices (deduplicated by value table)."""
    from math import gcd

    factors = tuple(factors)
    r = len(factors)
    if r == 0 or all(f == 1 for f in factors):
        b = Bicharacter.trivial(factors)
        return [b] if b.is_nondegenerate() else []
    # candidate exponents for the strict upper triangle; diagonal zero
    upper = [(i, j) for i in range(r) for j in range(i + 1, r)]
    ranges = [range(gcd(factors[i], factors[j])) for i, j in upper]
    out = []
    seen = set()
    for combo in product(*ranges):
        gen = [[0] * r for _ in range(r)]
        for (i, j), c in zip(upper, combo):
            g = gcd(factors[i], factors[j])
            gen[i][j] = c
            gen[j][i] = (-c) % g
        b = Bicharacter.from_exponent_matrix(factors, gen)
        if not (b.is_alternating() and b.is_nondegenerate()):
            continue
        key = tuple(tuple((c.order, c.coeffs) for c in row) for row in b.values)
        if key not in seen:
            seen.add(key)
            out.append(b)
    return out


def half_bicharacter(gamma: Bicharacter) -> Bicharacter:
    """A bimultiplicative beta with skew(beta) = gamma, for alternating gamma.

    Built from the upper-triangular part of gamma's generator values:
    beta(g_i, g_j) = gamma(g_i, g_j) for i < j and 1 otherwise.
    """
    if not gamma.is_alternating():
        raise BicharacterError("half of a non-alternating bicharacter")
    factors = gamma.factors
    r = len(factors)
    from math import gcd

    gen = [[0] * r for _ in range(r)]
    unit_labels = []
    for i in range(r):
        lab = [0] * r
        lab[i] = 1 if factors[i] > 1 else 0
        unit_labels.append(tuple(lab))
    for i in range(r):
        for j in range(i + 1, r):
            g = gcd(factors[i], factors[j])
            if g <= 1:
                continue
            v = gamma.value(unit_labels[i], unit_labels[j])
            for k in range(g):
                if v == root_of_unity(g, k):
                    gen[i][j] = k
                    break
            else:
                raise BicharacterError("generator value outside expected roots of unity")
    beta = Bicharacter.from_exponent_matrix(factors, gen)
    if beta.skew().values != gamma.values:
        raise BicharacterError("half-cocycle construction failed to reproduce the skew")
    return beta
