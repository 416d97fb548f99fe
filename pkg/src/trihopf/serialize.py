"""JSON wire formats for all on-disk artifacts.

Scalars encode as {"n": order, "c": [[num, den], ...]} with decimal
integer strings; sparse tensors as index/scalar lists with 0-based
indices sorted lexicographically, so dumps are byte-stable.  For
hand-written input files a plain integer is also accepted wherever a
scalar is expected.
"""

from __future__ import annotations

import json
from pathlib import Path

from .constructions import Septuple
from .errors import ShapeError
from .groups import Bicharacter, FiniteGroup, GroupRep
from .hopf import HopfData, make_hopf
from .scalars import CycScalar
from .tensor import Mat, Tensor2, Vec


def scalar_to_obj(c: CycScalar):
    return c.to_obj()


def scalar_from_obj(obj) -> CycScalar:
    if isinstance(obj, int):
        return CycScalar.from_int(obj)
    if isinstance(obj, dict):
        return CycScalar.from_obj(obj)
    raise ShapeError(f"not a scalar encoding: {obj!r}")


def vec_to_obj(v: Vec):
    return [scalar_to_obj(c) for c in v.entries]


def vec_from_obj(obj) -> Vec:
    return Vec(scalar_from_obj(c) for c in obj)


def mat_to_obj(m: Mat):
    return [[scalar_to_obj(c) for c in row] for row in m.rows]


def mat_from_obj(obj) -> Mat:
    return Mat([[scalar_from_obj(c) for c in row] for row in obj])


def hopf_to_obj(h: HopfData):
    mult = []
    for i in range(h.dim):
        for j in range(h.dim):
            for k, c in h.mult[i][j]:
                mult.append([i, j, k, scalar_to_obj(c)])
    comult = []
    for i in range(h.dim):
        comult.append([[j, k, scalar_to_obj(c)] for j, k, c in sorted(h.comult[i], key=lambda e: (e[0], e[1]))])
    return {
        "dim": h.dim,
        "super": h.super,
        "parity": list(h.parity),
        "unit": vec_to_obj(h.unit),
        "mult": mult,
        "comult": comult,
        "counit": [scalar_to_obj(c) for c in h.counit],
        "antipode": mat_to_obj(h.antipode),
    }


def hopf_from_obj(obj) -> HopfData:
    dim = int(obj["dim"])
    mult = [[[] for _ in range(dim)] for _ in range(dim)]
    for i, j, k, c in obj["mult"]:
        mult[i][j].append((k, scalar_from_obj(c)))
    comult = []
    for entry in obj["comult"]:
        comult.append(tuple((j, k, scalar_from_obj(c)) for j, k, c in entry))
    return make_hopf(
        dim=dim,
        unit=vec_from_obj(obj["unit"]),
        mult=tuple(tuple(tuple(cell) for cell in row) for row in mult),
        comult=tuple(comult),
        counit=tuple(scalar_from_obj(c) for c in obj["counit"]),
        antipode=mat_from_obj(obj["antipode"]),
        parity=tuple(int(p) for p in obj["parity"]),
        super=bool(obj["super"]),
    )


def tensor2_to_obj(t: Tensor2):
    entries = [[i, j, scalar_to_obj(c)] for i, j, c in t.nonzeros]
    return {"host_dim": t.dim, "entries": entries}


def tensor2_from_obj(obj) -> Tensor2:
    dim = int(obj["host_dim"])
    acc = {}
    for i, j, c in obj["entries"]:
        acc[(int(i), int(j))] = scalar_from_obj(c)
    return Tensor2.from_dict(dim, acc)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def save(path, obj):
    Path(path).write_text(dumps(obj))


def load(path):
    return json.loads(Path(path).read_text())


# --- input-file loaders (group, representation, bicharacter, septuple) ----

def group_from_file_obj(obj) -> FiniteGroup:
    return FiniteGroup.from_obj(obj)


def _resolve_ref(obj, key, base_dir):
    if key in obj:
        return obj[key], base_dir
    ref = obj.get(key + "_ref")
    if ref is None:
        raise ShapeError(f"missing {key!r} or {key}_ref")
    path = Path(base_dir) / ref if base_dir is not None else Path(ref)
    return json.loads(Path(path).read_text()), path.parent


def rep_from_file_obj(obj, base_dir=None) -> GroupRep:
    group_obj, _ = _resolve_ref(obj, "group", base_dir)
    group = FiniteGroup.from_obj(group_obj)
    degree = int(obj["degree"])
    mats = [mat_from_obj(m) for m in obj["matrices"]]
    return GroupRep(group, degree, mats)


def bicharacter_from_file_obj(obj) -> Bicharacter:
    return Bicharacter.from_obj(obj)


def septuple_from_file_obj(obj, base_dir=None) -> Septuple:
    group_obj, _ = _resolve_ref(obj, "group", base_dir)
    group = FiniteGroup.from_obj(group_obj)
    rep_obj, rep_dir = _resolve_ref(obj, "rep", base_dir)
    if "group" not in rep_obj and "group_ref" not in rep_obj:
        rep = GroupRep(group, int(rep_obj["degree"]), [mat_from_obj(m) for m in rep_obj["matrices"]])
    else:
        rep = rep_from_file_obj(rep_obj, rep_dir)
    y_basis = tuple(vec_from_obj(v) for v in obj.get("y_basis", []))
    b_rows = obj.get("b", [])
    b = mat_from_obj(b_rows) if b_rows else None
    return Septuple(
        group=group,
        w=rep,
        a_elements=tuple(int(i) for i in obj["subgroup"]),
        y_basis=y_basis,
        b=b,
        v_beta=Bicharacter.from_obj(obj["bicharacter"]),
        v_dim=int(obj["v_dim"]),
        u=int(obj["u"]),
    )
