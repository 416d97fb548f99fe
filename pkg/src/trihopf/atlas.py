"""Catalog enumeration: every triangular instance the builders reach.

The group catalog is a fixed, documented list (cyclic groups up to
order 16, the elementary-abelian and mixed 2-groups, Z3xZ3, S3, D4,
Q8).  For each group the atlas walks all central order-<=2 modifiers u,
all sign representations of dimension <= 2 on which u acts by -1 (none
for the semisimple stratum), all square-order abelian subgroups and all
nondegenerate alternating bicharacters on them, and emits one verified
instance per combination with output dimension bounded by max_order.

Instances rebuild purely from their parameter tuple, so output trees
are byte-identical for any worker count.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

from .constructions import Septuple, septuple_pipeline, validate_septuple
from .groups import (
    AbelianSubgroup,
    FiniteGroup,
    GroupRep,
    alternating_nondegenerate_bicharacters,
    sign_characters,
)
from .hopf import (
    antipode_order,
    is_chevalley,
    is_cocommutative,
    jacobson_radical,
    verify_hopf,
)
from .serialize import dumps, hopf_to_obj, tensor2_to_obj
from .triangular import (
    check_structure_theorems,
    r_matrix_rank,
    verify_triangular,
)


def catalog_groups() -> list[tuple[str, FiniteGroup]]:
    out = [(f"Z{n}", FiniteGroup.cyclic(n)) for n in range(1, 17)]
    z2 = FiniteGroup.cyclic(2)
    z3 = FiniteGroup.cyclic(3)
    z4 = FiniteGroup.cyclic(4)
    out.append(("Z2xZ2", FiniteGroup.direct_product(z2, z2)))
    out.append(("Z2xZ2xZ2", FiniteGroup.direct_product(z2, z2, z2)))
    out.append(("Z4xZ2", FiniteGroup.direct_product(z4, z2)))
    out.append(("Z3xZ3", FiniteGroup.direct_product(z3, z3)))
    out.append(("S3", FiniteGroup.symmetric3()))
    out.append(("D4", FiniteGroup.dihedral4()))
    out.append(("Q8", FiniteGroup.quaternion8()))
    return out


def catalog_group(name: str) -> FiniteGroup:
    for gname, g in catalog_groups():
        if gname == name:
            return g
    raise KeyError(f"unknown catalog group {name!r}")


@dataclass(frozen=True)
class InstanceSpec:
    """Rebuildable parameters of one atlas instance."""

    name: str
    group: str
    dim: int
    u: int
    v_chars: tuple[int, ...]  # indices into sign_characters; empty means W = 0
    subgroup: tuple[int, ...]
    gamma_index: int  # index into the alternating nondegenerate enumeration


def _square_subgroup_strata(g: FiniteGroup):
    """(elements, gamma list) per abelian square-order subgroup with twists."""
    strata = []
    for elements in g.all_subgroups():
        n = len(elements)
        root = math.isqrt(n)
        if root * root != n:
            continue
        elem_set = set(elements)
        if any(g.table[a][b] != g.table[b][a] for a in elem_set for b in elem_set):
            continue
        sub = AbelianSubgroup(g, elements)
        gammas = alternating_nondegenerate_bicharacters(sub.factors)
        if gammas:
            strata.append((elements, gammas))
    return strata


def enumerate_instances(max_order: int) -> list[InstanceSpec]:
    specs = []
    for gname, g in catalog_groups():
        chars = sign_characters(g)
        strata = _square_subgroup_strata(g)
        for u in g.central_involutions():
            v_options: list[tuple[int, ...]] = [()]
            if u != g.identity:
                neg = [i for i, chi in enumerate(chars) if chi[u] == -1]
                v_options += [(i,) for i in neg]
                v_options += [(i, j) for i in neg for j in neg if i <= j]
            for v_chars in v_options:
                dim = g.order * (1 << len(v_chars))
                if dim > max_order:
                    continue
                for a_elements, gammas in strata:
                    for bi in range(len(gammas)):
                        sig_v = "-".join(str(i) for i in v_chars) or "0"
                        sig_a = "-".join(str(a) for a in a_elements)
                        name = f"{gname}_u{u}_V{sig_v}_A{sig_a}_g{bi}"
                        specs.append(
                            InstanceSpec(
                                name=name,
                                group=gname,
                                dim=dim,
                                u=u,
                                v_chars=tuple(v_chars),
                                subgroup=tuple(a_elements),
                                gamma_index=bi,
                            )
                        )
    return specs


def build_instance(spec: InstanceSpec):
    """Rebuild (HopfData, R) from an instance spec."""
    g = catalog_group(spec.group)
    chars = sign_characters(g)
    if spec.v_chars:
        w = GroupRep.from_sign_characters(g, [chars[i] for i in spec.v_chars])
    else:
        w = GroupRep.zero(g)
    sub = AbelianSubgroup(g, spec.subgroup)
    gamma = alternating_nondegenerate_bicharacters(sub.factors)[spec.gamma_index]
    septuple = Septuple(
        group=g,
        w=w,
        a_elements=spec.subgroup,
        y_basis=(),
        b=None,
        v_beta=gamma,
        v_dim=math.isqrt(len(spec.subgroup)),
        u=spec.u,
    )
    assert validate_septuple(septuple).valid
    return septuple_pipeline(septuple)


def analysis_report(h, r=None) -> dict:
    """The flat report the analyze command and atlas both emit."""
    rad = jacobson_radical(h)
    obj = {
        "dim": h.dim,
        "super": h.super,
        "cocommutative": is_cocommutative(h),
        "semisimple": not rad,
        "radical_dim": len(rad),
        "chevalley": is_chevalley(h),
        "antipode_order": antipode_order(h),
    }
    if r is not None:
        tri = verify_triangular(h, r)
        block = {"triangular": tri, "r_rank": r_matrix_rank(r)}
        if tri:
            block.update(check_structure_theorems(h, r).to_obj())
        obj["triangular"] = block
    return obj


def _atomic_write(path: Path, text: str):
    tmp = path.with_name(path.name + f".tmp{os.getpid()}")
    tmp.write_text(text)
    os.replace(tmp, path)


def _build_and_write(args):
    spec_fields, out_dir = args
    spec = InstanceSpec(**spec_fields)
    h, r = build_instance(spec)
    axioms = verify_hopf(h)
    report = analysis_report(h, r)
    out = Path(out_dir)
    _atomic_write(out / f"{spec.name}.hopf.json", dumps(hopf_to_obj(h)))
    _atomic_write(out / f"{spec.name}.r.json", dumps(tensor2_to_obj(r)))
    _atomic_write(out / f"{spec.name}.report.json", dumps(report))
    ok = (
        axioms.ok
        and report["triangular"]["triangular"]
        and report["chevalley"]
        and all(
            report["triangular"][k]
            for k in (
                "u_squared_is_one",
                "u_grouplike",
                "s4_is_id",
                "s2_is_ad_u",
                "odd_dim_forces_u1_semisimple",
            )
        )
    )
    return spec.name, ok


def run_atlas(max_order: int, out_dir, workers: int = 1):
    """Build, verify and dump every catalog instance; returns (ok, manifest)."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    specs = enumerate_instances(max_order)
    jobs = [(asdict(s), str(out)) for s in specs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_build_and_write, jobs))
    else:
        results = [_build_and_write(j) for j in jobs]
    status = dict(results)
    manifest = {
        "max_order": max_order,
        "instances": [
            {
                "name": s.name,
                "kind": "modified" if s.v_chars else "semisimple",
                "group": s.group,
                "dim": s.dim,
                "u": s.u,
                "v_chars": list(s.v_chars),
                "subgroup": list(s.subgroup),
                "gamma_index": s.gamma_index,
                "verified": status[s.name],
            }
            for s in sorted(specs, key=lambda s: s.name)
        ],
    }
    _atomic_write(out / "manifest.json", dumps(manifest))
    return all(status.values()), manifest
