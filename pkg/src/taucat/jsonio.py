"""JSON encodings for groups, homs, cochains, categories and block data.

Sparse conventions: omitted hom spaces are zero, omitted composition
tensors are zero, omitted cochain entries are 1.  Parsers re-verify
everything through the ordinary constructors, so malformed files fail
loudly rather than producing broken in-memory structures.
"""

from __future__ import annotations

from .category import GradedCatPresentation
from .cochains import Cochain1, Cochain2, cochain1, cochain2, trivial_cochain2
from .fields import PrimeField, field
from .groups import (FiniteGroup, GroupHom, coset_space, cyclic_group,
                     group_from_table, hom, subgroup)
from .mtau import MtauSpec, mtau_spec


def parse_group(doc) -> FiniteGroup:
    if "cyclic" in doc:
        return cyclic_group(int(doc["cyclic"]))
    if "table" in doc:
        return group_from_table(doc["table"])
    raise ValueError("group document needs 'cyclic' or 'table'")


def group_to_json(g: FiniteGroup):
    return {"order": g.order, "table": [list(row) for row in g.table]}


def parse_hom(doc) -> GroupHom:
    src = parse_group(doc["source"])
    tgt = parse_group(doc["target"])
    return hom(src, tgt, doc["map"])


def hom_to_json(h: GroupHom):
    return {"source": group_to_json(h.source), "target": group_to_json(h.target),
            "map": list(h.map)}


def parse_cochain2(doc, f: PrimeField, tau: GroupHom) -> Cochain2:
    sub = subgroup(tau.source, doc["subgroup"])
    space = coset_space(tau.source, sub)
    n = tau.source.order
    grid = [[[1] * space.size for _ in range(n)] for _ in range(n)]
    for key, vals in doc.get("values", {}).items():
        a_s, b_s = key.split(",")
        grid[int(a_s)][int(b_s)] = [int(v) for v in vals]
    return cochain2(f, space, grid)


def cochain2_to_json(psi: Cochain2):
    out = {"subgroup": list(psi.space.subgroup.elements), "values": {}}
    n = psi.space.parent.order
    for a in range(n):
        for b in range(n):
            vals = psi.values[a][b]
            if any(v != 1 for v in vals):
                out["values"][f"{a},{b}"] = list(vals)
    return out


def parse_cochain1(doc, f: PrimeField, tau: GroupHom) -> Cochain1:
    sub = subgroup(tau.source, doc["subgroup"])
    space = coset_space(tau.source, sub)
    n = tau.source.order
    grid = [[1] * space.size for _ in range(n)]
    for key, vals in doc.get("values", {}).items():
        grid[int(key)] = [int(v) for v in vals]
    return cochain1(f, space, grid)


def cochain1_to_json(gamma: Cochain1):
    out = {"subgroup": list(gamma.space.subgroup.elements), "values": {}}
    for a in range(gamma.space.parent.order):
        vals = gamma.values[a]
        if any(v != 1 for v in vals):
            out["values"][str(a)] = list(vals)
    return out


def parse_mtau_spec(doc) -> MtauSpec:
    tau = parse_hom(doc["tau"])
    f = field(int(doc["p"]))
    sub = subgroup(tau.source, doc["L"])
    psi_doc = doc.get("psi", "trivial")
    if psi_doc == "trivial":
        psi = trivial_cochain2(f, coset_space(tau.source, sub))
    else:
        psi = parse_cochain2(psi_doc, f, tau)
        if psi.space.subgroup != sub:
            raise ValueError("psi subgroup does not match L")
    return mtau_spec(tau, f, sub, psi, int(doc.get("g", tau.target.identity)))


def mtau_spec_to_json(spec: MtauSpec):
    return {"tau": hom_to_json(spec.tau), "p": spec.field.p,
            "L": list(spec.L.elements), "psi": cochain2_to_json(spec.psi),
            "g": spec.g}


def parse_category(doc) -> GradedCatPresentation:
    tau = parse_hom(doc["tau"])
    f = field(int(doc["p"]))
    degrees = [int(o["deg"]) for o in doc["objects"]]
    hom_rank = {}
    for h in doc.get("homs", []):
        hom_rank[(int(h["src"]), int(h["dst"]), int(h["h"]))] = int(h["rank"])
    comp = {}
    for c in doc.get("compose", []):
        key = (int(c["src"]), int(c["mid"]), int(c["dst"]), int(c["h"]), int(c["h2"]))
        comp[key] = c["tensor"]
    identities = [tuple(int(v) for v in row) for row in doc["identities"]]
    return GradedCatPresentation(tau, f, degrees, hom_rank, comp, identities)


def category_to_json(cat: GradedCatPresentation):
    out = {
        "tau": hom_to_json(cat.tau),
        "p": cat.field.p,
        "objects": [{"deg": d} for d in cat.degrees],
        "homs": [{"src": x, "dst": y, "h": h, "rank": r}
                 for (x, y, h), r in sorted(cat.hom_rank.items())],
        "compose": [
            {"src": x, "mid": y, "dst": z, "h": h, "h2": h2,
             "tensor": [[list(row) for row in layer] for layer in t]}
            for (x, y, z, h, h2), t in sorted(cat.compose_t.items())
        ],
        "identities": [list(c) for c in cat.identities],
    }
    return out


def datum_to_json(datum):
    return {"t": datum.t, "gamma": cochain1_to_json(datum.gamma)}


def parse_datum(doc, spec: MtauSpec):
    from .structure import EquivalenceDatum

    gamma_doc = doc.get("gamma", {"subgroup": list(spec.L.elements), "values": {}})
    if "subgroup" not in gamma_doc:
        gamma_doc = dict(gamma_doc)
        gamma_doc["subgroup"] = list(spec.L.elements)
    gamma = parse_cochain1(gamma_doc, spec.field, spec.tau)
    return EquivalenceDatum(int(doc["t"]), gamma)
