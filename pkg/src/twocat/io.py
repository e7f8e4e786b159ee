"""JSON interchange for the workbench's data: 2-categories, 2-functors,
permutative Gray monoids and their actions, truncated simplicial sets, and
local coefficient systems.

Schema (bit-exact, keys sorted on output):

* 2-category: {"objects": [...], "one_cells": [{"id","src","tgt",
  "identity_of"?}], "two_cells": [same], "comp1": [{"after","before",
  "result"}], "vcomp": [same], "whisk_l"/"whisk_r": [{"cell","by","result"}]}
* 2-functor: {"source", "target", "on_objects", "on_one_cells",
  "on_two_cells"} with finite maps as arrays of [key, value] pairs.
* monoid (PGM): {"carrier": 2-category, "unit", "sum": [[a,b,v]],
  "left_translations"/"right_translations": [[a, maps]], "sigma":
  [[f,g,cell]], "beta": [[a,b,cell]]} where maps carries the three
  on_* arrays of an endofunctor of the carrier.
* action: {"pgm": monoid, "carrier": 2-category, "act": [[s,x,v]],
  "mu_left": [[s, maps]], "mu_right": [[x, maps]], "sigma": [[f,g,cell]]}.
* truncated simplicial set: {"N", "levels": [[simplex,...],...], "face"/
  "degen": [[i, simplex, value]], "degenerate": [[simplex, bool]]} with
  simplices rendered as canonical strings.
* coefficient system: {"group": [[simplex, {"gens","rels"}]], "face_map"/
  "degen_map": [[i, simplex, matrix]]} over the same simplex strings.

whisk_l rows: "cell" is the 2-cell, "by" the post-composed 1-cell.
whisk_r rows: "cell" is the 2-cell, "by" the pre-composed 1-cell.
"""

from __future__ import annotations

import json

from .core import TwoCategory, TwoFunctor, make_two_category
from .homology import LocalCoeffSystem, PresentedGroup
from .nerve import TruncSimplicialSet
from .pgm import PGM, PGMAction


def two_category_to_dict(C: TwoCategory) -> dict:
    id1_of = {f: x for x, f in C.id1.items()}
    id2_of = {a: f for f, a in C.id2.items()}

    def one_row(f):
        row = {"id": f, "src": C.one_src[f], "tgt": C.one_tgt[f]}
        if f in id1_of:
            row["identity_of"] = id1_of[f]
        return row

    def two_row(a):
        row = {"id": a, "src": C.two_src[a], "tgt": C.two_tgt[a]}
        if a in id2_of:
            row["identity_of"] = id2_of[a]
        return row

    return {
        "objects": sorted(C.objects),
        "one_cells": [one_row(f) for f in sorted(C.one_src)],
        "two_cells": [two_row(a) for a in sorted(C.two_src)],
        "comp1": [{"after": g, "before": f, "result": r}
                  for (g, f), r in sorted(C.comp1.items())],
        "vcomp": [{"after": b, "before": a, "result": r}
                  for (b, a), r in sorted(C.vcomp.items())],
        "whisk_l": [{"cell": a, "by": k, "result": r}
                    for (k, a), r in sorted(C.whisk_l.items())],
        "whisk_r": [{"cell": a, "by": k, "result": r}
                    for (a, k), r in sorted(C.whisk_r.items())],
    }


def two_category_from_dict(d: dict) -> TwoCategory:
    one_cells = {row["id"]: (row["src"], row["tgt"]) for row in d["one_cells"]}
    two_cells = {row["id"]: (row["src"], row["tgt"]) for row in d["two_cells"]}
    id1 = {row["identity_of"]: row["id"]
           for row in d["one_cells"] if "identity_of" in row}
    id2 = {row["identity_of"]: row["id"]
           for row in d["two_cells"] if "identity_of" in row}
    comp1 = {(row["after"], row["before"]): row["result"] for row in d["comp1"]}
    vcomp = {(row["after"], row["before"]): row["result"] for row in d["vcomp"]}
    whisk_l = {(row["by"], row["cell"]): row["result"] for row in d["whisk_l"]}
    whisk_r = {(row["cell"], row["by"]): row["result"] for row in d["whisk_r"]}
    return make_two_category(d["objects"], one_cells, two_cells, id1, id2,
                             comp1, vcomp, whisk_l, whisk_r)


def two_functor_to_dict(F: TwoFunctor) -> dict:
    return {
        "source": two_category_to_dict(F.source),
        "target": two_category_to_dict(F.target),
        "on_objects": [[k, v] for k, v in sorted(F.on_objects.items())],
        "on_one_cells": [[k, v] for k, v in sorted(F.on_one.items())],
        "on_two_cells": [[k, v] for k, v in sorted(F.on_two.items())],
    }


def two_functor_from_dict(d: dict) -> TwoFunctor:
    return TwoFunctor(
        source=two_category_from_dict(d["source"]),
        target=two_category_from_dict(d["target"]),
        on_objects=dict(map(tuple, d["on_objects"])),
        on_one=dict(map(tuple, d["on_one_cells"])),
        on_two=dict(map(tuple, d["on_two_cells"])),
    )


def _maps_of(F: TwoFunctor) -> dict:
    return {
        "on_objects": [[k, v] for k, v in sorted(F.on_objects.items())],
        "on_one_cells": [[k, v] for k, v in sorted(F.on_one.items())],
        "on_two_cells": [[k, v] for k, v in sorted(F.on_two.items())],
    }


def _functor_from_maps(src: TwoCategory, tgt: TwoCategory,
                       maps: dict) -> TwoFunctor:
    return TwoFunctor(src, tgt,
                      dict(map(tuple, maps["on_objects"])),
                      dict(map(tuple, maps["on_one_cells"])),
                      dict(map(tuple, maps["on_two_cells"])))


def pgm_to_dict(P: PGM) -> dict:
    return {
        "carrier": two_category_to_dict(P.carrier),
        "unit": P.unit,
        "sum": [[a, b, v] for (a, b), v in sorted(P.sum_objects.items())],
        "left_translations": [[a, _maps_of(F)]
                              for a, F in sorted(P.left_translations.items())],
        "right_translations": [[a, _maps_of(F)] for a, F
                               in sorted(P.right_translations.items())],
        "sigma": [[f, g, v] for (f, g), v in sorted(P.sigma.items())],
        "beta": [[a, b, v] for (a, b), v in sorted(P.beta.items())],
    }


def pgm_from_dict(d: dict) -> PGM:
    S = two_category_from_dict(d["carrier"])
    return PGM(
        carrier=S,
        unit=d["unit"],
        sum_objects={(a, b): v for a, b, v in d["sum"]},
        left_translations={a: _functor_from_maps(S, S, m)
                           for a, m in d["left_translations"]},
        right_translations={a: _functor_from_maps(S, S, m)
                            for a, m in d["right_translations"]},
        sigma={(f, g): v for f, g, v in d["sigma"]},
        beta={(a, b): v for a, b, v in d["beta"]},
    )


def action_to_dict(A: PGMAction) -> dict:
    return {
        "pgm": pgm_to_dict(A.pgm),
        "carrier": two_category_to_dict(A.carrier),
        "act": [[s, x, v] for (s, x), v in sorted(A.act_objects.items())],
        "mu_left": [[s, _maps_of(F)] for s, F in sorted(A.mu_left.items())],
        "mu_right": [[x, _maps_of(F)] for x, F in sorted(A.mu_right.items())],
        "sigma": [[f, g, v] for (f, g), v in sorted(A.sigma.items())],
    }


def action_from_dict(d: dict, P: PGM | None = None) -> PGMAction:
    P = P if P is not None else pgm_from_dict(d["pgm"])
    S = P.carrier
    X = two_category_from_dict(d["carrier"])
    return PGMAction(
        pgm=P,
        carrier=X,
        act_objects={(s, x): v for s, x, v in d["act"]},
        mu_left={s: _functor_from_maps(X, X, m) for s, m in d["mu_left"]},
        mu_right={x: _functor_from_maps(S, X, m) for x, m in d["mu_right"]},
        sigma={(f, g): v for f, g, v in d["sigma"]},
    )


def simplex_key(x) -> str:
    """Canonical string for a simplex, stable across processes."""
    if isinstance(x, str):
        return x
    return repr((x.vertices, x.edges, x.triangles))


def trunc_sset_to_dict(X: TruncSimplicialSet) -> dict:
    return {
        "N": X.N,
        "levels": [[simplex_key(x) for x in lev] for lev in X.levels],
        "face": [[i, simplex_key(x), simplex_key(y)]
                 for (i, x), y in sorted(X.face.items(),
                                         key=lambda kv: (kv[0][0],
                                                         kv[0][1]))],
        "degen": [[i, simplex_key(x), simplex_key(y)]
                  for (i, x), y in sorted(X.degen.items(),
                                          key=lambda kv: (kv[0][0],
                                                          kv[0][1]))],
        "degenerate": [[simplex_key(x), bool(v)]
                       for x, v in sorted(X.degenerate.items())],
    }


def trunc_sset_from_dict(d: dict) -> TruncSimplicialSet:
    """Rebuild with plain string simplices; chain-level consumers treat
    simplices as opaque keys, so the result computes the same homology."""
    return TruncSimplicialSet(
        N=d["N"],
        levels=tuple(tuple(lev) for lev in d["levels"]),
        face={(i, x): y for i, x, y in d["face"]},
        degen={(i, x): y for i, x, y in d["degen"]},
        degenerate={x: v for x, v in d["degenerate"]},
    )


def coeff_system_to_dict(L: LocalCoeffSystem) -> dict:
    return {
        "group": [[simplex_key(x), {"gens": g.gens, "rels": g.rels}]
                  for x, g in sorted(L.group.items(),
                                     key=lambda kv: simplex_key(kv[0]))],
        "face_map": [[i, simplex_key(x), M]
                     for (i, x), M in sorted(
                         L.face_map.items(),
                         key=lambda kv: (kv[0][0], simplex_key(kv[0][1])))],
        "degen_map": [[i, simplex_key(x), M]
                      for (i, x), M in sorted(
                          L.degen_map.items(),
                          key=lambda kv: (kv[0][0], simplex_key(kv[0][1])))],
    }


def coeff_system_from_dict(d: dict) -> LocalCoeffSystem:
    return LocalCoeffSystem(
        group={x: PresentedGroup(g["gens"], g["rels"])
               for x, g in d["group"]},
        face_map={(i, x): M for i, x, M in d["face_map"]},
        degen_map={(i, x): M for i, x, M in d.get("degen_map", [])},
    )


def dumps(obj: dict, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2, sort_keys=True) + "\n"
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def load_two_category(path: str) -> TwoCategory:
    with open(path) as fh:
        return two_category_from_dict(json.load(fh))


def load_two_functor(path: str) -> TwoFunctor:
    with open(path) as fh:
        return two_functor_from_dict(json.load(fh))


def load_pgm(path: str) -> PGM:
    with open(path) as fh:
        return pgm_from_dict(json.load(fh))


def load_action(path: str, P: PGM | None = None) -> PGMAction:
    with open(path) as fh:
        return action_from_dict(json.load(fh), P)
