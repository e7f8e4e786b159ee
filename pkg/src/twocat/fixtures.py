"""Standard small 2-categories used throughout the test corpus.

FIX_T      terminal 2-category (one object, identities only)
FIX_I      the poset [1] = (0 -> 1), locally discrete
FIX_G2     one object, one 1-cell, 2-cells Z/2 under vcomp
FIX_G2sat  same carrier, but vcomp(1,1) = 1 (saturation monoid {0,1})
FIX_C2     discrete 2-category on {0,1}
FIX_M2     same underlying 2-category as FIX_C2 (the max-monoid structure
           lives in the PGM fixture, see twocat.pgm)
FIX_PROD   binary product generator
"""

from __future__ import annotations

from .core import TwoCategory, TwoFunctor, make_two_category


def nm(*parts) -> str:
    """Canonical collision-free name for a constructed cell: the repr of the
    tuple of constituents (strings or nested tuples of strings)."""
    return repr(parts)


def discrete_two_category(objects) -> TwoCategory:
    """Only identity 1- and 2-cells."""
    objects = sorted(objects)
    one = {"id_%s" % x: (x, x) for x in objects}
    two = {"ii_%s" % x: ("id_%s" % x, "id_%s" % x) for x in objects}
    id1 = {x: "id_%s" % x for x in objects}
    id2 = {"id_%s" % x: "ii_%s" % x for x in objects}
    comp1 = {("id_%s" % x, "id_%s" % x): "id_%s" % x for x in objects}
    vcomp = {("ii_%s" % x, "ii_%s" % x): "ii_%s" % x for x in objects}
    whisk_l = {("id_%s" % x, "ii_%s" % x): "ii_%s" % x for x in objects}
    whisk_r = {("ii_%s" % x, "id_%s" % x): "ii_%s" % x for x in objects}
    return make_two_category(objects, one, two, id1, id2,
                             comp1, vcomp, whisk_l, whisk_r)


def locally_discrete(objects, arrows, compose) -> TwoCategory:
    """A 1-category presented as (objects, arrows: dict id -> (src, tgt),
    compose: dict (g, f) -> gf including identities) viewed as a 2-category
    with only identity 2-cells."""
    two = {"ii_%s" % f: (f, f) for f in arrows}
    id1 = {x: "id_%s" % x for x in objects}
    id2 = {f: "ii_%s" % f for f in arrows}
    vcomp = {("ii_%s" % f, "ii_%s" % f): "ii_%s" % f for f in arrows}
    whisk_l = {}
    whisk_r = {}
    for f, (fs, ft) in arrows.items():
        a = "ii_%s" % f
        for k, (ks, kt) in arrows.items():
            if ks == ft:
                whisk_l[(k, a)] = "ii_%s" % compose[(k, f)]
            if kt == fs:
                whisk_r[(a, k)] = "ii_%s" % compose[(f, k)]
    return make_two_category(objects, arrows, two, id1, id2,
                             compose, vcomp, whisk_l, whisk_r)


def fix_t() -> TwoCategory:
    return discrete_two_category(["pt"])


def fix_c2() -> TwoCategory:
    return discrete_two_category(["0", "1"])


def fix_m2() -> TwoCategory:
    return fix_c2()


def fix_i() -> TwoCategory:
    arrows = {"id_0": ("0", "0"), "id_1": ("1", "1"), "a01": ("0", "1")}
    compose = {
        ("id_0", "id_0"): "id_0",
        ("id_1", "id_1"): "id_1",
        ("a01", "id_0"): "a01",
        ("id_1", "a01"): "a01",
    }
    return locally_discrete(["0", "1"], arrows, compose)


def _one_object_monoid_2cells(add: dict) -> TwoCategory:
    """One object, one 1-cell, 2-cells {e0, e1} with vcomp given by add
    (a commutative monoid table on {0,1} with unit 0)."""
    one = {"i": ("*", "*")}
    two = {"e0": ("i", "i"), "e1": ("i", "i")}
    id1 = {"*": "i"}
    id2 = {"i": "e0"}
    comp1 = {("i", "i"): "i"}
    vcomp = {("e%d" % b, "e%d" % a): "e%d" % add[(b, a)]
             for b in (0, 1) for a in (0, 1)}
    # whiskering by the unique (identity) 1-cell is the identity operation
    whisk_l = {("i", "e%d" % a): "e%d" % a for a in (0, 1)}
    whisk_r = {("e%d" % a, "i"): "e%d" % a for a in (0, 1)}
    return make_two_category(["*"], one, two, id1, id2,
                             comp1, vcomp, whisk_l, whisk_r)


def fix_g2() -> TwoCategory:
    add = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0}
    return _one_object_monoid_2cells(add)


def fix_g2sat() -> TwoCategory:
    add = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 1}
    return _one_object_monoid_2cells(add)


def fix_prod(A: TwoCategory, B: TwoCategory):
    """Product 2-category with componentwise structure; returns
    (A x B, pr1, pr2)."""
    objects = [nm(x, y) for x in A.objects for y in B.objects]
    one = {nm(f, g):(nm(A.one_src[f], B.one_src[g]),
                      nm(A.one_tgt[f], B.one_tgt[g]))
           for f in sorted(A.one_src) for g in sorted(B.one_src)}
    two = {nm(a, b): (nm(A.two_src[a], B.two_src[b]),
                      nm(A.two_tgt[a], B.two_tgt[b]))
           for a in sorted(A.two_src) for b in sorted(B.two_src)}
    id1 = {nm(x, y): nm(A.id1[x], B.id1[y]) for x in A.objects for y in B.objects}
    id2 = {nm(f, g): nm(A.id2[f], B.id2[g])
           for f in sorted(A.one_src) for g in sorted(B.one_src)}
    comp1 = {}
    for (g1, f1), r1 in A.comp1.items():
        for (g2, f2), r2 in B.comp1.items():
            comp1[(nm(g1, g2), nm(f1, f2))] = nm(r1, r2)
    vcomp = {}
    for (b1, a1), r1 in A.vcomp.items():
        for (b2, a2), r2 in B.vcomp.items():
            vcomp[(nm(b1, b2), nm(a1, a2))] = nm(r1, r2)
    whisk_l = {}
    for (k1, a1), r1 in A.whisk_l.items():
        for (k2, a2), r2 in B.whisk_l.items():
            whisk_l[(nm(k1, k2), nm(a1, a2))] = nm(r1, r2)
    whisk_r = {}
    for (a1, k1), r1 in A.whisk_r.items():
        for (a2, k2), r2 in B.whisk_r.items():
            whisk_r[(nm(a1, a2), nm(k1, k2))] = nm(r1, r2)
    P = make_two_category(objects, one, two, id1, id2,
                          comp1, vcomp, whisk_l, whisk_r)
    import ast
    def part(s, i):
        return ast.literal_eval(s)[i]
    pr1 = TwoFunctor(P, A,
                     {o: part(o, 0) for o in P.objects},
                     {f: part(f, 0) for f in P.one_src},
                     {a: part(a, 0) for a in P.two_src})
    pr2 = TwoFunctor(P, B,
                     {o: part(o, 1) for o in P.objects},
                     {f: part(f, 1) for f in P.one_src},
                     {a: part(a, 1) for a in P.two_src})
    return P, pr1, pr2


def point_functor(D: TwoCategory, x: str) -> TwoFunctor:
    """The 2-functor from the terminal 2-category picking out object x."""
    T = fix_t()
    return TwoFunctor(T, D, {"pt": x}, {T.id1["pt"]: D.id1[x]},
                      {T.id2[T.id1["pt"]]: D.id2[D.id1[x]]})


def bang_functor(C: TwoCategory) -> TwoFunctor:
    """The unique 2-functor C -> terminal."""
    T = fix_t()
    return TwoFunctor(C, T, {x: "pt" for x in C.objects},
                      {f: T.id1["pt"] for f in C.one_src},
                      {a: T.id2[T.id1["pt"]] for a in C.two_src})


def empty_two_category() -> TwoCategory:
    return make_two_category([], {}, {}, {}, {}, {}, {}, {}, {})
