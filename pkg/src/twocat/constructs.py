"""Limit-type constructions on finite 2-categories.

Strict pullbacks, the lax comma object laco(F, G) and its oplax variant,
mediating 2-functors from the universal property, base change along a
1-cell of the base, strict fibers, and oplax initial/terminal witnesses.

Cells of a comma object are named by canonical tuples of constituent
identifiers (via fixtures.nm), so outputs are deterministic and diffable.

Conventions (cospan F: X -> Y <- Z : G):

* object [x, f, z] with f: F(x) -> G(z);
* laco 1-cell [s, a, t]: [x,f,z] -> [x',f',z'] with a: Gt.f => f'.Fs;
* oplaco 1-cell: a: f'.Fs => Gt.f;
* 2-cell [phi, ga] subject to the pasting equality relating a, a'.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import (LAX, OPLAX, TWO_NATURAL, Transformation, TwoCategory,
                   TwoFunctor, make_two_category)
from .fixtures import fix_t, nm, point_functor


# ---------------------------------------------------------------------------
# strict pullback
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PullbackResult:
    cat: TwoCategory
    pr_left: TwoFunctor
    pr_right: TwoFunctor
    obj_id: dict
    one_id: dict
    two_id: dict


def pullback(F: TwoFunctor, G: TwoFunctor) -> PullbackResult:
    """Strict pullback of the cospan F: X -> Y <- Z : G; cells are pairs
    agreeing in Y on the nose."""
    X, Z = F.source, G.source
    objs = {}
    for x in X.objects:
        for z in Z.objects:
            if F.on_objects[x] == G.on_objects[z]:
                objs[(x, z)] = nm("o", x, z)
    ones = {}
    for s in sorted(X.one_src):
        for t in sorted(Z.one_src):
            if F.on_one[s] == G.on_one[t]:
                ones[(s, t)] = nm("1", s, t)
    twos = {}
    for p in sorted(X.two_src):
        for q in sorted(Z.two_src):
            if F.on_two[p] == G.on_two[q]:
                twos[(p, q)] = nm("2", p, q)
    one_cells = {v: (objs[(X.one_src[s], Z.one_src[t])],
                     objs[(X.one_tgt[s], Z.one_tgt[t])])
                 for (s, t), v in ones.items()}
    two_cells = {v: (ones[(X.two_src[p], Z.two_src[q])],
                     ones[(X.two_tgt[p], Z.two_tgt[q])])
                 for (p, q), v in twos.items()}
    id1 = {o: ones[(X.id1[x], Z.id1[z])] for (x, z), o in objs.items()}
    id2 = {f: twos[(X.id2[s], Z.id2[t])] for (s, t), f in ones.items()}
    comp1 = {}
    for (s2, t2), g in ones.items():
        for (s1, t1), f in ones.items():
            if X.one_tgt[s1] == X.one_src[s2] and Z.one_tgt[t1] == Z.one_src[t2]:
                comp1[(g, f)] = ones[(X.comp1[(s2, s1)], Z.comp1[(t2, t1)])]
    vcomp = {}
    for (p2, q2), b in twos.items():
        for (p1, q1), a in twos.items():
            if X.two_tgt[p1] == X.two_src[p2] and Z.two_tgt[q1] == Z.two_src[q2]:
                vcomp[(b, a)] = twos[(X.vcomp[(p2, p1)], Z.vcomp[(q2, q1)])]
    whisk_l = {}
    whisk_r = {}
    for (p, q), a in twos.items():
        fs = one_cells[two_cells[a][0]]
        for (s, t), k in ones.items():
            if one_cells[k][0] == fs[1]:
                whisk_l[(k, a)] = twos[(X.whisk_l[(s, p)], Z.whisk_l[(t, q)])]
            if one_cells[k][1] == fs[0]:
                whisk_r[(a, k)] = twos[(X.whisk_r[(p, s)], Z.whisk_r[(q, t)])]
    cat = make_two_category(objs.values(), one_cells, two_cells, id1, id2,
                            comp1, vcomp, whisk_l, whisk_r)
    pr_left = TwoFunctor(cat, X,
                         {o: x for (x, z), o in objs.items()},
                         {f: s for (s, t), f in ones.items()},
                         {a: p for (p, q), a in twos.items()})
    pr_right = TwoFunctor(cat, Z,
                          {o: z for (x, z), o in objs.items()},
                          {f: t for (s, t), f in ones.items()},
                          {a: q for (p, q), a in twos.items()})
    return PullbackResult(cat, pr_left, pr_right, objs, ones, twos)


# ---------------------------------------------------------------------------
# lax and oplax comma objects
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CommaResult:
    cat: TwoCategory
    p_left: TwoFunctor        # projection to X
    p_right: TwoFunctor       # projection to Z
    pi: Transformation        # lax (laco) or oplax (oplaco)
    obj_id: dict              # (x, f, z) -> object id
    one_id: dict              # (src_obj, tgt_obj, s, a, t) -> 1-cell id
    two_id: dict              # (src_one, tgt_one, phi, ga) -> 2-cell id
    obj_data: dict
    one_data: dict
    two_data: dict
    lax: bool = True


def _comma(F: TwoFunctor, G: TwoFunctor, lax: bool) -> CommaResult:
    X, Z = F.source, G.source
    Y = F.target
    assert G.target == Y
    objs = {}
    for x in X.objects:
        for z in Z.objects:
            for f in Y.hom1(F.on_objects[x], G.on_objects[z]):
                objs[(x, f, z)] = nm("o", x, f, z)
    ones = {}
    for (x, f, z), o in sorted(objs.items()):
        for (x2, f2, z2), o2 in sorted(objs.items()):
            for s in X.hom1(x, x2):
                for t in Z.hom1(z, z2):
                    gt_f = Y.comp1[(G.on_one[t], f)]
                    f2_fs = Y.comp1[(f2, F.on_one[s])]
                    pair = (gt_f, f2_fs) if lax else (f2_fs, gt_f)
                    for a in Y.hom2(*pair):
                        ones[(o, o2, s, a, t)] = nm("1", o, o2, s, a, t)
    obj_data = {v: k for k, v in objs.items()}
    twos = {}
    for (o, o2, s, a, t), m in sorted(ones.items()):
        for (p, p2, s2, a2, t2), m2 in sorted(ones.items()):
            if (p, p2) != (o, o2):
                continue
            (_, f, _) = obj_data[o]
            (_, f2, _) = obj_data[o2]
            for phi in X.hom2(s, s2):
                for ga in Z.hom2(t, t2):
                    if lax:
                        lhs = Y.vcomp[(Y.whisk_l[(f2, F.on_two[phi])], a)]
                        rhs = Y.vcomp[(a2, Y.whisk_r[(G.on_two[ga], f)])]
                    else:
                        lhs = Y.vcomp[(a2, Y.whisk_l[(f2, F.on_two[phi])])]
                        rhs = Y.vcomp[(Y.whisk_r[(G.on_two[ga], f)], a)]
                    if lhs == rhs:
                        twos[(m, m2, phi, ga)] = nm("2", m, m2, phi, ga)
    one_data = {v: k for k, v in ones.items()}
    two_data = {v: k for k, v in twos.items()}

    one_cells = {m: (o, o2) for (o, o2, s, a, t), m in ones.items()}
    two_cells = {c: (m, m2) for (m, m2, phi, ga), c in twos.items()}
    id1 = {}
    for (x, f, z), o in objs.items():
        id1[o] = ones[(o, o, X.id1[x], Y.id2[f], Z.id1[z])]
    id2 = {}
    for (o, o2, s, a, t), m in ones.items():
        id2[m] = twos[(m, m, X.id2[s], Z.id2[t])]

    def compose1(key2, key1):
        (o1, o_mid, s1, a1, t1) = key1
        (_, o3, s2, a2, t2) = key2
        if lax:
            # G t2 . (G t1 . f) => G t2 . f' . F s1 => f'' . F s2 . F s1
            step1 = Y.whisk_l[(G.on_one[t2], a1)]
            step2 = Y.whisk_r[(a2, F.on_one[s1])]
        else:
            # f'' . F s2 . F s1 => G t2 . f' . F s1 => G t2 . G t1 . f
            step1 = Y.whisk_r[(a2, F.on_one[s1])]
            step2 = Y.whisk_l[(G.on_one[t2], a1)]
        a = Y.vcomp[(step2, step1)]
        return ones[(o1, o3, X.comp1[(s2, s1)], a, Z.comp1[(t2, t1)])]

    comp1 = {}
    for key2, m2 in ones.items():
        for key1, m1 in ones.items():
            if key1[1] == key2[0]:
                comp1[(m2, m1)] = compose1(key2, key1)
    vcomp = {}
    for (m, m2, phi2, ga2), c2 in twos.items():
        for (m0, m1, phi1, ga1), c1 in twos.items():
            if m1 == m:
                vcomp[(c2, c1)] = twos[(m0, m2, X.vcomp[(phi2, phi1)],
                                        Z.vcomp[(ga2, ga1)])]
    whisk_l = {}
    whisk_r = {}
    for (m, m2, phi, ga), c in twos.items():
        (o, o2, s, a, t) = one_data[m]
        for key_k, k in ones.items():
            (ko, ko2, ks, ka, kt) = key_k
            if ko == o2:   # k . (m => m2)
                whisk_l[(k, c)] = twos[(comp1[(k, m)], comp1[(k, m2)],
                                        X.whisk_l[(ks, phi)],
                                        Z.whisk_l[(kt, ga)])]
            if ko2 == o:   # (m => m2) . k
                whisk_r[(c, k)] = twos[(comp1[(m, k)], comp1[(m2, k)],
                                        X.whisk_r[(phi, ks)],
                                        Z.whisk_r[(ga, kt)])]
    cat = make_two_category(objs.values(), one_cells, two_cells, id1, id2,
                            comp1, vcomp, whisk_l, whisk_r)
    p_left = TwoFunctor(cat, X,
                        {o: k[0] for k, o in objs.items()},
                        {m: k[2] for k, m in ones.items()},
                        {c: k[2] for k, c in twos.items()})
    p_right = TwoFunctor(cat, Z,
                         {o: k[2] for k, o in objs.items()},
                         {m: k[4] for k, m in ones.items()},
                         {c: k[3] for k, c in twos.items()})
    pi = Transformation(
        source=_compose_ft(F, p_left),
        target=_compose_ft(G, p_right),
        at_object={o: k[1] for k, o in objs.items()},
        at_one={m: k[3] for k, m in ones.items()},
        direction=LAX if lax else OPLAX,
        flavor=LAX if lax else OPLAX)
    return CommaResult(cat, p_left, p_right, pi, objs, ones, twos,
                       obj_data, one_data, two_data, lax)


def _compose_ft(G: TwoFunctor, F: TwoFunctor) -> TwoFunctor:
    from .core import compose_functors
    return compose_functors(G, F)


def laco(F: TwoFunctor, G: TwoFunctor) -> CommaResult:
    """Lax comma object of the cospan F: X -> Y <- Z : G."""
    return _comma(F, G, lax=True)


def oplaco(F: TwoFunctor, G: TwoFunctor) -> CommaResult:
    """Oplax comma object (2-cell slot reversed)."""
    return _comma(F, G, lax=False)


def mediate_laco(L: CommaResult, R: TwoFunctor, Q: TwoFunctor,
                 lam: Transformation) -> TwoFunctor:
    """The unique mediating 2-functor h: K -> laco(F, G) with p_X.h = R,
    p_Z.h = Q and pi recovered as lam.

    lam must be a lax transformation F.R => G.Q (oplax for an oplax comma).
    Raises AxiomError/KeyError if lam does not fit."""
    K = R.source
    want = LAX if L.lax else OPLAX
    if lam.direction != want:
        raise ValueError("mediating transformation has direction %r, need %r"
                         % (lam.direction, want))
    on_obj = {}
    for k in K.objects:
        on_obj[k] = L.obj_id[(R.on_objects[k], lam.at_object[k], Q.on_objects[k])]
    on_one = {}
    for m in K.one_src:
        o = on_obj[K.one_src[m]]
        o2 = on_obj[K.one_tgt[m]]
        on_one[m] = L.one_id[(o, o2, R.on_one[m], lam.at_one[m], Q.on_one[m])]
    on_two = {}
    for c in K.two_src:
        m = on_one[K.two_src[c]]
        m2 = on_one[K.two_tgt[c]]
        on_two[c] = L.two_id[(m, m2, R.on_two[c], Q.on_two[c])]
    return TwoFunctor(K, L.cat, on_obj, on_one, on_two)


def comma_inclusion(PB: PullbackResult, L: CommaResult,
                    F: TwoFunctor, G: TwoFunctor) -> TwoFunctor:
    """The inclusion i: pb(F,G) -> laco(F,G) mediated by identity laxity."""
    Y = F.target
    lam = Transformation(
        source=_compose_ft(F, PB.pr_left),
        target=_compose_ft(G, PB.pr_right),
        at_object={o: Y.id1[F.on_objects[x]]
                   for (x, z), o in PB.obj_id.items()},
        at_one={m: Y.id2[F.on_one[s]] for (s, t), m in PB.one_id.items()},
        direction=LAX if L.lax else OPLAX,
        flavor=TWO_NATURAL)
    return mediate_laco(L, PB.pr_left, PB.pr_right, lam)


def strict_fiber(P: TwoFunctor, x: str):
    """Sub-2-category of P's source on cells mapping to (x, 1_x, 1_{1_x});
    returns (fiber, inclusion)."""
    C, D = P.source, P.target
    objs = [o for o in C.objects if P.on_objects[o] == x]
    idx1 = D.id1[x]
    idx2 = D.id2[idx1]
    ones = {f: (C.one_src[f], C.one_tgt[f]) for f in C.one_src
            if P.on_one[f] == idx1 and C.one_src[f] in set(objs)
            and C.one_tgt[f] in set(objs)}
    twos = {a: (C.two_src[a], C.two_tgt[a]) for a in C.two_src
            if P.on_two[a] == idx2 and C.two_src[a] in ones
            and C.two_tgt[a] in ones}
    id1 = {o: C.id1[o] for o in objs}
    id2 = {f: C.id2[f] for f in ones}
    comp1 = {k: v for k, v in C.comp1.items() if k[0] in ones and k[1] in ones}
    vcomp = {k: v for k, v in C.vcomp.items() if k[0] in twos and k[1] in twos}
    whisk_l = {k: v for k, v in C.whisk_l.items()
               if k[0] in ones and k[1] in twos}
    whisk_r = {k: v for k, v in C.whisk_r.items()
               if k[0] in twos and k[1] in ones}
    fib = make_two_category(objs, ones, twos, id1, id2,
                            comp1, vcomp, whisk_l, whisk_r)
    incl = TwoFunctor(fib, C, {o: o for o in objs}, {f: f for f in ones},
                      {a: a for a in twos})
    return fib, incl


def base_change(F: TwoFunctor, phi: str,
                Lx: CommaResult | None = None,
                Ly: CommaResult | None = None) -> TwoFunctor:
    """laco(F, xhat) -> laco(F, yhat) for a 1-cell phi: x -> y in F's target:
    post-compose the comma 1-cell slot with phi and whisker the 2-cell slot."""
    D = F.target
    x, y = D.one_src[phi], D.one_tgt[phi]
    if Lx is None:
        Lx = laco(F, point_functor(D, x))
    if Ly is None:
        Ly = laco(F, point_functor(D, y))
    on_obj = {}
    for (c, f, _), o in Lx.obj_id.items():
        on_obj[o] = Ly.obj_id[(c, D.comp1[(phi, f)], "pt")]
    on_one = {}
    for (o, o2, s, a, t), m in Lx.one_id.items():
        a2 = D.whisk_l[(phi, a)]
        on_one[m] = Ly.one_id[(on_obj[o], on_obj[o2], s, a2, t)]
    on_two = {}
    for (m, m2, p, g), c in Lx.two_id.items():
        on_two[c] = Ly.two_id[(on_one[m], on_one[m2], p, g)]
    return TwoFunctor(Lx.cat, Ly.cat, on_obj, on_one, on_two)


def check_mediator_unique(L: CommaResult, R: TwoFunctor, Q: TwoFunctor,
                          lam: Transformation, h: TwoFunctor) -> bool:
    """Every cell of the comma object is determined by its two projections
    and its pi-component, so any mediator agreeing with (R, Q, lam) equals h;
    verified by exhaustive enumeration of candidate images."""
    K = R.source
    for k in K.objects:
        cands = [o for (x, f, z), o in L.obj_id.items()
                 if x == R.on_objects[k] and z == Q.on_objects[k]
                 and f == lam.at_object[k]]
        if cands != [h.on_objects[k]]:
            return False
    for m in K.one_src:
        cands = [c for (o, o2, s, a, t), c in L.one_id.items()
                 if s == R.on_one[m] and t == Q.on_one[m]
                 and a == lam.at_one[m]
                 and o == h.on_objects[K.one_src[m]]
                 and o2 == h.on_objects[K.one_tgt[m]]]
        if cands != [h.on_one[m]]:
            return False
    for d in K.two_src:
        cands = [c for (m, m2, phi, ga), c in L.two_id.items()
                 if phi == R.on_two[d] and ga == Q.on_two[d]
                 and m == h.on_one[K.two_src[d]]
                 and m2 == h.on_one[K.two_tgt[d]]]
        if cands != [h.on_two[d]]:
            return False
    return True


def lp_id_data(G: TwoFunctor, L: CommaResult | None = None):
    """For G: E -> D, the inclusion J: E -> laco(1_D, G), z -> [Gz, 1, z],
    together with the lax transformation mu: Id => J . p_E that exhibits
    the projection p_E as a deformation retraction; returns (L, J, mu)."""
    from .core import compose_functors, identity_functor
    E, D = G.source, G.target
    if L is None:
        L = laco(identity_functor(D), G)
    lam = Transformation(G, G,
                         {z: D.id1[G.on_objects[z]] for z in E.objects},
                         {m: D.id2[G.on_one[m]] for m in E.one_src},
                         direction=LAX, flavor=TWO_NATURAL)
    J = mediate_laco(L, G, identity_functor(E), lam)
    JpE = compose_functors(J, L.p_right)
    at_obj = {}
    for (x, f, z), o in L.obj_id.items():
        at_obj[o] = L.one_id[(o, JpE.on_objects[o], f, D.id2[f], E.id1[z])]
    at_one = {}
    for m in L.cat.one_src:
        o, o2 = L.cat.one_src[m], L.cat.one_tgt[m]
        src1 = L.cat.comp1[(JpE.on_one[m], at_obj[o])]
        tgt1 = L.cat.comp1[(at_obj[o2], m)]
        (_, _, s, a, t) = L.one_data[m]
        at_one[m] = L.two_id[(src1, tgt1, a, E.id2[t])]
    mu = Transformation(identity_functor(L.cat), JpE, at_obj, at_one,
                        direction=LAX, flavor=LAX)
    return L, J, mu


# ---------------------------------------------------------------------------
# oplax initial / terminal objects
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OplaxInitialWitness:
    obj: str
    at_object: dict[str, str]   # j -> 1-cell iota -> j
    at_one: dict[str, str]      # f: i -> j  ->  2-cell h_j => f . h_i


def _constant_functor(E: TwoCategory, iota: str) -> TwoFunctor:
    return TwoFunctor(E, E, {j: iota for j in E.objects},
                      {f: E.id1[iota] for f in E.one_src},
                      {a: E.id2[E.id1[iota]] for a in E.two_src})


def _witness_transformation(E: TwoCategory, w: OplaxInitialWitness) -> Transformation:
    from .core import identity_functor
    return Transformation(_constant_functor(E, w.obj), identity_functor(E),
                          dict(w.at_object), dict(w.at_one),
                          direction=OPLAX, flavor=OPLAX)


def find_oplax_initial(E: TwoCategory) -> OplaxInitialWitness | None:
    """Exhaustive search, lexicographic in identifier order; first witness
    wins.  Components h_j: iota -> j and 2-cells h_f: h_j => f . h_i with
    h_iota = 1 and unit components forced to identities."""
    from .core import AxiomError, validate_transformation
    for iota in E.objects:
        others = [j for j in E.objects if j != iota]
        comp_choices = [E.hom1(iota, j) for j in others]
        if any(not ch for ch in comp_choices):
            continue
        nonid_ones = [f for f in sorted(E.one_src) if not E.is_id1(f)]
        for comps in product(*comp_choices):
            at_obj = dict(zip(others, comps))
            at_obj[iota] = E.id1[iota]
            cell_choices = []
            ok = True
            for f in nonid_ones:
                i, j = E.one_src[f], E.one_tgt[f]
                # h_f: h_j => f . h_i
                cand = E.hom2(at_obj[j], E.comp1[(f, at_obj[i])])
                if not cand:
                    ok = False
                    break
                cell_choices.append(cand)
            if not ok:
                continue
            for cells in product(*cell_choices):
                at_one = dict(zip(nonid_ones, cells))
                for f in E.one_src:
                    if E.is_id1(f):
                        at_one[f] = E.id2[at_obj[E.one_src[f]]]
                w = OplaxInitialWitness(iota, at_obj, at_one)
                # normalization: whiskering with the point at iota is trivial
                if at_obj[iota] != E.id1[iota]:
                    continue
                t = _witness_transformation(E, w)
                try:
                    validate_transformation(t)
                except AxiomError:
                    continue
                return w
    return None


def find_oplax_terminal(E: TwoCategory) -> OplaxInitialWitness | None:
    """Oplax terminal = oplax initial in E^op; the witness is returned in
    E^op terms (components are 1-cells j -> tau of E)."""
    from .core import op_dual
    return find_oplax_initial(op_dual(E))


# ---------------------------------------------------------------------------
# diagram-shaped comma objects: laco(Delta F, G-hat) over oplax(E, D)
# ---------------------------------------------------------------------------
#
# For F: C -> D and a diagram G: E -> D, the comma object below is built
# directly from its concrete cell description (the functor 2-category
# oplax(E, D) is never materialized):
#
# * objects (c, nu): c in C, nu an oplax transformation Delta F(c) => G,
#   i.e. components nu_j: F(c) -> G(j) and cells nu_e: nu_j => G(e).nu_i
#   per 1-cell e: i -> j of E, unital and compatible with composition and
#   with 2-cells of E;
# * 1-cells (s, La): s: c -> c' in C, La a modification nu => nu'.DeltaF(s)
#   with components La_j: nu_j => nu'_j . F(s);
# * 2-cells phi: s => s' with La'_j = (nu'_j * F phi) . La_j for all j.


@dataclass(frozen=True)
class DiagramCommaResult:
    cat: TwoCategory
    p_left: TwoFunctor          # projection to C
    obj_id: dict                # (c, comps, cells) -> id
    one_id: dict                # (src_obj, tgt_obj, s, La) -> id
    two_id: dict                # (src_one, tgt_one, phi) -> id
    obj_data: dict
    one_data: dict
    two_data: dict
    E: TwoCategory
    G: TwoFunctor


def _oplax_cone_ok(D: TwoCategory, E: TwoCategory, G: TwoFunctor,
                   comps: dict, cells: dict) -> bool:
    """Axioms for an oplax transformation Delta(dom) => G with the given
    components; `cells[e]: comps[j] => G(e) . comps[i]` for e: i -> j."""
    # composition axiom
    for e2 in E.one_src:
        for e1 in E.one_src:
            if E.one_tgt[e1] != E.one_src[e2]:
                continue
            e21 = E.comp1[(e2, e1)]
            # nu_{e2 e1} = (G e2 * nu_{e1}) . nu_{e2} ... with Delta source:
            # nu_k => G(e2).nu_j => G(e2).G(e1).nu_i
            want = D.vcomp[(D.whisk_l[(G.on_one[e2], cells[e1])], cells[e2])]
            if cells[e21] != want:
                return False
    # naturality in 2-cells of E
    for d in E.two_src:
        e1, e2 = E.two_src[d], E.two_tgt[d]
        i = E.one_src[e1]
        # (G d * nu_i) . nu_{e1} == nu_{e2}
        lhs = D.vcomp[(D.whisk_r[(G.on_two[d], comps[i])], cells[e1])]
        if lhs != cells[e2]:
            return False
    return True


def _enumerate_cones(F: TwoFunctor, c: str, E: TwoCategory, G: TwoFunctor):
    """All oplax transformations Delta F(c) => G, as (comps, cells) pairs of
    sorted tuples.  Backtracks over components then structure cells."""
    D = F.target
    fc = F.on_objects[c]
    eobjs = sorted(E.objects)
    nonid = [e for e in sorted(E.one_src) if not E.is_id1(e)]
    out = []
    comp_choices = [D.hom1(fc, G.on_objects[j]) for j in eobjs]
    for comps_tuple in product(*comp_choices):
        comps = dict(zip(eobjs, comps_tuple))
        cell_choices = []
        ok = True
        for e in nonid:
            i, j = E.one_src[e], E.one_tgt[e]
            cand = D.hom2(comps[j], D.comp1[(G.on_one[e], comps[i])])
            if not cand:
                ok = False
                break
            cell_choices.append(cand)
        if not ok:
            continue
        for cells_tuple in product(*cell_choices):
            cells = dict(zip(nonid, cells_tuple))
            for e in E.one_src:
                if E.is_id1(e):
                    cells[e] = D.id2[comps[E.one_src[e]]]
            if _oplax_cone_ok(D, E, G, comps, cells):
                out.append((tuple(sorted(comps.items())),
                            tuple(sorted(cells.items()))))
    return out


def laco_diagram(F: TwoFunctor, G: TwoFunctor) -> DiagramCommaResult:
    """laco(Delta F, G-hat) for F: C -> D and a diagram G: E -> D."""
    C, D = F.source, F.target
    E = G.source
    assert G.target == D
    objs = {}
    for c in C.objects:
        for comps, cells in _enumerate_cones(F, c, E, G):
            objs[(c, comps, cells)] = nm("o", c, comps, cells)
    ones = {}
    for (c, comps, cells), o in sorted(objs.items()):
        dcomps = dict(comps)
        for (c2, comps2, cells2), o2 in sorted(objs.items()):
            dcomps2 = dict(comps2)
            for s in C.hom1(c, c2):
                # modification La: nu => nu'.DeltaF(s)
                la_choices = []
                ok = True
                for j in sorted(E.objects):
                    cand = D.hom2(dcomps[j], D.comp1[(dcomps2[j], F.on_one[s])])
                    if not cand:
                        ok = False
                        break
                    la_choices.append(cand)
                if not ok:
                    continue
                for la_tuple in product(*la_choices):
                    la = dict(zip(sorted(E.objects), la_tuple))
                    if _modification_ok(D, E, G, F.on_one[s],
                                        dict(comps), dict(cells),
                                        dict(comps2), dict(cells2), la):
                        key = tuple(sorted(la.items()))
                        ones[(o, o2, s, key)] = nm("1", o, o2, s, key)
    obj_data = {v: k for k, v in objs.items()}
    twos = {}
    for (o, o2, s, la), m in sorted(ones.items()):
        dla = dict(la)
        (_, comps2, _) = obj_data[o2]
        dcomps2 = dict(comps2)
        for (p, p2, s2, la2), m2 in sorted(ones.items()):
            if (p, p2) != (o, o2):
                continue
            dla2 = dict(la2)
            for phi in C.hom2(s, s2):
                if all(dla2[j] == D.vcomp[(D.whisk_l[(dcomps2[j],
                                                      F.on_two[phi])], dla[j])]
                       for j in E.objects):
                    twos[(m, m2, phi)] = nm("2", m, m2, phi)

    one_data = {v: k for k, v in ones.items()}
    two_data = {v: k for k, v in twos.items()}
    one_cells = {m: (k[0], k[1]) for k, m in ones.items()}
    two_cells = {x: (k[0], k[1]) for k, x in twos.items()}
    id1 = {}
    for (c, comps, cells), o in objs.items():
        la = tuple(sorted((j, D.id2[f]) for j, f in comps))
        id1[o] = ones[(o, o, C.id1[c], la)]
    id2 = {m: twos[(m, m, C.id2[k[2]])] for k, m in ones.items()}

    comp1 = {}
    for key2, m2 in ones.items():
        for key1, m1 in ones.items():
            if key1[1] != key2[0]:
                continue
            (o1, omid, s1, la1) = key1
            (_, o3, s2, la2) = key2
            d1, d2 = dict(la1), dict(la2)
            la = tuple(sorted(
                (j, D.vcomp[(D.whisk_r[(d2[j], F.on_one[s1])], d1[j])])
                for j in E.objects))
            comp1[(m2, m1)] = ones[(o1, o3, C.comp1[(s2, s1)], la)]
    vcomp = {}
    for (ma, mb, phi2), c2 in twos.items():
        for (m0, m1, phi1), c1 in twos.items():
            if m1 == ma:
                vcomp[(c2, c1)] = twos[(m0, mb, C.vcomp[(phi2, phi1)])]
    whisk_l = {}
    whisk_r = {}
    for (m, m2, phi), cc in twos.items():
        for key_k, k in ones.items():
            (ko, ko2, ks, kla) = key_k
            if ko == one_cells[m][1]:
                whisk_l[(k, cc)] = twos[(comp1[(k, m)], comp1[(k, m2)],
                                         C.whisk_l[(ks, phi)])]
            if ko2 == one_cells[m][0]:
                whisk_r[(cc, k)] = twos[(comp1[(m, k)], comp1[(m2, k)],
                                         C.whisk_r[(phi, ks)])]
    cat = make_two_category(objs.values(), one_cells, two_cells, id1, id2,
                            comp1, vcomp, whisk_l, whisk_r)
    p_left = TwoFunctor(cat, C,
                        {o: k[0] for k, o in objs.items()},
                        {m: k[2] for k, m in ones.items()},
                        {x: k[2] for k, x in twos.items()})
    return DiagramCommaResult(cat, p_left, objs, ones, twos,
                              obj_data, one_data, two_data, E, G)


def _modification_ok(D, E, G, fs, comps, cells, comps2, cells2, la) -> bool:
    """Modification axiom for La: nu => nu'.DeltaF(s) between oplax cones:
    for each e: i -> j of E,
      (G e * La_i) . nu_e  ==  (nu'_e * Fs) . La_j.
    """
    for e in E.one_src:
        i, j = E.one_src[e], E.one_tgt[e]
        lhs = D.vcomp[(D.whisk_l[(G.on_one[e], la[i])], cells[e])]
        rhs = D.vcomp[(D.whisk_r[(cells2[e], fs)], la[j])]
        if lhs != rhs:
            return False
    return True


def lp_initial_d_e(F: TwoFunctor, G: TwoFunctor,
                   w: OplaxInitialWitness,
                   Lpt: CommaResult | None = None,
                   Ldia: DiagramCommaResult | None = None):
    """The 2-functors d: laco(F, G(iota)-hat) -> laco(Delta F, G-hat) and
    e back, plus the 2-natural transformation Id => d.e, for an oplax
    initial object witness w of E = G.source.

    Returns (d, e, eta, Lpt, Ldia)."""
    C, D = F.source, F.target
    E = G.source
    iota = w.obj
    if Lpt is None:
        Lpt = laco(F, point_functor(D, G.on_objects[iota]))
    if Ldia is None:
        Ldia = laco_diagram(F, G)

    def push_cone(f_iota):
        comps = {j: D.comp1[(G.on_one[w.at_object[j]], f_iota)]
                 for j in E.objects}
        cells = {e: D.whisk_r[(G.on_two[w.at_one[e]], f_iota)]
                 for e in E.one_src}
        return (tuple(sorted(comps.items())), tuple(sorted(cells.items())))

    d_obj = {}
    for (c, f, _), o in Lpt.obj_id.items():
        comps, cells = push_cone(f)
        d_obj[o] = Ldia.obj_id[(c, comps, cells)]
    d_one = {}
    for (o, o2, s, a, t), m in Lpt.one_id.items():
        la = tuple(sorted(
            (j, D.whisk_l[(G.on_one[w.at_object[j]], a)])
            for j in E.objects))
        d_one[m] = Ldia.one_id[(d_obj[o], d_obj[o2], s, la)]
    d_two = {}
    for (m, m2, phi, ga), cc in Lpt.two_id.items():
        d_two[cc] = Ldia.two_id[(d_one[m], d_one[m2], phi)]
    d = TwoFunctor(Lpt.cat, Ldia.cat, d_obj, d_one, d_two)

    e_obj = {}
    for (c, comps, cells), o in Ldia.obj_id.items():
        e_obj[o] = Lpt.obj_id[(c, dict(comps)[iota], "pt")]
    e_one = {}
    for (o, o2, s, la), m in Ldia.one_id.items():
        e_one[m] = Lpt.one_id[(e_obj[o], e_obj[o2], s, dict(la)[iota],
                               Lpt.p_right.target.id1["pt"])]
    e_two = {}
    for (m, m2, phi), cc in Ldia.two_id.items():
        e_two[cc] = Lpt.two_id[(e_one[m], e_one[m2], phi,
                                Lpt.p_right.target.id2[
                                    Lpt.p_right.target.id1["pt"]])]
    e = TwoFunctor(Ldia.cat, Lpt.cat, e_obj, e_one, e_two)

    # 2-natural Id => d.e with component at (c, nu) the 1-cell
    # [1_c, {nu_{h_j}}_j]: (c, nu) -> de(c, nu)
    from .core import compose_functors, identity_functor
    de = compose_functors(d, e)
    at_obj = {}
    for (c, comps, cells), o in Ldia.obj_id.items():
        dcells = dict(cells)
        la = tuple(sorted((j, dcells[w.at_object[j]]) for j in E.objects))
        at_obj[o] = Ldia.one_id[(o, de.on_objects[o], C.id1[c], la)]
    at_one = {}
    for m in Ldia.cat.one_src:
        o = Ldia.cat.one_src[m]
        composite = Ldia.cat.comp1[(de.on_one[m], at_obj[o])]
        at_one[m] = Ldia.cat.id2[composite]
    eta = Transformation(identity_functor(Ldia.cat), de, at_obj, at_one,
                         direction=LAX, flavor=TWO_NATURAL)
    return d, e, eta, Lpt, Ldia


# ---------------------------------------------------------------------------
# codiagram-shaped comma objects: cocones under a diagram W: E -> D
# ---------------------------------------------------------------------------
#
# * objects (d, nu): d in D, nu a lax transformation W => Delta d, i.e.
#   components nu_i: W(i) -> d and cells nu_e: nu_i => nu_{i'}.W(e) per
#   1-cell e: i -> i' of E, unital and compatible with composition and with
#   2-cells of E;
# * 1-cells (t, La): t: d -> d' in D, La with components
#   La_i: nu'_i => t . nu_i compatible with the cocone cells;
# * 2-cells ga: t => t' with La'_i = (ga * nu_i) . La_i for all i.


@dataclass(frozen=True)
class CodiagramResult:
    cat: TwoCategory
    p_right: TwoFunctor         # projection to D
    obj_id: dict                # (d, comps, cells) -> id
    one_id: dict                # (src_obj, tgt_obj, t, La) -> id
    two_id: dict                # (src_one, tgt_one, ga) -> id
    obj_data: dict
    one_data: dict
    two_data: dict
    E: TwoCategory
    W: TwoFunctor


def _lax_cocone_ok(D: TwoCategory, E: TwoCategory, W: TwoFunctor,
                   comps: dict, cells: dict) -> bool:
    """Axioms for a lax transformation W => Delta(cod) with the given
    components; ``cells[e]: comps[i] => comps[i'] . W(e)`` for e: i -> i'."""
    for e2 in E.one_src:
        for e1 in E.one_src:
            if E.one_tgt[e1] != E.one_src[e2]:
                continue
            e21 = E.comp1[(e2, e1)]
            want = D.vcomp[(D.whisk_r[(cells[e2], W.on_one[e1])], cells[e1])]
            if cells[e21] != want:
                return False
    for chi in E.two_src:
        e1, e2 = E.two_src[chi], E.two_tgt[chi]
        i2 = E.one_tgt[e1]
        lhs = D.vcomp[(D.whisk_l[(comps[i2], W.on_two[chi])], cells[e1])]
        if lhs != cells[e2]:
            return False
    return True


def _enumerate_cocones(W: TwoFunctor, d: str):
    D = W.target
    E = W.source
    eobjs = sorted(E.objects)
    nonid = [e for e in sorted(E.one_src) if not E.is_id1(e)]
    out = []
    comp_choices = [D.hom1(W.on_objects[i], d) for i in eobjs]
    for comps_tuple in product(*comp_choices):
        comps = dict(zip(eobjs, comps_tuple))
        cell_choices = []
        ok = True
        for e in nonid:
            i, i2 = E.one_src[e], E.one_tgt[e]
            cand = D.hom2(comps[i], D.comp1[(comps[i2], W.on_one[e])])
            if not cand:
                ok = False
                break
            cell_choices.append(cand)
        if not ok:
            continue
        for cells_tuple in product(*cell_choices):
            cells = dict(zip(nonid, cells_tuple))
            for e in E.one_src:
                if E.is_id1(e):
                    cells[e] = D.id2[comps[E.one_src[e]]]
            if _lax_cocone_ok(D, E, W, comps, cells):
                out.append((tuple(sorted(comps.items())),
                            tuple(sorted(cells.items()))))
    return out


def _cocone_mod_ok(D, E, W, t, comps, cells, comps2, cells2, la) -> bool:
    """For each e: i -> i' of E,
      (La_{i'} * W e) . nu'_e  ==  (t * nu_e) . La_i.
    """
    for e in E.one_src:
        i, i2 = E.one_src[e], E.one_tgt[e]
        lhs = D.vcomp[(D.whisk_r[(la[i2], W.on_one[e])], cells2[e])]
        rhs = D.vcomp[(D.whisk_l[(t, cells[e])], la[i])]
        if lhs != rhs:
            return False
    return True


def oplaco_codiagram(W: TwoFunctor) -> CodiagramResult:
    """The comma object of cocones under the diagram W: E -> D, dual to
    ``laco_diagram``: an object is an object of D with a lax cocone from W."""
    D = W.target
    E = W.source
    objs = {}
    for d in D.objects:
        for comps, cells in _enumerate_cocones(W, d):
            objs[(d, comps, cells)] = nm("o", d, comps, cells)
    ones = {}
    for (d, comps, cells), o in sorted(objs.items()):
        dcomps = dict(comps)
        for (d2, comps2, cells2), o2 in sorted(objs.items()):
            dcomps2 = dict(comps2)
            for t in D.hom1(d, d2):
                la_choices = []
                ok = True
                for i in sorted(E.objects):
                    cand = D.hom2(dcomps2[i], D.comp1[(t, dcomps[i])])
                    if not cand:
                        ok = False
                        break
                    la_choices.append(cand)
                if not ok:
                    continue
                for la_tuple in product(*la_choices):
                    la = dict(zip(sorted(E.objects), la_tuple))
                    if _cocone_mod_ok(D, E, W, t, dict(comps), dict(cells),
                                      dict(comps2), dict(cells2), la):
                        key = tuple(sorted(la.items()))
                        ones[(o, o2, t, key)] = nm("1", o, o2, t, key)
    obj_data = {v: k for k, v in objs.items()}
    twos = {}
    for (o, o2, t, la), m in sorted(ones.items()):
        dla = dict(la)
        (_, comps, _) = obj_data[o]
        dcomps = dict(comps)
        for (p, p2, t2, la2), m2 in sorted(ones.items()):
            if (p, p2) != (o, o2):
                continue
            dla2 = dict(la2)
            for ga in D.hom2(t, t2):
                if all(dla2[i] == D.vcomp[(D.whisk_r[(ga, dcomps[i])], dla[i])]
                       for i in E.objects):
                    twos[(m, m2, ga)] = nm("2", m, m2, ga)
    one_data = {v: k for k, v in ones.items()}
    two_data = {v: k for k, v in twos.items()}
    one_cells = {m: (k[0], k[1]) for k, m in ones.items()}
    two_cells = {x: (k[0], k[1]) for k, x in twos.items()}
    id1 = {}
    for (d, comps, cells), o in objs.items():
        la = tuple(sorted((i, D.id2[f]) for i, f in comps))
        id1[o] = ones[(o, o, D.id1[d], la)]
    id2 = {m: twos[(m, m, D.id2[k[2]])] for k, m in ones.items()}

    comp1 = {}
    for key2, m2 in ones.items():
        for key1, m1 in ones.items():
            if key1[1] != key2[0]:
                continue
            (o1, omid, t1, la1) = key1
            (_, o3, t2, la2) = key2
            d1, d2 = dict(la1), dict(la2)
            la = tuple(sorted(
                (i, D.vcomp[(D.whisk_l[(t2, d1[i])], d2[i])])
                for i in E.objects))
            comp1[(m2, m1)] = ones[(o1, o3, D.comp1[(t2, t1)], la)]
    vcomp = {}
    for (ma, mb, ga2), c2 in twos.items():
        for (m0, m1, ga1), c1 in twos.items():
            if m1 == ma:
                vcomp[(c2, c1)] = twos[(m0, mb, D.vcomp[(ga2, ga1)])]
    whisk_l = {}
    whisk_r = {}
    for (m, m2, ga), cc in twos.items():
        for key_k, k in ones.items():
            (ko, ko2, kt, kla) = key_k
            if ko == one_cells[m][1]:
                whisk_l[(k, cc)] = twos[(comp1[(k, m)], comp1[(k, m2)],
                                         D.whisk_l[(kt, ga)])]
            if ko2 == one_cells[m][0]:
                whisk_r[(cc, k)] = twos[(comp1[(m, k)], comp1[(m2, k)],
                                         D.whisk_r[(ga, kt)])]
    cat = make_two_category(objs.values(), one_cells, two_cells, id1, id2,
                            comp1, vcomp, whisk_l, whisk_r)
    p_right = TwoFunctor(cat, D,
                         {o: k[0] for k, o in objs.items()},
                         {m: k[2] for k, m in ones.items()},
                         {x: k[2] for k, x in twos.items()})
    return CodiagramResult(cat, p_right, objs, ones, twos,
                           obj_data, one_data, two_data, E, W)
