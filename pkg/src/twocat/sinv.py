"""Two-categorical group completion: freely inverting the action of a
permutative Gray monoid S on a 2-category X.

The completed 2-category ``S^-1 X`` has objects the pairs (a, x); a 1-cell
(a, x) -> (b, y) is a triple (s, alpha, phi) with alpha: s + a -> b in S and
phi: s.x -> y in X; a 2-cell is an equivalence class <p, (A, F)> of triples

    p: s -> s'          (1-cell of S)
    A: alpha  => alpha'.(p + 1_a)   (2-cell of S)
    F: phi    => phi'.(p . 1_x)     (2-cell of X)

where two triples are identified exactly when an invertible 2-cell
Theta: p => q of S pastes one onto the other.  Classes are represented by
their lexicographically least member; horizontal composition is computed by
two independent pasting formulas whose agreement is asserted at run time
(a disagreement would expose a quotient inconsistency upstream), and the
class quotient is checked to be a congruence exhaustively during
construction.

Also here: the completion at a point (the X coordinates omitted), the
re-action of S on the completion, translation inverses and the canonical
pseudonatural contraction they admit, the permutative sum carried by
``S^-1 S``, the projection to the point completion together with its
opfibration certificate, iso/lift criteria for completed 2-cells, the
collapse to a 1-category used for the classical comparison, and the
homology-level group completion check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import opfib as of
from .constructs import strict_fiber
from .core import (LAX, PSEUDONATURAL, AxiomError, Transformation,
                   TwoCategory, TwoFunctor, build_two_category,
                   compose_functors, functors_equal, identity_functor,
                   validate_transformation, validate_two_category,
                   validate_two_functor)
from .fixtures import bang_functor, fix_t, nm
from .homology import (_in_rel_lattice, homology_induced, presentation_of,
                       presented_map_is_iso)
from .intlinalg import columns, mvec
from .nerve import induced_map, nerve
from .opfib import Counterexample
from .pgm import (PGM, CommMonoid, PGMAction, has_faithful_translations,
                  is_two_groupoid, localize_presentation, pi0, pi0_monoid,
                  self_action, validate_action, validate_pgm)


def _ax(cond: bool, axiom: str, cells: tuple) -> None:
    if not cond:
        raise AxiomError("%s at %r" % (axiom, cells))


# ---------------------------------------------------------------------------
# the completed 2-category
# ---------------------------------------------------------------------------

@dataclass
class SInvCategory:
    """The completion S^-1 X with its naming tables.

    ``class_of`` maps every raw 2-cell triple (src 1-cell, tgt 1-cell,
    p, A, F) to the name of its class; ``two_data`` holds the canonical
    (lexicographically least) representative of each class and ``members``
    the full orbit.
    """
    cat: TwoCategory
    pgm: PGM
    action: PGMAction
    point: bool
    obj_name: dict
    obj_data: dict
    one_name: dict
    one_data: dict
    class_of: dict
    two_data: dict
    members: dict
    include: TwoFunctor | None = None

    def obj(self, a: str, x: str | None = None) -> str:
        if x is None:
            _ax(self.point, "x coordinate required", (a,))
            x = self.action.carrier.objects[0]
        return self.obj_name[(a, x)]

    def one(self, a: str, x: str, s: str, al: str, ph: str) -> str:
        return self.one_name[(a, x, s, al, ph)]

    def onep(self, a: str, s: str, al: str) -> str:
        _ax(self.point, "point-completion accessor", (a, s, al))
        T = self.action.carrier
        x = T.objects[0]
        return self.one_name[(a, x, s, al, T.id1[x])]

    def cls(self, m1: str, m2: str, p: str, A: str, F: str) -> str:
        return self.class_of[(m1, m2, p, A, F)]

    def clsp(self, m1: str, m2: str, p: str, A: str) -> str:
        _ax(self.point, "point-completion accessor", (m1, m2, p, A))
        T = self.action.carrier
        return self.class_of[(m1, m2, p, A, T.id2[T.id1[T.objects[0]]])]


def _theta_image(S, X, P, act, one_data, m2, rep, theta):
    """Paste an invertible Theta: p => q onto the representative rep of a
    2-cell into the 1-cell m2 = (a, x, s2, al2, ph2)."""
    a, x, _s2, al2, ph2 = one_data[m2]
    p, A, F = rep
    q = S.two_tgt[theta]
    A2 = S.vcomp[(S.whisk_l[(al2, P.rt(a).on_two[theta])], A)]
    F2 = X.vcomp[(X.whisk_l[(ph2, act.mr(x).on_two[theta])], F)]
    return (q, A2, F2)


def _build_sinv(P: PGM, act: PGMAction, point: bool,
                obj_nm, one_nm, two_nm) -> SInvCategory:
    S, X = P.carrier, act.carrier

    obj_name, obj_data = {}, {}
    for a in S.objects:
        for x in X.objects:
            n = obj_nm(a, x)
            obj_name[(a, x)] = n
            obj_data[n] = (a, x)

    one_name, one_data, one_cells = {}, {}, {}
    for a in S.objects:
        for x in X.objects:
            for s in S.objects:
                sa, sx = P.sum(s, a), act.act(s, x)
                for al in S.one_src:
                    if S.one_src[al] != sa:
                        continue
                    b = S.one_tgt[al]
                    for ph in X.one_src:
                        if X.one_src[ph] != sx:
                            continue
                        y = X.one_tgt[ph]
                        n = one_nm(a, x, s, al, ph)
                        one_name[(a, x, s, al, ph)] = n
                        one_data[n] = (a, x, s, al, ph)
                        one_cells[n] = (obj_name[(a, x)], obj_name[(b, y)])

    id1 = {}
    e = P.unit
    for (a, x), o in obj_name.items():
        id1[o] = one_name[(a, x, e, S.id1[a], X.id1[x])]

    def compose1(n2: str, n1: str) -> str:
        a, x, s, al, ph = one_data[n1]
        _b, _y, t, ga, ps = one_data[n2]
        return one_name[(a, x, P.sum(t, s),
                         S.comp1[(ga, P.lt(t).on_one[al])],
                         X.comp1[(ps, act.ml(t).on_one[ph])])]

    # invertible 2-cells of S out of each 1-cell, for the Theta action
    inv_out = {f: [] for f in S.one_src}
    for th in sorted(S.two_src):
        if S.is_invertible2(th):
            inv_out[S.two_src[th]].append(th)

    class_of, two_data, members, two_cells = {}, {}, {}, {}
    for m1, (a, x, s, al, ph) in sorted(one_data.items()):
        for m2, (a2, x2, s2, al2, ph2) in sorted(one_data.items()):
            if (a, x) != (a2, x2) or one_cells[m1][1] != one_cells[m2][1]:
                continue
            seen = set()
            reps = []
            for p in S.hom1(s, s2):
                tA = S.comp1[(al2, P.rt(a).on_one[p])]
                tF = X.comp1[(ph2, act.mr(x).on_one[p])]
                for A in S.hom2(al, tA):
                    for F in X.hom2(ph, tF):
                        reps.append((p, A, F))
            for rep in reps:
                if rep in seen:
                    continue
                orbit = {rep}
                queue = [rep]
                while queue:
                    cur = queue.pop()
                    for th in inv_out[cur[0]]:
                        nxt = _theta_image(S, X, P, act, one_data, m2,
                                           cur, th)
                        if nxt not in orbit:
                            orbit.add(nxt)
                            queue.append(nxt)
                canon = min(orbit)
                name = two_nm(m1, m2, canon)
                two_data[name] = (m1, m2, canon)
                members[name] = tuple(sorted(orbit))
                two_cells[name] = (m1, m2)
                for r in orbit:
                    _ax((m1, m2, r[0], r[1], r[2]) not in class_of,
                        "overlapping class orbits", (m1, m2, r))
                    class_of[(m1, m2, r[0], r[1], r[2])] = name
                seen |= orbit

    id2 = {}
    for m, (a, x, s, al, ph) in one_data.items():
        id2[m] = class_of[(m, m, S.id1[s], S.id2[al], X.id2[ph])]

    def vcomp_rep(m_top, a_src, rep2, rep1):
        """Paste rep1: m1 => m2 then rep2: m2 => m_top (a_src, x_src fixed)."""
        a, x = a_src
        p1, A1, F1 = rep1
        p2, A2, F2 = rep2
        p = S.comp1[(p2, p1)]
        A = S.vcomp[(S.whisk_r[(A2, P.rt(a).on_one[p1])], A1)]
        F = X.vcomp[(X.whisk_r[(F2, act.mr(x).on_one[p1])], F1)]
        return (p, A, F)

    def vcomp_cls(c2: str, c1: str) -> str:
        m1, m2, rep1 = two_data[c1]
        _m2b, m3, rep2 = two_data[c2]
        a, x = one_data[m1][0], one_data[m1][1]
        p, A, F = vcomp_rep(m3, (a, x), rep2, rep1)
        return class_of[(m1, m3, p, A, F)]

    def hcomp_cls(n1, n2, repD, m1, m2, repG) -> str:
        """Class of the horizontal composite of repG: m1 => m2 (over
        (a,x) -> (b,y)) with repD: n1 => n2 (over (b,y) -> (c,z)),
        computed by both pasting routes; asserts they agree."""
        a, x, s, al, ph = one_data[m1]
        _a, _x, s2, al2, ph2 = one_data[m2]
        _b, _y, t, ga, ps = one_data[n1]
        _b2, _y2, t2, ga2, ps2 = one_data[n2]
        p, A, F = repG
        q, B, G = repD
        msrc = compose1(n1, m1)
        mtgt = compose1(n2, m2)
        # route one: interchange q past the target leg of repG
        r1 = S.comp1[(P.rt(s2).on_one[q], P.lt(t).on_one[p])]
        tpa = P.lt(t).on_one[P.rt(a).on_one[p]]
        C1 = S.vcomp[(S.whisk_l[(ga2, S.whisk_r[(P.sigma_of(q, al2), tpa)])],
                      S.hcomp(B, P.lt(t).on_two[A]))]
        tpx = act.ml(t).on_one[act.mr(x).on_one[p]]
        H1 = X.vcomp[(X.whisk_l[(ps2, X.whisk_r[(act.sigma_of(q, ph2),
                                                 tpx)])],
                      X.hcomp(G, act.ml(t).on_two[F]))]
        out1 = class_of[(msrc, mtgt, r1, C1, H1)]
        # route two: interchange q past the source leg of repG
        r2 = S.comp1[(P.lt(t2).on_one[p], P.rt(s).on_one[q])]
        sa = P.sum(s, a)
        step0 = S.whisk_r[(B, P.lt(t).on_one[al])]
        step1 = S.whisk_l[(ga2, P.sigma_of(q, al))]
        step2 = S.whisk_l[(ga2, S.whisk_r[(P.lt(t2).on_two[A],
                                           P.rt(sa).on_one[q])])]
        C2 = S.vcomp[(step2, S.vcomp[(step1, step0)])]
        sx = act.act(s, x)
        step0x = X.whisk_r[(G, act.ml(t).on_one[ph])]
        step1x = X.whisk_l[(ps2, act.sigma_of(q, ph))]
        step2x = X.whisk_l[(ps2, X.whisk_r[(act.ml(t2).on_two[F],
                                            act.mr(sx).on_one[q])])]
        H2 = X.vcomp[(step2x, X.vcomp[(step1x, step0x)])]
        out2 = class_of[(msrc, mtgt, r2, C2, H2)]
        _ax(out1 == out2,
            "horizontal composite ill defined (quotient inconsistency)",
            ((m1, m2, repG), (n1, n2, repD)))
        return out1

    def whisk_l_cls(k: str, c: str) -> str:
        m1, m2, rep = two_data[c]
        _b, _y, t, ga, ps = one_data[k]
        ident = (S.id1[t], S.id2[ga], X.id2[ps])
        return hcomp_cls(k, k, ident, m1, m2, rep)

    def whisk_r_cls(c: str, k: str) -> str:
        n1, n2, rep = two_data[c]
        _a, _x, s, al, ph = one_data[k]
        ident = (S.id1[s], S.id2[al], X.id2[ph])
        return hcomp_cls(n1, n2, rep, k, k, ident)

    # the class quotient must be a congruence for both compositions
    by_hom = {}
    for cname, (m1, m2) in two_cells.items():
        by_hom.setdefault(one_cells[m1], []).append(cname)
    for c1, (m1, m2) in sorted(two_cells.items()):
        for c2, (m2b, m3) in sorted(two_cells.items()):
            if m2b != m2:
                continue
            a, x = one_data[m1][0], one_data[m1][1]
            out = {class_of[(m1, m3) + vcomp_rep(m3, (a, x), r2, r1)]
                   for r1 in members[c1] for r2 in members[c2]}
            _ax(len(out) == 1,
                "vertical composite ill defined (quotient inconsistency)",
                (c1, c2))
    for (xx, yy), lower in sorted(by_hom.items()):
        for (yb, zz), upper in sorted(by_hom.items()):
            if yb != yy:
                continue
            for c1 in lower:
                m1, m2 = two_cells[c1]
                for c2 in upper:
                    n1, n2 = two_cells[c2]
                    out = {hcomp_cls(n1, n2, rD, m1, m2, rG)
                           for rG in members[c1] for rD in members[c2]}
                    _ax(len(out) == 1, "horizontal composite ill defined "
                        "(quotient inconsistency)", (c1, c2))

    cat = validate_two_category(build_two_category(
        list(obj_name.values()), one_cells, two_cells, id1, id2,
        compose1, vcomp_cls, whisk_l_cls, whisk_r_cls))

    out = SInvCategory(cat, P, act, point, obj_name, obj_data,
                       one_name, one_data, class_of, two_data, members)
    if not point:
        on_obj = {x: obj_name[(e, x)] for x in X.objects}
        on_one = {ph: one_name[(e, X.one_src[ph], e, S.id1[e], ph)]
                  for ph in X.one_src}
        on_two = {}
        for F in X.two_src:
            ph, ph2 = X.two_src[F], X.two_tgt[F]
            m1, m2 = on_one[ph], on_one[ph2]
            on_two[F] = class_of[(m1, m2, S.id1[e], S.id2[S.id1[e]], F)]
        out.include = validate_two_functor(
            TwoFunctor(X, cat, on_obj, on_one, on_two))
    return out


def s_inv_x(P: PGM, act: PGMAction) -> SInvCategory:
    """The completion of the action of P on X, with the canonical strict
    inclusion ``X -> S^-1 X`` attached as ``.include``."""
    validate_pgm(P)
    validate_action(act)
    _ax(act.pgm is P or act.pgm == P, "action does not belong to the monoid",
        ())
    return _build_sinv(
        P, act, False,
        lambda a, x: nm("o", a, x),
        lambda a, x, s, al, ph: nm("m", a, x, s, al, ph),
        lambda m1, m2, rep: nm("c", m1, m2, *rep))


def point_action(P: PGM) -> PGMAction:
    """The unique action of P on the terminal 2-category."""
    T = fix_t()
    pt = T.objects[0]
    ident = identity_functor(T)
    return PGMAction(P, T,
                     {(s, pt): pt for s in P.carrier.objects},
                     {s: ident for s in P.carrier.objects},
                     {pt: bang_functor(P.carrier)},
                     {})


def s_inv_point(P: PGM) -> SInvCategory:
    """The completion at a point: objects are those of S, a 1-cell a -> b
    is a pair (s, alpha: s + a -> b), a 2-cell a class <p, A>."""
    validate_pgm(P)
    act = validate_action(point_action(P))
    return _build_sinv(
        P, act, True,
        lambda a, x: nm("o", a),
        lambda a, x, s, al, ph: nm("m", a, s, al),
        lambda m1, m2, rep: nm("c", m1, m2, rep[0], rep[1]))


# ---------------------------------------------------------------------------
# hom-terminality and contraction of the point completion
# ---------------------------------------------------------------------------

def hom_terminality_check(SP: SInvCategory):
    """When every 2-cell of S is invertible, the pair (a, 1_a) is terminal
    in each hom-category out of the unit: every 1-cell e -> a admits
    exactly one 2-cell into it.  Returns True or a Counterexample."""
    P = SP.pgm
    S = P.carrier
    e = P.unit
    for th in sorted(S.two_src):
        if not S.is_invertible2(th):
            return Counterexample("2-cell-not-invertible", (th,))
    C = SP.cat
    for a in S.objects:
        term = SP.onep(e, a, S.id1[a])
        for m in C.hom1(SP.obj(e), SP.obj(a)):
            cells = C.hom2(m, term)
            if len(cells) != 1:
                return Counterexample("hom-terminality", (a, m, len(cells)))
            # the canonical witness <alpha, 1_alpha> realizes it
            _a, _x, s, al, _ph = SP.one_data[m]
            want = SP.clsp(m, term, al, S.id2[al])
            if cells[0] != want:
                return Counterexample("hom-terminality-witness", (a, m))
    return True


def contraction(SP: SInvCategory) -> Transformation:
    """The lax transformation from the constant functor at the unit object
    to the identity of the point completion, assembled from the terminal
    pairs (a, 1_a); validated before being returned."""
    P = SP.pgm
    S = P.carrier
    e = P.unit
    C = SP.cat
    e_obj = SP.obj(e)
    const = TwoFunctor(C, C, {o: e_obj for o in C.objects},
                       {m: C.id1[e_obj] for m in C.one_src},
                       {c: C.id2[C.id1[e_obj]] for c in C.two_src})
    at_object = {}
    for o in C.objects:
        a, _x = SP.obj_data[o]
        at_object[o] = SP.onep(e, a, S.id1[a])
    at_one = {}
    for m in C.one_src:
        a, _x, s, al, _ph = SP.one_data[m]
        b = S.one_tgt[al]
        src = SP.onep(e, P.sum(s, a), al)
        tgt = SP.onep(e, b, S.id1[b])
        at_one[m] = SP.clsp(src, tgt, al, S.id2[al])
    return validate_transformation(Transformation(
        const, identity_functor(C), at_object, at_one, LAX, LAX))


# ---------------------------------------------------------------------------
# the re-action of S on the completion
# ---------------------------------------------------------------------------

def xi_action(SX: SInvCategory) -> PGMAction:
    """The action of P on S^-1 X extending the original action on X."""
    P, act = SX.pgm, SX.action
    S, X = P.carrier, act.carrier
    C = SX.cat

    def ml_functor(s):
        on_obj, on_one, on_two = {}, {}, {}
        for o, (a, x) in SX.obj_data.items():
            on_obj[o] = SX.obj_name[(a, act.act(s, x))]
        for m, (a, x, t, al, ph) in SX.one_data.items():
            bx = act.mr(x).on_one[P.beta[(t, s)]]
            on_one[m] = SX.one_name[(a, act.act(s, x), t, al,
                                     X.comp1[(act.ml(s).on_one[ph], bx)])]
        for c, (m1, m2, (p, A, F)) in SX.two_data.items():
            _a, x, t, _al, _ph = SX.one_data[m1]
            bx = act.mr(x).on_one[P.beta[(t, s)]]
            F2 = X.whisk_r[(act.ml(s).on_two[F], bx)]
            on_two[c] = SX.class_of[(on_one[m1], on_one[m2], p, A, F2)]
        return validate_two_functor(TwoFunctor(C, C, on_obj, on_one,
                                               on_two))

    def mr_functor(o):
        a, x = SX.obj_data[o]
        on_obj = {s: SX.obj_name[(a, act.act(s, x))] for s in S.objects}
        on_one, on_two = {}, {}
        for f in S.one_src:
            s = S.one_src[f]
            on_one[f] = SX.one_name[(a, act.act(s, x), P.unit, S.id1[a],
                                     act.mr(x).on_one[f])]
        for g in S.two_src:
            f1, f2 = S.two_src[g], S.two_tgt[g]
            on_two[g] = SX.class_of[(on_one[f1], on_one[f2], S.id1[P.unit],
                                     S.id2[S.id1[a]], act.mr(x).on_two[g])]
        return validate_two_functor(TwoFunctor(S, C, on_obj, on_one,
                                               on_two))

    mu_left = {s: ml_functor(s) for s in S.objects}
    mu_right = {o: mr_functor(o) for o in C.objects}
    act_objects = {(s, o): mu_left[s].on_objects[o]
                   for s in S.objects for o in C.objects}

    sigma = {}
    for f in sorted(S.one_src):
        if S.is_id1(f):
            continue
        s = S.one_src[f]
        for m in sorted(C.one_src):
            if C.is_id1(m):
                continue
            a, x, t, al, ph = SX.one_data[m]
            b, y = SX.obj_data[C.one_tgt[m]]
            src = C.comp1[(mu_right[C.one_tgt[m]].on_one[f],
                           mu_left[s].on_one[m])]
            tgt = C.comp1[(mu_left[S.one_tgt[f]].on_one[m],
                           mu_right[C.one_src[m]].on_one[f])]
            F = X.whisk_r[(act.sigma_of(f, ph),
                           act.mr(x).on_one[P.beta[(t, s)]])]
            sigma[(f, m)] = SX.class_of[(src, tgt, S.id1[t], S.id2[al], F)]

    return validate_action(PGMAction(P, C, act_objects, mu_left, mu_right,
                                     sigma))


def s_inverse(SX: SInvCategory, s: str) -> TwoFunctor:
    """The strict endofunctor of S^-1 X shifting the S coordinate by s;
    it inverts translation by s up to the canonical contraction."""
    P, act = SX.pgm, SX.action
    S = P.carrier
    C = SX.cat
    on_obj, on_one, on_two = {}, {}, {}
    for o, (a, x) in SX.obj_data.items():
        on_obj[o] = SX.obj_name[(P.sum(s, a), x)]
    for m, (a, x, t, al, ph) in SX.one_data.items():
        ba = P.rt(a).on_one[P.beta[(t, s)]]
        on_one[m] = SX.one_name[(P.sum(s, a), x, t,
                                 S.comp1[(P.lt(s).on_one[al], ba)], ph)]
    for c, (m1, m2, (p, A, F)) in SX.two_data.items():
        a, _x, t, _al, _ph = SX.one_data[m1]
        ba = P.rt(a).on_one[P.beta[(t, s)]]
        A2 = S.whisk_r[(P.lt(s).on_two[A], ba)]
        on_two[c] = SX.class_of[(on_one[m1], on_one[m2], p, A2, F)]
    return validate_two_functor(TwoFunctor(C, C, on_obj, on_one, on_two))


def T_transformation(SX: SInvCategory, s: str,
                     xi: PGMAction | None = None) -> Transformation:
    """The pseudonatural transformation from the identity of S^-1 X to
    translation-after-inverse at s, witnessing the inverse.  The strict
    commutation of the translation with the inverse is asserted."""
    P, act = SX.pgm, SX.action
    S, X = P.carrier, act.carrier
    C = SX.cat
    xi = xi or xi_action(SX)
    ml_s = xi.ml(s)
    inv_s = s_inverse(SX, s)
    _ax(functors_equal(compose_functors(ml_s, inv_s),
                       compose_functors(inv_s, ml_s)),
        "translation does not commute with the inverse", (s,))
    G = compose_functors(ml_s, inv_s)
    at_object, at_one = {}, {}
    for o, (a, x) in SX.obj_data.items():
        at_object[o] = SX.one_name[(a, x, s, S.id1[P.sum(s, a)],
                                    X.id1[act.act(s, x)])]
    for m in C.one_src:
        a, x, t, al, ph = SX.one_data[m]
        src = C.comp1[(G.on_one[m], at_object[C.one_src[m]])]
        tgt = C.comp1[(at_object[C.one_tgt[m]], m)]
        _a, _x, _ts, alS, phS = SX.one_data[src]
        at_one[m] = SX.class_of[(src, tgt, P.beta[(t, s)], S.id2[alS],
                                 X.id2[phS])]
    return validate_transformation(Transformation(
        identity_functor(C), G, at_object, at_one, LAX, PSEUDONATURAL))


# ---------------------------------------------------------------------------
# the permutative sum on S^-1 S
# ---------------------------------------------------------------------------

def pgm_on_sinvs(SX: SInvCategory) -> PGM:
    """The permutative Gray monoid carried by S^-1 S (the completion of
    the sum acting on itself); validated before being returned."""
    P, act = SX.pgm, SX.action
    S = P.carrier
    _ax(act.carrier is S or act.carrier == S,
        "sum structure requires the self action", ())
    C = SX.cat
    e = P.unit

    def rt_functor(o2):
        a2, x2 = SX.obj_data[o2]
        on_obj = {o: SX.obj_name[(P.sum(a, a2), P.sum(x, x2))]
                  for o, (a, x) in SX.obj_data.items()}
        on_one, on_two = {}, {}
        for m, (a, x, s, al, ph) in SX.one_data.items():
            on_one[m] = SX.one_name[(P.sum(a, a2), P.sum(x, x2), s,
                                     P.rt(a2).on_one[al],
                                     P.rt(x2).on_one[ph])]
        for c, (m1, m2, (p, A, F)) in SX.two_data.items():
            on_two[c] = SX.class_of[(on_one[m1], on_one[m2], p,
                                     P.rt(a2).on_two[A],
                                     P.rt(x2).on_two[F])]
        return validate_two_functor(TwoFunctor(C, C, on_obj, on_one,
                                               on_two))

    def lt_functor(o2):
        a2, x2 = SX.obj_data[o2]
        on_obj = {o: SX.obj_name[(P.sum(a2, a), P.sum(x2, x))]
                  for o, (a, x) in SX.obj_data.items()}
        on_one, on_two = {}, {}
        for m, (a, x, s, al, ph) in SX.one_data.items():
            wa = P.rt(a).on_one[P.beta[(s, a2)]]
            wx = P.rt(x).on_one[P.beta[(s, x2)]]
            on_one[m] = SX.one_name[(P.sum(a2, a), P.sum(x2, x), s,
                                     S.comp1[(P.lt(a2).on_one[al], wa)],
                                     S.comp1[(P.lt(x2).on_one[ph], wx)])]
        for c, (m1, m2, (p, A, F)) in SX.two_data.items():
            a, x, s, _al, _ph = SX.one_data[m1]
            wa = P.rt(a).on_one[P.beta[(s, a2)]]
            wx = P.rt(x).on_one[P.beta[(s, x2)]]
            on_two[c] = SX.class_of[(on_one[m1], on_one[m2], p,
                                     S.whisk_r[(P.lt(a2).on_two[A], wa)],
                                     S.whisk_r[(P.lt(x2).on_two[F], wx)])]
        return validate_two_functor(TwoFunctor(C, C, on_obj, on_one,
                                               on_two))

    sum_objects = {}
    for o, (a, x) in SX.obj_data.items():
        for o2, (a2, x2) in SX.obj_data.items():
            sum_objects[(o, o2)] = SX.obj_name[(P.sum(a, a2),
                                                P.sum(x, x2))]
    lts = {o: lt_functor(o) for o in C.objects}
    rts = {o: rt_functor(o) for o in C.objects}

    sigma = {}
    for m in sorted(C.one_src):
        if C.is_id1(m):
            continue
        a, x, s, al, ph = SX.one_data[m]
        for m2 in sorted(C.one_src):
            if C.is_id1(m2):
                continue
            a2, x2, s2, al2, ph2 = SX.one_data[m2]
            src = C.comp1[(rts[C.one_tgt[m2]].on_one[m],
                           lts[C.one_src[m]].on_one[m2])]
            tgt = C.comp1[(lts[C.one_tgt[m]].on_one[m2],
                           rts[C.one_src[m2]].on_one[m])]
            A = S.whisk_r[(P.sigma_of(al, al2),
                           P.lt(s).on_one[P.rt(a2).on_one[
                               P.beta[(s2, a)]]])]
            F = S.whisk_r[(P.sigma_of(ph, ph2),
                           P.lt(s).on_one[P.rt(x2).on_one[
                               P.beta[(s2, x)]]])]
            sigma[(m, m2)] = SX.class_of[(src, tgt, P.beta[(s, s2)], A, F)]

    beta = {}
    for o, (a, x) in SX.obj_data.items():
        for o2, (a2, x2) in SX.obj_data.items():
            beta[(o, o2)] = SX.one_name[(P.sum(a, a2), P.sum(x, x2), e,
                                         P.beta[(a, a2)], P.beta[(x, x2)])]

    return validate_pgm(PGM(C, SX.obj_name[(e, e)], sum_objects,
                            lts, rts, sigma, beta))


def grouplike_shadow(Q: PGM, trunc: int) -> bool:
    """Every translation of Q induces isomorphisms on the homology of the
    nerve in the trusted range (degrees < trunc); raises on failure."""
    C = Q.carrier
    N = nerve(C, trunc)
    for o in C.objects:
        for F in (Q.lt(o), Q.rt(o)):
            smap = induced_map(F, trunc)
            for n in range(trunc):
                M, sq_s, sq_t = homology_induced(smap, N, N, n)
                _ax(presented_map_is_iso(presentation_of(sq_s),
                                         presentation_of(sq_t), M),
                    "translation not a homology isomorphism", (o, n))
    return True


# ---------------------------------------------------------------------------
# the projection to the point completion
# ---------------------------------------------------------------------------

def rho_projection(SX: SInvCategory, SP: SInvCategory) -> TwoFunctor:
    """Erase the X coordinates: S^-1 X -> S^-1 *."""
    P = SX.pgm
    S = P.carrier
    T = SP.action.carrier
    pt = T.objects[0]
    on_obj = {o: SP.obj_name[(a, pt)] for o, (a, _x) in SX.obj_data.items()}
    on_one = {m: SP.one_name[(a, pt, s, al, T.id1[pt])]
              for m, (a, _x, s, al, _ph) in SX.one_data.items()}
    on_two = {}
    ii = T.id2[T.id1[pt]]
    for c, (m1, m2, (p, A, _F)) in SX.two_data.items():
        on_two[c] = SP.class_of[(on_one[m1], on_one[m2], p, A, ii)]
    return validate_two_functor(TwoFunctor(SX.cat, SP.cat, on_obj, on_one,
                                           on_two))


def check_completion_hypotheses(P: PGM, act: PGMAction):
    """The three hypotheses under which the projection is an opfibration
    and the homology comparison holds: faithful translations, S a
    2-groupoid, and invertible 2-cells in X.  True or a tagged
    Counterexample."""
    faith = has_faithful_translations(P)
    if faith is not True:
        return Counterexample("hypothesis-" + faith.clause, faith.detail)
    grpd = is_two_groupoid(P.carrier)
    if grpd is not True:
        return Counterexample("hypothesis-" + grpd.clause, grpd.detail)
    X = act.carrier
    for a in sorted(X.two_src):
        if not X.is_invertible2(a):
            return Counterexample("hypothesis-2-cell-of-X-not-invertible",
                                  (a,))
    return True


@dataclass
class ProjectionReport:
    rho: TwoFunctor
    SX: SInvCategory
    SP: SInvCategory
    certificate: object
    preferred_opcartesian: tuple


def rho_opfib_check(P: PGM, act: PGMAction,
                    SX: SInvCategory | None = None,
                    SP: SInvCategory | None = None):
    """Certify the projection S^-1 X -> S^-1 * as an opfibration.  The
    hypotheses are verified first; a failure is reported without
    constructing the completion."""
    hyp = check_completion_hypotheses(P, act)
    if hyp is not True:
        return hyp
    SX = SX or s_inv_x(P, act)
    SP = SP or s_inv_point(P)
    rho = rho_projection(SX, SP)
    cert = of.check_opfibration(rho)
    if isinstance(cert, Counterexample):
        return cert
    X = act.carrier
    preferred = []
    for m, (_a, x, s, _al, ph) in sorted(SX.one_data.items()):
        if ph == X.id1[act.act(s, x)]:
            res = of.is_opcartesian_1cell(rho, m)
            _ax(not isinstance(res, Counterexample),
                "preferred cell not opcartesian", (m,))
            preferred.append(m)
    return ProjectionReport(rho, SX, SP, cert, tuple(preferred))


def all_2cells_cartesian(rho: TwoFunctor, SX: SInvCategory) -> bool:
    """Under the completion hypotheses every 2-cell upstairs is cartesian
    for the projection; checked exhaustively."""
    for c in SX.cat.two_cells:
        if isinstance(of.is_cartesian_2cell(rho, c), Counterexample):
            return False
    return True


def fiber_iso(SX: SInvCategory, rho: TwoFunctor, a: str) -> TwoFunctor:
    """The strict fiber of the projection over a is isomorphic to X by
    erasing the first coordinate; returns the validated isomorphism and
    asserts object-level compatibility with the action."""
    P, act = SX.pgm, SX.action
    S, X = P.carrier, act.carrier
    e = P.unit
    down = rho.on_objects[SX.obj_name[(a, X.objects[0])]]
    fib, _incl = strict_fiber(rho, down)
    on_obj = {o: SX.obj_data[o][1] for o in fib.objects}
    on_one = {}
    for m in fib.one_src:
        aa, _x, s, al, ph = SX.one_data[m]
        _ax(s == e and al == S.id1[aa], "fiber cell of unexpected shape",
            (m,))
        on_one[m] = ph
    on_two = {}
    for c in fib.two_src:
        aa = SX.one_data[fib.two_src[c]][0]
        hits = [rep for rep in SX.members[c]
                if rep[0] == S.id1[e] and rep[1] == S.id2[S.id1[aa]]]
        _ax(len(hits) == 1, "fiber 2-cell of unexpected shape", (c,))
        on_two[c] = hits[0][2]
    F = validate_two_functor(TwoFunctor(fib, X, on_obj, on_one, on_two))
    _ax(len(fib.objects) == len(X.objects)
        and len(set(on_obj.values())) == len(on_obj)
        and len(set(on_one.values())) == len(on_one)
        and sorted(on_one.values()) == sorted(X.one_src)
        and len(set(on_two.values())) == len(on_two)
        and sorted(on_two.values()) == sorted(X.two_src),
        "fiber comparison not bijective", (a,))
    # the re-action preserves the fiber and the comparison intertwines it
    xi = xi_action(SX)
    for s in S.objects:
        for o in fib.objects:
            o2 = xi.act(s, o)
            _ax(o2 in fib.objects
                and SX.obj_data[o2][1] == act.act(s, F.on_objects[o]),
                "fiber comparison incompatible with the action", (s, o))
    return F


# ---------------------------------------------------------------------------
# iso criterion and lifting witnesses
# ---------------------------------------------------------------------------

def is_sinv_iso(SX: SInvCategory, cname: str) -> bool:
    """A completed 2-cell is invertible iff its representative has an
    equivalence p, an invertible A, and an invertible F; cross-checked
    against brute-force invertibility in the quotient."""
    P, act = SX.pgm, SX.action
    S, X = P.carrier, act.carrier
    p, A, F = SX.two_data[cname][2]
    crit = (S.is_equivalence1(p) and S.is_invertible2(A)
            and X.is_invertible2(F))
    brute = SX.cat.is_invertible2(cname)
    _ax(crit == brute, "iso criterion disagrees with the quotient",
        (cname,))
    return crit


def lift_witness_check(SX: SInvCategory, SP: SInvCategory,
                       m: str, u_cell: str, down_t: str, down_2: str,
                       v_cell: str, up1_class: str, up2_class: str):
    """Search for an invertible Theta: p => p2 . (p1 + 1_s) of S whose
    pasting identifies the candidate lift with the prescribed downstairs
    triangle; returns Theta, or None when no witness exists.

    m = (s, alpha, phi): (a,x) -> (d,z) upstairs, u_cell: (a,x) -> (b,y)
    upstairs, down_t = (t, beta): d -> b downstairs, down_2 = <p, A>:
    down_t . rho(m) => rho(u_cell) downstairs; the candidate lift is
    v_cell: (d,z) -> (b,y) with up1_class = <p1, A1>: down_t => rho(v_cell)
    and up2_class = <p2, A2, F2>: v_cell . m => u_cell.
    """
    P = SX.pgm
    S = P.carrier
    a, _x, s, al, _ph = SX.one_data[m]
    _a2, _x2, u, ga, _chi = SX.one_data[u_cell]
    _d, t, be = SP.one_data[down_t][0], SP.one_data[down_t][2], \
        SP.one_data[down_t][3]
    p, A, _iiF = SP.two_data[down_2][2]
    d2, _x3, v, de, _lam = SX.one_data[v_cell]
    p1, A1, _ii1 = SP.two_data[up1_class][2]
    p2, A2, _F2 = SX.two_data[up2_class][2]
    sa = P.sum(s, a)
    target_p = S.comp1[(p2, P.rt(s).on_one[p1])]
    rhs = S.vcomp[(S.whisk_r[(A2, P.rt(sa).on_one[p1])],
                   S.vcomp[(S.whisk_l[(de, P.sigma_of(p1, al))],
                            S.whisk_r[(A1, P.lt(t).on_one[al])])])]
    for th in S.hom2(p, target_p):
        if not S.is_invertible2(th):
            continue
        lhs = S.vcomp[(S.whisk_l[(ga, P.rt(a).on_two[th])], A)]
        if lhs == rhs:
            return th
    return None


def preferred_lift(SX: SInvCategory, SP: SInvCategory,
                   m: str, u_cell: str, down_t: str, down_2: str):
    """The canonical lift along an opcartesian cell m = (s, alpha, 1):
    reuse the downstairs data (v = t, delta = beta) and transport the X
    component of u_cell back along p.  Returns (v_cell, up1_class,
    up2_class)."""
    P, act = SX.pgm, SX.action
    S, X = P.carrier, act.carrier
    a, x, s, al, ph = SX.one_data[m]
    _ax(ph == X.id1[act.act(s, x)], "preferred lifts require an identity "
        "X component", (m,))
    _a2, _x2, u, ga, chi = SX.one_data[u_cell]
    d, _pt, t, be = SP.one_data[down_t][0], SP.one_data[down_t][1], \
        SP.one_data[down_t][2], SP.one_data[down_t][3]
    p, A, _ii = SP.two_data[down_2][2]
    z = act.act(s, x)
    lam = X.comp1[(chi, act.mr(x).on_one[p])]
    v_cell = SX.one_name[(d, z, t, be, lam)]
    up1_class = SP.cat.id2[down_t]
    comp = SX.cat.comp1[(v_cell, m)]
    F2 = X.id2[SX.one_data[comp][4]]
    up2_class = SX.class_of[(comp, u_cell, p, A, F2)]
    return v_cell, up1_class, up2_class


# ---------------------------------------------------------------------------
# collapse to a 1-category (classical comparison)
# ---------------------------------------------------------------------------

def collapse_to_category(SX: SInvCategory):
    """Quotient the completion by invertible 2-cells between 1-cells,
    yielding a 1-category; composition is checked to descend.  Returns
    (objects, hom: dict (src, tgt) -> sorted class reps,
    rep_of: 1-cell -> class rep, compose: dict on reps,
    locally_thin: at most one 2-cell class between parallel 1-cells)."""
    C = SX.cat
    parent = {m: m for m in C.one_src}

    def find(m):
        while parent[m] != m:
            parent[m] = parent[parent[m]]
            m = parent[m]
        return m

    locally_thin = True
    for c in C.two_cells:
        m1, m2 = C.two_src[c], C.two_tgt[c]
        if m1 != m2 and len(C.hom2(m1, m2)) > 1:
            locally_thin = False
        if is_sinv_iso(SX, c):
            r1, r2 = find(m1), find(m2)
            if r1 != r2:
                parent[max(r1, r2)] = min(r1, r2)
    rep_of = {m: min(mm for mm in C.one_src if find(mm) == find(m))
              for m in C.one_src}
    hom = {}
    for m, r in rep_of.items():
        key = (C.one_src[m], C.one_tgt[m])
        hom.setdefault(key, set()).add(r)
    hom = {k: tuple(sorted(v)) for k, v in hom.items()}
    compose = {}
    for (g, f), gf in C.comp1.items():
        key = (rep_of[g], rep_of[f])
        if key in compose:
            _ax(compose[key] == rep_of[gf],
                "composition does not descend to the collapse", (g, f))
        compose[key] = rep_of[gf]
    return tuple(C.objects), hom, rep_of, compose, locally_thin


# ---------------------------------------------------------------------------
# the homology-level group completion check
# ---------------------------------------------------------------------------

@dataclass
class GroupCompletionReport:
    monoid: CommMonoid
    trunc: int
    degrees: dict = field(default_factory=dict)

    @property
    def all_iso(self) -> bool:
        return all(d["iso"] for d in self.degrees.values())


def group_completion_check(P: PGM, act: PGMAction | None = None,
                           max_deg: int = 0, trunc: int | None = None,
                           SX: SInvCategory | None = None
                           ) -> GroupCompletionReport:
    """Verify, degree by degree, that the inclusion X -> S^-1 X localizes
    homology at the component monoid of S: H_q(X) with the pi0(S) action
    inverted is carried isomorphically onto H_q(S^-1 X).

    Raises on hypothesis failure and on requests outside the trusted
    range (degrees < trunc)."""
    act = act or self_action(P)
    hyp = check_completion_hypotheses(P, act)
    if hyp is not True:
        raise AxiomError("completion hypotheses fail: %s at %r"
                         % (hyp.clause, hyp.detail))
    trunc = trunc if trunc is not None else max_deg + 1
    if max_deg > trunc - 1:
        raise ValueError("degree %d untrusted at truncation %d"
                         % (max_deg, trunc))
    SX = SX or s_inv_x(P, act)
    X = act.carrier
    M = pi0_monoid(P)
    comp = pi0(P.carrier)
    Xn = nerve(X, trunc)
    SXn = nerve(SX.cat, trunc)
    i_map = induced_map(SX.include, trunc)
    smaps = {s: induced_map(act.ml(s), trunc) for s in P.carrier.objects}
    report = GroupCompletionReport(M, trunc)
    for q in range(max_deg + 1):
        acts = {}
        pres = None
        for s in P.carrier.objects:
            Ms, sq_s, _sq_t = homology_induced(smaps[s], Xn, Xn, q)
            if pres is None:
                pres = presentation_of(sq_s)
            r = comp[s]
            if r in acts:
                diff = [[acts[r][i][j] - Ms[i][j]
                         for j in range(len(row))]
                        for i, row in enumerate(Ms)]
                _ax(all(_in_rel_lattice(pres, col)
                        for col in columns(diff)),
                    "component representatives induce different maps",
                    (s, r, q))
            else:
                acts[r] = Ms
        stab = localize_presentation(pres, acts, M)
        Mi, _sq_x, sq_sx = homology_induced(i_map, Xn, SXn, q)
        tgt_pres = presentation_of(sq_sx)
        for col in columns(stab.rel_matrix()):
            _ax(_in_rel_lattice(tgt_pres, mvec(Mi, col)),
                "inclusion does not factor through the localization", (q,))
        iso = presented_map_is_iso(stab, tgt_pres, Mi)
        report.degrees[q] = {
            "source": str(pres.canonical()),
            "localized": str(stab.canonical()),
            "target": str(tgt_pres.canonical()),
            "iso": iso,
        }
    return report
