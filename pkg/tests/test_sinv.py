import pytest

from twocat import homology as hm
from twocat import pgm, sinv
from twocat.core import AxiomError, find_isomorphism
from twocat.fixtures import fix_g2, fix_g2sat
from twocat.nerve import nerve
from twocat.opfib import Counterexample


def c2_completion():
    P = pgm.fix_c2_pgm()
    return P, sinv.s_inv_x(P, pgm.self_action(P))


def g2_completion():
    P = pgm.fix_g2_pgm()
    return P, sinv.s_inv_x(P, pgm.self_action(P))


def m2_completion():
    P = pgm.fix_m2_pgm()
    return P, sinv.s_inv_x(P, pgm.self_action(P))


# --- shape of the completions -------------------------------------------------

def test_c2_completion_shape():
    # four objects in two parity components; exactly one 1-cell
    # (a,x) -> (b,y) when a+b = x+y mod 2, none otherwise; no
    # nonidentity 2-cells
    P, SX = c2_completion()
    assert len(SX.cat.objects) == 4
    comp = sinv.pi0(SX.cat)
    assert len(set(comp.values())) == 2
    for o in SX.cat.objects:
        for o2 in SX.cat.objects:
            a, x = SX.obj_data[o]
            b, y = SX.obj_data[o2]
            expect = 1 if (int(a) + int(b)) % 2 == (int(x) + int(y)) % 2 \
                else 0
            assert len(SX.cat.hom1(o, o2)) == expect
    assert all(SX.cat.is_id2(c) for c in SX.cat.two_src)


def test_g2_completion_is_the_original():
    # one object, one 1-cell, and the four raw 2-cell triples collapse to
    # two classes; the completion is isomorphic to the input
    P, SX = g2_completion()
    assert len(SX.cat.objects) == 1
    assert len(SX.cat.one_src) == 1
    assert len(SX.cat.two_src) == 2
    assert find_isomorphism(SX.cat, fix_g2()) is not None


def test_m2_completion_shape():
    P, SX = m2_completion()
    assert len(SX.cat.objects) == 4
    assert len(set(sinv.pi0(SX.cat).values())) == 1


def test_include_functor_lands_at_the_unit():
    P, SX = c2_completion()
    for x in P.carrier.objects:
        assert SX.include.on_objects[x] == SX.obj(P.unit, x)


# --- point completions ---------------------------------------------------------

def test_point_completion_c2():
    # two objects with a unique 1-cell in each direction
    SP = sinv.s_inv_point(pgm.fix_c2_pgm())
    assert len(SP.cat.objects) == 2
    for o in SP.cat.objects:
        for o2 in SP.cat.objects:
            assert len(SP.cat.hom1(o, o2)) == 1
    assert sinv.hom_terminality_check(SP) is True
    sinv.contraction(SP)


def test_point_completion_g2():
    SP = sinv.s_inv_point(pgm.fix_g2_pgm())
    assert len(SP.cat.objects) == 1
    assert len(SP.cat.one_src) == 1
    assert len(SP.cat.two_src) == 1
    assert sinv.hom_terminality_check(SP) is True
    sinv.contraction(SP)


def test_point_completion_m2():
    SP = sinv.s_inv_point(pgm.fix_m2_pgm())
    assert sinv.hom_terminality_check(SP) is True
    Xn = nerve(SP.cat, 2)
    assert str(hm.homology(Xn, 0)) == "Z"


def test_point_completion_contractible():
    for make in (pgm.fix_c2_pgm, pgm.fix_g2_pgm):
        SP = sinv.s_inv_point(make())
        Xn = nerve(SP.cat, 4)
        assert str(hm.homology(Xn, 0)) == "Z"
        assert hm.homology(Xn, 1).is_trivial
        assert hm.homology(Xn, 2).is_trivial


def test_terminality_requires_invertible_2cells():
    SP = sinv.s_inv_point(pgm.fix_g2sat_pgm())
    cex = sinv.hom_terminality_check(SP)
    assert isinstance(cex, Counterexample)
    assert cex.clause == "2-cell-not-invertible"


# --- the re-action, inverses, and the sum on S^-1 S ---------------------------

def test_xi_action_and_inverses():
    for maker in (c2_completion, m2_completion, g2_completion):
        P, SX = maker()
        xi = sinv.xi_action(SX)
        for s in P.carrier.objects:
            sinv.s_inverse(SX, s)
            sinv.T_transformation(SX, s, xi)


def test_sum_on_completion():
    for maker in (c2_completion, m2_completion, g2_completion):
        P, SX = maker()
        Q = sinv.pgm_on_sinvs(SX)  # validated on construction
        assert pgm.is_strict_pgm_functor(SX.include, P, Q) is True
        assert pgm.pi0_is_group(pgm.pi0_monoid(Q)) is True


def test_completion_is_homotopy_grouplike():
    _P, SX = c2_completion()
    assert sinv.grouplike_shadow(sinv.pgm_on_sinvs(SX), 2)


# --- projection and opfibration ------------------------------------------------

def test_rho_opfibration_certified():
    for make in (pgm.fix_c2_pgm, pgm.fix_g2_pgm):
        P = make()
        rep = sinv.rho_opfib_check(P, pgm.self_action(P))
        assert isinstance(rep, sinv.ProjectionReport)
        assert rep.preferred_opcartesian
        assert sinv.all_2cells_cartesian(rep.rho, rep.SX)


def test_rho_hypothesis_failure_reported_first():
    # the saturated one-object fixture has a noninvertible 2-cell, so the
    # report names the failing hypothesis instead of a lift
    P = pgm.fix_c2_pgm()
    act = pgm.validate_action(pgm.trivial_action(P, fix_g2sat()))
    cex = sinv.rho_opfib_check(P, act)
    assert isinstance(cex, Counterexample)
    assert cex.clause == "hypothesis-2-cell-of-X-not-invertible"
    assert cex.detail == ("e1",)


def test_fibers_isomorphic_to_x():
    for make in (pgm.fix_c2_pgm, pgm.fix_m2_pgm, pgm.fix_g2_pgm):
        P = make()
        SX = sinv.s_inv_x(P, pgm.self_action(P))
        SP = sinv.s_inv_point(P)
        rho = sinv.rho_projection(SX, SP)
        for a in P.carrier.objects:
            sinv.fiber_iso(SX, rho, a)  # validated + bijectivity asserted


# --- iso criterion and lifting witnesses ---------------------------------------

def test_iso_criterion_cross_checked():
    for maker in (c2_completion, m2_completion, g2_completion):
        _P, SX = maker()
        for c in SX.cat.two_cells:
            assert sinv.is_sinv_iso(SX, c) is True


def test_iso_criterion_negative():
    # with the saturated monoid acting on itself, the class containing
    # the absorbing 2-cell is not invertible, on both routes
    P = pgm.fix_g2sat_pgm()
    SX = sinv.s_inv_x(P, pgm.self_action(P))
    flags = sorted(sinv.is_sinv_iso(SX, c) for c in SX.cat.two_cells)
    assert False in flags and True in flags


def test_preferred_lifts_have_identity_witness():
    P, SX = c2_completion()
    act = SX.action
    SP = sinv.s_inv_point(P)
    rho = sinv.rho_projection(SX, SP)
    S = P.carrier
    checked = 0
    for m, (_a, x, s, _al, ph) in SX.one_data.items():
        if ph != act.carrier.id1[act.act(s, x)]:
            continue
        for u_cell in SX.cat.one_src:
            if SX.cat.one_src[u_cell] != SX.cat.one_src[m]:
                continue
            src = rho.on_objects[SX.cat.one_tgt[m]]
            tgt = rho.on_objects[SX.cat.one_tgt[u_cell]]
            for down_t in SP.cat.hom1(src, tgt):
                comp = SP.cat.comp1[(down_t, rho.on_one[m])]
                for down_2 in SP.cat.hom2(comp, rho.on_one[u_cell]):
                    v, u1, u2 = sinv.preferred_lift(SX, SP, m, u_cell,
                                                    down_t, down_2)
                    th = sinv.lift_witness_check(SX, SP, m, u_cell,
                                                 down_t, down_2, v, u1, u2)
                    p = SP.two_data[down_2][2][0]
                    assert th == S.id2[p]
                    checked += 1
    assert checked == 16


def test_lift_witness_on_g2():
    P, SX = g2_completion()
    SP = sinv.s_inv_point(P)
    rho = sinv.rho_projection(SX, SP)
    m = next(iter(SX.one_data))
    down_t = rho.on_one[m]
    comp = SP.cat.comp1[(down_t, rho.on_one[m])]
    for down_2 in SP.cat.hom2(comp, rho.on_one[m]):
        v, u1, u2 = sinv.preferred_lift(SX, SP, m, m, down_t, down_2)
        th = sinv.lift_witness_check(SX, SP, m, m, down_t, down_2,
                                     v, u1, u2)
        assert th is not None


# --- collapse to the classical completion --------------------------------------

def test_collapse_matches_classical_on_c2():
    # the input is locally discrete, so the completion collapses onto the
    # classical one-categorical construction: a morphism (a,x) -> (b,y)
    # is a single shift s with s+a = b and s+x = y, none otherwise
    _P, SX = c2_completion()
    objs, hom, rep_of, compose, thin = sinv.collapse_to_category(SX)
    assert thin
    for o in objs:
        for o2 in objs:
            a, x = SX.obj_data[o]
            b, y = SX.obj_data[o2]
            classical = [s for s in "01"
                         if (int(s) + int(a)) % 2 == int(b)
                         and (int(s) + int(x)) % 2 == int(y)]
            assert len(hom.get((o, o2), ())) == len(classical)
    # composition descends and matches the shift addition
    for (g, f), gf in compose.items():
        sg = SX.one_data[g][2]
        sf = SX.one_data[f][2]
        assert SX.one_data[gf][2] == str((int(sg) + int(sf)) % 2)


# --- homology-level group completion -------------------------------------------

def test_group_completion_c2():
    r = sinv.group_completion_check(pgm.fix_c2_pgm(), max_deg=0, trunc=2)
    assert r.degrees[0]["source"] == "Z + Z"
    assert r.degrees[0]["target"] == "Z + Z"
    assert r.all_iso


def test_group_completion_m2():
    r = sinv.group_completion_check(pgm.fix_m2_pgm(), max_deg=1, trunc=3)
    assert r.degrees[0]["source"] == "Z + Z"
    assert r.degrees[0]["localized"] == "Z"
    assert r.degrees[0]["target"] == "Z"
    assert r.degrees[1]["target"] == "0"
    assert r.all_iso


def test_group_completion_g2():
    r = sinv.group_completion_check(pgm.fix_g2_pgm(), max_deg=2, trunc=4)
    assert r.degrees[0]["target"] == "Z"
    assert r.degrees[1]["target"] == "0"
    assert r.degrees[2]["source"] == "Z/2"
    assert r.degrees[2]["localized"] == "Z/2"
    assert r.degrees[2]["target"] == "Z/2"
    assert r.all_iso


def test_group_completion_untrusted_degree():
    with pytest.raises(ValueError):
        sinv.group_completion_check(pgm.fix_c2_pgm(), max_deg=2, trunc=2)


def test_group_completion_hypothesis_failure():
    P = pgm.fix_c2_pgm()
    act = pgm.validate_action(pgm.trivial_action(P, fix_g2sat()))
    with pytest.raises(AxiomError):
        sinv.group_completion_check(P, act, max_deg=0, trunc=1)
