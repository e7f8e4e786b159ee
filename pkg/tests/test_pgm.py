import random

import pytest

from twocat import pgm
from twocat.core import AxiomError, TwoFunctor, identity_functor
from twocat.homology import PresentedGroup
from twocat.intlinalg import FGAbGroup, from_columns, mid, mmul
from twocat.opfib import Counterexample


ALL_PGMS = [pgm.fix_c2_pgm, pgm.fix_m2_pgm, pgm.fix_g2_pgm,
            pgm.fix_g2sat_pgm]


# --- axiom suites ------------------------------------------------------------

def test_fixtures_validate():
    for make in ALL_PGMS:
        pgm.validate_pgm(make())


def test_self_actions_validate():
    for make in ALL_PGMS:
        pgm.validate_action(pgm.self_action(make()))


def test_validation_catches_broken_sum():
    P = pgm.fix_m2_pgm()
    broken = dict(P.sum_objects)
    broken[("1", "1")] = "0"
    bad = pgm.PGM(P.carrier, P.unit, broken,
                  P.left_translations, P.right_translations,
                  P.sigma, P.beta)
    with pytest.raises(AxiomError):
        pgm.validate_pgm(bad)


def test_validation_catches_wrong_unit():
    P = pgm.fix_c2_pgm()
    bad = pgm.PGM(P.carrier, "1", P.sum_objects, P.left_translations,
                  P.right_translations, P.sigma, P.beta)
    with pytest.raises(AxiomError):
        pgm.validate_pgm(bad)


# --- components --------------------------------------------------------------

def test_pi0_monoid_c2():
    M = pgm.pi0_monoid(pgm.fix_c2_pgm())
    assert M.elements == ("0", "1")
    assert M.add[("1", "1")] == "0"
    assert pgm.pi0_is_group(M) is True


def test_pi0_monoid_m2():
    M = pgm.pi0_monoid(pgm.fix_m2_pgm())
    assert M.elements == ("0", "1")
    assert M.add[("1", "1")] == "1"
    cex = pgm.pi0_is_group(M)
    assert isinstance(cex, Counterexample)
    assert cex.detail == ("1",)


def test_pi0_monoid_g2():
    M = pgm.pi0_monoid(pgm.fix_g2_pgm())
    assert M.elements == ("*",)
    assert pgm.pi0_is_group(M) is True


def test_pi0_monoid_always_commutative():
    for make in ALL_PGMS:
        pgm.validate_comm_monoid(pgm.pi0_monoid(make()))


# --- predicates --------------------------------------------------------------

def test_c2_predicates():
    P = pgm.fix_c2_pgm()
    assert pgm.is_two_groupoid(P.carrier) is True
    assert pgm.is_grouplike(P) is True
    assert pgm.has_faithful_translations(P) is True


def test_m2_predicates():
    P = pgm.fix_m2_pgm()
    assert pgm.is_two_groupoid(P.carrier) is True
    cex = pgm.is_grouplike(P)
    assert isinstance(cex, Counterexample)
    assert cex.clause == "object-not-invertible"
    assert cex.detail == ("1",)
    assert pgm.has_faithful_translations(P) is True


def test_g2sat_predicates():
    P = pgm.fix_g2sat_pgm()
    assert pgm.has_faithful_translations(P) is True
    cex = pgm.is_two_groupoid(P.carrier)
    assert isinstance(cex, Counterexample)
    assert cex.clause == "2-cell-not-invertible"
    assert cex.detail == ("e1",)


def test_g2_predicates():
    P = pgm.fix_g2_pgm()
    assert pgm.is_two_groupoid(P.carrier) is True
    assert pgm.is_grouplike(P) is True


def test_strict_functor_identity():
    P = pgm.fix_c2_pgm()
    assert pgm.is_strict_pgm_functor(identity_functor(P.carrier), P, P) \
        is True


def test_strict_functor_detects_sum_mismatch():
    # the identity of the common carrier does not match Z/2 against max
    P, Q = pgm.fix_c2_pgm(), pgm.fix_m2_pgm()
    cex = pgm.is_strict_pgm_functor(identity_functor(P.carrier), P, Q)
    assert isinstance(cex, Counterexample)
    assert cex.clause == "sum-not-preserved"


# --- localization ------------------------------------------------------------

def test_localize_trivial_monoid():
    A = FGAbGroup(2, (2,))
    acts = {"0": mid(3)}
    assert pgm.localize_module(A, acts, pgm.TRIVIAL_MONOID) == A


def test_localize_max_monoid_regular():
    # Z^2 with the max-monoid regular representation collapses to Z
    A = FGAbGroup(2, ())
    acts = {"0": mid(2), "1": [[0, 0], [1, 1]]}
    assert pgm.localize_module(A, acts, pgm.MAX_MONOID) == FGAbGroup(1, ())


def test_localize_z2_group_ring():
    # Z[Z/2] is already a module over the group Z/2: nothing collapses
    A = FGAbGroup(2, ())
    acts = {"0": mid(2), "1": [[0, 1], [1, 0]]}
    assert pgm.localize_module(A, acts, pgm.Z2_MONOID) == FGAbGroup(2, ())


def test_localize_rejects_non_homomorphism():
    A = FGAbGroup(1, ())
    acts = {"0": mid(1), "1": [[2]]}
    with pytest.raises(AxiomError):
        pgm.localize_module(A, acts, pgm.Z2_MONOID)


def _random_unimodular(rng, n):
    U = mid(n)
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        for k in range(n):
            U[i][k] += c * U[j][k]
    return U


def _inverse_unimodular(U):
    from twocat.intlinalg import smith_normal_form, solve
    n = len(U)
    snf = smith_normal_form(U)
    cols = [solve(snf, [1 if i == j else 0 for i in range(n)])
            for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _conjugate(rng, n, diag):
    U = _random_unimodular(rng, n)
    V = _inverse_unimodular(U)
    D = [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)]
    return mmul(U, mmul(D, V))


def _random_instance(rng):
    """(A, acts, M) with a genuinely homomorphic action: the free part
    carries a conjugated idempotent/involution, the torsion part the
    identity."""
    fr = rng.randint(0, 3)
    tors = rng.choice([(), (2,), (3,), (2, 4)])
    n = fr + len(tors)
    M = rng.choice([pgm.TRIVIAL_MONOID, pgm.Z2_MONOID, pgm.MAX_MONOID])
    acts = {M.unit: mid(n)}
    if len(M.elements) > 1:
        if M is pgm.Z2_MONOID:
            diag = [rng.choice([1, -1]) for _ in range(fr)]
        else:
            diag = [rng.choice([0, 1]) for _ in range(fr)]
        P = _conjugate(rng, fr, diag) if fr else []
        mat = mid(n)
        for i in range(fr):
            for j in range(fr):
                mat[i][j] = P[i][j]
        acts["1"] = mat
    return FGAbGroup(fr, tors), acts, M


def test_localize_against_oracle():
    rng = random.Random(20260823)
    for _ in range(50):
        A, acts, M = _random_instance(rng)
        assert pgm.localize_module(A, acts, M) == \
            pgm.localize_oracle(A, acts, M)


def test_localize_idempotent():
    # once every element acts invertibly, localization changes nothing
    rng = random.Random(7)
    for _ in range(20):
        A, acts, M = _random_instance(rng)
        L = pgm.localize_module(A, acts, M)
        ident = {m: mid(L.free_rank + len(L.torsion)) for m in M.elements}
        assert pgm.localize_module(L, ident, M) == L


def _dsum(G1, G2):
    n = G1.free_rank + len(G1.torsion) + G2.free_rank + len(G2.torsion)
    orders = [0] * G1.free_rank + list(G1.torsion) + \
        [0] * G2.free_rank + list(G2.torsion)
    cols = []
    for i, t in enumerate(orders):
        if t:
            col = [0] * n
            col[i] = t
            cols.append(col)
    return PresentedGroup(n, from_columns(cols, nrows=n)).canonical()


def test_localize_commutes_with_direct_sums():
    rng = random.Random(99)
    for _ in range(15):
        A1, acts1, M = _random_instance(rng)
        # second summand over the same monoid
        while True:
            A2, acts2, M2 = _random_instance(rng)
            if M2 is M:
                break
        n1 = A1.free_rank + len(A1.torsion)
        n2 = A2.free_rank + len(A2.torsion)
        A = FGAbGroup(A1.free_rank + A2.free_rank, ())
        # block coordinates: free of A1, free of A2 (torsion dropped to
        # keep the canonical free-first layout exact)
        acts = {}
        for m in M.elements:
            f1, f2 = A1.free_rank, A2.free_rank
            mat = [[0] * (f1 + f2) for _ in range(f1 + f2)]
            for i in range(f1):
                for j in range(f1):
                    mat[i][j] = acts1[m][i][j]
            for i in range(f2):
                for j in range(f2):
                    mat[f1 + i][f1 + j] = acts2[m][i][j]
            acts[m] = mat
        lhs = pgm.localize_module(A, acts, M)
        r1 = pgm.localize_module(FGAbGroup(A1.free_rank, ()),
                                 {m: [row[:A1.free_rank]
                                      for row in acts1[m][:A1.free_rank]]
                                  for m in M.elements}, M)
        r2 = pgm.localize_module(FGAbGroup(A2.free_rank, ()),
                                 {m: [row[:A2.free_rank]
                                      for row in acts2[m][:A2.free_rank]]
                                  for m in M.elements}, M)
        assert lhs == _dsum(r1, r2)


def test_localize_with_torsion_collapse():
    # (Z/4 + Z) with max acting by killing the free part
    A = FGAbGroup(1, (4,))
    acts = {"0": mid(2), "1": [[0, 0], [0, 1]]}
    assert pgm.localize_module(A, acts, pgm.MAX_MONOID) == FGAbGroup(0, (4,))
