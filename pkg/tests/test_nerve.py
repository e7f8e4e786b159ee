import pytest

from twocat import nerve as nv
from twocat.constructs import find_oplax_initial, find_oplax_terminal
from twocat.core import find_isomorphism, validate_two_category
from twocat.fixtures import bang_functor, fix_c2, fix_g2, fix_g2sat, fix_i, fix_t
from twocat.orientals import increasing_paths, materialize_oriental


# --- orientals ----------------------------------------------------------------

@pytest.mark.parametrize("p", range(5))
def test_orientals_validate(p):
    validate_two_category(materialize_oriental(p))


def test_oriental_bound():
    with pytest.raises(ValueError):
        materialize_oriental(5)
    materialize_oriental(5, bound=5)  # explicit bound raise is allowed


def test_oriental_0_1():
    assert find_isomorphism(materialize_oriental(0), fix_t()) is not None
    assert find_isomorphism(materialize_oriental(1), fix_i()) is not None


def test_oriental_2_shape():
    O = materialize_oriental(2)
    assert len(O.objects) == 3
    # 1-cells: three identities, (0,1), (1,2), (0,2) and (0,1,2)
    assert len(O.one_src) == 7
    nonid = [a for a in O.two_src if not O.is_id2(a)]
    assert nonid == [repr(((0, 2), (0, 1, 2)))]


def test_increasing_paths():
    assert increasing_paths(0, 3) == [(0, 1, 2, 3), (0, 1, 3), (0, 2, 3),
                                      (0, 3)]
    assert increasing_paths(2, 2) == [(2,)]


@pytest.mark.parametrize("p", range(4))
def test_oriental_initial_terminal(p):
    O = materialize_oriental(p)
    w = find_oplax_initial(O)
    assert w is not None and w.obj == "0"
    wt = find_oplax_terminal(O)
    assert wt is not None and wt.obj == str(p)


# --- simplex enumeration --------------------------------------------------------

@pytest.mark.parametrize("p", range(4))
def test_terminal_has_one_simplex_per_level(p):
    assert len(nv.enumerate_simplices(fix_t(), p)) == 1


def test_interval_simplices_are_monotone_maps():
    assert len(nv.enumerate_simplices(fix_i(), 2)) == 4
    assert len(nv.enumerate_simplices(fix_i(), 3)) == 5


def test_g2_simplex_counts():
    D = fix_g2()
    assert len(nv.enumerate_simplices(D, 2)) == 2
    assert len(nv.enumerate_simplices(D, 3)) == 8


def test_pinned_enumeration():
    D = fix_g2()
    xs = nv.enumerate_simplices(D, 2, pinned_triangles={(0, 1, 2): "e1"})
    assert len(xs) == 1 and xs[0].triangle(0, 1, 2) == "e1"


# --- nerve assembly -------------------------------------------------------------

def test_nerve_terminal():
    X = nv.nerve(fix_t(), 3)
    assert [len(l) for l in X.levels] == [1, 1, 1, 1]
    assert [len(X.nondegenerate(n)) for n in range(4)] == [1, 0, 0, 0]
    assert nv.check_simplicial_identities(X)


def test_nerve_interval_matches_classical():
    X = nv.nerve(fix_i(), 2)
    assert [len(l) for l in X.levels] == [2, 3, 4]
    assert nv.check_simplicial_identities(X)


def test_nerve_g2_counts():
    X = nv.nerve(fix_g2(), 3)
    assert [len(l) for l in X.levels] == [1, 1, 2, 8]
    assert [len(X.nondegenerate(n)) for n in range(4)] == [1, 0, 1, 4]
    assert nv.check_simplicial_identities(X)


def test_nerve_g2sat_identities():
    X = nv.nerve(fix_g2sat(), 3)
    assert nv.check_simplicial_identities(X)


def test_degeneracy_face_roundtrip():
    D = fix_g2()
    for x in nv.enumerate_simplices(D, 2):
        for i in range(3):
            y = nv.degeneracy(D, x, i)
            assert nv.face(D, y, i) == x
            assert nv.face(D, y, i + 1) == x
            assert nv.is_degenerate(D, y)


def test_induced_simplicial_map():
    D = fix_g2()
    F = bang_functor(D)
    m = nv.induced_map(F, 3)
    XT = nv.nerve(fix_t(), 3)
    for x, y in m.items():
        assert y in XT.levels[y.dim]
        if x.dim >= 1:
            for i in range(x.dim + 1):
                assert nv.face(fix_t(), y, i) == m[nv.face(D, x, i)]
