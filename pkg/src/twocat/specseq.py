"""The bisimplicial resolution of a 2-functor and its spectral sequence.

For a 2-functor F: C -> D, the bisimplicial set B(F) has (p, q)-cells the
triples (omega, delta, sigma) where omega is a q-simplex of the nerve of C,
sigma a p-simplex of the nerve of D, and delta a (q+1+p)-simplex of the
nerve of D restricting to F(omega) on the first q+1 vertices and to sigma
on the last p+1.  Horizontal operators act through the sigma block of
delta, vertical operators through the omega block.

The module computes the first two pages of the homology spectral sequence
of B(F) (vertical homology first), the homology of the totalization, and
the two filtration identifications that drive the theory:

* at fixed sigma, the vertical q-cells over sigma are the q-simplices of
  the nerve of the diagram-shaped comma object of F over sigma;
* at fixed omega, the horizontal p-cells under omega are the p-simplices
  of the nerve of the codiagram-shaped comma object under F(omega).

When F is a certified opfibration the E^2 page is identified with the
homology of the base with local coefficients in the fiber homology; the
coefficient system is constructed here (``fiber_coeff_system``) with
transition matrices computed along comma-object routes, and
``e2_vs_local`` checks the identification degreewise.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intlinalg as il
from .constructs import (DiagramCommaResult, find_oplax_initial, laco,
                         laco_diagram, lp_initial_d_e, oplaco_codiagram,
                         strict_fiber)
from .core import (AxiomError, TwoCategory, TwoFunctor, compose_functors,
                   validate_two_functor)
from .fixtures import point_functor
from .homology import (PresentedGroup, LocalCoeffSystem, homology_induced,
                       homology_local, homology_subquotient, presentation_of)
from .nerve import (OrientedSimplex, TruncSimplicialSet, degeneracy,
                    enumerate_simplices, face, induced_map, map_simplex,
                    nerve)
from ast import literal_eval

from .orientals import materialize_oriental, path_id


# ---------------------------------------------------------------------------
# simplices as 2-functors out of orientals
# ---------------------------------------------------------------------------

def _path_composite(D: TwoCategory, x: OrientedSimplex, P: tuple) -> str:
    """The composite in D of the edges of x along the vertex path P."""
    if len(P) == 1:
        return D.id1[x.vertices[P[0]]]
    acc = x.edge(P[0], P[1])
    for a, b in zip(P[1:], P[2:]):
        acc = D.comp1[(x.edge(a, b), acc)]
    return acc


def simplex_functor(D: TwoCategory, x: OrientedSimplex) -> TwoFunctor:
    """The 2-functor from the x.dim-th oriental to D classified by the
    simplex x: vertices to vertices, paths to edge composites, and each
    refinement 2-cell to the pasting of x's triangles obtained by
    inserting the missing vertices one at a time in increasing order.
    The result is validated, which checks that the assignment of the
    refinement cells is independent of any bracketing."""
    O = materialize_oriental(x.dim, bound=max(4, x.dim))
    on_objects = {str(i): x.vertices[i] for i in range(x.dim + 1)}
    on_one = {}
    for pid in O.one_src:
        P = literal_eval(pid)  # path ids print as int tuples
        on_one[pid] = _path_composite(D, x, P)
    on_two = {}
    for cid in O.two_src:
        P, Q = literal_eval(cid)
        cur = list(P)
        acc = D.id2[on_one[path_id(P)]]
        missing = [v for v in Q if v not in P]
        for v in missing:
            k = max(i for i in range(len(cur)) if cur[i] < v)
            step = x.triangle(cur[k], v, cur[k + 1])
            step = D.whisk_r[(step, _path_composite(D, x, tuple(cur[:k + 1])))]
            step = D.whisk_l[(_path_composite(D, x, tuple(cur[k + 1:])), step)]
            acc = D.vcomp[(step, acc)]
            cur.insert(k + 1, v)
        on_two[cid] = acc
    return validate_two_functor(TwoFunctor(O, D, on_objects, on_one, on_two))


# ---------------------------------------------------------------------------
# the bisimplicial set B(F)
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Bisimplex:
    om: OrientedSimplex        # q-simplex of the nerve of C
    de: OrientedSimplex        # (q+1+p)-simplex of the nerve of D
    si: OrientedSimplex        # p-simplex of the nerve of D


@dataclass
class BisimplicialTrunc:
    F: TwoFunctor
    P: int
    Q: int
    levels: dict               # (p, q) -> sorted tuple of Bisimplex
    face_h: dict               # (i, x) -> Bisimplex, 0 <= i <= p, p >= 1
    face_v: dict               # (i, x) -> Bisimplex, 0 <= i <= q, q >= 1
    degen_h: dict              # (i, x) -> Bisimplex, 0 <= i <= p < P
    degen_v: dict              # (i, x) -> Bisimplex, 0 <= i <= q < Q
    degenerate_h: dict         # x -> bool
    degenerate_v: dict         # x -> bool
    level_of: dict             # x -> (p, q)


def _pinned_delta(F: TwoFunctor, om: OrientedSimplex, si: OrientedSimplex):
    """All admissible delta's for the pair (om, si): vertices, edges and
    triangles inside the omega block and the sigma block are pinned; the
    mixed cells are enumerated."""
    D = F.target
    q, p = om.dim, si.dim
    fom = map_simplex(F, om)
    pv = {i: fom.vertices[i] for i in range(q + 1)}
    pv.update({q + 1 + j: si.vertices[j] for j in range(p + 1)})
    pe = {ij: e for ij, e in fom.edges}
    pe.update({(q + 1 + a, q + 1 + b): e for (a, b), e in si.edges})
    pt = {ijk: t for ijk, t in fom.triangles}
    pt.update({(q + 1 + a, q + 1 + b, q + 1 + c): t
               for (a, b, c), t in si.triangles})
    return enumerate_simplices(D, q + 1 + p, pv, pe, pt)


def build_B(F: TwoFunctor, P: int, Q: int) -> BisimplicialTrunc:
    C, D = F.source, F.target
    omegas = {q: enumerate_simplices(C, q) for q in range(Q + 1)}
    sigmas = {p: enumerate_simplices(D, p) for p in range(P + 1)}
    levels = {}
    level_of = {}
    for p in range(P + 1):
        for q in range(Q + 1):
            cells = []
            for om in omegas[q]:
                for si in sigmas[p]:
                    for de in _pinned_delta(F, om, si):
                        cells.append(Bisimplex(om, de, si))
            levels[(p, q)] = tuple(sorted(cells))
            for x in levels[(p, q)]:
                level_of[x] = (p, q)
    lsets = {k: set(v) for k, v in levels.items()}
    face_h, face_v, degen_h, degen_v = {}, {}, {}, {}
    for (p, q), cells in levels.items():
        for x in cells:
            for i in range(p + 1):
                if p >= 1:
                    y = Bisimplex(x.om, face(D, x.de, q + 1 + i),
                                  face(D, x.si, i))
                    assert y in lsets[(p - 1, q)]
                    face_h[(i, x)] = y
                if p < P:
                    y = Bisimplex(x.om, degeneracy(D, x.de, q + 1 + i),
                                  degeneracy(D, x.si, i))
                    assert y in lsets[(p + 1, q)]
                    degen_h[(i, x)] = y
            for i in range(q + 1):
                if q >= 1:
                    y = Bisimplex(face(C, x.om, i), face(D, x.de, i), x.si)
                    assert y in lsets[(p, q - 1)]
                    face_v[(i, x)] = y
                if q < Q:
                    y = Bisimplex(degeneracy(C, x.om, i),
                                  degeneracy(D, x.de, i), x.si)
                    assert y in lsets[(p, q + 1)]
                    degen_v[(i, x)] = y
    degenerate_h, degenerate_v = {}, {}
    for (p, q), cells in levels.items():
        for x in cells:
            degenerate_h[x] = p >= 1 and any(
                x == degen_h[(i, face_h[(i + 1, x)])] for i in range(p))
            degenerate_v[x] = q >= 1 and any(
                x == degen_v[(i, face_v[(i + 1, x)])] for i in range(q))
    return BisimplicialTrunc(F, P, Q, levels, face_h, face_v,
                             degen_h, degen_v, degenerate_h, degenerate_v,
                             level_of)


def check_bisimplicial(B: BisimplicialTrunc) -> bool:
    """Simplicial identities in each direction plus commutation of every
    horizontal operator with every vertical one, verified exhaustively
    within the truncation."""
    def ok_direction(fc, dg, coord):
        for x, (p, q) in B.level_of.items():
            n = p if coord == 0 else q
            for j in range(n + 1):
                for i in range(j):
                    if n >= 2 and fc[(i, fc[(j, x)])] != fc[(j - 1, fc[(i, x)])]:
                        return False
                cap = B.P if coord == 0 else B.Q
                if n + 1 < cap:
                    for i in range(j + 1):
                        if dg[(j + 1, dg[(i, x)])] != dg[(i, dg[(j, x)])]:
                            return False
                if n < cap:
                    for i in range(n + 2):
                        y = dg[(j, x)]
                        if i == j or i == j + 1:
                            if fc[(i, y)] != x:
                                return False
                        elif n >= 1:
                            if i < j:
                                if fc[(i, y)] != dg[(j - 1, fc[(i, x)])]:
                                    return False
                            elif fc[(i, y)] != dg[(j, fc[(i - 1, x)])]:
                                return False
        return True

    if not ok_direction(B.face_h, B.degen_h, 0):
        return False
    if not ok_direction(B.face_v, B.degen_v, 1):
        return False
    for x, (p, q) in B.level_of.items():
        for i in range(p + 1):
            for j in range(q + 1):
                if p >= 1 and q >= 1 and \
                        B.face_v[(j, B.face_h[(i, x)])] != \
                        B.face_h[(i, B.face_v[(j, x)])]:
                    return False
                if p < B.P and q < B.Q and \
                        B.degen_v[(j, B.degen_h[(i, x)])] != \
                        B.degen_h[(i, B.degen_v[(j, x)])]:
                    return False
                if p >= 1 and q < B.Q and \
                        B.degen_v[(j, B.face_h[(i, x)])] != \
                        B.face_h[(i, B.degen_v[(j, x)])]:
                    return False
                if p < B.P and q >= 1 and \
                        B.face_v[(j, B.degen_h[(i, x)])] != \
                        B.degen_h[(i, B.face_v[(j, x)])]:
                    return False
    return True


# ---------------------------------------------------------------------------
# pages of the spectral sequence (vertical homology first)
# ---------------------------------------------------------------------------

def _sq_of(rank, cycles_mat, bnd_mat, first):
    if rank == 0:
        return il.subquotient(0, [], [])
    if first:
        cycles = il.mid(rank)
    else:
        cycles = il.kernel_basis(cycles_mat)
        if il.mshape(cycles)[1] == 0:
            cycles = il.mzeros(rank, 0)
    return il.subquotient(rank, cycles, bnd_mat)


def _alt_sum_matrix(src, tgt, faces, sign=1):
    """Matrix of x -> sum_i (-1)^i * sign * face_i(x) on the given bases,
    dropping faces outside tgt (the normalized quotient)."""
    idx = {y: r for r, y in enumerate(tgt)}
    M = il.mzeros(len(tgt), len(src))
    for j, x in enumerate(src):
        for i, y in faces(x):
            if y in idx:
                M[idx[y]][j] += sign * (-1) ** i
    return M


@dataclass
class SSPages:
    B: BisimplicialTrunc
    E1: dict                   # (p, q) -> FGAbGroup, p <= P, q <= Q-1
    E1_sq: dict                # (p, q) -> (Subquotient, basis)
    d1: dict                   # (p, q) -> matrix E1[p,q] -> E1[p-1,q]
    E2: dict                   # (p, q) -> FGAbGroup, p <= P-1, q <= Q-1
    trusted: tuple             # (P-1, Q-1)


def pages(B: BisimplicialTrunc) -> SSPages:
    """E^1 (vertical homology on normalized columns) and E^2 (homology of
    the E^1 rows under the induced horizontal differential).  Entries are
    trusted for p <= P-1 and q <= Q-1; the extra column p = P on E^1 is
    computed only to supply boundaries for E^2."""
    basisV = {k: [x for x in cells if not B.degenerate_v[x]]
              for k, cells in B.levels.items()}
    E1, E1_sq, d1 = {}, {}, {}
    for p in range(B.P + 1):
        for q in range(B.Q):
            src = basisV[(p, q)]
            dV = _alt_sum_matrix(
                src, basisV[(p, q - 1)] if q >= 1 else [],
                lambda x: [(i, B.face_v[(i, x)]) for i in range(q + 1)]) \
                if q >= 1 else None
            bnd = _alt_sum_matrix(
                basisV[(p, q + 1)], src,
                lambda x: [(i, B.face_v[(i, x)]) for i in range(q + 2)])
            first = q == 0 or not basisV[(p, q - 1)]
            sq = _sq_of(len(src), dV, bnd, first)
            E1_sq[(p, q)] = (sq, src)
            E1[(p, q)] = sq.group
    for p in range(1, B.P + 1):
        for q in range(B.Q):
            src = basisV[(p, q)]
            tgt = basisV[(p - 1, q)]
            M = _alt_sum_matrix(
                src, tgt,
                lambda x: [(i, B.face_h[(i, x)]) for i in range(p + 1)])
            d1[(p, q)] = il.induced_matrix(E1_sq[(p, q)][0],
                                           E1_sq[(p - 1, q)][0], M)
    E2 = {}
    for q in range(B.Q):
        groups = {p: presentation_of(E1_sq[(p, q)][0])
                  for p in range(B.P + 1)}
        for p in range(B.P):
            E2[(p, q)] = _presented_complex_homology(
                groups, {r: d1[(r, q)] for r in range(1, B.P + 1)}, p)
    return SSPages(B, E1, E1_sq, d1, E2, (B.P - 1, B.Q - 1))


def _presented_complex_homology(groups: dict, maps: dict, n: int):
    """Homology at position n of a complex of finitely presented abelian
    groups, maps[r]: groups[r] -> groups[r-1] on generators."""
    G = groups[n].gens
    if G == 0:
        return il.FGAbGroup(0, ())
    rels_n = groups[n].rel_matrix()
    if n == 0 or groups[n - 1].gens == 0:
        cycles = il.mid(G)
    else:
        rels_prev = groups[n - 1].rel_matrix()
        block = il.hstack(maps[n], rels_prev) \
            if il.mshape(rels_prev)[1] else maps[n]
        ker = il.kernel_basis(block)
        xcols = [col[:G] for col in il.columns(ker)]
        cycles = il.from_columns(xcols, nrows=G)
        if il.mshape(cycles)[1] == 0:
            cycles = il.mzeros(G, 0)
    pieces = []
    if n + 1 in maps and groups[n + 1].gens:
        pieces.append(maps[n + 1])
    if il.mshape(rels_n)[1]:
        pieces.append(rels_n)
    if pieces:
        bgens = pieces[0]
        for piece in pieces[1:]:
            bgens = il.hstack(bgens, piece)
    else:
        bgens = il.mzeros(G, 0)
    return il.subquotient(G, cycles, bgens).group


def row_homology(B: BisimplicialTrunc, q: int, p: int) -> il.FGAbGroup:
    """Homology of the horizontally normalized row at vertical level q,
    before taking vertical homology; trusted for p <= P-1."""
    if p > B.P - 1:
        raise ValueError("row H_%d needs horizontal bound >= %d, have %d"
                         % (p, p + 1, B.P))
    basisH = {r: [x for x in B.levels[(r, q)] if not B.degenerate_h[x]]
              for r in range(B.P + 1)}
    dH = _alt_sum_matrix(
        basisH[p], basisH[p - 1] if p >= 1 else [],
        lambda x: [(i, B.face_h[(i, x)]) for i in range(p + 1)]) \
        if p >= 1 else None
    bnd = _alt_sum_matrix(
        basisH[p + 1], basisH[p],
        lambda x: [(i, B.face_h[(i, x)]) for i in range(p + 2)])
    first = p == 0 or not basisH[p - 1]
    return _sq_of(len(basisH[p]), dH, bnd, first).group


def horizontal_collapse_check(B: BisimplicialTrunc, q: int) -> bool:
    """Each row collapses onto the q-simplices of the nerve of the source:
    H_0 of row q is free on all q-simplices of C (each augmentation piece
    is connected with a lax terminal cocone) and H_p vanishes for
    0 < p <= P-1."""
    nq = len(enumerate_simplices(B.F.source, q))
    if row_homology(B, q, 0) != il.FGAbGroup(nq, ()):
        return False
    return all(row_homology(B, q, p).is_trivial for p in range(1, B.P))


def totalization_homology(B: BisimplicialTrunc, n: int) -> il.FGAbGroup:
    """Homology of the total complex on the bidegreewise nondegenerate
    triples, with differential d^H + (-1)^p d^V (degenerate faces
    dropped); agrees with the homology of the nerve of the source
    2-category.  Trusted for n <= min(P, Q) - 1."""
    if n < 0 or n > min(B.P, B.Q) - 1:
        raise ValueError(
            "total H_%d needs bisimplicial bounds >= %d, have (%d, %d)"
            % (n, n + 1, B.P, B.Q))

    def basis(m):
        out = []
        for p in range(m + 1):
            q = m - p
            if p <= B.P and q <= B.Q:
                out.extend(x for x in B.levels[(p, q)]
                           if not B.degenerate_h[x]
                           and not B.degenerate_v[x])
        return out

    def total_d(m):
        src, tgt = basis(m), basis(m - 1)
        idx = {y: r for r, y in enumerate(tgt)}
        M = il.mzeros(len(tgt), len(src))
        for j, x in enumerate(src):
            p, q = B.level_of[x]
            if p >= 1:
                for i in range(p + 1):
                    y = B.face_h[(i, x)]
                    if y in idx:
                        M[idx[y]][j] += (-1) ** i
            if q >= 1:
                for i in range(q + 1):
                    y = B.face_v[(i, x)]
                    if y in idx:
                        M[idx[y]][j] += (-1) ** (p + i)
        return M

    rank = len(basis(n))
    dn = total_d(n) if n >= 1 else None
    bnd = total_d(n + 1)
    first = n == 0 or not basis(n - 1)
    return _sq_of(rank, dn, bnd, first).group


# ---------------------------------------------------------------------------
# the two filtration identifications
# ---------------------------------------------------------------------------

def _assemble_over_sigma(F: TwoFunctor, L: DiagramCommaResult,
                         si: OrientedSimplex, Y: OrientedSimplex):
    """A q-simplex Y of the nerve of the comma object of F over sigma,
    unpacked into the pair (omega, delta) of the corresponding vertical
    q-cell of B(F) at sigma."""
    q, p = Y.dim, si.dim
    q1 = q + 1
    om = map_simplex(L.p_left, Y)
    fom = map_simplex(F, om)
    verts = fom.vertices + si.vertices
    edges = {ij: e for ij, e in fom.edges}
    edges.update({(q1 + a, q1 + b): e for (a, b), e in si.edges})
    tris = {ijk: t for ijk, t in fom.triangles}
    tris.update({(q1 + a, q1 + b, q1 + c): t
                 for (a, b, c), t in si.triangles})
    for i in range(q + 1):
        (_, comps, cells) = L.obj_data[Y.vertices[i]]
        dcomps, dcells = dict(comps), dict(cells)
        for j in range(p + 1):
            edges[(i, q1 + j)] = dcomps[str(j)]
        for a in range(p + 1):
            for b in range(a + 1, p + 1):
                tris[(i, q1 + a, q1 + b)] = dcells[path_id((a, b))]
    for a in range(q + 1):
        for b in range(a + 1, q + 1):
            (_, _, _, la) = L.one_data[Y.edge(a, b)]
            dla = dict(la)
            for j in range(p + 1):
                tris[(a, b, q1 + j)] = dla[str(j)]
    de = OrientedSimplex(q1 + p, verts, tuple(sorted(edges.items())),
                         tuple(sorted(tris.items())))
    return om, de


def filtration_check_p(F: TwoFunctor, si: OrientedSimplex, q: int) -> bool:
    """At fixed sigma, the vertical q-cells of B(F) over sigma are in
    face/degeneracy-preserving bijection with the q-simplices of the nerve
    of the comma object of F over the diagram classified by sigma."""
    C, D = F.source, F.target
    L = laco_diagram(F, simplex_functor(D, si))
    Ys = enumerate_simplices(L.cat, q)
    assembled = {Y: _assemble_over_sigma(F, L, si, Y) for Y in Ys}
    target = set()
    for om in enumerate_simplices(C, q):
        for de in _pinned_delta(F, om, si):
            target.add((om, de))
    if len(set(assembled.values())) != len(Ys):
        return False
    if set(assembled.values()) != target:
        return False
    if q >= 1:
        for Y in Ys:
            om, de = assembled[Y]
            for i in range(q + 1):
                got = _assemble_over_sigma(F, L, si, face(L.cat, Y, i))
                if got != (face(C, om, i), face(D, de, i)):
                    return False
    if q >= 1:
        for Y in enumerate_simplices(L.cat, q - 1):
            om, de = _assemble_over_sigma(F, L, si, Y)
            for i in range(q):
                got = _assemble_over_sigma(F, L, si,
                                           degeneracy(L.cat, Y, i))
                if got != (degeneracy(C, om, i), degeneracy(D, de, i)):
                    return False
    return True


def _assemble_under_omega(F: TwoFunctor, R, om: OrientedSimplex,
                          Y: OrientedSimplex):
    """A p-simplex Y of the nerve of the codiagram comma object under
    F(omega), unpacked into the pair (delta, sigma) of the corresponding
    horizontal p-cell of B(F) at omega."""
    q, p = om.dim, Y.dim
    q1 = q + 1
    si = map_simplex(R.p_right, Y)
    fom = map_simplex(F, om)
    verts = fom.vertices + si.vertices
    edges = {ij: e for ij, e in fom.edges}
    edges.update({(q1 + a, q1 + b): e for (a, b), e in si.edges})
    tris = {ijk: t for ijk, t in fom.triangles}
    tris.update({(q1 + a, q1 + b, q1 + c): t
                 for (a, b, c), t in si.triangles})
    for j in range(p + 1):
        (_, comps, cells) = R.obj_data[Y.vertices[j]]
        dcomps, dcells = dict(comps), dict(cells)
        for i in range(q + 1):
            edges[(i, q1 + j)] = dcomps[str(i)]
        for a in range(q + 1):
            for b in range(a + 1, q + 1):
                tris[(a, b, q1 + j)] = dcells[path_id((a, b))]
    for a in range(p + 1):
        for b in range(a + 1, p + 1):
            (_, _, _, la) = R.one_data[Y.edge(a, b)]
            dla = dict(la)
            for i in range(q + 1):
                tris[(i, q1 + a, q1 + b)] = dla[str(i)]
    de = OrientedSimplex(q1 + p, verts, tuple(sorted(edges.items())),
                         tuple(sorted(tris.items())))
    return de, si


def filtration_check_q(F: TwoFunctor, om: OrientedSimplex, p: int) -> bool:
    """At fixed omega, the horizontal p-cells of B(F) under omega are in
    face/degeneracy-preserving bijection with the p-simplices of the
    nerve of the codiagram comma object under F(omega)."""
    C, D = F.source, F.target
    W = compose_functors(F, simplex_functor(C, om))
    R = oplaco_codiagram(W)
    Ys = enumerate_simplices(R.cat, p)
    assembled = {Y: _assemble_under_omega(F, R, om, Y) for Y in Ys}
    target = set()
    for si in enumerate_simplices(D, p):
        for de in _pinned_delta(F, om, si):
            target.add((de, si))
    if len(set(assembled.values())) != len(Ys):
        return False
    if set(assembled.values()) != target:
        return False
    if p >= 1:
        q1 = om.dim + 1
        for Y in Ys:
            de, si = assembled[Y]
            for i in range(p + 1):
                got = _assemble_under_omega(F, R, om, face(R.cat, Y, i))
                if got != (face(D, de, q1 + i), face(D, si, i)):
                    return False
        for Y in enumerate_simplices(R.cat, p - 1):
            de, si = _assemble_under_omega(F, R, om, Y)
            for i in range(p):
                got = _assemble_under_omega(F, R, om,
                                            degeneracy(R.cat, Y, i))
                if got != (degeneracy(D, de, q1 + i),
                           degeneracy(D, si, i)):
                    return False
    return True


# ---------------------------------------------------------------------------
# the fiber-homology coefficient system of a certified opfibration
# ---------------------------------------------------------------------------

def diagram_comma_reindex(Lsrc: DiagramCommaResult,
                          Ltgt: DiagramCommaResult, vmap: dict) -> TwoFunctor:
    """The 2-functor between diagram-shaped comma objects induced by a
    monotone reindexing of oriental shapes: vmap sends each vertex of the
    target shape to a vertex of the source shape, and the two diagrams
    must agree accordingly (cones restrict along vmap)."""
    def map_path(Ptup):
        mp = [vmap[a] for a in Ptup]
        out = [mp[0]]
        for v in mp[1:]:
            if v != out[-1]:
                out.append(v)
        return tuple(out)

    tverts = sorted(int(i) for i in Ltgt.E.objects)
    on_obj = {}
    for (c, comps, cells), o in Lsrc.obj_id.items():
        dcomps, dcells = dict(comps), dict(cells)
        comps2 = tuple(sorted((str(j), dcomps[str(vmap[j])])
                              for j in tverts))
        cells2 = {}
        for e in Ltgt.E.one_src:
            cells2[e] = dcells[path_id(map_path(literal_eval(e)))]
        on_obj[o] = Ltgt.obj_id[(c, comps2, tuple(sorted(cells2.items())))]
    on_one = {}
    for (o, o2, s, la), m in Lsrc.one_id.items():
        dla = dict(la)
        la2 = tuple(sorted((str(j), dla[str(vmap[j])]) for j in tverts))
        on_one[m] = Ltgt.one_id[(on_obj[o], on_obj[o2], s, la2)]
    on_two = {}
    for (m, m2, phi), cc in Lsrc.two_id.items():
        on_two[cc] = Ltgt.two_id[(on_one[m], on_one[m2], phi)]
    return TwoFunctor(Lsrc.cat, Ltgt.cat, on_obj, on_one, on_two)


def _fiber_to_comma(F: TwoFunctor, x: str, fib: TwoCategory, Lx) -> TwoFunctor:
    """Strict inclusion of the fiber of F at x into laco(F, x-hat)."""
    D = F.target
    T = Lx.p_right.target
    idx, pt = D.id1[x], T.id1["pt"]
    on_obj = {o: Lx.obj_id[(o, idx, "pt")] for o in fib.objects}
    on_one = {m: Lx.one_id[(on_obj[fib.one_src[m]], on_obj[fib.one_tgt[m]],
                            m, D.id2[idx], pt)] for m in fib.one_src}
    on_two = {c: Lx.two_id[(on_one[fib.two_src[c]], on_one[fib.two_tgt[c]],
                            c, T.id2[pt])] for c in fib.two_src}
    return TwoFunctor(fib, Lx.cat, on_obj, on_one, on_two)


def _iso_inverse(M, src_orders, tgt_orders):
    """Inverse of an isomorphism given in canonical coordinates of two
    presented groups (orders: 0 for a free generator, t for Z/t)."""
    n = len(tgt_orders)
    rel_cols = []
    for i, t in enumerate(tgt_orders):
        if t:
            col = [0] * n
            col[i] = t
            rel_cols.append(col)
    full = il.hstack(M, il.from_columns(rel_cols, nrows=n)) \
        if rel_cols else M
    snf = il.smith_normal_form(full)
    k = len(src_orders)
    cols = []
    for j in range(n):
        e = [0] * n
        e[j] = 1
        sol = il.solve(snf, e)
        if sol is None:
            raise AxiomError("canonical-coordinate matrix is not invertible")
        v = sol[:k]
        cols.append([a % t if t else a for a, t in zip(v, src_orders)])
    return il.from_columns(cols, nrows=k)


@dataclass
class FiberCoeffData:
    system: LocalCoeffSystem
    fiber_group: dict          # object of D -> PresentedGroup
    edge_matrix: dict          # nonidentity 1-cell of D -> matrix


def fiber_coeff_system(F: TwoFunctor, cert, q: int,
                       X: TruncSimplicialSet) -> FiberCoeffData:
    """Local coefficients on the nerve X of F's target: at each simplex,
    the degree-q homology of the strict fiber of F over its leading
    vertex; the only nontrivial transition, along the face d_0, is
    transported through the comma objects:

        fiber(x) -> laco(F, x-hat) -> comma over (f: x -> y)
                 -> laco(F, y-hat) <- fiber(y),

    where the right-hand inclusion is inverted on homology (it induces an
    isomorphism when F is a certified opfibration; this is checked and an
    AxiomError raised otherwise)."""
    if cert.functor is not F:
        raise ValueError("certificate does not belong to the given functor")
    D = F.target

    obj_cache = {}

    def object_data(x):
        if x not in obj_cache:
            fib, _ = strict_fiber(F, x)
            Xf = nerve(fib, q + 1)
            sq, _ = homology_subquotient(Xf, q)
            obj_cache[x] = (fib, Xf, sq, presentation_of(sq))
        return obj_cache[x]

    comma_cache = {}

    def comma_data(x):
        # laco(F, x-hat) with its fiber inclusion and homology data
        if x not in comma_cache:
            Lx = laco(F, point_functor(D, x))
            fib, Xf, sq_f, _ = object_data(x)
            inc = _fiber_to_comma(F, x, fib, Lx)
            XL = nerve(Lx.cat, q + 1)
            Minc, sq_src, sq_L = homology_induced(
                induced_map(inc, q + 1), Xf, XL, q)
            if sq_src.group != sq_L.group or \
                    not il.map_is_surjective(Minc, sq_L.orders):
                raise AxiomError(
                    "fiber inclusion at %r is not a homology isomorphism"
                    % x)
            comma_cache[x] = (Lx, inc, XL, sq_L,
                              _iso_inverse(Minc, sq_f.orders, sq_L.orders))
        return comma_cache[x]

    edge_matrix = {}

    def edge_data(f):
        if f not in edge_matrix:
            x, y = D.one_src[f], D.one_tgt[f]
            _, Xfx, _, _ = object_data(x)
            Lx, inc_x, _, _, _ = comma_data(x)
            Ly, _, XLy, sq_Ly, inv_y = comma_data(y)
            # the 1-simplex of the nerve of D classified by f
            sf = OrientedSimplex(1, (x, y), (((0, 1), f),), ())
            Gf = simplex_functor(D, sf)
            w = find_oplax_initial(Gf.source)
            d, _, _, _, Lf = lp_initial_d_e(F, Gf, w, Lpt=Lx)
            Gy = simplex_functor(D, OrientedSimplex(0, (y,), (), ()))
            Ly_dia = laco_diagram(F, Gy)
            restrict = diagram_comma_reindex(Lf, Ly_dia, {0: 1})
            w0 = find_oplax_initial(Gy.source)
            _, ey, _, _, _ = lp_initial_d_e(F, Gy, w0, Lpt=Ly, Ldia=Ly_dia)
            route = compose_functors(
                ey, compose_functors(restrict, compose_functors(d, inc_x)))
            Mr, _, _ = homology_induced(induced_map(route, q + 1),
                                        Xfx, XLy, q)
            M = il.mmul(inv_y, Mr)
            orders = object_data(y)[2].orders
            edge_matrix[f] = [[v % t if t else v for v in row]
                              for row, t in zip(M, orders)]
        return edge_matrix[f]

    group = {}
    face_map = {}
    degen_map = {}
    for lev in X.levels:
        for x in lev:
            group[x] = object_data(x.vertices[0])[3]
    for (i, x) in X.face:
        g = group[x].gens
        if i > 0:
            face_map[(i, x)] = il.mid(g)
        else:
            f = x.edge(0, 1)
            face_map[(i, x)] = il.mid(g) if D.is_id1(f) else edge_data(f)
    for k in X.degen:
        degen_map[k] = il.mid(group[k[1]].gens)
    fiber_group = {v: object_data(v)[3]
                   for v in {x.vertices[0] for lev in X.levels for x in lev}}
    return FiberCoeffData(LocalCoeffSystem(group, face_map, degen_map),
                          fiber_group, edge_matrix)


def e2_vs_local(F: TwoFunctor, cert, p: int, q: int) -> bool:
    """E^2_{p,q} of B(F) equals H_p of the nerve of the target with local
    coefficients in the degree-q fiber homology."""
    B = build_B(F, p + 1, q + 1)
    pg = pages(B)
    X = nerve(F.target, p + 1)
    data = fiber_coeff_system(F, cert, q, X)
    return pg.E2[(p, q)] == homology_local(X, data.system, p)
