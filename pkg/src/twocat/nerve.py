"""The normal oplax nerve of a finite strict 2-category, truncated.

A p-simplex consists of vertices x_i, edges x_(i,j): x_i -> x_j for i < j,
and triangles x_(i,j,k): x_(i,k) => x_(j,k) . x_(i,j) for i < j < k, such
that every quadruple i < j < k < l satisfies the tetrahedron pasting
equality

    (x_(k,l) * x_(i,j,k)) . x_(i,k,l) == (x_(j,k,l) * x_(i,j)) . x_(i,j,l).

Faces reindex along the cofaces of the cosimplicial family of orientals
(which carry generators to generators); the degeneracy s_i repeats vertex i
with an identity edge and identity triangles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .core import TwoCategory, TwoFunctor


@dataclass(frozen=True, order=True)
class OrientedSimplex:
    dim: int
    vertices: tuple            # length dim+1, object ids
    edges: tuple               # (((i, j), one-cell id), ...) lex ordered
    triangles: tuple           # (((i, j, k), two-cell id), ...) lex ordered

    def edge(self, i: int, j: int) -> str:
        return dict(self.edges)[(i, j)]

    def triangle(self, i: int, j: int, k: int) -> str:
        return dict(self.triangles)[(i, j, k)]


def tetrahedron_ok(D: TwoCategory, edges: dict, tris: dict,
                   i: int, j: int, k: int, l: int) -> bool:
    lhs = D.vcomp[(D.whisk_l[(edges[(k, l)], tris[(i, j, k)])],
                   tris[(i, k, l)])]
    rhs = D.vcomp[(D.whisk_r[(tris[(j, k, l)], edges[(i, j)])],
                   tris[(i, j, l)])]
    return lhs == rhs


def enumerate_simplices(D: TwoCategory, p: int,
                        pinned_vertices: dict | None = None,
                        pinned_edges: dict | None = None,
                        pinned_triangles: dict | None = None):
    """All p-simplices of the normal oplax nerve of D, in deterministic
    order: vertices are filled in object-identifier order, then edges, then
    triangles, backtracking on the first violated tetrahedron.

    Cells can be pinned in advance (used when enumerating relative to a
    fixed boundary part)."""
    pinned_vertices = pinned_vertices or {}
    pinned_edges = pinned_edges or {}
    pinned_triangles = pinned_triangles or {}
    pairs = list(combinations(range(p + 1), 2))
    triples = list(combinations(range(p + 1), 3))
    quads = list(combinations(range(p + 1), 4))
    # tetrahedra ready for checking after each triple position
    tri_pos = {t: n for n, t in enumerate(triples)}
    ready = {n: [] for n in range(len(triples))}
    for q in quads:
        i, j, k, l = q
        faces = [(j, k, l), (i, k, l), (i, j, l), (i, j, k)]
        ready[max(tri_pos[f] for f in faces)].append(q)
    out = []

    def vertex_choices(i):
        if i in pinned_vertices:
            return [pinned_vertices[i]]
        return sorted(D.objects)

    for vs in product(*[vertex_choices(i) for i in range(p + 1)]):
        edge_choices = []
        ok = True
        for (i, j) in pairs:
            if (i, j) in pinned_edges:
                cand = [pinned_edges[(i, j)]]
                if D.one_src[cand[0]] != vs[i] or D.one_tgt[cand[0]] != vs[j]:
                    cand = []
            else:
                cand = D.hom1(vs[i], vs[j])
            if not cand:
                ok = False
                break
            edge_choices.append(cand)
        if not ok:
            continue
        for es in product(*edge_choices):
            edges = dict(zip(pairs, es))
            tri_choices = []
            ok = True
            for (i, j, k) in triples:
                tgt = D.comp1[(edges[(j, k)], edges[(i, j)])]
                if (i, j, k) in pinned_triangles:
                    cand = [pinned_triangles[(i, j, k)]]
                    if (D.two_src[cand[0]] != edges[(i, k)]
                            or D.two_tgt[cand[0]] != tgt):
                        cand = []
                else:
                    cand = D.hom2(edges[(i, k)], tgt)
                if not cand:
                    ok = False
                    break
                tri_choices.append(cand)
            if not ok:
                continue

            tris = {}

            def rec(n):
                if n == len(triples):
                    out.append(OrientedSimplex(
                        p, vs, tuple(sorted(edges.items())),
                        tuple(sorted(tris.items()))))
                    return
                for c in tri_choices[n]:
                    tris[triples[n]] = c
                    if all(tetrahedron_ok(D, edges, tris, *q)
                           for q in ready[n]):
                        rec(n + 1)
                del tris[triples[n]]

            if triples:
                rec(0)
            else:
                out.append(OrientedSimplex(p, vs,
                                           tuple(sorted(edges.items())), ()))
    return out


def face(D: TwoCategory, x: OrientedSimplex, i: int) -> OrientedSimplex:
    """d_i: delete vertex i and reindex along the coface [p-1] -> [p]."""
    p = x.dim
    assert 0 <= i <= p and p >= 1
    dl = lambda m: m if m < i else m + 1
    vs = tuple(x.vertices[dl(m)] for m in range(p))
    edges = tuple(sorted((((a, b), x.edge(dl(a), dl(b)))
                          for a, b in combinations(range(p), 2))))
    tris = tuple(sorted((((a, b, c), x.triangle(dl(a), dl(b), dl(c)))
                         for a, b, c in combinations(range(p), 3))))
    return OrientedSimplex(p - 1, vs, edges, tris)


def degeneracy(D: TwoCategory, x: OrientedSimplex, i: int) -> OrientedSimplex:
    """s_i: repeat vertex i; the collapsed edge is an identity 1-cell and
    collapsed triangles are identity 2-cells."""
    p = x.dim
    assert 0 <= i <= p
    sg = lambda m: m if m <= i else m - 1

    def edge(a, b):
        if sg(a) == sg(b):
            return D.id1[x.vertices[sg(a)]]
        return x.edge(sg(a), sg(b))

    def tri(a, b, c):
        if sg(a) == sg(b):
            # x_(i,c') => x_(i,c') . 1
            return D.id2[edge(a, c)]
        if sg(b) == sg(c):
            # x_(a',i+?) => 1 . x_(a',.)
            return D.id2[edge(a, c)]
        return x.triangle(sg(a), sg(b), sg(c))

    vs = tuple(x.vertices[sg(m)] for m in range(p + 2))
    edges = tuple(sorted((((a, b), edge(a, b))
                          for a, b in combinations(range(p + 2), 2))))
    tris = tuple(sorted((((a, b, c), tri(a, b, c))
                         for a, b, c in combinations(range(p + 2), 3))))
    return OrientedSimplex(p + 1, vs, edges, tris)


def is_degenerate(D: TwoCategory, x: OrientedSimplex) -> bool:
    return any(x == degeneracy(D, face(D, x, i + 1), i) for i in range(x.dim))


@dataclass
class TruncSimplicialSet:
    N: int
    levels: tuple              # levels[n] = sorted tuple of n-simplices
    face: dict                 # (i, x) -> simplex
    degen: dict                # (i, x) -> simplex
    degenerate: dict           # x -> bool

    def nondegenerate(self, n: int):
        return [x for x in self.levels[n] if not self.degenerate[x]]


def nerve(D: TwoCategory, N: int) -> TruncSimplicialSet:
    levels = tuple(tuple(sorted(enumerate_simplices(D, n)))
                   for n in range(N + 1))
    fmap = {}
    dmap = {}
    for n in range(1, N + 1):
        for x in levels[n]:
            for i in range(n + 1):
                fmap[(i, x)] = face(D, x, i)
    for n in range(N):
        for x in levels[n]:
            for i in range(n + 1):
                dmap[(i, x)] = degeneracy(D, x, i)
    degenerate = {}
    for n in range(N + 1):
        for x in levels[n]:
            degenerate[x] = is_degenerate(D, x)
    return TruncSimplicialSet(N, levels, fmap, dmap, degenerate)


def check_simplicial_identities(X: TruncSimplicialSet) -> bool:
    """All identities among face/degeneracy maps that stay within the
    truncation, verified exhaustively."""
    for n in range(2, X.N + 1):
        for x in X.levels[n]:
            for j in range(n + 1):
                for i in range(j):
                    # d_i d_j = d_{j-1} d_i for i < j
                    if X.face[(i, X.face[(j, x)])] != \
                            X.face[(j - 1, X.face[(i, x)])]:
                        return False
    for n in range(X.N - 1):
        for x in X.levels[n]:
            for j in range(n + 1):
                for i in range(j + 1):
                    # s_i s_j = s_{j+1} s_i for i <= j
                    if X.degen[(j + 1, X.degen[(i, x)])] != \
                            X.degen[(i, X.degen[(j, x)])]:
                        return False
    for n in range(X.N):
        for x in X.levels[n]:
            for j in range(n + 1):
                for i in range(n + 2):
                    y = X.degen[(j, x)]
                    got = X.face[(i, y)]
                    if i < j:
                        want = X.degen[(j - 1, X.face[(i, x)])] \
                            if n >= 1 else None
                        if n >= 1 and got != want:
                            return False
                    elif i in (j, j + 1):
                        if got != x:
                            return False
                    else:
                        want = X.degen[(j, X.face[(i - 1, x)])] \
                            if n >= 1 else None
                        if n >= 1 and got != want:
                            return False
    return True


def map_simplex(F: TwoFunctor, x: OrientedSimplex) -> OrientedSimplex:
    return OrientedSimplex(
        x.dim,
        tuple(F.on_objects[v] for v in x.vertices),
        tuple((ij, F.on_one[e]) for ij, e in x.edges),
        tuple((ijk, F.on_two[t]) for ijk, t in x.triangles))


def induced_map(F: TwoFunctor, N: int):
    """The simplicial map nerve(F.source, N) -> nerve(F.target, N) as a
    dict simplex -> simplex over all levels."""
    out = {}
    for n in range(N + 1):
        for x in enumerate_simplices(F.source, n):
            out[x] = map_simplex(F, x)
    return out
