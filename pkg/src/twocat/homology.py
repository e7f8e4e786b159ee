"""Integral and local-coefficient homology of truncated simplicial sets.

Normalized chains: the degree-n chain group is free on the nondegenerate
n-simplices, and the boundary is the alternating sum of faces with
degenerate faces dropped.  Computing H_n requires truncation level
N >= n + 1 (one level of headroom); the API enforces this.

Local coefficients are functors on the category of elements, presented on
its generators: a finitely presented abelian group per simplex and a matrix
per face map; the twisted boundary multiplies each face summand by the
corresponding matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .intlinalg import (FGAbGroup, Subquotient, cokernel, columns,
                        from_columns, hstack, kernel_basis, mid, mmul, mshape,
                        mvec, mzeros, smith_normal_form, solve, subquotient)
from .nerve import TruncSimplicialSet


@dataclass
class ChainComplexZ:
    N: int
    basis: list          # basis[n] = list of nondegenerate n-simplices
    boundary: list       # boundary[n]: matrix C_n -> C_{n-1} (n >= 1)

    def rank(self, n):
        return len(self.basis[n])


def chain_complex(X: TruncSimplicialSet) -> ChainComplexZ:
    basis = [list(X.nondegenerate(n)) for n in range(X.N + 1)]
    index = [{x: i for i, x in enumerate(b)} for b in basis]
    boundary = [None]
    for n in range(1, X.N + 1):
        M = mzeros(len(basis[n - 1]), len(basis[n]))
        for j, x in enumerate(basis[n]):
            for i in range(n + 1):
                y = X.face[(i, x)]
                if not X.degenerate[y]:
                    M[index[n - 1][y]][j] += (-1) ** i
        boundary.append(M)
    for n in range(2, X.N + 1):
        if basis[n - 2] and basis[n]:
            assert all(all(v == 0 for v in row)
                       for row in mmul(boundary[n - 1], boundary[n])), \
                "boundary squared is nonzero in degree %d" % n
    return ChainComplexZ(X.N, basis, boundary)


def _check_degree(X: TruncSimplicialSet, n: int):
    if n < 0 or n > X.N - 1:
        raise ValueError(
            "H_%d needs truncation level >= %d, have %d" % (n, n + 1, X.N))


def homology_subquotient(X: TruncSimplicialSet, n: int):
    """(Subquotient, basis of nondegenerate n-simplices)."""
    _check_degree(X, n)
    C = chain_complex(X)
    rn = C.rank(n)
    if rn == 0:
        return subquotient(0, [], []), []
    if n == 0 or C.rank(n - 1) == 0:
        cycles = mid(rn)
    else:
        cycles = kernel_basis(C.boundary[n])
        if mshape(cycles)[1] == 0:
            cycles = mzeros(rn, 0)
    bnd = C.boundary[n + 1] if C.rank(n + 1) else mzeros(rn, 0)
    return subquotient(rn, cycles, bnd), C.basis[n]


def homology(X: TruncSimplicialSet, n: int) -> FGAbGroup:
    return homology_subquotient(X, n)[0].group


def homology_induced(simp_map: dict, Xs: TruncSimplicialSet,
                     Xt: TruncSimplicialSet, n: int):
    """Matrix of H_n(simp_map) in canonical coordinates; simp_map sends
    simplices of Xs to simplices of Xt levelwise.  Returns
    (matrix, src subquotient, tgt subquotient)."""
    sq_s, basis_s = homology_subquotient(Xs, n)
    sq_t, basis_t = homology_subquotient(Xt, n)
    idx_t = {x: i for i, x in enumerate(basis_t)}
    M = mzeros(len(basis_t), len(basis_s))
    for j, x in enumerate(basis_s):
        y = simp_map[x]
        if not Xt.degenerate[y]:
            M[idx_t[y]][j] += 1
    from .intlinalg import induced_matrix
    return induced_matrix(sq_s, sq_t, M), sq_s, sq_t


# ---------------------------------------------------------------------------
# local coefficients
# ---------------------------------------------------------------------------

@dataclass
class PresentedGroup:
    gens: int
    rels: list            # gens x nrels matrix; [] when no relations

    def rel_matrix(self):
        return self.rels if self.rels and self.rels[0] else mzeros(self.gens, 0)

    def canonical(self) -> FGAbGroup:
        return cokernel(self.rel_matrix(), nrows=self.gens)


def presentation_of(sq: Subquotient) -> PresentedGroup:
    """Canonical presentation Z^g / diag(torsion) of a subquotient."""
    g = len(sq.gen_idx)
    rels = []
    for i, t in enumerate(sq.orders):
        if t:
            col = [0] * g
            col[i] = t
            rels.append(col)
    return PresentedGroup(g, from_columns(rels, nrows=g))


ZCONST = PresentedGroup(1, [])


@dataclass
class LocalCoeffSystem:
    """Coefficients on the category of elements of a truncated simplicial
    set, given on generators: a presented group per simplex (all levels,
    including degenerate ones) and a matrix per face map (i, x)."""
    group: dict           # simplex -> PresentedGroup
    face_map: dict        # (i, x) -> matrix L(x) -> L(d_i x)
    degen_map: dict = field(default_factory=dict)   # (i, x) -> matrix


def constant_system(X: TruncSimplicialSet,
                    pres: PresentedGroup = ZCONST) -> LocalCoeffSystem:
    group = {}
    for lev in X.levels:
        for x in lev:
            group[x] = pres
    n = pres.gens
    face_map = {k: mid(n) for k in X.face}
    degen_map = {k: mid(n) for k in X.degen}
    return LocalCoeffSystem(group, face_map, degen_map)


def _in_rel_lattice(pres: PresentedGroup, v) -> bool:
    R = pres.rel_matrix()
    if mshape(R)[1] == 0:
        return all(a == 0 for a in v)
    return solve(smith_normal_form(R), v) is not None


def check_local_system(L: LocalCoeffSystem, X: TruncSimplicialSet) -> None:
    """Functoriality on face generators and preservation of relations."""
    for n in range(1, X.N + 1):
        for x in X.levels[n]:
            for i in range(n + 1):
                M = L.face_map[(i, x)]
                src, tgt = L.group[x], L.group[X.face[(i, x)]]
                for col in columns(src.rel_matrix()):
                    if not _in_rel_lattice(tgt, mvec(M, col)):
                        raise ValueError(
                            "face map (%d, %r) does not preserve relations"
                            % (i, x))
    for n in range(2, X.N + 1):
        for x in X.levels[n]:
            for j in range(n + 1):
                for i in range(j):
                    a = mmul(L.face_map[(i, X.face[(j, x)])],
                             L.face_map[(j, x)])
                    b = mmul(L.face_map[(j - 1, X.face[(i, x)])],
                             L.face_map[(i, x)])
                    diff = [[p - q for p, q in zip(ra, rb)]
                            for ra, rb in zip(a, b)]
                    tgt = L.group[X.face[(i, X.face[(j, x)])]]
                    for col in columns(diff):
                        if not _in_rel_lattice(tgt, col):
                            raise ValueError(
                                "face functoriality fails at %r (%d,%d)"
                                % (x, i, j))


def _local_complex(L: LocalCoeffSystem, X: TruncSimplicialSet):
    basis = [X.nondegenerate(n) for n in range(X.N + 1)]
    offs = []
    tot = []
    for b in basis:
        o = {}
        t = 0
        for x in b:
            o[x] = t
            t += L.group[x].gens
        offs.append(o)
        tot.append(t)
    rels = []
    for n, b in enumerate(basis):
        cols = []
        for x in b:
            for col in columns(L.group[x].rel_matrix()):
                full = [0] * tot[n]
                for k, v in enumerate(col):
                    full[offs[n][x] + k] = v
                cols.append(full)
        rels.append(from_columns(cols, nrows=tot[n]))
    bnds = [None]
    for n in range(1, X.N + 1):
        M = mzeros(tot[n - 1], tot[n])
        for x in basis[n]:
            for i in range(n + 1):
                y = X.face[(i, x)]
                if X.degenerate[y]:
                    continue
                Fm = L.face_map[(i, x)]
                sgn = (-1) ** i
                for r in range(L.group[y].gens):
                    for c in range(L.group[x].gens):
                        M[offs[n - 1][y] + r][offs[n][x] + c] += sgn * Fm[r][c]
        bnds.append(M)
    return tot, rels, bnds


def homology_local_subquotient(X: TruncSimplicialSet, L: LocalCoeffSystem,
                               n: int):
    _check_degree(X, n)
    check_local_system(L, X)
    tot, rels, bnds = _local_complex(L, X)
    G = tot[n]
    if G == 0:
        return subquotient(0, [], [])
    if n == 0 or tot[n - 1] == 0:
        cycles = mid(G)
    else:
        block = hstack(bnds[n], rels[n - 1]) if mshape(rels[n - 1])[1] \
            else bnds[n]
        full_k = kernel_basis(block)
        xcols = [col[:G] for col in columns(full_k)]
        cycles = from_columns(xcols, nrows=G)
        if mshape(cycles)[1] == 0:
            cycles = mzeros(G, 0)
    pieces = []
    if n + 1 <= X.N and tot[n + 1]:
        pieces.append(bnds[n + 1])
    if mshape(rels[n])[1]:
        pieces.append(rels[n])
    if pieces:
        bgens = pieces[0]
        for p in pieces[1:]:
            bgens = hstack(bgens, p)
    else:
        bgens = mzeros(G, 0)
    return subquotient(G, cycles, bgens)


def homology_local(X: TruncSimplicialSet, L: LocalCoeffSystem,
                   n: int) -> FGAbGroup:
    return homology_local_subquotient(X, L, n).group


def presented_map_is_iso(src: PresentedGroup, tgt: PresentedGroup, M) -> bool:
    """Iso of presented groups: equal canonical forms plus surjectivity
    (surjections between isomorphic finitely generated abelian groups are
    isomorphisms)."""
    if src.canonical() != tgt.canonical():
        return False
    full = hstack(M, tgt.rel_matrix()) if mshape(tgt.rel_matrix())[1] else M
    return cokernel(full, nrows=tgt.gens).is_trivial


def is_morphism_inverting(L: LocalCoeffSystem, X: TruncSimplicialSet) -> bool:
    for (i, x), M in L.face_map.items():
        if not presented_map_is_iso(L.group[x], L.group[X.face[(i, x)]], M):
            return False
    for (i, x), M in L.degen_map.items():
        if not presented_map_is_iso(L.group[x], L.group[X.degen[(i, x)]], M):
            return False
    return True
