"""Exact integer matrix algebra: Smith normal form with unimodular
transforms, integer kernels, lattice spans, and subquotient presentations.

Matrices are lists of lists of Python ints (arbitrary precision); a matrix
with r rows and c columns maps Z^c -> Z^r.  All functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass


def mzeros(r: int, c: int):
    return [[0] * c for _ in range(r)]


def mid(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mshape(M):
    return len(M), len(M[0]) if M else 0


def mmul(A, B):
    ra, ca = len(A), len(A[0]) if A else 0
    rb, cb = len(B), len(B[0]) if B else 0
    assert ca == rb, (ca, rb)
    out = mzeros(ra, cb)
    for i in range(ra):
        Ai = A[i]
        for k in range(ca):
            a = Ai[k]
            if a:
                Bk = B[k]
                row = out[i]
                for j in range(cb):
                    row[j] += a * Bk[j]
    return out


def mvec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def hstack(A, B):
    if not A:
        return [row[:] for row in B]
    if not B:
        return [row[:] for row in A]
    assert len(A) == len(B)
    return [ra + rb for ra, rb in zip(A, B)]


def columns(M):
    r, c = mshape(M)
    return [[M[i][j] for i in range(r)] for j in range(c)]


def from_columns(cols, nrows=None):
    if not cols:
        return [[] for _ in range(nrows or 0)]
    r = len(cols[0])
    return [[col[i] for col in cols] for i in range(r)]


@dataclass
class SNF:
    S: list          # r x r unimodular
    D: list          # r x c diagonal, divisibility chain, nonnegative
    T: list          # c x c unimodular
    Sinv: list       # r x r, S . Sinv = I

    @property
    def rank(self):
        r, c = mshape(self.D)
        return sum(1 for i in range(min(r, c)) if self.D[i][i] != 0)

    def diag(self):
        r, c = mshape(self.D)
        return [self.D[i][i] for i in range(min(r, c))]


def smith_normal_form(M) -> SNF:
    """S . M . T = D with S, T unimodular and D = diag(d_1 | d_2 | ...),
    entries nonnegative.  Sinv is maintained alongside S."""
    r, c = mshape(M)
    A = [row[:] for row in M]
    S, Sinv, T = mid(r), mid(r), mid(c)

    def row_add(i, j, q):  # row_i += q * row_j ; inverse: col_j -= q * col_i
        for k in range(c):
            A[i][k] += q * A[j][k]
        for k in range(r):
            S[i][k] += q * S[j][k]
        for k in range(r):
            Sinv[k][j] -= q * Sinv[k][i]

    def col_add(j, i, q):  # col_j += q * col_i
        for k in range(r):
            A[k][j] += q * A[k][i]
        for k in range(c):
            T[k][j] += q * T[k][i]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        S[i], S[j] = S[j], S[i]
        for k in range(r):
            Sinv[k][i], Sinv[k][j] = Sinv[k][j], Sinv[k][i]

    def col_swap(i, j):
        for k in range(r):
            A[k][i], A[k][j] = A[k][j], A[k][i]
        for k in range(c):
            T[k][i], T[k][j] = T[k][j], T[k][i]

    def row_neg(i):
        for k in range(c):
            A[i][k] = -A[i][k]
        for k in range(r):
            S[i][k] = -S[i][k]
        for k in range(r):
            Sinv[k][i] = -Sinv[k][i]

    t = 0
    while t < min(r, c):
        # pivot: nonzero entry of least absolute value in the trailing block
        piv = None
        best = None
        for i in range(t, r):
            for j in range(t, c):
                a = abs(A[i][j])
                if a and (best is None or a < best):
                    best, piv = a, (i, j)
        if piv is None:
            break
        i, j = piv
        if i != t:
            row_swap(t, i)
        if j != t:
            col_swap(t, j)
        if A[t][t] < 0:
            row_neg(t)
        dirty = False
        for i in range(t + 1, r):
            if A[i][t]:
                q = A[i][t] // A[t][t]
                row_add(i, t, -q)
                if A[i][t]:
                    dirty = True
        for j in range(t + 1, c):
            if A[t][j]:
                q = A[t][j] // A[t][t]
                col_add(j, t, -q)
                if A[t][j]:
                    dirty = True
        if dirty:
            continue
        # divisibility: A[t][t] must divide every remaining entry
        d = A[t][t]
        fixed = True
        for i in range(t + 1, r):
            for j in range(t + 1, c):
                if A[i][j] % d:
                    row_add(t, i, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            t += 1
    return SNF(S, A, T, Sinv)


def determinantal_divisors(M):
    """gcd of all k x k minors, for k = 1..min(r,c); the k-th invariant
    factor is g_k / g_{k-1}.  Exponential-time reference implementation."""
    from itertools import combinations
    from math import gcd
    r, c = mshape(M)
    out = []
    for k in range(1, min(r, c) + 1):
        g = 0
        for rows in combinations(range(r), k):
            for cols in combinations(range(c), k):
                g = gcd(g, _det([[M[i][j] for j in cols] for i in rows]))
        out.append(g)
    return out


def _det(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j]:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * M[0][j] * _det(minor)
    return total


def kernel_basis(M):
    """Columns forming a basis of the integer kernel of M (a primitive
    sublattice basis)."""
    r, c = mshape(M)
    if c == 0:
        return [[] for _ in range(c)]
    snf = smith_normal_form(M)
    rk = snf.rank
    cols = columns(snf.T)[rk:]
    return from_columns(cols, nrows=c)


def solve(snf: SNF, b):
    """One solution x of M x = b given the SNF of M, or None."""
    r, c = mshape(snf.D)
    sb = mvec(snf.S, b)
    y = [0] * c
    for i in range(min(r, c)):
        d = snf.D[i][i]
        if d:
            if sb[i] % d:
                return None
            y[i] = sb[i] // d
        elif sb[i]:
            return None
    for i in range(min(r, c), r):
        if sb[i]:
            return None
    return mvec(snf.T, y)


def column_span_basis(M):
    """A basis (as a matrix of columns) of the lattice spanned by M's
    columns."""
    r, c = mshape(M)
    snf = smith_normal_form(M)
    cols = []
    for i in range(snf.rank):
        d = snf.D[i][i]
        cols.append([snf.Sinv[k][i] * d for k in range(r)])
    return from_columns(cols, nrows=r)


@dataclass(frozen=True)
class FGAbGroup:
    """Canonical form of a finitely generated abelian group."""
    free_rank: int
    torsion: tuple   # (t_1, ..., t_k) with 2 <= t_1 | t_2 | ... | t_k

    def __str__(self):
        parts = ["Z"] * self.free_rank + ["Z/%d" % t for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion


def cokernel(M, nrows=None) -> FGAbGroup:
    """Z^r / column span of M in canonical form."""
    r = len(M) if M else (nrows or 0)
    if not M or not M[0]:
        return FGAbGroup(r, ())
    snf = smith_normal_form(M)
    diag = snf.diag()
    torsion = tuple(d for d in diag if d >= 2)
    free = r - sum(1 for d in diag if d != 0)
    return FGAbGroup(free, torsion)


@dataclass
class Subquotient:
    """L_cycles / L_boundaries for lattices L_boundaries <= L_cycles <= Z^r,
    with explicit coordinates: generators and canonical-coordinate
    projection of arbitrary elements of L_cycles."""
    ambient: int
    K: list                # ambient x k basis of L_cycles
    snf_K: SNF
    snf_Y: SNF             # SNF of boundaries in K-coordinates (k x b)
    orders: list           # per retained generator: 0 for Z, t >= 2 for Z/t
    gen_idx: list          # retained K-coordinate indices (SNF order)
    group: FGAbGroup

    def coords(self, z):
        """Canonical coordinates of the class of z (z must lie in the cycle
        lattice); length = number of retained generators."""
        c = solve(self.snf_K, z)
        if c is None:
            raise ValueError("element is not a cycle")
        u = mvec(self.snf_Y.S, c)
        out = []
        for pos, i in enumerate(self.gen_idx):
            t = self.orders[pos]
            out.append(u[i] % t if t else u[i])
        return out

    def generator(self, pos):
        """An ambient representative of the retained generator pos."""
        i = self.gen_idx[pos]
        col = [self.snf_Y.Sinv[k][i] for k in range(len(self.snf_Y.Sinv))]
        return mvec(self.K, col)


def subquotient(ambient: int, cycle_gens, boundary_gens) -> Subquotient:
    """cycle_gens, boundary_gens: matrices of columns spanning the two
    lattices (boundaries must lie inside the cycle lattice)."""
    K = column_span_basis(cycle_gens) if cycle_gens and cycle_gens[0] \
        else mzeros(ambient, 0)
    k = mshape(K)[1]
    snf_K = smith_normal_form(K)
    bcols = columns(boundary_gens) if boundary_gens and boundary_gens[0] else []
    ycols = []
    for b in bcols:
        y = solve(snf_K, b)
        if y is None:
            raise ValueError("boundary outside the cycle lattice")
        ycols.append(y)
    Y = from_columns(ycols, nrows=k)
    snf_Y = smith_normal_form(Y)
    diag = snf_Y.diag()
    orders, gen_idx = [], []
    for i in range(k):
        d = diag[i] if i < len(diag) else 0
        if d == 1:
            continue
        orders.append(d)
        gen_idx.append(i)
    torsion = tuple(d for d in orders if d >= 2)
    free = sum(1 for d in orders if d == 0)
    return Subquotient(ambient, K, snf_K, snf_Y, orders, gen_idx,
                       FGAbGroup(free, torsion))


def induced_matrix(src: Subquotient, tgt: Subquotient, chain_map):
    """Matrix (in canonical coordinates) of the map induced on subquotients
    by an ambient chain map that carries cycles to cycles and boundaries to
    boundaries."""
    cols = []
    for pos in range(len(src.gen_idx)):
        z = src.generator(pos)
        cols.append(tgt.coords(mvec(chain_map, z)))
    return from_columns(cols, nrows=len(tgt.gen_idx))


def induced_is_iso(src: Subquotient, tgt: Subquotient, chain_map) -> bool:
    """Equality of canonical forms plus surjectivity; surjective self-maps
    of finitely generated abelian groups are isomorphisms."""
    if src.group != tgt.group:
        return False
    M = induced_matrix(src, tgt, chain_map)
    return map_is_surjective(M, tgt.orders)


def map_is_surjective(M, tgt_orders) -> bool:
    """Does the matrix M (columns = images in canonical coordinates of the
    target with the given orders) generate the whole target group?"""
    rel_cols = []
    n = len(tgt_orders)
    for i, t in enumerate(tgt_orders):
        if t:
            col = [0] * n
            col[i] = t
            rel_cols.append(col)
    full = hstack(M, from_columns(rel_cols, nrows=n))
    return cokernel(full, nrows=n).is_trivial
