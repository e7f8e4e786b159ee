"""The oriental 2-categories O(p) in their concrete finite model.

Objects are 0..p; the 1-cells i -> j are the strictly increasing vertex
paths from i to j (composition is concatenation, the identity is the
one-vertex path); hom(i, j) is a poset under refinement: there is a unique
2-cell P => Q exactly when the vertex set of P is contained in that of Q.
The generating triangle (i, j, k) is the 2-cell (i,k) => (i,j,k), read with
the short spine as the source.
"""

from __future__ import annotations

from itertools import combinations

from .core import TwoCategory, make_two_category

ORIENTAL_BOUND = 4


def increasing_paths(i: int, j: int):
    """All strictly increasing vertex paths from i to j, as tuples."""
    if i > j:
        return []
    if i == j:
        return [(i,)]
    out = []
    interior = range(i + 1, j)
    for r in range(0, j - i):
        for mid in combinations(interior, r):
            out.append((i,) + mid + (j,))
    return sorted(out)


def path_id(P: tuple) -> str:
    return repr(P)


def cell_id(P: tuple, Q: tuple) -> str:
    return repr((P, Q))


def materialize_oriental(p: int, bound: int = ORIENTAL_BOUND) -> TwoCategory:
    if p < 0:
        raise ValueError("dimension must be nonnegative")
    if p > bound:
        raise ValueError("oriental dimension %d exceeds bound %d" % (p, bound))
    objects = [str(i) for i in range(p + 1)]
    paths = []
    for i in range(p + 1):
        for j in range(i, p + 1):
            paths.extend(increasing_paths(i, j))
    one = {path_id(P): (str(P[0]), str(P[-1])) for P in paths}
    refines = []
    for P in paths:
        for Q in paths:
            if (P[0], P[-1]) == (Q[0], Q[-1]) and set(P) <= set(Q):
                refines.append((P, Q))
    two = {cell_id(P, Q): (path_id(P), path_id(Q)) for P, Q in refines}
    id1 = {str(i): path_id((i,)) for i in range(p + 1)}
    id2 = {path_id(P): cell_id(P, P) for P in paths}
    comp1 = {}
    for P in paths:
        for Q in paths:
            if P[-1] == Q[0]:
                comp1[(path_id(Q), path_id(P))] = path_id(P + Q[1:])
    vcomp = {}
    for P, Q in refines:
        for Q2, R in refines:
            if Q2 == Q and P[0] == Q[0] and Q[-1] == R[-1]:
                if set(P) <= set(Q) <= set(R):
                    vcomp[(cell_id(Q, R), cell_id(P, Q))] = cell_id(P, R)
    whisk_l = {}
    whisk_r = {}
    for P, Q in refines:
        a = cell_id(P, Q)
        for K in paths:
            if K[0] == P[-1]:
                whisk_l[(path_id(K), a)] = cell_id(P + K[1:], Q + K[1:])
            if K[-1] == P[0]:
                whisk_r[(a, path_id(K))] = cell_id(K + P[1:], K + Q[1:])
    return make_two_category(objects, one, two, id1, id2,
                             comp1, vcomp, whisk_l, whisk_r)
