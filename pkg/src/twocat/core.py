"""Finite strict 2-categories as explicit composition tables.

A ``TwoCategory`` stores every cell by an opaque string identifier and every
composition as a total lookup table:

* ``comp1[(g, f)] = g . f`` for 1-cells ``f: x -> y``, ``g: y -> z``;
* ``vcomp[(b, a)] = b * a`` (b after a) for 2-cells ``a: f => g``,
  ``b: g => h`` in the same hom-category;
* ``whisk_l[(k, a)] = k * a : k.f => k.g`` for a 1-cell ``k: y -> z`` and a
  2-cell ``a: f => g`` with ``f, g: x -> y``;
* ``whisk_r[(a, h)] = a * h : f.h => g.h`` for ``f, g: y -> z`` and
  ``h: x -> y``.

Horizontal composition of 2-cells is derived from whiskering and vertical
composition; the interchange law is validated, not assumed.

Identities are designated cells (``id1`` per object, ``id2`` per 1-cell), so
all tables are total and equality of cells is identifier equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace


class AxiomError(ValueError):
    """A named axiom failed; the message carries the offending cell tuple."""


@dataclass(frozen=True)
class TwoCategory:
    objects: tuple[str, ...]
    one_src: dict[str, str] = field(default_factory=dict)
    one_tgt: dict[str, str] = field(default_factory=dict)
    two_src: dict[str, str] = field(default_factory=dict)
    two_tgt: dict[str, str] = field(default_factory=dict)
    id1: dict[str, str] = field(default_factory=dict)   # object -> identity 1-cell
    id2: dict[str, str] = field(default_factory=dict)   # 1-cell -> identity 2-cell
    comp1: dict[tuple[str, str], str] = field(default_factory=dict)
    vcomp: dict[tuple[str, str], str] = field(default_factory=dict)
    whisk_l: dict[tuple[str, str], str] = field(default_factory=dict)
    whisk_r: dict[tuple[str, str], str] = field(default_factory=dict)

    # -- basic accessors ---------------------------------------------------

    @property
    def one_cells(self) -> tuple[str, ...]:
        return tuple(sorted(self.one_src))

    @property
    def two_cells(self) -> tuple[str, ...]:
        return tuple(sorted(self.two_src))

    def src1(self, f: str) -> str:
        return self.one_src[f]

    def tgt1(self, f: str) -> str:
        return self.one_tgt[f]

    def src2(self, a: str) -> str:
        return self.two_src[a]

    def tgt2(self, a: str) -> str:
        return self.two_tgt[a]

    def is_id1(self, f: str) -> bool:
        return self.id1.get(self.one_src[f]) == f and self.one_src[f] == self.one_tgt[f]

    def is_id2(self, a: str) -> bool:
        return self.id2.get(self.two_src[a]) == a and self.two_src[a] == self.two_tgt[a]

    def hom1(self, x: str, y: str) -> list[str]:
        return sorted(f for f in self.one_src
                      if self.one_src[f] == x and self.one_tgt[f] == y)

    def hom2(self, f: str, g: str) -> list[str]:
        return sorted(a for a in self.two_src
                      if self.two_src[a] == f and self.two_tgt[a] == g)

    def two_cells_in_hom(self, x: str, y: str) -> list[str]:
        return sorted(a for a in self.two_src if self.one_src[self.two_src[a]] == x
                      and self.one_tgt[self.two_src[a]] == y)

    # -- derived operations ------------------------------------------------

    def hcomp(self, b: str, a: str) -> str:
        """Horizontal composite b * a for a: f=>g in hom(x,y), b: f'=>g' in hom(y,z).

        Computed as (b * g) after (f' * a); interchange (validated) makes the
        other order agree.
        """
        f2 = self.two_src[b]
        g = self.two_tgt[a]
        return self.vcomp[(self.whisk_r[(b, g)], self.whisk_l[(f2, a)])]

    def vcomp_inverse(self, a: str) -> str | None:
        """The vcomp-inverse of a 2-cell, or None."""
        f, g = self.two_src[a], self.two_tgt[a]
        for b in self.hom2(g, f):
            if (self.vcomp[(b, a)] == self.id2[f]
                    and self.vcomp[(a, b)] == self.id2[g]):
                return b
        return None

    def is_invertible2(self, a: str) -> bool:
        return self.vcomp_inverse(a) is not None

    def one_cell_inverse(self, f: str) -> str | None:
        """A strict inverse 1-cell (g.f and f.g identities), or None."""
        x, y = self.one_src[f], self.one_tgt[f]
        for g in self.hom1(y, x):
            if (self.comp1[(g, f)] == self.id1[x]
                    and self.comp1[(f, g)] == self.id1[y]):
                return g
        return None

    def is_equivalence1(self, f: str) -> bool:
        """Internal equivalence: a quasi-inverse up to invertible 2-cells."""
        x, y = self.one_src[f], self.one_tgt[f]
        for g in self.hom1(y, x):
            gf, fg = self.comp1[(g, f)], self.comp1[(f, g)]
            if any(self.is_invertible2(u) for u in self.hom2(gf, self.id1[x])) and \
               any(self.is_invertible2(v) for v in self.hom2(fg, self.id1[y])):
                return True
        return False


def make_two_category(objects, one_cells, two_cells, id1, id2,
                      comp1, vcomp, whisk_l, whisk_r) -> TwoCategory:
    """Assemble a TwoCategory from plain dicts.

    one_cells / two_cells: dict id -> (src, tgt).
    """
    return TwoCategory(
        objects=tuple(sorted(objects)),
        one_src={f: st[0] for f, st in one_cells.items()},
        one_tgt={f: st[1] for f, st in one_cells.items()},
        two_src={a: st[0] for a, st in two_cells.items()},
        two_tgt={a: st[1] for a, st in two_cells.items()},
        id1=dict(id1), id2=dict(id2),
        comp1=dict(comp1), vcomp=dict(vcomp),
        whisk_l=dict(whisk_l), whisk_r=dict(whisk_r),
    )


def build_two_category(objects, one_cells, two_cells, id1, id2,
                       comp1_fn, vcomp_fn, whisk_l_fn, whisk_r_fn) -> TwoCategory:
    """Build total tables by evaluating composition callbacks on every
    composable tuple.  Used by all derived constructions (products, comma
    objects, S^-1 X) so that totality is automatic."""
    one_cells = dict(one_cells)
    two_cells = dict(two_cells)
    comp1 = {}
    for g, (gs, gt) in one_cells.items():
        for f, (fs, ft) in one_cells.items():
            if ft == gs:
                comp1[(g, f)] = comp1_fn(g, f)
    vcomp = {}
    for b, (bs, bt) in two_cells.items():
        for a, (as_, at) in two_cells.items():
            if at == bs:
                vcomp[(b, a)] = vcomp_fn(b, a)
    whisk_l = {}
    whisk_r = {}
    for a, (f, g) in two_cells.items():
        x = one_cells[f][0]
        y = one_cells[f][1]
        for k, (ks, kt) in one_cells.items():
            if ks == y:
                whisk_l[(k, a)] = whisk_l_fn(k, a)
            if kt == x:
                whisk_r[(a, k)] = whisk_r_fn(a, k)
    return make_two_category(objects, one_cells, two_cells, id1, id2,
                             comp1, vcomp, whisk_l, whisk_r)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def _check(cond: bool, axiom: str, cells: tuple) -> None:
    if not cond:
        raise AxiomError("%s at %r" % (axiom, cells))


def validate_two_category(C: TwoCategory) -> TwoCategory:
    """Check every strict 2-category axiom exhaustively; returns C.

    Raises AxiomError naming the first violated axiom and the offending
    cell tuple (deterministic: cells are visited in sorted order).
    """
    objs = set(C.objects)
    ones = sorted(C.one_src)
    twos = sorted(C.two_src)

    # well-formedness: dangling identifiers, globular typing
    for f in ones:
        _check(C.one_src[f] in objs and C.one_tgt[f] in objs,
               "dangling object in 1-cell", (f,))
        _check(f in C.one_tgt, "1-cell missing tgt", (f,))
    for a in twos:
        _check(C.two_src[a] in C.one_src and C.two_tgt[a] in C.one_src,
               "dangling 1-cell in 2-cell", (a,))
        _check(C.one_src[C.two_src[a]] == C.one_src[C.two_tgt[a]]
               and C.one_tgt[C.two_src[a]] == C.one_tgt[C.two_tgt[a]],
               "2-cell not parallel", (a,))
    for x in sorted(objs):
        _check(x in C.id1, "object missing identity 1-cell", (x,))
        f = C.id1[x]
        _check(f in C.one_src and C.one_src[f] == x and C.one_tgt[f] == x,
               "identity 1-cell badly typed", (x, f))
    for f in ones:
        _check(f in C.id2, "1-cell missing identity 2-cell", (f,))
        a = C.id2[f]
        _check(a in C.two_src and C.two_src[a] == f and C.two_tgt[a] == f,
               "identity 2-cell badly typed", (f, a))

    # totality and typing of comp1
    for g in ones:
        for f in ones:
            if C.one_tgt[f] == C.one_src[g]:
                _check((g, f) in C.comp1, "comp1 not total", (g, f))
                gf = C.comp1[(g, f)]
                _check(gf in C.one_src and C.one_src[gf] == C.one_src[f]
                       and C.one_tgt[gf] == C.one_tgt[g],
                       "comp1 badly typed", (g, f, gf))
    # unit + associativity of comp1
    for f in ones:
        x, y = C.one_src[f], C.one_tgt[f]
        _check(C.comp1[(f, C.id1[x])] == f, "comp1 right unit", (f,))
        _check(C.comp1[(C.id1[y], f)] == f, "comp1 left unit", (f,))
    for h in ones:
        for g in ones:
            if C.one_tgt[g] != C.one_src[h]:
                continue
            hg = C.comp1[(h, g)]
            for f in ones:
                if C.one_tgt[f] != C.one_src[g]:
                    continue
                _check(C.comp1[(hg, f)] == C.comp1[(h, C.comp1[(g, f)])],
                       "comp1 associativity", (h, g, f))

    # hom-categories: vcomp totality, typing, unit, associativity
    for b in twos:
        for a in twos:
            if C.two_tgt[a] == C.two_src[b]:
                _check((b, a) in C.vcomp, "vcomp not total", (b, a))
                ba = C.vcomp[(b, a)]
                _check(ba in C.two_src and C.two_src[ba] == C.two_src[a]
                       and C.two_tgt[ba] == C.two_tgt[b],
                       "vcomp badly typed", (b, a, ba))
    for a in twos:
        f, g = C.two_src[a], C.two_tgt[a]
        _check(C.vcomp[(a, C.id2[f])] == a, "vcomp right unit", (a,))
        _check(C.vcomp[(C.id2[g], a)] == a, "vcomp left unit", (a,))
    for c in twos:
        for b in twos:
            if C.two_tgt[b] != C.two_src[c]:
                continue
            cb = C.vcomp[(c, b)]
            for a in twos:
                if C.two_tgt[a] != C.two_src[b]:
                    continue
                _check(C.vcomp[(cb, a)] == C.vcomp[(c, C.vcomp[(b, a)])],
                       "vcomp associativity", (c, b, a))

    # whiskering: totality, typing, functoriality, identity/comp1 laws
    for a in twos:
        f, g = C.two_src[a], C.two_tgt[a]
        x, y = C.one_src[f], C.one_tgt[f]
        for k in ones:
            if C.one_src[k] == y:
                _check((k, a) in C.whisk_l, "whisk_l not total", (k, a))
                ka = C.whisk_l[(k, a)]
                _check(C.two_src[ka] == C.comp1[(k, f)]
                       and C.two_tgt[ka] == C.comp1[(k, g)],
                       "whisk_l badly typed", (k, a, ka))
            if C.one_tgt[k] == x:
                _check((a, k) in C.whisk_r, "whisk_r not total", (a, k))
                ak = C.whisk_r[(a, k)]
                _check(C.two_src[ak] == C.comp1[(f, k)]
                       and C.two_tgt[ak] == C.comp1[(g, k)],
                       "whisk_r badly typed", (a, k, ak))
    for a in twos:
        f = C.two_src[a]
        x, y = C.one_src[f], C.one_tgt[f]
        _check(C.whisk_l[(C.id1[y], a)] == a, "whisk_l by identity", (a,))
        _check(C.whisk_r[(a, C.id1[x])] == a, "whisk_r by identity", (a,))
    for f in ones:
        x, y = C.one_src[f], C.one_tgt[f]
        for k in ones:
            if C.one_src[k] == y:
                _check(C.whisk_l[(k, C.id2[f])] == C.id2[C.comp1[(k, f)]],
                       "whisk_l of identity 2-cell", (k, f))
            if C.one_tgt[k] == x:
                _check(C.whisk_r[(C.id2[f], k)] == C.id2[C.comp1[(f, k)]],
                       "whisk_r of identity 2-cell", (f, k))
    # whiskering is functorial on hom-categories
    for b in twos:
        for a in twos:
            if C.two_tgt[a] != C.two_src[b]:
                continue
            ba = C.vcomp[(b, a)]
            f = C.two_src[a]
            x, y = C.one_src[f], C.one_tgt[f]
            for k in ones:
                if C.one_src[k] == y:
                    _check(C.vcomp[(C.whisk_l[(k, b)], C.whisk_l[(k, a)])]
                           == C.whisk_l[(k, ba)],
                           "whisk_l functoriality", (k, b, a))
                if C.one_tgt[k] == x:
                    _check(C.vcomp[(C.whisk_r[(b, k)], C.whisk_r[(a, k)])]
                           == C.whisk_r[(ba, k)],
                           "whisk_r functoriality", (k, b, a))
    # whiskering compatible with comp1 in the whiskering slot
    for a in twos:
        f = C.two_src[a]
        x, y = C.one_src[f], C.one_tgt[f]
        for k in ones:
            if C.one_src[k] != y:
                continue
            for k2 in ones:
                if C.one_src[k2] == C.one_tgt[k]:
                    _check(C.whisk_l[(k2, C.whisk_l[(k, a)])]
                           == C.whisk_l[(C.comp1[(k2, k)], a)],
                           "whisk_l composition", (k2, k, a))
        for h in ones:
            if C.one_tgt[h] != x:
                continue
            for h2 in ones:
                if C.one_tgt[h2] == C.one_src[h]:
                    _check(C.whisk_r[(C.whisk_r[(a, h)], h2)]
                           == C.whisk_r[(a, C.comp1[(h, h2)])],
                           "whisk_r composition", (h, h2, a))
        # mixed: (k * a) * h  ==  k * (a * h)
        for k in ones:
            if C.one_src[k] != y:
                continue
            for h in ones:
                if C.one_tgt[h] == x:
                    _check(C.whisk_r[(C.whisk_l[(k, a)], h)]
                           == C.whisk_l[(k, C.whisk_r[(a, h)])],
                           "whiskering mixed associativity", (k, a, h))

    # middle-four interchange: both derived horizontal orders agree
    for b in twos:
        f2, g2 = C.two_src[b], C.two_tgt[b]
        y = C.one_src[f2]
        for a in twos:
            f, g = C.two_src[a], C.two_tgt[a]
            if C.one_tgt[f] != y:
                continue
            left = C.vcomp[(C.whisk_r[(b, g)], C.whisk_l[(f2, a)])]
            right = C.vcomp[(C.whisk_l[(g2, a)], C.whisk_r[(b, f)])]
            _check(left == right, "interchange", (b, a))
    return C


# ---------------------------------------------------------------------------
# 2-functors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TwoFunctor:
    source: TwoCategory
    target: TwoCategory
    on_objects: dict[str, str]
    on_one: dict[str, str]
    on_two: dict[str, str]

    def o(self, x: str) -> str:
        return self.on_objects[x]

    def f1(self, f: str) -> str:
        return self.on_one[f]

    def f2(self, a: str) -> str:
        return self.on_two[a]


def identity_functor(C: TwoCategory) -> TwoFunctor:
    return TwoFunctor(C, C, {x: x for x in C.objects},
                      {f: f for f in C.one_src},
                      {a: a for a in C.two_src})


def compose_functors(G: TwoFunctor, F: TwoFunctor) -> TwoFunctor:
    """G after F."""
    assert F.target is G.source or F.target == G.source
    return TwoFunctor(F.source, G.target,
                      {x: G.on_objects[y] for x, y in F.on_objects.items()},
                      {f: G.on_one[g] for f, g in F.on_one.items()},
                      {a: G.on_two[b] for a, b in F.on_two.items()})


def functors_equal(F: TwoFunctor, G: TwoFunctor) -> bool:
    return (F.on_objects == G.on_objects and F.on_one == G.on_one
            and F.on_two == G.on_two)


def validate_two_functor(F: TwoFunctor) -> TwoFunctor:
    C, D = F.source, F.target
    for x in C.objects:
        _check(x in F.on_objects and F.on_objects[x] in set(D.objects),
               "functor object map", (x,))
    for f in sorted(C.one_src):
        _check(f in F.on_one and F.on_one[f] in D.one_src,
               "functor 1-cell map", (f,))
        _check(D.one_src[F.on_one[f]] == F.on_objects[C.one_src[f]]
               and D.one_tgt[F.on_one[f]] == F.on_objects[C.one_tgt[f]],
               "functor preserves 1-cell typing", (f,))
    for a in sorted(C.two_src):
        _check(a in F.on_two and F.on_two[a] in D.two_src,
               "functor 2-cell map", (a,))
        _check(D.two_src[F.on_two[a]] == F.on_one[C.two_src[a]]
               and D.two_tgt[F.on_two[a]] == F.on_one[C.two_tgt[a]],
               "functor preserves 2-cell typing", (a,))
    for x in C.objects:
        _check(F.on_one[C.id1[x]] == D.id1[F.on_objects[x]],
               "functor preserves identity 1-cells", (x,))
    for f in sorted(C.one_src):
        _check(F.on_two[C.id2[f]] == D.id2[F.on_one[f]],
               "functor preserves identity 2-cells", (f,))
    for (g, f), gf in sorted(C.comp1.items()):
        _check(D.comp1[(F.on_one[g], F.on_one[f])] == F.on_one[gf],
               "functor preserves comp1", (g, f))
    for (b, a), ba in sorted(C.vcomp.items()):
        _check(D.vcomp[(F.on_two[b], F.on_two[a])] == F.on_two[ba],
               "functor preserves vcomp", (b, a))
    for (k, a), ka in sorted(C.whisk_l.items()):
        _check(D.whisk_l[(F.on_one[k], F.on_two[a])] == F.on_two[ka],
               "functor preserves whisk_l", (k, a))
    for (a, h), ah in sorted(C.whisk_r.items()):
        _check(D.whisk_r[(F.on_two[a], F.on_one[h])] == F.on_two[ah],
               "functor preserves whisk_r", (a, h))
    return F


# ---------------------------------------------------------------------------
# transformations, modifications, normal pseudofunctors
# ---------------------------------------------------------------------------

LAX = "lax"
OPLAX = "oplax"
PSEUDONATURAL = "pseudonatural"
TWO_NATURAL = "2-natural"


@dataclass(frozen=True)
class Transformation:
    """Lax or oplax transformation between parallel 2-functors.

    ``direction`` is "lax" (component at f: x->y is a_f: Gf.a_x => a_y.Ff)
    or "oplax" (a_f: a_y.Ff => Gf.a_x).  ``flavor`` refines lax/oplax to
    pseudonatural (all a_f invertible) or 2-natural (all a_f identities).
    """
    source: TwoFunctor
    target: TwoFunctor
    at_object: dict[str, str]     # object -> 1-cell Fx -> Gx
    at_one: dict[str, str]        # 1-cell -> 2-cell (orientation per direction)
    direction: str = LAX
    flavor: str = LAX


def validate_transformation(t: Transformation) -> Transformation:
    F, G = t.source, t.target
    assert F.source == G.source and F.target == G.target
    C, D = F.source, F.target
    lax = t.direction == LAX
    for x in C.objects:
        _check(x in t.at_object, "transformation missing object component", (x,))
        ax = t.at_object[x]
        _check(D.one_src[ax] == F.on_objects[x] and D.one_tgt[ax] == G.on_objects[x],
               "transformation component badly typed", (x, ax))

    def expected(f: str) -> tuple[str, str]:
        x, y = C.one_src[f], C.one_tgt[f]
        pre = D.comp1[(G.on_one[f], t.at_object[x])]   # Gf . a_x
        post = D.comp1[(t.at_object[y], F.on_one[f])]  # a_y . Ff
        return (pre, post) if lax else (post, pre)

    for f in sorted(C.one_src):
        _check(f in t.at_one, "transformation missing 1-cell component", (f,))
        af = t.at_one[f]
        s, g = expected(f)
        _check(D.two_src[af] == s and D.two_tgt[af] == g,
               "transformation 1-cell component badly typed", (f, af))
    # unit axiom: a_{1_x} is the identity 2-cell
    for x in C.objects:
        f = C.id1[x]
        _check(t.at_one[f] == D.id2[D.two_src[t.at_one[f]]],
               "transformation unit axiom", (x,))
    # composition axiom: a_{g.f} is the pasting of a_f and a_g
    for g in sorted(C.one_src):
        for f in sorted(C.one_src):
            if C.one_tgt[f] != C.one_src[g]:
                continue
            gf = C.comp1[(g, f)]
            x = C.one_src[f]
            z = C.one_tgt[g]
            if lax:
                # Ggf.a_x = Gg.(Gf.a_x) =(Gg*a_f)=> Gg.a_y.Ff =(a_g*Ff)=> a_z.Fg.Ff
                step1 = D.whisk_l[(G.on_one[g], t.at_one[f])]
                step2 = D.whisk_r[(t.at_one[g], F.on_one[f])]
                want = D.vcomp[(step2, step1)]
            else:
                # a_z.Fg.Ff =(a_g*Ff)=> Gg.a_y.Ff =(Gg*a_f)=> Gg.Gf.a_x
                step1 = D.whisk_r[(t.at_one[g], F.on_one[f])]
                step2 = D.whisk_l[(G.on_one[g], t.at_one[f])]
                want = D.vcomp[(step2, step1)]
            _check(t.at_one[gf] == want, "transformation composition axiom", (g, f))
    # naturality in 2-cells d: f => g
    for d in sorted(C.two_src):
        f, g = C.two_src[d], C.two_tgt[d]
        x, y = C.one_src[f], C.one_tgt[f]
        if lax:
            # (a_y * Fd) . a_f  ==  a_g . (Gd * a_x)
            lhs = D.vcomp[(D.whisk_l[(t.at_object[y], F.on_two[d])], t.at_one[f])]
            rhs = D.vcomp[(t.at_one[g], D.whisk_r[(G.on_two[d], t.at_object[x])])]
        else:
            # (Gd * a_x) . a_f  ==  a_g . (a_y * Fd)
            lhs = D.vcomp[(D.whisk_r[(G.on_two[d], t.at_object[x])], t.at_one[f])]
            rhs = D.vcomp[(t.at_one[g], D.whisk_l[(t.at_object[y], F.on_two[d])])]
        _check(lhs == rhs, "transformation naturality in 2-cells", (d,))
    if t.flavor == PSEUDONATURAL:
        for f in sorted(C.one_src):
            _check(D.is_invertible2(t.at_one[f]),
                   "pseudonatural component not invertible", (f,))
    if t.flavor == TWO_NATURAL:
        for f in sorted(C.one_src):
            _check(D.is_id2(t.at_one[f]), "2-natural component not identity", (f,))
    return t


@dataclass(frozen=True)
class Modification:
    source: Transformation
    target: Transformation
    at_object: dict[str, str]    # object -> 2-cell a_x => a'_x


def validate_modification(m: Modification) -> Modification:
    s, t = m.source, m.target
    assert s.direction == t.direction
    F, G = s.source, s.target
    C, D = F.source, F.target
    for x in C.objects:
        gx = m.at_object[x]
        _check(D.two_src[gx] == s.at_object[x] and D.two_tgt[gx] == t.at_object[x],
               "modification component badly typed", (x, gx))
    lax = s.direction == LAX
    for f in sorted(C.one_src):
        x, y = C.one_src[f], C.one_tgt[f]
        if lax:
            # (G_y * Ff) . s_f == t_f . (Gf * G_x)
            lhs = D.vcomp[(D.whisk_r[(m.at_object[y], F.on_one[f])], s.at_one[f])]
            rhs = D.vcomp[(t.at_one[f], D.whisk_l[(G.on_one[f], m.at_object[x])])]
        else:
            lhs = D.vcomp[(D.whisk_l[(G.on_one[f], m.at_object[x])], s.at_one[f])]
            rhs = D.vcomp[(t.at_one[f], D.whisk_r[(m.at_object[y], F.on_one[f])])]
        _check(lhs == rhs, "modification axiom", (f,))
    return m


@dataclass(frozen=True)
class NormalPseudofunctor:
    """Pseudofunctor with identity unit constraints (F0 = id).

    ``constraint[(g, f)]`` is the invertible 2-cell F2(g,f): Fg.Ff => F(g.f)
    for each composable pair of 1-cells.
    """
    source: TwoCategory
    target: TwoCategory
    on_objects: dict[str, str]
    on_one: dict[str, str]
    on_two: dict[str, str]
    constraint: dict[tuple[str, str], str]


def validate_pseudofunctor(H: NormalPseudofunctor) -> NormalPseudofunctor:
    C, D = H.source, H.target
    for f in sorted(C.one_src):
        _check(D.one_src[H.on_one[f]] == H.on_objects[C.one_src[f]]
               and D.one_tgt[H.on_one[f]] == H.on_objects[C.one_tgt[f]],
               "pseudofunctor 1-cell typing", (f,))
    for a in sorted(C.two_src):
        _check(D.two_src[H.on_two[a]] == H.on_one[C.two_src[a]]
               and D.two_tgt[H.on_two[a]] == H.on_one[C.two_tgt[a]],
               "pseudofunctor 2-cell typing", (a,))
    # strictly preserved hom-structure
    for x in C.objects:
        _check(H.on_one[C.id1[x]] == D.id1[H.on_objects[x]],
               "pseudofunctor normality (F0 = id)", (x,))
    for f in sorted(C.one_src):
        _check(H.on_two[C.id2[f]] == D.id2[H.on_one[f]],
               "pseudofunctor preserves identity 2-cells", (f,))
    for (b, a), ba in sorted(C.vcomp.items()):
        _check(D.vcomp[(H.on_two[b], H.on_two[a])] == H.on_two[ba],
               "pseudofunctor preserves vcomp", (b, a))
    # constraints: typing, invertibility
    for g in sorted(C.one_src):
        for f in sorted(C.one_src):
            if C.one_tgt[f] != C.one_src[g]:
                continue
            _check((g, f) in H.constraint, "pseudofunctor constraint missing", (g, f))
            c = H.constraint[(g, f)]
            _check(D.two_src[c] == D.comp1[(H.on_one[g], H.on_one[f])]
                   and D.two_tgt[c] == H.on_one[C.comp1[(g, f)]],
                   "pseudofunctor constraint typing", (g, f, c))
            _check(D.is_invertible2(c), "pseudofunctor constraint not invertible",
                   (g, f, c))
    # unit axioms: F2(1,f) and F2(g,1) are identities (normality)
    for f in sorted(C.one_src):
        y = C.one_tgt[f]
        x = C.one_src[f]
        _check(D.is_id2(H.constraint[(C.id1[y], f)]),
               "pseudofunctor left unit axiom", (f,))
        _check(D.is_id2(H.constraint[(f, C.id1[x])]),
               "pseudofunctor right unit axiom", (f,))
    # naturality of F2 in both arguments
    for (b, _bs) in sorted(C.two_src.items()):
        b_src, b_tgt = C.two_src[b], C.two_tgt[b]
        for f in sorted(C.one_src):
            # right argument fixed 1-cell f, left argument varies along b
            if C.one_tgt[f] == C.one_src[b_src]:
                lhs = D.vcomp[(H.on_two[C.whisk_r[(b, f)]],
                               H.constraint[(b_src, f)])]
                rhs = D.vcomp[(H.constraint[(b_tgt, f)],
                               D.whisk_r[(H.on_two[b], H.on_one[f])])]
                _check(lhs == rhs, "pseudofunctor constraint naturality (left)",
                       (b, f))
            if C.one_src[f] == C.one_tgt[b_src]:
                lhs = D.vcomp[(H.on_two[C.whisk_l[(f, b)]],
                               H.constraint[(f, b_src)])]
                rhs = D.vcomp[(H.constraint[(f, b_tgt)],
                               D.whisk_l[(H.on_one[f], H.on_two[b])])]
                _check(lhs == rhs, "pseudofunctor constraint naturality (right)",
                       (b, f))
    # associativity axiom for composable triples
    for h in sorted(C.one_src):
        for g in sorted(C.one_src):
            if C.one_tgt[g] != C.one_src[h]:
                continue
            hg = C.comp1[(h, g)]
            for f in sorted(C.one_src):
                if C.one_tgt[f] != C.one_src[g]:
                    continue
                gf = C.comp1[(g, f)]
                # (Fh.Fg).Ff => F(hg).Ff => F(hg.f)
                via_left = D.vcomp[(H.constraint[(hg, f)],
                                    D.whisk_r[(H.constraint[(h, g)], H.on_one[f])])]
                # Fh.(Fg.Ff) => Fh.F(gf) => F(h.gf)
                via_right = D.vcomp[(H.constraint[(h, gf)],
                                     D.whisk_l[(H.on_one[h], H.constraint[(g, f)])])]
                _check(via_left == via_right, "pseudofunctor associativity", (h, g, f))
    return H


def pseudofunctor_from_functor(F: TwoFunctor) -> NormalPseudofunctor:
    D = F.target
    constraint = {}
    for g in F.source.one_src:
        for f in F.source.one_src:
            if F.source.one_tgt[f] == F.source.one_src[g]:
                constraint[(g, f)] = D.id2[D.comp1[(F.on_one[g], F.on_one[f])]]
    return NormalPseudofunctor(F.source, F.target, dict(F.on_objects),
                               dict(F.on_one), dict(F.on_two), constraint)


# ---------------------------------------------------------------------------
# dualities
# ---------------------------------------------------------------------------

def op_dual(C: TwoCategory) -> TwoCategory:
    """Reverse 1-cells.  Involution on the nose.

    2-cells a: f => g become 2-cells a: f^op => g^op between the reversed
    1-cells; whiskering sides swap and comp1 reverses its arguments.
    """
    return TwoCategory(
        objects=C.objects,
        one_src=dict(C.one_tgt), one_tgt=dict(C.one_src),
        two_src=dict(C.two_src), two_tgt=dict(C.two_tgt),
        id1=dict(C.id1), id2=dict(C.id2),
        comp1={(f, g): h for (g, f), h in C.comp1.items()},
        vcomp=dict(C.vcomp),
        whisk_l={(k, a): r for (a, k), r in C.whisk_r.items()},
        whisk_r={(a, k): r for (k, a), r in C.whisk_l.items()},
    )


def co_dual(C: TwoCategory) -> TwoCategory:
    """Reverse 2-cells.  Involution on the nose."""
    return TwoCategory(
        objects=C.objects,
        one_src=dict(C.one_src), one_tgt=dict(C.one_tgt),
        two_src=dict(C.two_tgt), two_tgt=dict(C.two_src),
        id1=dict(C.id1), id2=dict(C.id2),
        comp1=dict(C.comp1),
        vcomp={(a, b): r for (b, a), r in C.vcomp.items()},
        whisk_l=dict(C.whisk_l), whisk_r=dict(C.whisk_r),
    )


def coop_dual(C: TwoCategory) -> TwoCategory:
    return co_dual(op_dual(C))


def functor_op(F: TwoFunctor) -> TwoFunctor:
    return replace(F, source=op_dual(F.source), target=op_dual(F.target))


def functor_co(F: TwoFunctor) -> TwoFunctor:
    return replace(F, source=co_dual(F.source), target=co_dual(F.target))


def functor_coop(F: TwoFunctor) -> TwoFunctor:
    return functor_co(functor_op(F))


# ---------------------------------------------------------------------------
# isomorphism search (small categories only)
# ---------------------------------------------------------------------------

def find_isomorphism(C: TwoCategory, D: TwoCategory) -> TwoFunctor | None:
    """Search for a strict 2-category isomorphism C -> D by backtracking on
    the object map, then extending greedily on hom data.  Exponential; use
    only on fixture-scale inputs."""
    from itertools import permutations
    if len(C.objects) != len(D.objects):
        return None
    if len(C.one_src) != len(D.one_src) or len(C.two_src) != len(D.two_src):
        return None
    for perm in permutations(D.objects):
        on_obj = dict(zip(C.objects, perm))
        F = _extend_iso(C, D, on_obj)
        if F is not None:
            return F
    return None


def _extend_iso(C: TwoCategory, D: TwoCategory, on_obj) -> TwoFunctor | None:
    # match 1-cells hom by hom, then 2-cells, by backtracking
    ones_c = sorted(C.one_src)
    one_maps = [{}]
    for x in C.objects:
        for y in C.objects:
            hc = C.hom1(x, y)
            hd = D.hom1(on_obj[x], on_obj[y])
            if len(hc) != len(hd):
                return None
    def backtrack_ones(i, cur):
        if i == len(ones_c):
            yield dict(cur)
            return
        f = ones_c[i]
        x, y = C.one_src[f], C.one_tgt[f]
        for g in D.hom1(on_obj[x], on_obj[y]):
            if g in cur.values():
                continue
            if C.is_id1(f) != D.is_id1(g):
                continue
            cur[f] = g
            ok = True
            # partial comp1 consistency
            for (a, b), r in C.comp1.items():
                if a in cur and b in cur and r in cur:
                    if D.comp1[(cur[a], cur[b])] != cur[r]:
                        ok = False
                        break
            if ok:
                yield from backtrack_ones(i + 1, cur)
            del cur[f]
    for on_one in backtrack_ones(0, {}):
        F = _extend_iso_twos(C, D, on_obj, on_one)
        if F is not None:
            return F
    return None


def _extend_iso_twos(C, D, on_obj, on_one) -> TwoFunctor | None:
    twos_c = sorted(C.two_src)
    def backtrack(i, cur):
        if i == len(twos_c):
            return dict(cur)
        a = twos_c[i]
        f, g = C.two_src[a], C.two_tgt[a]
        for b in D.hom2(on_one[f], on_one[g]):
            if b in cur.values():
                continue
            if C.is_id2(a) != D.is_id2(b):
                continue
            cur[a] = b
            ok = True
            for (p, q), r in C.vcomp.items():
                if p in cur and q in cur and r in cur:
                    if D.vcomp[(cur[p], cur[q])] != cur[r]:
                        ok = False
                        break
            if ok:
                for (k, p), r in C.whisk_l.items():
                    if p in cur and r in cur:
                        if D.whisk_l[(on_one[k], cur[p])] != cur[r]:
                            ok = False
                            break
            if ok:
                for (p, k), r in C.whisk_r.items():
                    if p in cur and r in cur:
                        if D.whisk_r[(cur[p], on_one[k])] != cur[r]:
                            ok = False
                            break
            if ok:
                res = backtrack(i + 1, cur)
                if res is not None:
                    return res
            del cur[a]
        return None
    on_two = backtrack(0, {})
    if on_two is None:
        return None
    F = TwoFunctor(C, D, dict(on_obj), dict(on_one), on_two)
    try:
        validate_two_functor(F)
    except AxiomError:
        return None
    return F
