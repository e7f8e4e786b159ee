"""Group completion of a monoidal 2-category, degree by degree.

A permutative Gray monoid S acting on itself is completed to S^-1 S:
objects are pairs, 1-cells carry a mediating element of S, and 2-cells
are classes modulo an invertible witness.  The demo shows, on the
two-element max monoid (not a group!) and on the one-object monoid with
2-cell group Z/2, that

  * the component monoid of S^-1 S is a group, and
  * the inclusion S -> S^-1 S inverts the pi0-action on homology:
    [pi0 S]^-1 H_q(S) -> H_q(S^-1 S) is an isomorphism.
"""

from twocat import pgm, sinv


def complete(make, label, max_deg, trunc):
    P = make()
    SX = sinv.s_inv_x(P, pgm.self_action(P))
    print(f"{label}: completion has {len(SX.cat.objects)} objects, "
          f"{len(SX.cat.one_src)} 1-cells, {len(SX.cat.two_src)} 2-cell "
          f"classes")
    Q = sinv.pgm_on_sinvs(SX)
    M = pgm.pi0_monoid(Q)
    print(f"  pi0 of the completion: {list(M.elements)}, "
          f"group = {pgm.pi0_is_group(M) is True}")
    r = sinv.group_completion_check(P, max_deg=max_deg, trunc=trunc)
    for q, d in sorted(r.degrees.items()):
        print(f"  H_{q}: H(S) = {d['source']:>6}  localized = "
              f"{d['localized']:>6}  H(S^-1 S) = {d['target']:>6}  "
              f"iso = {d['iso']}")
    assert r.all_iso


def main():
    # pi0 = ({0,1}, max): localization kills the non-invertible component
    complete(pgm.fix_m2_pgm, "max monoid on {0,1}", max_deg=1, trunc=3)
    # pi0 trivial, but H_2 carries the 2-cell group Z/2 through unchanged
    complete(pgm.fix_g2_pgm, "one object with 2-cells Z/2", max_deg=2,
             trunc=4)

    # the completion of the terminal action is acyclic, with every
    # distinguished 1-cell hom-terminal: the base of the projection
    SP = sinv.s_inv_point(pgm.fix_c2_pgm())
    print(f"point completion of Z/2: hom-terminality = "
          f"{sinv.hom_terminality_check(SP) is True}")


if __name__ == "__main__":
    main()
