"""Exhibit the canonical invariant line inside the degree -2 part of the
second exterior power of the tangent sheaf.

The witness is the Poisson bivector: the sum of e_gamma (x) f_gamma over
the positive roots, corrected by a term in u (x) n^n so that the class
is killed by every lowering operator in the quotient module.
"""

from springercenter.springer import trivial_summand_witness

for m in (2, 3, 4):
    comp, lift = trivial_summand_witness(m)
    zero = tuple([0] * (m - 1))
    vec = comp.project(zero, lift)
    print("sl_%d witness (ambient representative, %d terms):" % (m, len(lift)))
    for label, coeff in sorted(lift.items()):
        mono, gset, nset = label
        pieces = []
        if mono:
            pieces.append("u:" + "".join("E%d%d" % l[1:] for l in mono))
        if gset:
            pieces.append("g:" + "^".join("E%d%d" % l[1:] for l in gset))
        if nset:
            pieces.append("n:" + "^".join("E%d%d" % l[1:] for l in nset))
        # labels are 0-indexed matrix units
        print("   %+d  %s" % (coeff, "  ".join(pieces)))
    for i in range(1, m):
        assert not comp.module.lower_matrix(i, zero).apply(vec)
    print("   killed by all lowering operators: yes\n")
