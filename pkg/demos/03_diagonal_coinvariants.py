"""Compare the computed cohomology tables with the bigraded dimensions of
the diagonal coinvariant algebra of the symmetric group.

DC_m is the polynomial ring in two sets of m variables modulo the ideal
generated by the positive-degree diagonal invariants.  Reindexing its
bigraded dimensions reproduces the cohomology tables exactly for
m = 2, 3, 4.
"""

from springercenter import bgg, coinvariants

for m in (2, 3, 4):
    table = coinvariants.dc_table(m)
    print("DC_%d dimensions (x-degree, y-degree):" % m)
    top = max(i for (i, _) in table)
    for i in range(top, -1, -1):
        row = [table.get((i, j), 0) for j in range(top + 1 - i)]
        print("   " + " ".join("%3d" % v for v in row))
    predicted = coinvariants.expected_diamond_from_dc(m)
    computed = bgg.hodge_diamond(m, jobs=4 if m >= 4 else 1)
    print("  total %d, matches cohomology table: %s\n"
          % (sum(table.values()), predicted == computed))
