"""Compute the bigraded cohomology tables for sl_2, sl_3 and sl_4.

The (i, j) entry is the dimension of the degree -(i+j) part of
H^i of the j-th exterior power of the tangent sheaf of the Springer
resolution.  The totals 3, 16, 125 follow the (m+1)^(m-1) pattern.
"""

import time

from springercenter import bgg


def show(m):
    t0 = time.time()
    diamond = bgg.hodge_diamond(m, jobs=4 if m >= 4 else 1)
    n = m * (m - 1) // 2
    print("sl_%d  (computed in %.1fs)" % (m, time.time() - t0))
    for s in range(0, 2 * n + 1, 2):
        row = [(i, s - i) for i in range(s, -1, -1) if (i, s - i) in diamond]
        print("  degree %-2d  %s" % (-s, " ".join("%3d" % diamond[k] for k in row)))
    print("  total %d" % sum(diamond.values()))
    print()


for m in (2, 3, 4):
    show(m)
