"""Decompose the cohomology of a few natural bundles on the full flag
variety of sl_3 into irreducibles.

This reproduces the classical picture: global vector fields give the
adjoint representation, endomorphism-valued one-forms pick up trivial
summands, and wedge powers of the cotangent bundle carry the cohomology
of the flag variety itself.
"""

from springercenter.bmodule import sub_n, quotient_u, tensor, wedge, trivial_module
from springercenter.ce_oracle import full_decomposition

m = 3
n = sub_n(m)       # fiber of the cotangent bundle
u = quotient_u(m)  # fiber of the tangent bundle

bundles = [
    ("T", u),
    ("Omega (x) T", tensor(n, u)),
    ("Omega^2 (x) T", tensor(wedge(n, 2), u)),
    ("Omega^0", trivial_module(m)),
    ("Omega^1", n),
    ("Omega^2", wedge(n, 2)),
    ("Omega^3", wedge(n, 3)),
]

for name, mod in bundles:
    dec = full_decomposition(mod)
    parts = []
    for lam, profile in sorted(dec.items()):
        for deg, mult in enumerate(profile):
            if mult:
                parts.append("H^%d: L%r x%d" % (deg, lam, mult))
    print("%-14s %s" % (name, "; ".join(parts) or "zero"))
