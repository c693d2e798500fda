"""Exact bigraded cohomology of exterior powers of the Springer
resolution tangent sheaf for sl_m, with cross-checks against Lie algebra
cohomology and diagonal coinvariant algebras."""

__version__ = "0.1.0"
