"""Exact-arithmetic verification engine for centers of low-dimensional Sklyanin algebras.

Everything is computed over the cyclotomic field Q(zeta_12) with rational
coefficients; no floating point anywhere.  See README.md for the layout.
"""

__version__ = "0.1.0"
