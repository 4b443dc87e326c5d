"""Exact computer algebra for split reflection cosets.

Subpackages build on one another: cyclotomic number fields, Laurent
polynomials and K-cyclotomic factorization, finite reflection cosets,
order polynomials and fake degrees, cyclotomic Hecke algebra data, and
unipotent character tables.
"""

from .cyclotomic import Cyclo, CycloField, zeta, sqrt_int

__all__ = ["Cyclo", "CycloField", "zeta", "sqrt_int"]
__version__ = "0.1.0"
