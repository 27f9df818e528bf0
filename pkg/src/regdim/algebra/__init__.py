"""
Algebraic substrate: monomial ideals and exact linear algebra over Z/pZ.
"""
from regdim.algebra.linalg import FiniteComplex, PrimeField
from regdim.algebra.monomials import MonomialIdeal, minimalize

__all__ = ['FiniteComplex', 'PrimeField', 'MonomialIdeal', 'minimalize']
