"""
regdim: exact Ext modules of monomial ideals and their regularity.

Computes Ext^i(R/I, ω_R) for a monomial ideal I from Čech slices and local
duality, decomposes it into Stanley spaces, and certifies
reg(Ext^i) ≤ dim(Ext^i) ≤ n − i with exact linear algebra over Z/pZ.
"""
from regdim.algebra import MonomialIdeal, PrimeField, minimalize
from regdim.pipeline import analyze_ideal, run_sweep, verify_theorem

__version__ = "0.1.0"

__all__ = ['MonomialIdeal', 'PrimeField', 'analyze_ideal', 'minimalize', 'run_sweep', 'verify_theorem']
